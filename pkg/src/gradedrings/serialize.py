"""Ring name parsing and JSON (de)serialization for certificates, witnesses,
and translation-ring elements.

Ring names: "Z", "Q", "Z/5", "M2(Z)", "L(1,2)", "op(...)", "prod(..., ...)",
"group(Z, C(2))".  Certificates serialize as {ring, n, m, A, B} with entries
row-major in each ring's canonical text form (nested lists for matrix and
product rings).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .graded import CrossedProductRing, group_ring
from .groups import Group, group_from_spec
from .rings import (IntegerModRing, IntegerRing, MatrixRing, ProductRing,
                    RankCertificate, Ring, RingMatrix, RationalRing)
from .special_algebras import LeavittRing
from .translation import CoeffFn, TranslationRing


def _split_top(s: str, sep: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def ring_from_spec(spec: str) -> Ring:
    spec = spec.strip()
    if spec == "Z":
        return IntegerRing()
    if spec == "Q":
        return RationalRing()
    m = re.fullmatch(r"Z/(\d+)", spec)
    if m:
        return IntegerModRing(int(m.group(1)))
    m = re.fullmatch(r"M(\d+)\((.*)\)", spec)
    if m:
        return MatrixRing(ring_from_spec(m.group(2)), int(m.group(1)))
    m = re.fullmatch(r"L\(1,\s*(\d+)\)", spec)
    if m:
        return LeavittRing(int(m.group(1)))
    m = re.fullmatch(r"L\(1,\s*(\d+);\s*(.*)\)", spec)
    if m:
        return LeavittRing(int(m.group(1)), ring_from_spec(m.group(2)))
    m = re.fullmatch(r"op\((.*)\)", spec)
    if m:
        return ring_from_spec(m.group(1)).opposite()
    m = re.fullmatch(r"prod\((.*)\)", spec)
    if m:
        return ProductRing([ring_from_spec(p) for p in _split_top(m.group(1), ",")])
    m = re.fullmatch(r"group\((.*)\)", spec)
    if m:
        parts = _split_top(m.group(1), ",")
        if len(parts) != 2:
            raise ValueError(f"group ring spec needs (ring, group): {spec!r}")
        return group_ring(group_from_spec(parts[1]), ring_from_spec(parts[0]))
    raise ValueError(f"unknown ring spec: {spec!r}")


def ring_to_spec(ring: Ring) -> str:
    if isinstance(ring, (IntegerRing, RationalRing, IntegerModRing, LeavittRing)):
        return ring.name
    if isinstance(ring, MatrixRing):
        return f"M{ring.size}({ring_to_spec(ring.base)})"
    if isinstance(ring, ProductRing):
        return "prod(" + ", ".join(ring_to_spec(f) for f in ring.factors) + ")"
    if isinstance(ring, CrossedProductRing) and ring.cs.is_group_ring:
        return f"group({ring_to_spec(ring.base)}, {ring.group.name})"
    if ring.name.startswith("op("):
        return f"op({ring_to_spec(ring.opposite())})"
    raise ValueError(f"ring {ring.name} has no serializable spec")


def element_to_jsonable(ring: Ring, x):
    if isinstance(ring, MatrixRing):
        return [[element_to_jsonable(ring.base, x[i, j]) for j in range(x.cols)]
                for i in range(x.rows)]
    if isinstance(ring, ProductRing):
        return [element_to_jsonable(f, c) for f, c in zip(ring.factors, x)]
    return ring.element_to_str(x)


def element_from_jsonable(ring: Ring, data):
    if isinstance(ring, MatrixRing):
        rows = [[element_from_jsonable(ring.base, v) for v in row] for row in data]
        return RingMatrix.from_rows(ring.base, rows)
    if isinstance(ring, ProductRing):
        return tuple(element_from_jsonable(f, v) for f, v in zip(ring.factors, data))
    return ring.element_from_str(data)


def certificate_to_json(cert: RankCertificate) -> dict:
    return {
        "ring": ring_to_spec(cert.ring),
        "n": cert.n,
        "m": cert.m,
        "A": [[element_to_jsonable(cert.ring, cert.A[i, j])
               for j in range(cert.A.cols)] for i in range(cert.A.rows)],
        "B": [[element_to_jsonable(cert.ring, cert.B[i, j])
               for j in range(cert.B.cols)] for i in range(cert.B.rows)],
    }


def certificate_from_json(data: dict) -> RankCertificate:
    ring = ring_from_spec(data["ring"])
    n, m = int(data["n"]), int(data["m"])
    A = RingMatrix.from_rows(
        ring, [[element_from_jsonable(ring, v) for v in row] for row in data["A"]])
    B = RingMatrix.from_rows(
        ring, [[element_from_jsonable(ring, v) for v in row] for row in data["B"]])
    return RankCertificate(ring, n, m, A, B)


# translation-ring certificates: entries are term lists ------------------------


def translation_element_to_json(tring: TranslationRing, M: dict) -> list:
    G, S = tring.group, tring.base
    out = []
    for g in sorted(M, key=G.element_key):
        f = M[g]
        out.append({
            "shift": G.element_to_str(g),
            "const": element_to_jsonable(S, f.const),
            "overrides": {G.element_to_str(x): element_to_jsonable(S, v)
                          for x, v in sorted(f.overrides.items(),
                                             key=lambda kv: G.element_key(kv[0]))},
        })
    return out


def translation_element_from_json(tring: TranslationRing, data: list) -> dict:
    G, S = tring.group, tring.base
    out = tring.zero()
    for term in data:
        g = G.element_from_str(term["shift"])
        f = CoeffFn(S, element_from_jsonable(S, term["const"]),
                    {G.element_from_str(x): element_from_jsonable(S, v)
                     for x, v in term.get("overrides", {}).items()})
        out = tring.add(out, tring.term(g, f))
    return out


def translation_certificate_to_json(tring: TranslationRing,
                                    cert: RankCertificate) -> dict:
    return {
        "ring": ring_to_spec(tring.base),
        "group": tring.group.name,
        "subset": tring.X.name,
        "n": cert.n,
        "m": cert.m,
        "A": [[translation_element_to_json(tring, cert.A[i, j])
               for j in range(cert.A.cols)] for i in range(cert.A.rows)],
        "B": [[translation_element_to_json(tring, cert.B[i, j])
               for j in range(cert.B.cols)] for i in range(cert.B.rows)],
    }


def translation_certificate_from_json(data: dict, X=None):
    from .amenability import whole_group
    group = group_from_spec(data["group"])
    base = ring_from_spec(data["ring"])
    tring = TranslationRing(group, X if X is not None else whole_group(group), base)
    n, m = int(data["n"]), int(data["m"])
    A = RingMatrix.from_rows(
        tring, [[translation_element_from_json(tring, v) for v in row]
                for row in data["A"]])
    B = RingMatrix.from_rows(
        tring, [[translation_element_from_json(tring, v) for v in row]
                for row in data["B"]])
    return tring, RankCertificate(tring, n, m, A, B)


# witnesses -------------------------------------------------------------------


def injection_witness_to_json(group: Group, w) -> dict:
    s = group.element_to_str
    return {
        "group": group.name,
        "V": [s(x) for x in w.V],
        "W": [s(x) for x in w.W],
        "K": [s(x) for x in w.K],
        "alpha": [[s(x), s(w.alpha[x])] for x in w.V],
        "beta": [[s(x), s(w.beta[x])] for x in w.V],
    }


def injection_witness_from_json(data: dict):
    from .amenability import InjectionWitness
    group = group_from_spec(data["group"])
    p = group.element_from_str
    return group, InjectionWitness(
        V=[p(x) for x in data["V"]],
        W=[p(x) for x in data["W"]],
        K=[p(x) for x in data["K"]],
        alpha={p(a): p(b) for a, b in data["alpha"]},
        beta={p(a): p(b) for a, b in data["beta"]},
    )


def folner_witness_to_json(group: Group, w) -> dict:
    s = group.element_to_str
    return {
        "group": group.name,
        "K": [s(x) for x in w.K],
        "eps": str(Fraction(w.eps)),
        "F": [s(x) for x in sorted(w.F, key=group.element_key)],
        "counts": {"KF_in_X": w.kf_count, "F_in_X": w.f_count},
    }


def dump_json(data, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)
