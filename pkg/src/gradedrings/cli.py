"""Command-line front end.

Subcommands cover every construction in the library: folner, paradox,
collapse, compress, cert (verify/extend/opposite/block/product/hom), monoid,
crossed, endo-graded, psi, normalize, bs-check, rosenblatt, and repro.
Exit codes: 0 on pass/found, 1 on a verified negative, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import checks
from .amenability import (FolnerWitness, InjectionWitness, bs_X, bs_X0,
                          bs_example_check, find_two_to_one_injection,
                          folner_search, rosenblatt_find,
                          verify_hall_violation, whole_group)
from .graded import (CrossedProductRing, endo_graded_construction,
                     group_ring_system, psi_embedding_check, twisted_system,
                     verify_crossed_system)
from .groups import Group, group_from_spec
from .monoids import MnklParams, cnk_leq, cnk_normalize, mnkl_leq
from .rings import (IntegerModRing, block_down_certificate,
                    block_up_certificate, extend_certificate, hom_certificate,
                    opposite_certificate, product_certificate,
                    truncate_certificate, verify_certificate)
from .serialize import (certificate_from_json, certificate_to_json, dump_json,
                        folner_witness_to_json, injection_witness_to_json,
                        load_json, ring_from_spec,
                        translation_certificate_from_json,
                        translation_certificate_to_json)
from .special_algebras import LeavittRing, WeylRing
from .translation import CompressionInput, collapse_matrices, compress_certificate

DEFAULT_RMAX = int(os.environ.get("GRADEDRINGS_RMAX", "8"))
DEFAULT_DEPTH = int(os.environ.get("GRADEDRINGS_DEPTH", "10"))
DEFAULT_WINDOW = int(os.environ.get("GRADEDRINGS_WINDOW", "6"))


# ---------------------------------------------------------------------------
# parsing helpers


def _parse_set(group: Group, text: str, r_hint: int = DEFAULT_RMAX) -> list:
    """A finite subset: "ball:r", or elements separated by ";" (braces
    optional).  Semicolons because some element forms contain commas."""
    text = text.strip()
    m = re.fullmatch(r"ball:(\d+)", text)
    if m:
        r = int(m.group(1))
        return group.ball(r, max_radius=max(r, r_hint))
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    return [group.element_from_str(p) for p in _split_semi(text)]


def _split_semi(text: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == ";" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _subset(group: Group, name: str):
    if name == "all":
        return whole_group(group)
    if name == "bs-x":
        return bs_X(group)
    if name == "bs-x0":
        return bs_X0(group)
    raise ValueError(f"unknown subset spec: {name!r} (use all, bs-x, bs-x0)")


def _emit(args, lines: list, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_folner(args) -> int:
    G = group_from_spec(args.group)
    X = _subset(G, args.subset)
    K = _parse_set(G, args.k, args.r_max)
    res = folner_search(G, X, K, Fraction(args.eps), args.r_max)
    if isinstance(res, FolnerWitness):
        data = folner_witness_to_json(G, res)
        _emit(args, [
            f"witness found: |F| = {len(res.F)}",
            f"|KF cap X| = {res.kf_count} < (1 + {res.eps}) * {res.f_count}"
            f" = (1 + eps) |F cap X|",
        ], {"verdict": "witness", **data})
        if args.out:
            dump_json(data, args.out)
        return 0
    lines = [f"no witness among balls of radius 0..{res.r_max}"]
    for idx, kf, f, ratio in res.ratios:
        lines.append(f"  radius {idx}: |KF cap X| / |F cap X| = {kf}/{f}"
                     + (f" = {ratio}" if ratio is not None else ""))
    lines.append(f"best ratio: {res.best_ratio}")
    _emit(args, lines, {"verdict": "no-witness", "r_max": res.r_max,
                        "best_ratio": str(res.best_ratio),
                        "ratios": [[i, kf, f, str(r)] for i, kf, f, r in res.ratios]})
    return 1


def _cmd_paradox(args) -> int:
    G = group_from_spec(args.group)
    V = _parse_set(G, args.v)
    W = _parse_set(G, args.w)
    K = _parse_set(G, args.k)
    res = find_two_to_one_injection(G, V, W, K)
    s = G.element_to_str
    if isinstance(res, InjectionWitness):
        data = injection_witness_to_json(G, res)
        _emit(args, [f"two-to-one injection found: |V| = {len(V)}, "
                     f"|W| = {len(W)}, translators in K of size {len(K)}"],
              {"verdict": "witness", **data})
        if args.out:
            dump_json(data, args.out)
        return 0
    assert verify_hall_violation(G, V, W, K, res.violating_set)
    lines = [
        "infeasible: Hall condition fails",
        "A = {" + "; ".join(s(x) for x in res.violating_set) + "}",
        f"|KA cap W| = {len(res.neighborhood)} < 2 |A| = {2 * len(res.violating_set)}",
    ]
    _emit(args, lines, {"verdict": "infeasible",
                        "violating_set": [s(x) for x in res.violating_set],
                        "neighborhood_size": len(res.neighborhood)})
    return 1


def _cmd_collapse(args) -> int:
    G = group_from_spec(args.group)
    V = _parse_set(G, args.v)
    W = _parse_set(G, args.w)
    K = _parse_set(G, args.k)
    R = ring_from_spec(args.ring)
    res = find_two_to_one_injection(G, V, W, K)
    if not isinstance(res, InjectionWitness):
        _emit(args, ["no two-to-one injection; collapse matrices not built"],
              {"verdict": "infeasible"})
        return 1
    out = collapse_matrices(G, res, R)
    _emit(args, out.lines(), {"verdict": "pass" if out.ok else "fail",
                              "uncovered": len(out.uncovered)})
    return 0 if out.ok else 1


def _cmd_compress(args) -> int:
    data = load_json(args.certificate)
    tring, cert = translation_certificate_from_json(data)
    G = tring.group
    K = _parse_set(G, args.k)
    F = _parse_set(G, args.f)
    try:
        res = compress_certificate(CompressionInput(tring, cert, K, F))
    except ValueError as exc:
        _emit(args, [f"compression refused: {exc}"],
              {"verdict": "refused", "reason": str(exc)})
        return 1
    out_cert = res.certificate
    lines = [
        f"window verification passed on {len(res.U)} x {len(res.F_X)} points",
        f"Folner inequality: n |U| = {cert.n * len(res.U)} < "
        f"m |F cap X| = {cert.m * len(res.F_X)}",
        f"compressed certificate: ({out_cert.n}, {out_cert.m}) over "
        f"{out_cert.ring.name}, verified",
    ]
    payload = {"verdict": "compressed", "n": out_cert.n, "m": out_cert.m}
    _emit(args, lines, payload)
    if args.out:
        dump_json(certificate_to_json(out_cert), args.out)
    return 0


def _load_cert(path: str):
    return certificate_from_json(load_json(path))


def _cert_emit(args, cert) -> int:
    v = verify_certificate(cert)
    assert v
    if args.out:
        dump_json(certificate_to_json(cert), args.out)
    _emit(args, [f"certificate ({cert.n}, {cert.m}) over {cert.ring.name}: "
                 f"valid, BGN {v.bgn}"],
          {"verdict": "valid", "n": cert.n, "m": cert.m, "bgn": v.bgn})
    return 0


def _cmd_cert(args) -> int:
    if args.action == "verify":
        cert = _load_cert(args.file)
        v = verify_certificate(cert)
        if v:
            _emit(args, [f"valid: AB = I_{cert.m}, BGN {v.bgn}"],
                  {"verdict": "valid", "bgn": v.bgn})
            return 0
        _emit(args, [f"invalid at entry {v.position} of AB"],
              {"verdict": "invalid", "position": list(v.position)})
        return 1
    if args.action == "extend":
        cert = _load_cert(args.file)
        if cert.m > cert.n + 1:
            cert = truncate_certificate(cert)
        return _cert_emit(args, extend_certificate(cert, args.target))
    if args.action == "opposite":
        return _cert_emit(args, opposite_certificate(_load_cert(args.file)))
    if args.action == "block":
        cert = _load_cert(args.file)
        if args.up:
            return _cert_emit(args, block_up_certificate(cert, args.up))
        return _cert_emit(args, block_down_certificate(cert))
    if args.action == "product":
        return _cert_emit(args, product_certificate(
            [_load_cert(p) for p in args.files]))
    if args.action == "hom":
        cert = _load_cert(args.file)
        if args.map == "aug":
            R = cert.ring
            if not isinstance(R, CrossedProductRing):
                raise ValueError("aug needs a group-ring certificate")
            from .graded import group_ring_augmentation
            return _cert_emit(args, hom_certificate(
                cert, lambda a: group_ring_augmentation(R, a), R.base))
        m = re.fullmatch(r"mod:(\d+)", args.map)
        if not m:
            raise ValueError(f"unknown map {args.map!r} (use aug or mod:m)")
        target = IntegerModRing(int(m.group(1)))
        return _cert_emit(args, hom_certificate(cert, target.from_int, target))
    raise ValueError(f"unknown cert action {args.action!r}")


_MONOID_RE = re.compile(r"(.+?)<=(.+?)\s+in\s+([MC]\(.+?\))\s*$")


def _cmd_monoid(args) -> int:
    m = _MONOID_RE.fullmatch(args.expression.strip())
    if not m:
        raise ValueError('expected "LHS <= RHS in M(n,k,l)" or "... in C(n,k)"')
    lhs_s, rhs_s, monoid = m.group(1), m.group(2), m.group(3)
    cm = re.fullmatch(r"C\((\d+),\s*(\d+)\)", monoid)
    if cm:
        n, k = int(cm.group(1)), int(cm.group(2))
        lam, mu = _parse_c_side(lhs_s), _parse_c_side(rhs_s)
        verdict = cnk_leq(n, k, lam, mu)
        lines = [f"{lam}a <= {mu}a in C({n},{k}): {'yes' if verdict else 'no'}",
                 f"canonical forms: {cnk_normalize(n, k, lam)}a and "
                 f"{cnk_normalize(n, k, mu)}a"]
        _emit(args, lines, {"verdict": "yes" if verdict else "no"})
        return 0 if verdict else 1
    mm = re.fullmatch(r"M\((\d+),\s*(\d+),\s*(\d+)\)", monoid)
    if not mm:
        raise ValueError(f"unknown monoid {monoid!r}")
    params = MnklParams(int(mm.group(1)), int(mm.group(2)), int(mm.group(3)))
    s = _parse_m_side(params, lhs_s)
    t = _parse_m_side(params, rhs_s)
    res = mnkl_leq(params, s, t, depth=args.depth)
    if res.verdict == "yes":
        lines = [f"yes: s + z = t with z = {res.z}"]
        for parent, rel, child in res.chain:
            lines.append(f"  {parent} --{rel}--> {child}")
        _emit(args, lines, {"verdict": "yes", "z": list(res.z)})
        return 0
    if res.verdict == "no":
        _emit(args, [f"no (separator {res.separator}): {res.reason}"],
              {"verdict": "no", "separator": res.separator, "reason": res.reason})
        return 1
    _emit(args, [f"unknown: {res.reason}"],
          {"verdict": "unknown", "reason": res.reason})
    return 1


def _parse_c_side(text: str) -> int:
    text = text.strip()
    m = re.fullmatch(r"(\d+)\s*\*?\s*a|(\d+)|a", text)
    if not m:
        raise ValueError(f"cannot parse C(n,k) element {text!r}")
    if m.group(1) is not None:
        return int(m.group(1))
    if m.group(2) is not None:
        return int(m.group(2))
    return 1


def _parse_m_side(params: MnklParams, text: str) -> tuple:
    vec = [0] * (1 + 2 * params.l)
    for term in text.split("+"):
        term = term.strip()
        if term == "0":
            continue
        m = re.fullmatch(r"(?:(\d+)\s*\*?\s*)?(u|x(\d+)|y(\d+))", term)
        if not m:
            raise ValueError(f"cannot parse monoid term {term!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2) == "u":
            vec[0] += c
        elif m.group(3):
            i = int(m.group(3))
            if not 1 <= i <= params.l:
                raise ValueError(f"index in {term!r} out of range 1..{params.l}")
            vec[i] += c
        else:
            i = int(m.group(4))
            if not 1 <= i <= params.l:
                raise ValueError(f"index in {term!r} out of range 1..{params.l}")
            vec[params.l + i] += c
    return tuple(vec)


def _cmd_crossed(args) -> int:
    cfg = load_json(args.config)
    G = group_from_spec(cfg["group"])
    R = ring_from_spec(cfg["ring"])
    if "omega" in cfg:
        omega = _omega_table(G, R, cfg["omega"])
        omega_inv = _omega_table(G, R, cfg["omega_inv"])
        cs = twisted_system(G, R, omega, omega_inv)
    else:
        cs = group_ring_system(G, R)
    samples = None
    if "samples" in cfg:
        samples = [R.element_from_str(s) for s in cfg["samples"]]
    rep = verify_crossed_system(cs, samples)
    _emit(args, rep.lines(), {"verdict": "pass" if rep.ok else "fail",
                              "failures": rep.failures})
    return 0 if rep.ok else 1


def _omega_table(G: Group, R, table: dict) -> dict:
    out = {}
    for key, val in table.items():
        g_s, h_s = _split_semi(key)
        out[(G.element_from_str(g_s), G.element_from_str(h_s))] = \
            R.element_from_str(val)
    return out


def _cmd_endo_graded(args) -> int:
    G = group_from_spec(args.group)
    S = ring_from_spec(args.ring)
    _, rep = endo_graded_construction(S, G, args.n, args.l)
    _emit(args, rep.lines(), {"verdict": "pass" if rep.ok else "fail",
                              "failures": rep.failures})
    return 0 if rep.ok else 1


def _cmd_psi(args) -> int:
    a = [int(v) for v in args.a.split(",")]
    b = [int(v) for v in args.b.split(",")]
    ring = WeylRing(a, b)
    samples = [ring.element_from_str(s) for s in _split_semi(args.samples)]
    rep = psi_embedding_check(ring, samples, window=args.window,
                              component_window=args.component_window)
    _emit(args, rep.lines(), {"verdict": "pass" if rep.ok else "fail",
                              "pairs_checked": rep.pairs_checked,
                              "failures": rep.failures})
    return 0 if rep.ok else 1


def _cmd_normalize(args) -> int:
    ring = _algebra_from_spec(args.algebra)
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        print(ring.element_to_str(ring.element_from_str(line)))
    return 0


def _algebra_from_spec(spec: str):
    m = re.fullmatch(r"leavitt:n=(\d+)", spec)
    if m:
        return LeavittRing(int(m.group(1)))
    m = re.fullmatch(r"weyl(?::a=([\d,-]+);b=([\d,-]+))?", spec)
    if m:
        if m.group(1):
            a = [int(v) for v in m.group(1).split(",")]
            b = [int(v) for v in m.group(2).split(",")]
        else:
            a, b = [1], [1]
        return WeylRing(a, b)
    raise ValueError(f"unknown algebra spec {spec!r} "
                     "(use leavitt:n=N or weyl[:a=..;b=..])")


def _cmd_bs_check(args) -> int:
    rep = bs_example_check(args.k, args.r, max_radius=max(args.r, DEFAULT_RMAX))
    _emit(args, rep.lines(), {"verdict": "pass" if rep.ok else "fail"})
    return 0 if rep.ok else 1


def _cmd_rosenblatt(args) -> int:
    from .groups import BaumslagSolitar
    G = BaumslagSolitar(args.k)
    u = tuple(G.element_from_str(s) for s in _split_semi(args.u))
    v = tuple(G.element_from_str(s) for s in _split_semi(args.v))
    res = rosenblatt_find(args.k, u, v)
    _emit(args, [
        f"g = {G.element_to_str(res.g)}",
        f"|g^-1 u cap X| = {res.u_count} < |g^-1 v cap X| = {res.v_count}",
    ], {"verdict": "found", "g": G.element_to_str(res.g),
        "u_count": res.u_count, "v_count": res.v_count})
    return 0


def _cmd_repro(args) -> int:
    names = [name for name, _ in checks.ALL_CHECKS]
    if args.list:
        for name in names:
            print(name)
        return 0
    if args.name == "all":
        selected = checks.ALL_CHECKS
    else:
        selected = [(n, f) for n, f in checks.ALL_CHECKS if n == args.name]
        if not selected:
            raise ValueError(f"unknown check {args.name!r}; one of: "
                             + ", ".join(names + ["all"]))
    results = [fn() for _, fn in selected]
    for r in results:
        print(r.line)
        if args.verbose or not r.ok:
            for d in r.details:
                print("   ", d)
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# argument parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedrings",
        description="Exact verification tools for generating numbers of "
                    "group-graded rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["text", "json"], default="text")
        return p

    p = add("folner", _cmd_folner, help="search for a Folner set over balls")
    p.add_argument("--group", required=True)
    p.add_argument("--subset", default="all")
    p.add_argument("--k", required=True, help='e.g. "ball:1" or "{0; 1}"')
    p.add_argument("--eps", required=True)
    p.add_argument("--r-max", type=int, default=DEFAULT_RMAX)
    p.add_argument("--out")

    p = add("paradox", _cmd_paradox,
            help="search for a truncated two-to-one injection")
    p.add_argument("--group", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--out")

    p = add("collapse", _cmd_collapse,
            help="build and verify rank-collapse matrices from an injection")
    p.add_argument("--group", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--ring", default="Z")

    p = add("compress", _cmd_compress,
            help="compress a translation-ring certificate over a Folner set")
    p.add_argument("--certificate", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--out")

    p = add("cert", _cmd_cert, help="verify or transform rank certificates")
    p.add_argument("action", choices=["verify", "extend", "opposite", "block",
                                      "product", "hom"])
    p.add_argument("file", nargs="?")
    p.add_argument("files", nargs="*")
    p.add_argument("--target", type=int)
    p.add_argument("--up", type=int)
    p.add_argument("--down", action="store_true")
    p.add_argument("--map")
    p.add_argument("--out")

    p = add("monoid", _cmd_monoid,
            help='decide order relations, e.g. "3*x1 <= 2*x1 in M(2,1,1)"')
    p.add_argument("expression")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)

    p = add("crossed", _cmd_crossed, help="verify a crossed system from JSON")
    p.add_argument("--config", required=True)

    p = add("endo-graded", _cmd_endo_graded,
            help="grade a matrix ring by a finite group and verify")
    p.add_argument("--group", required=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = add("psi", _cmd_psi,
            help="verify the translation-ring embedding on a finite window")
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    p.add_argument("--samples", required=True,
                   help='elements separated by ";", e.g. "x1; y; x1 y"')
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--component-window", type=int)

    p = add("normalize", _cmd_normalize,
            help="read expressions from stdin, print canonical forms")
    p.add_argument("--algebra", required=True)

    p = add("bs-check", _cmd_bs_check,
            help="ball-truncated subset checks in BS(1,k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("rosenblatt", _cmd_rosenblatt,
            help="find a translate separating two finite tuples in BS(1,k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add("repro", _cmd_repro, help="run the acceptance checks")
    p.add_argument("name", nargs="?", default="all")
    p.add_argument("--list", action="store_true")
    p.add_argument("--verbose", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "cert":
        # "cert product a.json b.json" puts the first file in args.file
        if args.action == "product" and args.file:
            args.files = [args.file] + args.files
        elif args.action != "product" and not args.file:
            parser.error("cert needs a certificate file")
    try:
        return args.fn(args)
    except (ValueError, FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
