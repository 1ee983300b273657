"""Crossed systems and crossed products, group rings with augmentation,
strong-grading witnesses, the graded endomorphism-ring construction, and the
truncated embedding of a freely graded ring into a translation ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .groups import Group
from .rings import MatrixRing, Ring, RingMatrix, mat_mul
from .special_algebras import WeylRing, weyl_component_basis, weyl_coordinates


class CrossedSystem:
    """(G, R, sigma, omega): a finite group acting on a ring with a unit-
    valued twisting.  sigma is a table g -> (map, inverse map); omega and
    omega_inv are tables on pairs."""

    def __init__(self, group: Group, ring: Ring, sigma: Optional[dict] = None,
                 omega: Optional[dict] = None, omega_inv: Optional[dict] = None):
        self.group = group
        self.ring = ring
        self.elements = group.elements()
        self.sigma = sigma
        self.omega = omega
        self.omega_inv = omega_inv
        self.trivial_sigma = sigma is None
        self.trivial_omega = omega is None
        if (omega is None) != (omega_inv is None):
            raise ValueError("omega and omega_inv must be supplied together")

    def act(self, g, r):
        if self.sigma is None:
            return r
        return self.sigma[g][0](r)

    def act_inv(self, g, r):
        if self.sigma is None:
            return r
        return self.sigma[g][1](r)

    def w(self, g, h):
        if self.omega is None:
            return self.ring.one()
        return self.omega[(g, h)]

    def w_inv(self, g, h):
        if self.omega is None:
            return self.ring.one()
        return self.omega_inv[(g, h)]

    @property
    def is_group_ring(self):
        return self.trivial_sigma and self.trivial_omega


def group_ring_system(group: Group, ring: Ring) -> CrossedSystem:
    return CrossedSystem(group, ring)


def skew_system(group: Group, ring: Ring, sigma: dict) -> CrossedSystem:
    return CrossedSystem(group, ring, sigma=sigma)


def twisted_system(group: Group, ring: Ring, omega: dict,
                   omega_inv: dict) -> CrossedSystem:
    return CrossedSystem(group, ring, omega=omega, omega_inv=omega_inv)


@dataclass
class CrossedSystemReport:
    cond1_ok: bool   # g.(h.r) = w(g,h) ((gh).r) w(g,h)^-1
    cond2_ok: bool   # cocycle identity
    cond3_ok: bool   # normalization w(g,1) = w(1,g) = 1, identity acts trivially
    units_ok: bool   # w w^-1 = w^-1 w = 1
    central_ok: Optional[bool]  # sampled centrality for trivial-sigma systems
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.cond1_ok and self.cond2_ok and self.cond3_ok
                and self.units_ok and self.central_ok is not False)

    def lines(self):
        flags = [("conjugation condition (i)", self.cond1_ok),
                 ("cocycle condition (ii)", self.cond2_ok),
                 ("normalization (iii)", self.cond3_ok),
                 ("omega values are units", self.units_ok)]
        out = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in flags]
        if self.central_ok is not None:
            out.append(f"omega centrality (sampled): "
                       f"{'pass' if self.central_ok else 'FAIL'}")
        return out + self.failures


def verify_crossed_system(cs: CrossedSystem,
                          samples: Optional[Sequence] = None) -> CrossedSystemReport:
    """Check the three crossed-system conditions; group parts exhaustive,
    ring parts on the sample list (default: 0, 1, 2, -3)."""
    R = cs.ring
    G = cs.group
    if samples is None:
        samples = [R.zero(), R.one(), R.from_int(2), R.from_int(-3)]
    e = G.identity()
    rep = CrossedSystemReport(True, True, True, True,
                              None if not cs.trivial_sigma else True)
    for g in cs.elements:
        for h in cs.elements:
            wgh, wgh_i = cs.w(g, h), cs.w_inv(g, h)
            if not (R.eq(R.mul(wgh, wgh_i), R.one())
                    and R.eq(R.mul(wgh_i, wgh), R.one())):
                rep.units_ok = False
                rep.failures.append(f"omega({g},{h}) is not a unit")
            gh = G.mul(g, h)
            for r in samples:
                lhs = cs.act(g, cs.act(h, r))
                rhs = R.mul(R.mul(wgh, cs.act(gh, r)), wgh_i)
                if not R.eq(lhs, rhs):
                    rep.cond1_ok = False
                    rep.failures.append(f"condition (i) fails at ({g},{h})")
            for k in cs.elements:
                lhs = R.mul(cs.w(g, h), cs.w(gh, k))
                rhs = R.mul(cs.act(g, cs.w(h, k)), cs.w(g, G.mul(h, k)))
                if not R.eq(lhs, rhs):
                    rep.cond2_ok = False
                    rep.failures.append(f"condition (ii) fails at ({g},{h},{k})")
    for g in cs.elements:
        if not (R.eq(cs.w(g, e), R.one()) and R.eq(cs.w(e, g), R.one())):
            rep.cond3_ok = False
            rep.failures.append(f"condition (iii) fails at {g}")
    for r in samples:
        if not R.eq(cs.act(e, r), r):
            rep.cond3_ok = False
    if cs.trivial_sigma:
        rep.central_ok = True
        for g in cs.elements:
            for h in cs.elements:
                for r in samples:
                    if not R.eq(R.mul(cs.w(g, h), r), R.mul(r, cs.w(g, h))):
                        rep.central_ok = False
                        rep.failures.append(f"omega({g},{h}) not central")
    return rep


class CrossedProductRing(Ring):
    """Formal sums {g: r_g} multiplied by (r g)(s h) = r (g.s) w(g,h) (gh).

    The crossed system is verified at construction time.
    """

    def __init__(self, cs: CrossedSystem, check: bool = True):
        if check:
            rep = verify_crossed_system(cs)
            if not rep.ok:
                raise ValueError("crossed system fails verification: "
                                 + "; ".join(rep.failures[:3]))
        self.cs = cs
        self.group = cs.group
        self.base = cs.ring
        kind = ("group ring" if cs.is_group_ring
                else "skew" if cs.trivial_omega
                else "twisted" if cs.trivial_sigma else "crossed")
        self.name = f"{kind}({self.base.name}, {self.group.name})"

    def __eq__(self, other):
        if not isinstance(other, CrossedProductRing):
            return False
        if self.cs is other.cs:
            return True
        # group rings carry no extra data, so compare structurally
        return (self.cs.is_group_ring and other.cs.is_group_ring
                and self.group == other.group and self.base == other.base)

    def __hash__(self):
        if self.cs.is_group_ring:
            return hash(("group ring", hash(self.group), hash(self.base)))
        return hash(("crossed", id(self.cs)))

    def term(self, r, g) -> dict:
        self.group.check_element(g)
        return self._canon({g: r})

    def zero(self):
        return {}

    def one(self):
        return {self.group.identity(): self.base.one()}

    def add(self, a, b):
        out = dict(a)
        S = self.base
        for g, r in b.items():
            out[g] = S.add(out[g], r) if g in out else r
        return self._canon(out)

    def neg(self, a):
        return {g: self.base.neg(r) for g, r in a.items()}

    def mul(self, a, b):
        S, cs = self.base, self.cs
        out = {}
        for g, rg in a.items():
            for h, rh in b.items():
                gh = self.group.mul(g, h)
                val = S.mul(S.mul(rg, cs.act(g, rh)), cs.w(g, h))
                out[gh] = S.add(out[gh], val) if gh in out else val
        return self._canon(out)

    def eq(self, a, b):
        a, b = self._canon(dict(a)), self._canon(dict(b))
        if set(a) != set(b):
            return False
        return all(self.base.eq(a[g], b[g]) for g in a)

    def from_int(self, n):
        return self._canon({self.group.identity(): self.base.from_int(n)})

    def _canon(self, terms):
        return {g: r for g, r in terms.items() if not self.base.is_zero(r)}

    def element_to_str(self, a):
        if not a:
            return "0"
        G, S = self.group, self.base
        return " + ".join(f"{S.element_to_str(a[g])}*[{G.element_to_str(g)}]"
                          for g in sorted(a, key=G.element_key))

    def element_from_str(self, s):
        s = s.strip()
        if s == "0":
            return {}
        out = self.zero()
        for part in s.split("+"):
            m = re.fullmatch(r"\s*(.*?)\s*\*\s*\[(.*?)\]\s*", part)
            if not m:
                raise ValueError(f"cannot parse term {part!r}; "
                                 "expected 'coeff*[group element]'")
            out = self.add(out, self.term(self.base.element_from_str(m.group(1)),
                                          self.group.element_from_str(m.group(2))))
        return out


def group_ring(group: Group, ring: Ring) -> CrossedProductRing:
    return CrossedProductRing(group_ring_system(group, ring))


def group_ring_augmentation(ring: CrossedProductRing, a: dict):
    """Sum of coefficients; a ring homomorphism RG -> R for group rings."""
    if not ring.cs.is_group_ring:
        raise ValueError("augmentation needs trivial sigma and omega")
    S = ring.base
    out = S.zero()
    for r in a.values():
        out = S.add(out, r)
    return out


def augmentation_is_multiplicative(ring: CrossedProductRing,
                                   pairs: Sequence[tuple]) -> bool:
    S = ring.base
    for a, b in pairs:
        lhs = group_ring_augmentation(ring, ring.mul(a, b))
        rhs = S.mul(group_ring_augmentation(ring, a),
                    group_ring_augmentation(ring, b))
        if not S.eq(lhs, rhs):
            return False
    return True


# ---------------------------------------------------------------------------
# strong grading


@dataclass
class StrongGradingVerdict:
    g: object
    found: bool
    witness: str


def strong_grading_check(ring: Ring, components: dict, inv: Callable,
                         gs: Sequence, coeff_bound: int = 3) -> list:
    """For each tested g, search for 1 as a combination of products from the
    spanning sets of R_g and R_{g^-1}.

    Bounded strategy: scaled single products (integer coefficients up to
    coeff_bound), then a greedy family of pairwise orthogonal idempotent
    products summed up.  A negative verdict means the bounded search failed,
    not that the grading is weak.
    """
    out = []
    for g in gs:
        span_a = components[g]
        span_b = components[inv(g)]
        products = []
        for ia, a in enumerate(span_a):
            for ib, b in enumerate(span_b):
                p = ring.mul(a, b)
                if not ring.is_zero(p):
                    products.append((ia, ib, p))
        verdict = StrongGradingVerdict(g, False, "")
        for ia, ib, p in products:
            for c in range(1, coeff_bound + 1):
                for s in (c, -c):
                    if ring.eq(ring.mul(ring.from_int(s), p), ring.one()):
                        verdict = StrongGradingVerdict(
                            g, True, f"1 = {s} * a[{ia}] b[{ib}]")
                        break
                if verdict.found:
                    break
            if verdict.found:
                break
        if not verdict.found:
            chosen = []
            for ia, ib, p in products:
                if not ring.eq(ring.mul(p, p), p):
                    continue
                if all(ring.is_zero(ring.mul(p, q)) and ring.is_zero(ring.mul(q, p))
                       for _, _, q in chosen):
                    chosen.append((ia, ib, p))
            acc = ring.zero()
            for _, _, p in chosen:
                acc = ring.add(acc, p)
            if chosen and ring.eq(acc, ring.one()):
                pairs = " + ".join(f"a[{ia}] b[{ib}]" for ia, ib, _ in chosen)
                verdict = StrongGradingVerdict(g, True, f"1 = {pairs}")
        out.append(verdict)
    return out


# ---------------------------------------------------------------------------
# graded endomorphism rings of mixed-rank free modules


@dataclass
class EndoGraded:
    base: Ring
    group: Group
    n: int
    l: int
    p: int
    index: list          # (x, i) pairs, block-major in group element order
    ranks: dict          # x -> rank of A_x
    matrix_ring: MatrixRing
    components: dict     # g -> list of matrix units (as matrix_ring elements)
    unit_positions: dict  # g -> list of ((x,i),(y,j)) labels, same order


@dataclass
class EndoGradedReport:
    dimension_ok: bool
    partition_ok: bool
    closure_ok: bool
    t1_diagonal_ok: bool
    strong: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.dimension_ok and self.partition_ok and self.closure_ok
                and self.t1_diagonal_ok and all(v.found for v in self.strong))

    def lines(self):
        flags = [("total rank equals n*l", self.dimension_ok),
                 ("components partition the matrix units", self.partition_ok),
                 ("grading closure T_g T_h in T_gh", self.closure_ok),
                 ("identity component is block diagonal", self.t1_diagonal_ok)]
        out = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in flags]
        for v in self.strong:
            out.append(f"strong grading at {v.g}: "
                       + (f"pass ({v.witness})" if v.found else "FAIL"))
        return out + self.failures


def endo_graded_construction(S: Ring, group: Group, n: int, l: int):
    """Grade the matrix ring M_{nl}(S) by a finite group of order k, viewing
    it as endomorphisms of a direct sum with one summand of rank
    p = nl - k + 1 at the identity and rank-1 summands elsewhere.

    Component T_g consists of the blocks (x, g^-1 x); returns the graded
    ring data and a report covering dimension, partition, closure, strong
    grading for every g, and the block-diagonal identity component.
    """
    elems = group.elements()
    k = len(elems)
    if k < 2:
        raise ValueError("need a group of order at least 2")
    if n * l <= k - 1:
        raise ValueError(f"need n*l > |G| - 1 = {k - 1}")
    p = n * l - k + 1
    e = group.identity()
    ranks = {x: (p if x == e else 1) for x in elems}
    index = [(x, i) for x in elems for i in range(ranks[x])]
    N = len(index)
    pos = {lab: t for t, lab in enumerate(index)}
    mring = MatrixRing(S, N)

    def unit(a, b) -> RingMatrix:
        entries = [S.zero()] * (N * N)
        entries[pos[a] * N + pos[b]] = S.one()
        return RingMatrix(S, N, N, entries)

    components, unit_positions = {}, {}
    for g in elems:
        ginv = group.inv(g)
        labs = [((x, i), (group.mul(ginv, x), j))
                for x in elems for i in range(ranks[x])
                for j in range(ranks[group.mul(ginv, x)])]
        unit_positions[g] = labs
        components[g] = [unit(a, b) for a, b in labs]
    ring = EndoGraded(S, group, n, l, p, index, ranks, mring,
                      components, unit_positions)

    rep = EndoGradedReport(dimension_ok=(N == n * l), partition_ok=True,
                           closure_ok=True, t1_diagonal_ok=True)
    all_pairs = [(a, b) for g in elems for a, b in unit_positions[g]]
    if (len(all_pairs) != N * N
            or set(all_pairs) != {(a, b) for a in index for b in index}):
        rep.partition_ok = False
    comp_of = {}
    for g in elems:
        for lab in unit_positions[g]:
            comp_of[lab] = g
    for g in elems:
        for h in elems:
            gh = group.mul(g, h)
            for (a1, b1), u1 in zip(unit_positions[g], components[g]):
                for (a2, b2), u2 in zip(unit_positions[h], components[h]):
                    prod = mat_mul(u1, u2)
                    if b1 != a2:
                        if not prod.eq(mring.zero()):
                            rep.closure_ok = False
                    elif comp_of[(a1, b2)] != gh or not prod.eq(unit(a1, b2)):
                        rep.closure_ok = False
                        rep.failures.append(
                            f"product of T_{g} and T_{h} units left T_{gh}")
    for (a, b) in unit_positions[e]:
        if a[0] != b[0]:
            rep.t1_diagonal_ok = False
    rep.strong = strong_grading_check(mring, components, group.inv, elems)
    return ring, rep


# ---------------------------------------------------------------------------
# truncated translation-ring embedding of a freely graded ring


@dataclass
class PsiReport:
    unital_ok: bool
    additive_ok: bool
    multiplicative_ok: bool
    pairs_checked: int
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.unital_ok and self.additive_ok and self.multiplicative_ok

    def lines(self):
        return [
            f"unitality (Psi of 1 is the identity): "
            f"{'pass' if self.unital_ok else 'FAIL'}",
            f"additivity on samples: {'pass' if self.additive_ok else 'FAIL'}",
            f"multiplicativity on {self.pairs_checked} pairs: "
            f"{'pass' if self.multiplicative_ok else 'FAIL'}",
        ] + self.failures


def _weyl_rank(ring: WeylRing, x: int) -> int:
    return ring.n ** x if x > 0 else 1


def _weyl_basis_elems(ring: WeylRing, x: int) -> list:
    if x == 0:
        return [ring.one()]
    basis = weyl_component_basis(ring, x)
    return [{key: ring.base.one()} for key in basis.monomials]


def _homogeneous_parts(ring: WeylRing, elem: dict) -> dict:
    parts = {}
    for (w, lpow), c in elem.items():
        d = len(w) - lpow
        parts.setdefault(d, {})[(w, lpow)] = c
    return parts


def _block_matrix(ring: WeylRing, part: dict, d: int, x: int, y: int):
    """Coordinate matrix of left multiplication by a degree-d element, as a
    map from component y to component x = d + y, over the degree-0 subring."""
    assert x == d + y
    cols = []
    for v in _weyl_basis_elems(ring, y):
        cols.append(weyl_coordinates(ring, ring.mul(part, v), x))
    n_x, n_y = _weyl_rank(ring, x), _weyl_rank(ring, y)
    return [[cols[j][i] for j in range(n_y)] for i in range(n_x)]


def _psi_entry(ring: WeylRing, M, n_x: int, n_y: int, i: int, j: int):
    """The interval-block rule turning a coordinate matrix into a Z x Z
    translation-ring element evaluated at (i, j)."""
    if (i - 1) // n_x != (j - 1) // n_y:
        return ring.zero()
    return M[(i - 1) % n_x][(j - 1) % n_y]


class _PsiImage:
    """Psi(theta(r)) for a Weyl element r, evaluated lazily by index."""

    def __init__(self, ring: WeylRing, elem: dict):
        self.ring = ring
        self.parts = _homogeneous_parts(ring, elem)
        self._blocks = {}

    def block(self, x: int, y: int):
        d = x - y
        if d not in self.parts:
            return None
        if (x, y) not in self._blocks:
            self._blocks[(x, y)] = _block_matrix(self.ring, self.parts[d], d, x, y)
        return self._blocks[(x, y)]

    def entry(self, x: int, i: int, y: int, j: int):
        M = self.block(x, y)
        if M is None:
            return self.ring.zero()
        return _psi_entry(self.ring, M, _weyl_rank(self.ring, x),
                          _weyl_rank(self.ring, y), i, j)


def psi_embedding_check(ring: WeylRing, samples: Sequence[dict],
                        window: int = 6,
                        component_window: Optional[int] = None) -> PsiReport:
    """Verify the translation-ring embedding of the graded algebra on a
    finite window: unitality, additivity, and multiplicativity of the block
    map, with the inner index sums computed exactly."""
    degs = {d for s in samples for d in _homogeneous_parts(ring, s)}
    cw = component_window if component_window is not None \
        else max(2, max((abs(d) for d in degs), default=0) + 1)
    comps = range(-cw, cw + 1)
    idxs = range(-window, window + 1)
    S0 = ring  # coordinates live in the degree-0 subring of the same ring
    rep = PsiReport(True, True, True, 0)

    one_img = _PsiImage(ring, ring.one())
    for x in comps:
        for i in idxs:
            for j in idxs:
                want = ring.one() if i == j else ring.zero()
                if not ring.eq(one_img.entry(x, i, x, j), want):
                    rep.unital_ok = False
        for y in comps:
            if y != x and one_img.block(x, y) is not None:
                rep.unital_ok = False

    for r in samples:
        for s in samples:
            sum_img = _PsiImage(ring, ring.add(r, s))
            ri, si = _PsiImage(ring, r), _PsiImage(ring, s)
            for x in comps:
                for y in comps:
                    for i in idxs:
                        for j in idxs:
                            lhs = sum_img.entry(x, i, y, j)
                            rhs = ring.add(ri.entry(x, i, y, j),
                                           si.entry(x, i, y, j))
                            if not ring.eq(lhs, rhs):
                                rep.additive_ok = False

    for r in samples:
        for s in samples:
            ri, si = _PsiImage(ring, r), _PsiImage(ring, s)
            prod_img = _PsiImage(ring, ring.mul(r, s))
            for x in comps:
                for y in comps:
                    for i in idxs:
                        for j in idxs:
                            acc = S0.zero()
                            for d in ri.parts:
                                z = x - d
                                if abs(z) > cw + abs(y) + 2:
                                    continue
                                n_z = _weyl_rank(ring, z)
                                k = (i - 1) // _weyl_rank(ring, x)
                                for t in range(k * n_z + 1, (k + 1) * n_z + 1):
                                    acc = S0.add(acc, S0.mul(
                                        ri.entry(x, i, z, t),
                                        si.entry(z, t, y, j)))
                            if not S0.eq(acc, prod_img.entry(x, i, y, j)):
                                rep.multiplicative_ok = False
                                rep.failures.append(
                                    f"multiplicativity fails at (({x},{i}),({y},{j}))")
            rep.pairs_checked += 1
    return rep
