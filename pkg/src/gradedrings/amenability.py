"""Folner-condition search, truncated paradoxical decompositions via
bipartite matching, equidecomposition checking, and the Baumslag-Solitar
witnesses for one-sided amenability.

All counting comparisons are exact (Fraction); a negative search outcome is
a value carrying the evidence, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .groups import BaumslagSolitar, Group, set_product


class SubsetPredicate:
    """A decidable subset X of a group."""

    def __init__(self, group: Group, contains: Callable, name: str):
        self.group = group
        self._contains = contains
        self.name = name

    def __contains__(self, x):
        return self._contains(x)

    def __repr__(self):
        return f"SubsetPredicate({self.group.name}, {self.name})"


def whole_group(group: Group) -> SubsetPredicate:
    return SubsetPredicate(group, lambda x: True, "all")


def finite_subset(group: Group, elements: Iterable) -> SubsetPredicate:
    elems = set(elements)
    return SubsetPredicate(group, lambda x: x in elems, f"finite({len(elems)})")


def bs_X(group: BaumslagSolitar) -> SubsetPredicate:
    """X = AB in BS(1,k): elements (t, m) with t an integer."""
    return SubsetPredicate(group, lambda x: x[0].denominator == 1, "X=AB")


def bs_X0(group: BaumslagSolitar) -> SubsetPredicate:
    """X0 = <a^k>B: elements (t, m) with t in kZ."""
    k = group.k
    return SubsetPredicate(
        group, lambda x: x[0].denominator == 1 and x[0].numerator % k == 0, "X0")


@dataclass
class FolnerWitness:
    K: list
    eps: Fraction
    F: list
    kf_count: int  # |KF intersect X|
    f_count: int   # |F intersect X|

    def holds(self) -> bool:
        return self.f_count > 0 and self.kf_count < (1 + self.eps) * self.f_count


@dataclass
class FolnerFailure:
    eps: Fraction
    r_max: int
    ratios: list  # (radius, kf_count, f_count, Fraction ratio)

    @property
    def best_ratio(self) -> Optional[Fraction]:
        vals = [r for (_, _, _, r) in self.ratios if r is not None]
        return min(vals) if vals else None


def folner_search(group: Group, X: SubsetPredicate, K: Sequence,
                  eps: Fraction, r_max: int,
                  candidates: Optional[Sequence[Sequence]] = None):
    """Look for a finite F with |KF cap X| < (1 + eps) |F cap X|.

    By default F runs over the balls of radius 0..r_max; an explicit list of
    candidate sets may be supplied instead.  Returns the first FolnerWitness
    found, re-verified by an independent recount, else a FolnerFailure with
    the exact ratio for every candidate.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    K = list(K)
    if not K:
        raise ValueError("K must be nonempty")
    if candidates is None:
        candidates = [group.ball(r, max_radius=max(r_max, 8)) for r in range(r_max + 1)]
    ratios = []
    for idx, F in enumerate(candidates):
        F = list(F)
        f_count = sum(1 for f in F if f in X)
        kf = set_product(group, K, F)
        kf_count = sum(1 for g in kf if g in X)
        ratio = Fraction(kf_count, f_count) if f_count else None
        ratios.append((idx, kf_count, f_count, ratio))
        if f_count and kf_count < (1 + eps) * f_count:
            w = FolnerWitness(K=K, eps=eps, F=F, kf_count=kf_count, f_count=f_count)
            assert _recount(group, X, w) == (kf_count, f_count)
            return w
    return FolnerFailure(eps=eps, r_max=r_max, ratios=ratios)


def _recount(group: Group, X: SubsetPredicate, w: FolnerWitness):
    kf = {group.mul(k, f) for k in w.K for f in w.F}
    return (len([g for g in kf if g in X]), len([f for f in w.F if f in X]))


def expansion_profile(group: Group, X: SubsetPredicate, K: Sequence,
                      r_max: int) -> list:
    """Exact ratios |K B_r cap X| / |B_r cap X| for r = 0..r_max."""
    out = []
    for r in range(r_max + 1):
        F = group.ball(r, max_radius=max(r_max, 8))
        f_count = sum(1 for f in F if f in X)
        kf = set_product(group, K, F)
        kf_count = sum(1 for g in kf if g in X)
        out.append(Fraction(kf_count, f_count) if f_count else None)
    return out


# ---------------------------------------------------------------------------
# truncated two-to-one injections (paradoxical decompositions at desk scale)


@dataclass
class InjectionWitness:
    V: list
    W: list
    K: list
    alpha: dict
    beta: dict


@dataclass
class Infeasible:
    violating_set: list  # A subseteq V with |N(A)| < 2|A|
    neighborhood: list


def find_two_to_one_injection(group: Group, V: Sequence, W: Sequence,
                              K: Sequence):
    """Two injections alpha, beta: V -> W with disjoint images and
    translators in K (edges: (x, w) allowed iff w x^-1 in K).

    Solved as a bipartite matching with two copies of every left vertex;
    ties broken by the given orderings, so the witness is deterministic.
    Returns an InjectionWitness, or Infeasible with a Hall-violating set.
    """
    V = list(V)
    W = list(W)
    Kset = set(K)
    w_index = {w: i for i, w in enumerate(W)}
    adj = []  # per left copy: list of W indices
    for x in V:
        xinv = group.inv(x)
        nbrs = [w_index[w] for w in W if group.mul(w, xinv) in Kset]
        adj.append(nbrs)

    n_left = 2 * len(V)  # copies 2i, 2i+1 both use adj[i]
    match_right = [-1] * len(W)   # W index -> left copy
    match_left = [-1] * n_left

    def try_augment(u, visited):
        for wi in adj[u // 2]:
            if wi in visited:
                continue
            visited.add(wi)
            if match_right[wi] == -1 or try_augment(match_right[wi], visited):
                match_right[wi] = u
                match_left[u] = wi
                return True
        return False

    for u in range(n_left):
        try_augment(u, set())

    unmatched = [u for u in range(n_left) if match_left[u] == -1]
    if not unmatched:
        alpha, beta = {}, {}
        for i, x in enumerate(V):
            targets = sorted([match_left[2 * i], match_left[2 * i + 1]])
            alpha[x] = W[targets[0]]
            beta[x] = W[targets[1]]
        witness = InjectionWitness(V=V, W=W, K=sorted(Kset, key=group.element_key),
                                   alpha=alpha, beta=beta)
        ok, msg = verify_injection_witness(group, witness)
        if not ok:
            raise AssertionError(f"matching produced an invalid witness: {msg}")
        return witness

    # Hall violator: left vertices reachable by alternating paths from an
    # unmatched vertex; their joint neighborhood is too small.
    reach = set(unmatched)
    frontier = list(unmatched)
    reach_w = set()
    while frontier:
        u = frontier.pop()
        for wi in adj[u // 2]:
            if wi not in reach_w:
                reach_w.add(wi)
                v = match_right[wi]
                if v != -1 and v not in reach:
                    reach.add(v)
                    frontier.append(v)
    A_idx = sorted({u // 2 for u in reach})
    A = [V[i] for i in A_idx]
    nbhd = sorted({wi for i in A_idx for wi in adj[i]})
    result = Infeasible(violating_set=A, neighborhood=[W[i] for i in nbhd])
    assert len(result.neighborhood) < 2 * len(A), "Hall certificate inconsistent"
    return result


def verify_injection_witness(group: Group, w: InjectionWitness):
    """Exhaustive soundness check: injectivity, disjoint images, translators."""
    Kset = set(w.K)
    if set(w.alpha) != set(w.V) or set(w.beta) != set(w.V):
        return False, "maps not defined on all of V"
    avals = list(w.alpha.values())
    bvals = list(w.beta.values())
    if len(set(avals)) != len(avals):
        return False, "alpha not injective"
    if len(set(bvals)) != len(bvals):
        return False, "beta not injective"
    if set(avals) & set(bvals):
        return False, "images not disjoint"
    wset = set(w.W)
    for x in w.V:
        for val, nm in ((w.alpha[x], "alpha"), (w.beta[x], "beta")):
            if val not in wset:
                return False, f"{nm}({x}) outside W"
            if group.mul(val, group.inv(x)) not in Kset:
                return False, f"translator of {nm}({x}) outside K"
    return True, "ok"


def verify_hall_violation(group: Group, V, W, K, A) -> bool:
    """Recount |N(A)| < 2|A| from scratch."""
    Kset = set(K)
    Wset = set(W)
    nbhd = set()
    for x in A:
        xinv = group.inv(x)
        nbhd |= {w for w in Wset if group.mul(w, xinv) in Kset}
    return len(nbhd) < 2 * len(A)


# ---------------------------------------------------------------------------
# equidecomposition


@dataclass
class EquidecompositionWitness:
    pieces: list       # list of sets
    translators: list  # same length


def verify_equidecomposition(group: Group, w: EquidecompositionWitness,
                             A: Iterable, B: Iterable) -> bool:
    """Pieces partition A and their translates partition B, exactly."""
    A = set(A)
    B = set(B)
    if len(w.pieces) != len(w.translators):
        return False
    seen = set()
    for piece in w.pieces:
        piece = set(piece)
        if piece & seen:
            return False
        seen |= piece
    if seen != A:
        return False
    seen = set()
    for piece, g in zip(w.pieces, w.translators):
        moved = {group.mul(g, p) for p in piece}
        if moved & seen:
            return False
        seen |= moved
    return seen == B


# ---------------------------------------------------------------------------
# Baumslag-Solitar example witnesses


@dataclass
class BSCheckReport:
    k: int
    radius: int
    subset_ok: bool
    disjoint_ok: bool
    b_shift_ok: bool
    counts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.subset_ok and self.disjoint_ok and self.b_shift_ok

    def lines(self):
        c = self.counts
        return [
            f"X0 and aX0 inside X (|X0 cap ball| = {c.get('x0', 0)}): "
            f"{'pass' if self.subset_ok else 'FAIL'}",
            f"X0 disjoint from aX0: {'pass' if self.disjoint_ok else 'FAIL'}",
            f"b maps X into X0 (and b-preimages of X0 lie in X): "
            f"{'pass' if self.b_shift_ok else 'FAIL'}",
        ]


def bs_example_check(k: int, r: int, max_radius: int = 8) -> BSCheckReport:
    """Ball-truncated verification that X0, aX0 are disjoint subsets of X and
    that b carries X into X0 in BS(1,k)."""
    G = BaumslagSolitar(k)
    X = bs_X(G)
    X0 = bs_X0(G)
    ball = G.ball(r, max_radius=max_radius)
    a = (Fraction(1), 0)
    b = (Fraction(0), 1)
    binv = G.inv(b)
    x0_ball = [x for x in ball if x in X0]
    a_x0 = [G.mul(a, x) for x in x0_ball]
    subset_ok = all(x in X for x in x0_ball) and all(x in X for x in a_x0)
    disjoint_ok = not (set(x0_ball) & set(a_x0))
    x_ball = [x for x in ball if x in X]
    b_shift_ok = all(G.mul(b, x) in X0 for x in x_ball)
    ball_set = set(ball)
    for x in x0_ball:
        pre = G.mul(binv, x)
        if pre in ball_set and pre not in X:
            b_shift_ok = False
    return BSCheckReport(k=k, radius=r, subset_ok=subset_ok,
                         disjoint_ok=disjoint_ok, b_shift_ok=b_shift_ok,
                         counts={"ball": len(ball), "x": len(x_ball),
                                 "x0": len(x0_ball)})


@dataclass
class RosenblattResult:
    g: tuple
    u_count: int
    v_count: int


def rosenblatt_find(k: int, u_tuple: Sequence, v_tuple: Sequence) -> RosenblattResult:
    """Find g in BS(1,k) with |gX cap u| < |gX cap v| for |u| < |v|.

    The translates {t X} of X = AB partition the group by the fractional
    part of the normal-form t-coordinate, so a pigeonhole over cosets always
    produces a strict inequality.
    """
    if len(u_tuple) >= len(v_tuple):
        raise ValueError("need |u| < |v|")
    G = BaumslagSolitar(k)
    for x in list(u_tuple) + list(v_tuple):
        G.check_element(x)

    def frac(x):
        t = x[0]
        return t - (t.numerator // t.denominator)

    from collections import Counter
    cu = Counter(frac(x) for x in u_tuple)
    cv = Counter(frac(x) for x in v_tuple)
    for f in sorted(set(cu) | set(cv)):
        if cu.get(f, 0) < cv.get(f, 0):
            g = (f, 0)
            res = RosenblattResult(g=g, u_count=cu.get(f, 0), v_count=cv.get(f, 0))
            uc, vc = _rosenblatt_recount(G, g, u_tuple, v_tuple)
            assert (uc, vc) == (res.u_count, res.v_count) and uc < vc
            return res
    raise AssertionError("pigeonhole failed; tuples malformed")


def _rosenblatt_recount(G: BaumslagSolitar, g, u_tuple, v_tuple):
    """Count memberships in gX directly: x in gX iff g^-1 x has integral t."""
    X = bs_X(G)
    ginv = G.inv(g)
    uc = sum(1 for x in u_tuple if G.mul(ginv, x) in X)
    vc = sum(1 for x in v_tuple if G.mul(ginv, x) in X)
    return uc, vc
