"""Translation rings: X-by-X matrices over a coefficient ring with finite
propagation, represented as finite sums of (shift, diagonal-function) terms.

A term (g, f) stands for the matrix with entry f(x) at (x, g^-1 x) and 0
elsewhere; coefficient functions are constants with finitely many overrides,
so infinite index sets stay finitely describable.  The module also provides
the finite-group matrix-ring isomorphism, the rank-collapse matrices built
from a two-to-one injection witness, certificate compression along a Folner
set, and the left/right translation-ring identification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .amenability import InjectionWitness, SubsetPredicate, verify_injection_witness
from .groups import Group
from .rings import (RankCertificate, Ring, RingMatrix, mat_mul,
                    verify_certificate)


class CoeffFn:
    """A function X -> R given by a constant value plus finite overrides."""

    __slots__ = ("const", "overrides")

    def __init__(self, ring: Ring, const, overrides: Optional[dict] = None):
        self.const = const
        self.overrides = {}
        for x, v in (overrides or {}).items():
            if not ring.eq(v, const):
                self.overrides[x] = v

    def __call__(self, x):
        if x in self.overrides:
            return self.overrides[x]
        return self.const

    def __repr__(self):
        return f"CoeffFn({self.const!r}, {self.overrides!r})"


class TranslationRing(Ring):
    """T_G(X, R) as a ring of term sums {shift g: CoeffFn}.

    The term algebra multiplies by (g, f)(k, h) = (gk, x -> f(x) h(g^-1 x)),
    which matches the matrix product whenever X is invariant under the
    shifts involved (in particular when X is the whole group); the entrywise
    convolution oracle tr_mul_oracle_entry checks this on samples.
    """

    def __init__(self, group: Group, X: SubsetPredicate, base: Ring):
        self.group = group
        self.X = X
        self.base = base
        self.name = f"T({group.name}|{X.name}; {base.name})"

    def __eq__(self, other):
        return (isinstance(other, TranslationRing) and other.group == self.group
                and other.base == self.base and other.X.name == self.X.name)

    def __hash__(self):
        return hash(("T", hash(self.group), self.X.name, hash(self.base)))

    # construction ----------------------------------------------------------

    def fn(self, const, overrides: Optional[dict] = None) -> CoeffFn:
        return CoeffFn(self.base, const, overrides)

    def diag(self, f: CoeffFn) -> dict:
        return self._canon({self.group.identity(): f})

    def diag_const(self, r) -> dict:
        return self.diag(self.fn(r))

    def shift(self, g) -> dict:
        self.group.check_element(g)
        return {g: self.fn(self.base.one())}

    def term(self, g, f: CoeffFn) -> dict:
        self.group.check_element(g)
        return self._canon({g: f})

    # ring interface --------------------------------------------------------

    def zero(self):
        return {}

    def one(self):
        return self.diag_const(self.base.one())

    def add(self, a, b):
        S = self.base
        out = dict(a)
        for g, f in b.items():
            if g in out:
                cur = out[g]
                keys = set(cur.overrides) | set(f.overrides)
                out[g] = CoeffFn(S, S.add(cur.const, f.const),
                                 {x: S.add(cur(x), f(x)) for x in keys})
            else:
                out[g] = f
        return self._canon(out)

    def neg(self, a):
        S = self.base
        return {g: CoeffFn(S, S.neg(f.const),
                           {x: S.neg(v) for x, v in f.overrides.items()})
                for g, f in a.items()}

    def mul(self, a, b):
        G, S = self.group, self.base
        out = self.zero()
        for g, f in a.items():
            ginv = G.inv(g)
            for k, h in b.items():
                keys = set(f.overrides) | {G.mul(g, x) for x in h.overrides}
                prod = CoeffFn(S, S.mul(f.const, h.const),
                               {x: S.mul(f(x), h(G.mul(ginv, x))) for x in keys})
                out = self.add(out, {G.mul(g, k): prod})
        return out

    def eq(self, a, b):
        a = self._canon(dict(a))
        b = self._canon(dict(b))
        if set(a) != set(b):
            return False
        S = self.base
        for g in a:
            f, h = a[g], b[g]
            if not S.eq(f.const, h.const):
                return False
            if set(f.overrides) != set(h.overrides):
                return False
            if not all(S.eq(f.overrides[x], h.overrides[x]) for x in f.overrides):
                return False
        return True

    def from_int(self, n):
        return self.diag_const(self.base.from_int(n))

    def _canon(self, terms: dict) -> dict:
        S = self.base
        return {g: f for g, f in terms.items()
                if f.overrides or not S.is_zero(f.const)}

    def element_to_str(self, a):
        if not a:
            return "0"
        G, S = self.group, self.base
        parts = []
        for g in sorted(a, key=G.element_key):
            f = a[g]
            ov = ", ".join(
                f"{G.element_to_str(x)}: {S.element_to_str(f.overrides[x])}"
                for x in sorted(f.overrides, key=G.element_key))
            desc = S.element_to_str(f.const) + (f" [{ov}]" if ov else "")
            parts.append(f"({G.element_to_str(g)} | {desc})")
        return " + ".join(parts)


def tr_entry(tring: TranslationRing, M: dict, x, y):
    """Matrix entry M(x, y): the term rule f(x) when y = g^-1 x."""
    G = tring.group
    if x not in tring.X or y not in tring.X:
        raise ValueError("entry indices must lie in X")
    g = G.mul(x, G.inv(y))
    f = M.get(g)
    return f(x) if f is not None else tring.base.zero()


def tr_add(tring: TranslationRing, M: dict, N: dict) -> dict:
    return tring.add(M, N)


def tr_mul(tring: TranslationRing, M: dict, N: dict) -> dict:
    return tring.mul(M, N)


def tr_transpose(tring: TranslationRing, M: dict) -> dict:
    """Entry swap: the term (g, f) becomes (g^-1, x -> f(gx))."""
    G, S = tring.group, tring.base
    out = {}
    for g, f in M.items():
        ginv = G.inv(g)
        out[ginv] = CoeffFn(S, f.const,
                            {G.mul(ginv, x): v for x, v in f.overrides.items()})
    return tring._canon(out)


def tr_mul_oracle_entry(tring: TranslationRing, M: dict, N: dict, x, y):
    """(MN)(x,y) by the defining convolution, summed over the propagation set."""
    G, S = tring.group, tring.base
    acc = S.zero()
    for g in M:
        z = G.mul(G.inv(g), x)
        if z in tring.X:
            acc = S.add(acc, S.mul(tr_entry(tring, M, x, z),
                                   tr_entry(tring, N, z, y)))
    return acc


# ---------------------------------------------------------------------------
# finite groups: T(G, R) is the |G| x |G| matrix ring, skew-group-ring style


@dataclass
class FiniteGroupIsoReport:
    group_name: str
    ring_name: str
    shift_mult_ok: bool       # A_g A_h = A_{gh}
    diag_mult_ok: bool        # D_f D_f' = D_{ff'}
    action_ok: bool           # A_g D_f A_{g^-1} = D_{g.f}
    unital_ok: bool
    bijective_ok: bool        # {D_{delta_x} A_g} hits every matrix unit once
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.shift_mult_ok and self.diag_mult_ok and self.action_ok
                and self.unital_ok and self.bijective_ok)

    def lines(self):
        flags = [("shift multiplicativity", self.shift_mult_ok),
                 ("diagonal multiplicativity", self.diag_mult_ok),
                 ("conjugation action law", self.action_ok),
                 ("unitality", self.unital_ok),
                 ("bijectivity (matrix-unit count)", self.bijective_ok)]
        return [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in flags] \
            + self.failures


def finite_group_iso(group: Group, ring: Ring, bound: int = 12) -> FiniteGroupIsoReport:
    """Verify the skew-group-ring description of T(G, R) for finite G.

    Sends a function f: G -> R to the diagonal matrix D_f and a group
    element g to the 0/1 matrix A_g with entry 1 at (x, g^-1 x); checks the
    multiplication laws on all generator pairs, the conjugation action
    A_g D_f A_g^-1 = D_{g.f} with (g.f)(x) = f(g^-1 x), unitality, and that
    the products D_{delta_x} A_g enumerate every matrix unit exactly once.
    """
    elems = group.elements()
    N = len(elems)
    if N > bound:
        raise ValueError(f"group order {N} exceeds bound {bound}")
    idx = {x: i for i, x in enumerate(elems)}
    R = ring
    rep = FiniteGroupIsoReport(group.name, ring.name, True, True, True, True, True)

    def D(f: dict) -> RingMatrix:
        return RingMatrix(R, N, N,
                          [f[elems[i]] if i == j else R.zero()
                           for i in range(N) for j in range(N)])

    def A(g) -> RingMatrix:
        ginv = group.inv(g)
        return RingMatrix(R, N, N,
                          [R.one() if idx[group.mul(ginv, elems[i])] == j else R.zero()
                           for i in range(N) for j in range(N)])

    # sample coefficient functions: all-ones, a delta, and a counting table
    samples = [
        {x: R.one() for x in elems},
        {x: (R.one() if x == elems[0] else R.zero()) for x in elems},
        {x: R.from_int(i + 1) for i, x in enumerate(elems)},
    ]

    for g in elems:
        for h in elems:
            if not mat_mul(A(g), A(h)).eq(A(group.mul(g, h))):
                rep.shift_mult_ok = False
                rep.failures.append(f"A_g A_h != A_gh at ({g}, {h})")
    for f1 in samples:
        for f2 in samples:
            prod = {x: R.mul(f1[x], f2[x]) for x in elems}
            if not mat_mul(D(f1), D(f2)).eq(D(prod)):
                rep.diag_mult_ok = False
    for g in elems:
        ginv = group.inv(g)
        for f in samples:
            moved = {x: f[group.mul(ginv, x)] for x in elems}
            got = mat_mul(mat_mul(A(g), D(f)), A(ginv))
            if not got.eq(D(moved)):
                rep.action_ok = False
                rep.failures.append(f"conjugation law fails at g = {g}")
    if not A(group.identity()).is_identity():
        rep.unital_ok = False
    if not D({x: R.one() for x in elems}).is_identity():
        rep.unital_ok = False
    units = set()
    for x in elems:
        delta = {z: (R.one() if z == x else R.zero()) for z in elems}
        for g in elems:
            M = mat_mul(D(delta), A(g))
            support = [(i, j) for i in range(N) for j in range(N)
                       if not R.is_zero(M[i, j])]
            if len(support) != 1 or not R.eq(M[support[0]], R.one()):
                rep.bijective_ok = False
            else:
                units.add(support[0])
    if len(units) != N * N:
        rep.bijective_ok = False
    return rep


# ---------------------------------------------------------------------------
# rank collapse from a two-to-one injection witness


@dataclass
class CollapseResult:
    M: RingMatrix
    N: RingMatrix
    mmt_ok: bool
    nnt_ok: bool
    mnt_ok: bool
    nmt_ok: bool
    projection_ok: bool
    uncovered: list  # elements of W outside Im alpha union Im beta

    @property
    def ok(self):
        return (self.mmt_ok and self.nnt_ok and self.mnt_ok and self.nmt_ok
                and self.projection_ok)

    def lines(self):
        flags = [("M M^t = I", self.mmt_ok), ("N N^t = I", self.nnt_ok),
                 ("M N^t = 0", self.mnt_ok), ("N M^t = 0", self.nmt_ok),
                 ("M^t M + N^t N = projection onto the images", self.projection_ok)]
        out = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in flags]
        out.append(f"uncovered targets: {len(self.uncovered)}")
        return out


def collapse_matrices(group: Group, w: InjectionWitness, ring: Ring) -> CollapseResult:
    """Build the 0/1 slices M(x,y) = [y = alpha(x)], N(x,y) = [y = beta(x)]
    on V x W and verify the truncated collapse identities exactly.

    The last identity holds only as a projection onto Im alpha union Im beta
    on a truncation; the uncovered right-hand elements are reported.
    """
    ok, msg = verify_injection_witness(group, w)
    if not ok:
        raise ValueError(f"invalid witness: {msg}")
    V, W = list(w.V), list(w.W)
    R = ring
    widx = {x: i for i, x in enumerate(W)}

    if not V:
        empty = RingMatrix.zero(R, 1, max(len(W), 1))
        return CollapseResult(empty, empty, True, True, True, True, True, list(W))

    def slice_of(mapping) -> RingMatrix:
        return RingMatrix(R, len(V), len(W),
                          [R.one() if widx[mapping[x]] == j else R.zero()
                           for x in V for j in range(len(W))])

    M = slice_of(w.alpha)
    N = slice_of(w.beta)
    I_V = RingMatrix.identity(R, len(V))
    Z_V = RingMatrix.zero(R, len(V), len(V))
    covered = {widx[w.alpha[x]] for x in V} | {widx[w.beta[x]] for x in V}
    proj = RingMatrix(R, len(W), len(W),
                      [R.one() if i == j and i in covered else R.zero()
                       for i in range(len(W)) for j in range(len(W))])
    return CollapseResult(
        M, N,
        mmt_ok=mat_mul(M, M.transpose()).eq(I_V),
        nnt_ok=mat_mul(N, N.transpose()).eq(I_V),
        mnt_ok=mat_mul(M, N.transpose()).eq(Z_V),
        nmt_ok=mat_mul(N, M.transpose()).eq(Z_V),
        projection_ok=mat_mul(M.transpose(), M)
            .add(mat_mul(N.transpose(), N)).eq(proj),
        uncovered=[W[i] for i in range(len(W)) if i not in covered],
    )


# ---------------------------------------------------------------------------
# certificate compression along a Folner set


@dataclass
class CompressionInput:
    tring: TranslationRing
    cert: RankCertificate   # over tring
    K: list                 # symmetric, contains identity, dominates entries
    F: list


@dataclass
class CompressionResult:
    certificate: RankCertificate  # over the coefficient ring
    U: list
    F_X: list
    counts: tuple  # (n |U|, m |F_X|)


def compress_certificate(ci: CompressionInput) -> CompressionResult:
    """Compress a translation-ring certificate to one over the coefficient
    ring using a Folner set F for the propagation set K.

    With U = KF cap X and F_X = F cap X, the compressed matrices are
    A*((i,f),(j,u)) = A_ij(f,u) and B*((j,u),(i,f)) = B_ji(u,f); the
    strict inequality n|U| < m|F_X| makes the output a BGN certificate.
    """
    tring, cert = ci.tring, ci.cert
    if cert.ring != tring:
        raise ValueError("certificate is not over the given translation ring")
    G, X, S = tring.group, tring.X, tring.base
    K = list(ci.K)
    Kset = set(K)
    if G.identity() not in Kset:
        raise ValueError("K must contain the identity")
    if any(G.inv(k) not in Kset for k in K):
        raise ValueError("K must be symmetric")
    shifts = {g for M in cert.A.entries + cert.B.entries for g in M}
    if not shifts <= Kset:
        raise ValueError("K does not dominate all entry shifts")

    # entrywise window check that AB = I over the translation ring
    window = sorted({x for x in list(ci.F) + [G.mul(k, f) for k in K for f in ci.F]
                     if x in X}, key=G.element_key)
    for x in window:
        for y in window:
            for i in range(cert.m):
                for i2 in range(cert.m):
                    acc = S.zero()
                    for j in range(cert.n):
                        M, N = cert.A[i, j], cert.B[j, i2]
                        for g in M:
                            z = G.mul(G.inv(g), x)
                            if z in X:
                                acc = S.add(acc, S.mul(tr_entry(tring, M, x, z),
                                                       tr_entry(tring, N, z, y)))
                    want = S.one() if (i == i2 and x == y) else S.zero()
                    if not S.eq(acc, want):
                        raise ValueError(
                            f"window verification failed at blocks ({i+1},{i2+1}), "
                            f"indices ({G.element_to_str(x)}, {G.element_to_str(y)})")

    F_X = [f for f in ci.F if f in X]
    U = sorted({G.mul(k, f) for k in K for f in ci.F if G.mul(k, f) in X},
               key=G.element_key)
    n, m = cert.n, cert.m
    if not n * len(U) < m * len(F_X):
        raise ValueError(f"Folner inequality fails: n|U| = {n * len(U)} is not "
                         f"less than m|F_X| = {m * len(F_X)}")

    a_entries = []
    for i in range(m):
        for f in F_X:
            for j in range(n):
                for u in U:
                    a_entries.append(tr_entry(tring, cert.A[i, j], f, u))
    b_entries = []
    for j in range(n):
        for u in U:
            for i in range(m):
                for f in F_X:
                    b_entries.append(tr_entry(tring, cert.B[j, i], u, f))
    A_star = RingMatrix(S, m * len(F_X), n * len(U), a_entries)
    B_star = RingMatrix(S, n * len(U), m * len(F_X), b_entries)
    out = RankCertificate(S, n * len(U), m * len(F_X), A_star, B_star)
    v = verify_certificate(out)
    if not v or not v.bgn:
        raise AssertionError("compressed certificate failed re-verification")
    return CompressionResult(certificate=out, U=U, F_X=F_X,
                             counts=(n * len(U), m * len(F_X)))


# ---------------------------------------------------------------------------
# right translation rings and the inversion isomorphism


class RightTranslationRing(TranslationRing):
    """Same term data, but (g, f) has entry f(x) at (x, xg): propagation on
    the right.  Multiplication: (g, f)(h, u) = (gh, x -> f(x) u(xg))."""

    def __init__(self, group: Group, X: SubsetPredicate, base: Ring):
        super().__init__(group, X, base)
        self.name = f"Tr({group.name}|{X.name}; {base.name})"

    def mul(self, a, b):
        G, S = self.group, self.base
        out = self.zero()
        for g, f in a.items():
            for k, h in b.items():
                keys = set(f.overrides) | {G.mul(x, G.inv(g)) for x in h.overrides}
                prod = CoeffFn(S, S.mul(f.const, h.const),
                               {x: S.mul(f(x), h(G.mul(x, g))) for x in keys})
                out = self.add(out, {G.mul(g, k): prod})
        return out


def rtr_entry(rring: RightTranslationRing, M: dict, x, y):
    """Right-propagation entry rule: f(x) when y = x g."""
    G = rring.group
    if x not in rring.X or y not in rring.X:
        raise ValueError("entry indices must lie in X")
    g = G.mul(G.inv(x), y)
    f = M.get(g)
    return f(x) if f is not None else rring.base.zero()


def inverted_subset(X: SubsetPredicate) -> SubsetPredicate:
    G = X.group
    return SubsetPredicate(G, lambda p: G.inv(p) in X, f"{X.name}^-1")


def right_translation_iso(rring: RightTranslationRing, M: dict):
    """The identification M*(x^-1, y^-1) = M(x, y) of the right translation
    ring over X with the left one over X^-1.

    Term form: (g, f) maps to the left term (g, p -> f(p^-1)).  Returns
    (left translation ring, image element).
    """
    G, S = rring.group, rring.base
    lring = TranslationRing(G, inverted_subset(rring.X), S)
    out = {}
    for g, f in M.items():
        out[g] = CoeffFn(S, f.const, {G.inv(x): v for x, v in f.overrides.items()})
    return lring, lring._canon(out)


def right_translation_iso_check(rring: RightTranslationRing,
                                samples: Sequence[tuple]) -> bool:
    """(MN)* = M* N* for each sampled pair, compared in canonical term form."""
    for M, N in samples:
        lring, lhs = right_translation_iso(rring, rring.mul(M, N))
        _, Mi = right_translation_iso(rring, M)
        _, Ni = right_translation_iso(rring, N)
        if not lring.eq(lhs, lring.mul(Mi, Ni)):
            return False
    return True
