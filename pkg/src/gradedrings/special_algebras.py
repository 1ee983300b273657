"""Rewriting engines for the Leavitt algebra L(1,n) and generalized Weyl
algebras, exposed through the common Ring interface.

Leavitt elements are S-linear combinations of monomials alpha * beta-star,
stored as dicts {(alpha, beta): coeff} with alpha, beta tuples of generator
indices (beta kept unstarred).  The canonical form eliminates every monomial
whose alpha and beta both end in e_n via

    x e_n (y e_n)*  ->  x y* - sum_{i<n} (x e_i) (y e_i)*,

the confluent completion of the defining relations.

Weyl elements are combinations of basis monomials x-word * y^l, stored as
dicts {(xword, l): coeff}; products are normalized by pushing y to the right
with  y x_i = a_i x_i y + b_i.
"""

from __future__ import annotations

import re
from typing import Optional, Sequence

from .rings import IntegerRing, RankCertificate, Ring, RingMatrix, verify_certificate

_Z = IntegerRing()


def _add_term(terms: dict, key, coeff, S: Ring):
    cur = terms.get(key)
    if cur is None:
        if not S.is_zero(coeff):
            terms[key] = coeff
        return
    s = S.add(cur, coeff)
    if S.is_zero(s):
        del terms[key]
    else:
        terms[key] = s


class LeavittRing(Ring):
    """L(1,n) over a base ring S (default Z)."""

    def __init__(self, n: int, base: Optional[Ring] = None):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.base = base if base is not None else _Z
        self.name = f"L(1,{n})" if self.base == _Z else f"L(1,{n};{self.base.name})"

    def __eq__(self, other):
        return (isinstance(other, LeavittRing) and other.n == self.n
                and other.base == self.base)

    def __hash__(self):
        return hash(("Leavitt", self.n, hash(self.base)))

    # ring interface -------------------------------------------------------

    def zero(self):
        return {}

    def one(self):
        return {((), ()): self.base.one()}

    def monomial(self, alpha: Sequence[int], beta: Sequence[int], coeff=None):
        for i in tuple(alpha) + tuple(beta):
            if not 1 <= i <= self.n:
                raise ValueError(f"generator index {i} out of range")
        c = coeff if coeff is not None else self.base.one()
        return self.normalize({(tuple(alpha), tuple(beta)): c})

    def gen(self, i):
        """e_i"""
        return self.monomial((i,), ())

    def gen_star(self, i):
        """e_i*"""
        return self.monomial((), (i,))

    def add(self, a, b):
        out = dict(a)
        for key, c in b.items():
            _add_term(out, key, c, self.base)
        return out

    def neg(self, a):
        return {k: self.base.neg(c) for k, c in a.items()}

    def mul(self, a, b):
        S = self.base
        out = {}
        for (a1, b1), c1 in a.items():
            for (a2, b2), c2 in b.items():
                c = S.mul(c1, c2)
                # (a1 b1*)(a2 b2*): cancel b1 against the front of a2
                if len(b1) <= len(a2):
                    if a2[:len(b1)] == b1:
                        _add_term(out, (a1 + a2[len(b1):], b2), c, S)
                else:
                    if b1[:len(a2)] == a2:
                        _add_term(out, (a1, b2 + b1[len(a2):]), c, S)
        return self.normalize(out)

    def eq(self, a, b):
        a = self.normalize(a)
        b = self.normalize(b)
        if set(a) != set(b):
            return False
        return all(self.base.eq(a[k], b[k]) for k in a)

    def from_int(self, k):
        c = self.base.from_int(k)
        return {} if self.base.is_zero(c) else {((), ()): c}

    # normal form ----------------------------------------------------------

    def normalize(self, terms: dict) -> dict:
        """Rewrite until no monomial has alpha and beta both ending in e_n."""
        S = self.base
        out = {}
        work = list(terms.items())
        while work:
            (alpha, beta), c = work.pop()
            if S.is_zero(c):
                continue
            if alpha and beta and alpha[-1] == self.n and beta[-1] == self.n:
                work.append(((alpha[:-1], beta[:-1]), c))
                for i in range(1, self.n):
                    work.append(((alpha[:-1] + (i,), beta[:-1] + (i,)), S.neg(c)))
            else:
                _add_term(out, (alpha, beta), c, S)
        return out

    def degree_terms(self, a) -> set:
        return {len(alpha) - len(beta) for alpha, beta in a}

    def is_homogeneous(self, a, deg: int) -> bool:
        return self.degree_terms(a) <= {deg}

    # text form ------------------------------------------------------------

    def _term_key(self, key):
        alpha, beta = key
        return (len(alpha) + len(beta), alpha, beta)

    def element_to_str(self, a) -> str:
        a = self.normalize(a)
        if not a:
            return "0"
        parts = []
        for alpha, beta in sorted(a, key=self._term_key):
            c = a[(alpha, beta)]
            factors = [f"e{i}" for i in alpha] + [f"e{i}'" for i in reversed(beta)]
            cstr = self.base.element_to_str(c)
            if not factors:
                parts.append(cstr)
            elif self.base.eq(c, self.base.one()):
                parts.append(" ".join(factors))
            else:
                parts.append(cstr + " " + " ".join(factors))
        return " + ".join(parts)

    def element_from_str(self, s: str):
        return _parse_sum(s, self._parse_factor, self)

    def _parse_factor(self, tok: str):
        m = re.fullmatch(r"e(\d+)(')?", tok)
        if m:
            i = int(m.group(1))
            return self.gen_star(i) if m.group(2) else self.gen(i)
        return self.from_scalar_str(tok)

    def from_scalar_str(self, tok):
        c = self.base.element_from_str(tok)
        return {} if self.base.is_zero(c) else {((), ()): c}


def leavitt_normalize(ring: LeavittRing, element) -> dict:
    return ring.normalize(element)


def leavitt_rank_certificate(n: int, base: Optional[Ring] = None) -> RankCertificate:
    """The (1, n) certificate A = column of e_i*, B = row of e_i.

    AB = I_n by the relation e_i* e_j = delta_ij, and BA = sum e_i e_i* = 1,
    so the witnessed epimorphism L -> L^n is an isomorphism.
    """
    L = LeavittRing(n, base)
    A = RingMatrix(L, n, 1, [L.gen_star(i) for i in range(1, n + 1)])
    B = RingMatrix(L, 1, n, [L.gen(i) for i in range(1, n + 1)])
    cert = RankCertificate(L, 1, n, A, B)
    v = verify_certificate(cert)
    if not v or not v.bgn:
        raise AssertionError("Leavitt certificate failed verification")
    return cert


def leavitt_iso_check(n: int, base: Optional[Ring] = None) -> bool:
    """BA = 1 for the rank certificate, i.e. sum_i e_i e_i* = 1."""
    L = LeavittRing(n, base)
    acc = L.zero()
    for i in range(1, n + 1):
        acc = L.add(acc, L.mul(L.gen(i), L.gen_star(i)))
    return L.eq(acc, L.one())


class MatrixUnitReport:
    def __init__(self):
        self.product_law_ok = True
        self.sum_identity_ok = True
        self.degrees_ok = True
        self.chain_ok = True
        self.failures: list[str] = []

    @property
    def ok(self):
        return (self.product_law_ok and self.sum_identity_ok
                and self.degrees_ok and self.chain_ok)

    def lines(self):
        return [
            f"product law (eps_ij eps_km = delta_jk eps_im): {'pass' if self.product_law_ok else 'FAIL'}",
            f"sum identity (sum eps_ii = 1): {'pass' if self.sum_identity_ok else 'FAIL'}",
            f"all units homogeneous of degree 0: {'pass' if self.degrees_ok else 'FAIL'}",
            f"chain containment span_l in span_{{l+1}}: {'pass' if self.chain_ok else 'FAIL'}",
        ] + self.failures


def leavitt_matrix_units(n: int, l: int, sigma: Optional[Sequence] = None,
                         base: Optional[Ring] = None,
                         max_units: int = 64) -> tuple[list, MatrixUnitReport]:
    """Build the matrix units eps_ij = sigma(i) sigma(j)* from length-l words
    and verify the matrix-unit laws exhaustively.

    sigma defaults to the lexicographic enumeration of words of length l.
    Returns (units as an N x N nested list, report) with N = n^l.
    """
    if l < 1:
        raise ValueError("need l >= 1")
    L = LeavittRing(n, base)
    words = _words(n, l) if sigma is None else [tuple(w) for w in sigma]
    N = n ** l
    if len(words) != N or len(set(words)) != N:
        raise ValueError(f"sigma must be a bijection onto the {N} words of length {l}")
    if N > max_units:
        raise ValueError(f"n^l = {N} exceeds bound {max_units}")
    eps = [[L.monomial(words[i], words[j]) for j in range(N)] for i in range(N)]
    rep = MatrixUnitReport()
    for i in range(N):
        for j in range(N):
            if L.degree_terms(eps[i][j]) - {0}:
                rep.degrees_ok = False
                rep.failures.append(f"eps[{i+1}][{j+1}] not degree 0")
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for m in range(N):
                    got = L.mul(eps[i][j], eps[k][m])
                    want = eps[i][m] if j == k else L.zero()
                    if not L.eq(got, want):
                        rep.product_law_ok = False
                        rep.failures.append(
                            f"eps[{i+1}][{j+1}] eps[{k+1}][{m+1}] wrong")
    acc = L.zero()
    for i in range(N):
        acc = L.add(acc, eps[i][i])
    if not L.eq(acc, L.one()):
        rep.sum_identity_ok = False
    # span_l sits inside span_{l+1}: alpha beta* = sum_i (alpha e_i)(beta e_i)*
    for (alpha, beta) in [(words[0], words[0]), (words[0], words[-1])]:
        lhs = L.monomial(alpha, beta)
        rhs = L.zero()
        for i in range(1, n + 1):
            rhs = L.add(rhs, L.monomial(alpha + (i,), beta + (i,)))
        if not L.eq(lhs, rhs):
            rep.chain_ok = False
    return eps, rep


def _words(n: int, l: int) -> list[tuple]:
    out = [()]
    for _ in range(l):
        out = [w + (i,) for w in out for i in range(1, n + 1)]
    return out


# ---------------------------------------------------------------------------
# Generalized Weyl algebras


class WeylRing(Ring):
    """S-algebra on x_1..x_n, y with y x_i = a_i x_i y + b_i.

    Z-graded by deg(x_i) = 1, deg(y) = -1; basis monomials are x-words
    followed by a power of y.  Each a_i must be a unit of S with its inverse
    supplied (needed when solving for coordinates in the y^m components).
    """

    def __init__(self, a: Sequence, b: Sequence, base: Optional[Ring] = None,
                 a_inv: Optional[Sequence] = None):
        self.base = base if base is not None else _Z
        S = self.base
        self.a = [S.from_int(v) if isinstance(v, int) and S == _Z else v for v in a]
        self.b = [S.from_int(v) if isinstance(v, int) and S == _Z else v for v in b]
        if len(self.a) != len(self.b):
            raise ValueError("need as many a_i as b_i")
        self.n = len(self.a)
        if self.n < 1:
            raise ValueError("need at least one x generator")
        if a_inv is None:
            a_inv = [self._guess_inverse(v) for v in self.a]
        self.a_inv = list(a_inv)
        for v, w in zip(self.a, self.a_inv):
            if not S.eq(S.mul(v, w), S.one()):
                raise ValueError(f"a_i = {S.element_to_str(v)} is not a unit "
                                 "(inverse check failed)")
        self.name = f"Weyl(n={self.n};{S.name})"

    def _guess_inverse(self, v):
        S = self.base
        if S.eq(v, S.one()):
            return S.one()
        if S.eq(v, S.neg(S.one())):
            return S.neg(S.one())
        raise ValueError("supply a_inv for non-trivial units")

    def __eq__(self, other):
        if not isinstance(other, WeylRing) or other.base != self.base:
            return False
        S = self.base
        return (len(other.a) == len(self.a)
                and all(S.eq(x, y) for x, y in zip(other.a, self.a))
                and all(S.eq(x, y) for x, y in zip(other.b, self.b)))

    def __hash__(self):
        return hash(("Weyl", self.n, hash(self.base)))

    def zero(self):
        return {}

    def one(self):
        return {((), 0): self.base.one()}

    def x(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range")
        return {((i,), 0): self.base.one()}

    def y(self):
        return {((), 1): self.base.one()}

    def scalar(self, c):
        return {} if self.base.is_zero(c) else {((), 0): c}

    def add(self, a, b):
        out = dict(a)
        for key, c in b.items():
            _add_term(out, key, c, self.base)
        return out

    def neg(self, a):
        return {k: self.base.neg(c) for k, c in a.items()}

    def mul(self, a, b):
        S = self.base
        out = {}
        for (w1, l1), c1 in a.items():
            for (w2, l2), c2 in b.items():
                mid = self._y_pow_times_word(l1, w2)
                c = S.mul(c1, c2)
                for (w, l), cm in mid.items():
                    _add_term(out, (w1 + w, l + l2), S.mul(c, cm), S)
        return out

    def _y_pow_times_word(self, l: int, w: tuple) -> dict:
        """Normal form of y^l * x_w as a sum of basis monomials."""
        cur = {(w, 0): self.base.one()}
        for _ in range(l):
            cur = self._y_times(cur)
        return cur

    def _y_times(self, elem: dict) -> dict:
        S = self.base
        out = {}
        for (w, l), c in elem.items():
            for key, cm in self._y_times_word(w).items():
                wk, lk = key
                _add_term(out, (wk, lk + l), S.mul(cm, c), S)
        return out

    def _y_times_word(self, w: tuple) -> dict:
        S = self.base
        if not w:
            return {((), 1): S.one()}
        i = w[0]
        rest = self._y_times_word(w[1:])
        out = {}
        for (wr, lr), c in rest.items():
            # y x_i rest = a_i x_i (y rest) + b_i rest
            _add_term(out, ((i,) + wr, lr), S.mul(self.a[i - 1], c), S)
        _add_term(out, (w[1:], 0), self.b[i - 1], S)
        return out

    def eq(self, a, b):
        if set(a) != set(b):
            return False
        return all(self.base.eq(a[k], b[k]) for k in a)

    def from_int(self, k):
        return self.scalar(self.base.from_int(k))

    def degree_terms(self, a) -> set:
        return {len(w) - l for w, l in a}

    def is_homogeneous(self, a, deg: int) -> bool:
        return self.degree_terms(a) <= {deg}

    def element_to_str(self, a) -> str:
        if not a:
            return "0"
        parts = []
        for w, l in sorted(a, key=lambda k: (len(k[0]) + k[1], k[0], k[1])):
            c = a[(w, l)]
            factors = [f"x{i}" for i in w] + ["y"] * l
            cstr = self.base.element_to_str(c)
            if not factors:
                parts.append(cstr)
            elif self.base.eq(c, self.base.one()):
                parts.append(" ".join(factors))
            else:
                parts.append(cstr + " " + " ".join(factors))
        return " + ".join(parts)

    def element_from_str(self, s: str):
        return _parse_sum(s, self._parse_factor, self)

    def _parse_factor(self, tok: str):
        if tok == "y":
            return self.y()
        m = re.fullmatch(r"x(\d+)", tok)
        if m:
            return self.x(int(m.group(1)))
        if tok == "x" and self.n == 1:
            return self.x(1)
        return self.scalar(self.base.element_from_str(tok))


def weyl_normalize(ring: WeylRing, element) -> dict:
    """Weyl elements are kept normalized; re-normalizing is the identity."""
    out = {}
    for key, c in element.items():
        _add_term(out, key, c, ring.base)
    return out


def weyl_phi0(ring: WeylRing, r) -> object:
    """Coefficient of the basis element 1 in a degree-0 element."""
    if not ring.is_homogeneous(r, 0):
        raise ValueError("element is not homogeneous of degree 0")
    return r.get(((), 0), ring.base.zero())


def weyl_phi0_multiplicative(ring: WeylRing, pairs) -> bool:
    """phi0(r s) = phi0(r) phi0(s) on the supplied degree-0 sample pairs."""
    S = ring.base
    for r, s in pairs:
        lhs = weyl_phi0(ring, ring.mul(r, s))
        rhs = S.mul(weyl_phi0(ring, r), weyl_phi0(ring, s))
        if not S.eq(lhs, rhs):
            return False
    return True


class ComponentBasis:
    """Basis description for a homogeneous component of a Weyl algebra."""

    def __init__(self, degree: int, monomials=None, rule: str = ""):
        self.degree = degree
        self.monomials = monomials  # list of (xword, l) keys, or None for m = 0
        self.rule = rule

    def __repr__(self):
        if self.monomials is not None:
            return f"ComponentBasis({self.degree}, {self.monomials})"
        return f"ComponentBasis({self.degree}, rule={self.rule!r})"


def weyl_component_basis(ring: WeylRing, m: int) -> ComponentBasis:
    """Free R_0-module basis of the degree-m component.

    Degree m > 0: the n^m x-words.  Degree m < 0: the single monomial
    y^|m|.  Degree 0: infinite; described by the rule (x-word of length k)
    y^k together with 1.
    """
    if m > 0:
        return ComponentBasis(m, [(w, 0) for w in _words(ring.n, m)])
    if m < 0:
        return ComponentBasis(m, [((), -m)])
    return ComponentBasis(0, None,
                          rule="{ x_{i1}..x_{ik} y^k : k > 0 } union { 1 }")


def weyl_coordinates(ring: WeylRing, elem: dict, m: int) -> list:
    """Right coordinates of a homogeneous degree-m element over the degree-0
    subring, in the order of weyl_component_basis.

    For m > 0 each basis x-word is split off the front of every monomial
    (exact, no division); for m < 0 the single basis element y^|m| is divided
    out by a triangular elimination that uses the inverses of the a_i; for
    m = 0 the element is its own coordinate.
    """
    if not ring.is_homogeneous(elem, m):
        raise ValueError(f"element is not homogeneous of degree {m}")
    S = ring.base
    if m == 0:
        return [dict(elem)]
    if m > 0:
        coords = {w: {} for w in _words(ring.n, m)}
        for (w, l), c in elem.items():
            _add_term(coords[w[:m]], (w[m:], l), c, S)
        out = [coords[w] for w in _words(ring.n, m)]
        recon = ring.zero()
        for w, q in zip(_words(ring.n, m), out):
            recon = ring.add(recon, ring.mul({(w, 0): S.one()}, q))
        assert ring.eq(recon, elem), "coordinate reconstruction failed"
        return out
    q = -m
    ypow = {((), q): S.one()}
    coord = ring.zero()
    work = dict(elem)
    while work:
        w = max(work, key=lambda k: (len(k[0]), k[0]))[0]
        c = work[(w, len(w) + q)]
        lead_inv = S.one()
        for i in w:
            for _ in range(q):
                lead_inv = S.mul(lead_inv, ring.a_inv[i - 1])
        lead = ring.mul(ypow, {(w, len(w)): S.one()}).get((w, len(w) + q), S.zero())
        if not S.eq(S.mul(lead, lead_inv), S.one()):
            raise ValueError("leading coefficient is not the expected unit")
        piece = {(w, len(w)): S.mul(lead_inv, c)}
        coord = ring.add(coord, piece)
        work = ring.add(work, ring.neg(ring.mul(ypow, piece)))
    assert ring.eq(ring.mul(ypow, coord), elem), "division reconstruction failed"
    return [coord]


# ---------------------------------------------------------------------------
# shared sum-of-products parser


def _parse_sum(s: str, parse_factor, ring: Ring):
    s = s.strip()
    if not s:
        raise ValueError("empty expression")
    terms = []
    sign = 1
    tok = []
    for ch in s:
        if ch in "+-":
            if tok and "".join(tok).strip():
                terms.append((sign, "".join(tok).strip()))
                tok = []
                sign = 1
            elif not tok:
                pass
            if ch == "-":
                sign = -sign
        else:
            tok.append(ch)
    if "".join(tok).strip():
        terms.append((sign, "".join(tok).strip()))
    if not terms:
        raise ValueError(f"cannot parse expression: {s!r}")
    total = ring.zero()
    for sgn, term in terms:
        factors = [f for f in re.split(r"[\s*]+", term) if f]
        val = ring.one()
        for f in factors:
            val = ring.mul(val, parse_factor(f))
        if sgn < 0:
            val = ring.neg(val)
        total = ring.add(total, val)
    return total
