"""Exact coefficient rings, matrices over them, and rank certificates.

A rank certificate is a pair of matrices (A: m x n, B: n x m) over a ring
with A*B = I_m, witnessing a module epimorphism R^n -> R^m.  When n < m the
certificate witnesses bounded generating number.  All arithmetic is exact;
presented rings (Leavitt, Weyl, crossed products) plug in through the same
Ring interface and keep their own normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence


class Ring:
    """Abstract exact ring.  Elements are plain Python values; the ring
    object supplies the operations and decidable equality."""

    name: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, n: int):
        out, one = self.zero(), self.one()
        for _ in range(abs(n)):
            out = self.add(out, one)
        return out if n >= 0 else self.neg(out)

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def element_to_str(self, a) -> str:
        return str(a)

    def element_from_str(self, s: str):
        raise NotImplementedError(f"{self.name} has no element parser")

    def opposite(self) -> "Ring":
        return OppositeRing(self)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return n

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def element_from_str(self, s):
        return int(s)


class RationalRing(Ring):
    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return Fraction(n)

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("Q")

    def element_from_str(self, s):
        return Fraction(s)


class IntegerModRing(Ring):
    """Z/mZ, m >= 2; elements are residues 0..m-1."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.name = f"Z/{m}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def eq(self, a, b):
        return a % self.m == b % self.m

    def from_int(self, n):
        return n % self.m

    def __eq__(self, other):
        return isinstance(other, IntegerModRing) and other.m == self.m

    def __hash__(self):
        return hash(("Z/", self.m))

    def element_from_str(self, s):
        return int(s) % self.m


class ProductRing(Ring):
    """Finite direct product; elements are tuples, componentwise operations."""

    def __init__(self, factors: Sequence[Ring]):
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = list(factors)
        self.name = "prod(" + ", ".join(f.name for f in self.factors) + ")"

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def one(self):
        return tuple(f.one() for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def eq(self, a, b):
        return all(f.eq(x, y) for f, x, y in zip(self.factors, a, b))

    def __eq__(self, other):
        return isinstance(other, ProductRing) and other.factors == self.factors

    def __hash__(self):
        return hash(("prod", tuple(hash(f) for f in self.factors)))

    def element_to_str(self, a):
        return "(" + "; ".join(f.element_to_str(x) for f, x in zip(self.factors, a)) + ")"

    def element_from_str(self, s):
        s = s.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        parts = s.split(";")
        if len(parts) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} components: {s!r}")
        return tuple(f.element_from_str(p) for f, p in zip(self.factors, parts))


class OppositeRing(Ring):
    """Same elements as the base ring, multiplication order reversed."""

    def __init__(self, base: Ring):
        self.base = base
        self.name = f"op({base.name})"

    def opposite(self):
        return self.base

    def zero(self):
        return self.base.zero()

    def one(self):
        return self.base.one()

    def add(self, a, b):
        return self.base.add(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def mul(self, a, b):
        return self.base.mul(b, a)

    def eq(self, a, b):
        return self.base.eq(a, b)

    def __eq__(self, other):
        return isinstance(other, OppositeRing) and other.base == self.base

    def __hash__(self):
        return hash(("op", hash(self.base)))

    def element_to_str(self, a):
        return self.base.element_to_str(a)

    def element_from_str(self, s):
        return self.base.element_from_str(s)


class MatrixRing(Ring):
    """M_s(R); elements are s x s RingMatrix values over the base ring."""

    def __init__(self, base: Ring, size: int):
        if size < 1:
            raise ValueError("size must be >= 1")
        self.base = base
        self.size = size
        self.name = f"M{size}({base.name})"

    def zero(self):
        return RingMatrix.zero(self.base, self.size, self.size)

    def one(self):
        return RingMatrix.identity(self.base, self.size)

    def add(self, a, b):
        return a.add(b)

    def neg(self, a):
        return a.neg()

    def mul(self, a, b):
        return mat_mul(a, b)

    def eq(self, a, b):
        return a.eq(b)

    def __eq__(self, other):
        return (isinstance(other, MatrixRing) and other.base == self.base
                and other.size == self.size)

    def __hash__(self):
        return hash(("mat", hash(self.base), self.size))


class RingMatrix:
    """Rectangular matrix over an exact ring, entries row-major."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries: Sequence):
        if rows < 1 or cols < 1:
            raise ValueError("dimensions must be positive")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> "RingMatrix":
        r = len(rows)
        c = len(rows[0])
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(ring, r, c, flat)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls(ring, n, n,
                   [ring.one() if i == j else ring.zero()
                    for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, ring: Ring, rows: int, cols: int) -> "RingMatrix":
        return cls(ring, rows, cols, [ring.zero()] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def add(self, other: "RingMatrix") -> "RingMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols) or self.ring != other.ring:
            raise ValueError("matrix shape or ring mismatch")
        R = self.ring
        return RingMatrix(R, self.rows, self.cols,
                          [R.add(a, b) for a, b in zip(self.entries, other.entries)])

    def neg(self) -> "RingMatrix":
        R = self.ring
        return RingMatrix(R, self.rows, self.cols, [R.neg(a) for a in self.entries])

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.ring, self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def eq(self, other: "RingMatrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        R = self.ring
        return all(R.eq(a, b) for a, b in zip(self.entries, other.entries))

    def is_identity(self) -> bool:
        return self.rows == self.cols and self.eq(RingMatrix.identity(self.ring, self.rows))

    def reinterpret(self, ring: Ring) -> "RingMatrix":
        """Same entries viewed over another ring (e.g. the opposite ring)."""
        return RingMatrix(ring, self.rows, self.cols, list(self.entries))

    def __repr__(self):
        R = self.ring
        rows = ["[" + ", ".join(R.element_to_str(x) for x in self.row(i)) + "]"
                for i in range(self.rows)]
        return f"RingMatrix({R.name}, [" + ", ".join(rows) + "])"


def mat_mul(A: RingMatrix, B: RingMatrix) -> RingMatrix:
    """Exact matrix product."""
    if A.ring != B.ring:
        raise ValueError(f"ring mismatch: {A.ring} vs {B.ring}")
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    R = A.ring
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        for j in range(B.cols):
            acc = R.zero()
            for k in range(A.cols):
                acc = R.add(acc, R.mul(arow[k], B[k, j]))
            out.append(acc)
    return RingMatrix(R, A.rows, B.cols, out)


@dataclass
class RankCertificate:
    """Witness for an epimorphism R^n -> R^m: A is m x n, B is n x m, AB = I_m."""

    ring: Ring
    n: int
    m: int
    A: RingMatrix
    B: RingMatrix

    def __post_init__(self):
        if (self.A.rows, self.A.cols) != (self.m, self.n):
            raise ValueError(f"A must be {self.m}x{self.n}")
        if (self.B.rows, self.B.cols) != (self.n, self.m):
            raise ValueError(f"B must be {self.n}x{self.m}")
        if self.A.ring != self.ring or self.B.ring != self.ring:
            raise ValueError("matrix ring differs from certificate ring")


@dataclass
class Valid:
    bgn: bool = False

    def __bool__(self):
        return True


@dataclass
class Invalid:
    position: tuple  # (row, col) of first failing entry of A*B, 1-based

    def __bool__(self):
        return False


def verify_certificate(cert: RankCertificate):
    """Recompute A*B and compare with the identity.

    Returns Valid(bgn=True) when AB = I_m and n < m, Valid(bgn=False) when
    AB = I_m and n >= m, else Invalid with the first failing position.
    """
    prod = mat_mul(cert.A, cert.B)
    R = cert.ring
    for i in range(cert.m):
        for j in range(cert.m):
            want = R.one() if i == j else R.zero()
            if not R.eq(prod[i, j], want):
                return Invalid(position=(i + 1, j + 1))
    return Valid(bgn=cert.n < cert.m)


def _require_valid(cert: RankCertificate):
    v = verify_certificate(cert)
    if not v:
        raise ValueError(f"input certificate invalid at {v.position}")
    return v


def extend_certificate(cert: RankCertificate, target_m: int) -> RankCertificate:
    """Stretch a BGN certificate with m = n+1 to one with m = target_m.

    Follows the epimorphism chain psi -> reshuffle -> xi -> reshuffle: the
    new A is built by stacking diag(A, I) over the previous stage, and B
    symmetrically, so that A'B' = diag(AB, I) = I at each step.
    """
    v = _require_valid(cert)
    if not v.bgn or cert.m != cert.n + 1:
        raise ValueError("extend_certificate needs a BGN certificate with m = n+1")
    if target_m <= cert.n:
        raise ValueError("target must exceed n")
    R = cert.ring
    n = cert.n
    A_step, B_step = cert.A, cert.B
    A_cur, B_cur = cert.A, cert.B
    m_cur = cert.m
    while m_cur < target_m:
        # xi = diag(A_step, I_{m_cur - n}) applied after the current chain
        pad = m_cur - n
        xi = _block_diag(R, A_step, RingMatrix.identity(R, pad))
        xi_sec = _block_diag(R, B_step, RingMatrix.identity(R, pad))
        A_cur = mat_mul(xi, A_cur)
        B_cur = mat_mul(B_cur, xi_sec)
        m_cur += 1
    out = RankCertificate(R, n, m_cur, A_cur, B_cur)
    if not verify_certificate(out):
        raise AssertionError("extended certificate failed re-verification")
    return out


def _block_diag(ring: Ring, top: RingMatrix, bottom: RingMatrix) -> RingMatrix:
    rows = top.rows + bottom.rows
    cols = top.cols + bottom.cols
    out = RingMatrix.zero(ring, rows, cols).to_rows()
    for i in range(top.rows):
        for j in range(top.cols):
            out[i][j] = top[i, j]
    for i in range(bottom.rows):
        for j in range(bottom.cols):
            out[top.rows + i][top.cols + j] = bottom[i, j]
    return RingMatrix.from_rows(ring, out)


def opposite_certificate(cert: RankCertificate) -> RankCertificate:
    """Transpose the witness into one over the opposite ring.

    Since A o B computed over R^op equals (B^t A^t)^t over R, the pair
    (B^t, A^t) verifies over R^op with the same n and m.
    """
    _require_valid(cert)
    op = cert.ring.opposite()
    A2 = cert.B.transpose().reinterpret(op)
    B2 = cert.A.transpose().reinterpret(op)
    out = RankCertificate(op, cert.n, cert.m, A2, B2)
    if not verify_certificate(out):
        raise AssertionError("opposite certificate failed re-verification")
    return out


def block_down_certificate(cert: RankCertificate) -> RankCertificate:
    """Flatten a certificate over M_s(R) to one over R (dimensions scale by s)."""
    _require_valid(cert)
    if not isinstance(cert.ring, MatrixRing):
        raise ValueError("certificate is not over a matrix ring")
    s = cert.ring.size
    base = cert.ring.base
    A2 = _flatten_blocks(cert.A, base, s)
    B2 = _flatten_blocks(cert.B, base, s)
    out = RankCertificate(base, cert.n * s, cert.m * s, A2, B2)
    if not verify_certificate(out):
        raise AssertionError("flattened certificate failed re-verification")
    return out


def _flatten_blocks(M: RingMatrix, base: Ring, s: int) -> RingMatrix:
    rows = []
    for i in range(M.rows):
        for bi in range(s):
            row = []
            for j in range(M.cols):
                blk = M[i, j]
                row.extend(blk.row(bi))
            rows.append(row)
    return RingMatrix.from_rows(base, rows)


def block_up_certificate(cert: RankCertificate, s: int) -> RankCertificate:
    """Regroup a certificate over R into one over M_s(R); dimensions must divide."""
    _require_valid(cert)
    if s < 1:
        raise ValueError("block size must be >= 1")
    if cert.n % s or cert.m % s:
        raise ValueError(f"dimensions ({cert.n}, {cert.m}) not divisible by {s}")
    if s == 1:
        return cert
    mring = MatrixRing(cert.ring, s)
    A2 = _group_blocks(cert.A, mring)
    B2 = _group_blocks(cert.B, mring)
    out = RankCertificate(mring, cert.n // s, cert.m // s, A2, B2)
    if not verify_certificate(out):
        raise AssertionError("blocked certificate failed re-verification")
    return out


def _group_blocks(M: RingMatrix, mring: MatrixRing) -> RingMatrix:
    s = mring.size
    base = mring.base
    out = []
    for bi in range(M.rows // s):
        row = []
        for bj in range(M.cols // s):
            blk = [[M[bi * s + i, bj * s + j] for j in range(s)] for i in range(s)]
            row.append(RingMatrix.from_rows(base, blk))
        out.append(row)
    return RingMatrix.from_rows(mring, out)


def product_certificate(certs: Sequence[RankCertificate]) -> RankCertificate:
    """Combine BGN certificates with m = n+1 into one over the product ring.

    Inputs are first brought to the common shape (b, b+1) where b is the
    largest n among them, then merged componentwise.
    """
    if not certs:
        raise ValueError("need at least one certificate")
    steps = []
    for c in certs:
        v = verify_certificate(c)
        if not v:
            raise ValueError(f"factor certificate invalid at {v.position}")
        if not v.bgn:
            raise ValueError("every factor must be a BGN certificate")
        steps.append(c if c.m == c.n + 1 else truncate_certificate(c))
    b = max(c.n for c in steps)
    shaped = [_reshape_to(c, b) for c in steps]
    if len(shaped) == 1:
        return shaped[0]
    prod = ProductRing([c.ring for c in shaped])
    A = RingMatrix(prod, b + 1, b,
                   [tuple(c.A.entries[i] for c in shaped) for i in range((b + 1) * b)])
    B = RingMatrix(prod, b, b + 1,
                   [tuple(c.B.entries[i] for c in shaped) for i in range(b * (b + 1))])
    out = RankCertificate(prod, b, b + 1, A, B)
    if not verify_certificate(out):
        raise AssertionError("product certificate failed re-verification")
    return out


def truncate_certificate(cert: RankCertificate) -> RankCertificate:
    """Cut an (n, m) BGN certificate down to (n, n+1) by dropping the extra
    codomain coordinates; the leading block of AB = I_m is still I_{n+1}."""
    R = cert.ring
    m2 = cert.n + 1
    A2 = RingMatrix.from_rows(R, cert.A.to_rows()[:m2])
    B2 = RingMatrix.from_rows(R, [row[:m2] for row in cert.B.to_rows()])
    out = RankCertificate(R, cert.n, m2, A2, B2)
    if not verify_certificate(out):
        raise AssertionError("truncated certificate failed re-verification")
    return out


def _reshape_to(cert: RankCertificate, b: int) -> RankCertificate:
    """Turn an (n, n+1) certificate into a (b, b+1) one, b >= n."""
    if cert.n == b:
        return cert
    R = cert.ring
    wide = extend_certificate(cert, b + 1)  # shape (n, b+1)
    # pad the domain: A' = A * [I_n | 0]  (size (b+1) x b), B' = [B ; 0]
    proj = RingMatrix(R, cert.n, b,
                      [R.one() if i == j else R.zero()
                       for i in range(cert.n) for j in range(b)])
    A2 = mat_mul(wide.A, proj)
    B2rows = wide.B.to_rows() + [[R.zero()] * (b + 1) for _ in range(b - cert.n)]
    B2 = RingMatrix.from_rows(R, B2rows)
    out = RankCertificate(R, b, b + 1, A2, B2)
    if not verify_certificate(out):
        raise AssertionError("reshaped certificate failed re-verification")
    return out


def hom_certificate(cert: RankCertificate, phi: Callable, target: Ring) -> RankCertificate:
    """Push a certificate forward along an entrywise unital ring homomorphism."""
    _require_valid(cert)
    if not target.eq(phi(cert.ring.one()), target.one()):
        raise ValueError("map is not unital: phi(1) != 1")
    A2 = RingMatrix(target, cert.m, cert.n, [phi(x) for x in cert.A.entries])
    B2 = RingMatrix(target, cert.n, cert.m, [phi(x) for x in cert.B.entries])
    out = RankCertificate(target, cert.n, cert.m, A2, B2)
    v = verify_certificate(out)
    if not v:
        raise ValueError(f"image certificate fails at {v.position}; "
                         "map is probably not a homomorphism")
    return out
