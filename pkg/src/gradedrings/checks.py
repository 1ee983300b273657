"""The acceptance checks: thirteen exact, desk-scale verifications covering
every construction in the library.  Each check returns a CriterionResult;
the test suite and the `repro` CLI subcommand both run these, so their
verdicts cannot drift apart.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .amenability import (FolnerFailure, FolnerWitness, InjectionWitness,
                          Infeasible, bs_example_check,
                          find_two_to_one_injection, folner_search,
                          rosenblatt_find, verify_hall_violation, whole_group)
from .graded import endo_graded_construction, group_ring, group_ring_augmentation
from .groups import (BaumslagSolitar, Cyclic, DirectProduct, FreeAbelian,
                     FreeGroup, set_product)
from .monoids import (MnklParams, cnk_generating_number, cnk_leq,
                      cnk_reach_oracle, mnkl_leq, mnkl_phi,
                      mnkl_homomorphisms_well_defined, mnkl_vector)
from .rings import (IntegerModRing, IntegerRing, MatrixRing, RankCertificate,
                    RingMatrix, truncate_certificate, block_down_certificate,
                    block_up_certificate, extend_certificate, hom_certificate,
                    opposite_certificate, product_certificate,
                    verify_certificate)
from .special_algebras import (LeavittRing, WeylRing, leavitt_iso_check,
                               leavitt_matrix_units, leavitt_rank_certificate,
                               weyl_component_basis, weyl_phi0,
                               weyl_phi0_multiplicative)
from .translation import (CompressionInput, TranslationRing, collapse_matrices,
                          compress_certificate, finite_group_iso)

DEFAULT_SEED = 20240817


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    details: list = field(default_factory=list)

    @property
    def line(self):
        return f"criterion {self.number:2d} ({self.name}): " \
               f"{'pass' if self.ok else 'FAIL'}"


def check_leavitt_rank() -> CriterionResult:
    """A = column of e_i*, B = row of e_i gives AB = I_n and BA = 1."""
    ok, details = True, []
    for n in range(2, 6):
        cert = leavitt_rank_certificate(n)
        v = verify_certificate(cert)
        iso = leavitt_iso_check(n)
        if not (v and v.bgn and iso):
            ok = False
        details.append(f"n={n}: AB=I {bool(v)} (BGN {getattr(v, 'bgn', False)}), "
                       f"BA=1 {iso}")
    return CriterionResult(1, "Leavitt rank certificate", ok, details)


def check_matrix_units() -> CriterionResult:
    ok, details = True, []
    for n, l in [(2, 1), (2, 2), (3, 1)]:
        _, rep = leavitt_matrix_units(n, l)
        if not rep.ok:
            ok = False
        details.append(f"(n,l)=({n},{l}): " + ("pass" if rep.ok else
                                               "; ".join(rep.lines())))
    return CriterionResult(2, "matrix-unit tower", ok, details)


def _z_leavitt_input(K_vals, F_vals):
    G = FreeAbelian(1)
    L = LeavittRing(2)
    T = TranslationRing(G, whole_group(G), L)
    A = RingMatrix(T, 2, 1, [T.diag_const(L.gen_star(1)),
                             T.diag_const(L.gen_star(2))])
    B = RingMatrix(T, 1, 2, [T.diag_const(L.gen(1)), T.diag_const(L.gen(2))])
    cert = RankCertificate(T, 1, 2, A, B)
    return CompressionInput(T, cert, [(v,) for v in K_vals],
                            [(v,) for v in F_vals])


def check_compression() -> CriterionResult:
    ok, details = True, []
    res = compress_certificate(_z_leavitt_input([0], [0]))
    good = res.certificate.n == 1 and res.certificate.m == 2
    ok &= good
    details.append(f"K={{0}}, F={{0}}: shape (1,2) {good}")
    res = compress_certificate(_z_leavitt_input([0], [0, 1]))
    good = res.certificate.n == 2 and res.certificate.m == 4
    ok &= good
    details.append(f"K={{0}}, F={{0,1}}: shape (2,4) {good}")
    try:
        compress_certificate(_z_leavitt_input([-1, 0, 1], [0, 1]))
        ok = False
        details.append("padded K was not rejected")
    except ValueError:
        details.append("padded K rejected (Folner inequality enforced)")
    return CriterionResult(3, "certificate compression", bool(ok), details)


def check_collapse() -> CriterionResult:
    F2 = FreeGroup(2)
    w = find_two_to_one_injection(F2, F2.ball(2), F2.ball(3), F2.ball(1))
    if not isinstance(w, InjectionWitness):
        return CriterionResult(4, "rank collapse", False, ["no injection found"])
    res = collapse_matrices(F2, w, IntegerRing())
    return CriterionResult(4, "rank collapse", res.ok, res.lines())


def check_folner() -> CriterionResult:
    ok, details = True, []
    epsilons = [Fraction(1), Fraction(1, 2), Fraction(1, 10)]
    for G in (FreeAbelian(1), FreeAbelian(2)):
        K = G.ball(1)
        for eps in epsilons:
            w = folner_search(G, whole_group(G), K, eps, 25)
            good = isinstance(w, FolnerWitness) and w.holds()
            ok &= good
            tag = f"|F|={len(w.F)}" if good else "NOT FOUND"
            details.append(f"{G.name}, eps={eps}: {tag}")
    F2 = FreeGroup(2)
    K = F2.ball(1)
    for eps in epsilons:
        w = folner_search(F2, whole_group(F2), K, eps, 6)
        good = isinstance(w, FolnerFailure) and all(
            r is None or r > 2 for (_, _, _, r) in w.ratios)
        ok &= good
        best = w.best_ratio if isinstance(w, FolnerFailure) else None
        details.append(f"F2, eps={eps}: no witness up to radius 6, "
                       f"best ratio {best}")
    return CriterionResult(5, "Folner dichotomy", bool(ok), details)


def check_matching() -> CriterionResult:
    ok, details = True, []
    Z = FreeAbelian(1)
    K = [(-1,), (0,), (1,)]
    for L in range(2, 9):
        V = [(i,) for i in range(L + 1)]
        W = sorted(set_product(Z, K, V), key=Z.element_key)
        res = find_two_to_one_injection(Z, V, W, K)
        good = (isinstance(res, Infeasible)
                and verify_hall_violation(Z, V, W, K, res.violating_set))
        ok &= good
        details.append(f"Z, L={L}: infeasible with Hall set of size "
                       f"{len(res.violating_set) if good else '?'}")
    F2 = FreeGroup(2)
    K = F2.ball(1)
    for r in range(1, 5):
        res = find_two_to_one_injection(F2, F2.ball(r), F2.ball(r + 1), K)
        good = isinstance(res, InjectionWitness)
        ok &= good
        details.append(f"F2, r={r}: witness {'found' if good else 'MISSING'}")
    return CriterionResult(6, "matching dichotomy", bool(ok), details)


def check_finite_iso() -> CriterionResult:
    ok, details = True, []
    groups = [Cyclic(m) for m in range(1, 9)]
    groups += [DirectProduct([Cyclic(2), Cyclic(2)]),
               DirectProduct([Cyclic(2), Cyclic(4)]),
               DirectProduct([Cyclic(2), Cyclic(2), Cyclic(2)])]
    for R in (IntegerRing(), IntegerModRing(5)):
        for G in groups:
            rep = finite_group_iso(G, R)
            ok &= rep.ok
            if not rep.ok:
                details.append(f"{G.name} over {R.name}: " + "; ".join(rep.lines()))
    details.append(f"{2 * len(groups)} group/ring pairs checked")
    return CriterionResult(7, "finite translation ring", bool(ok), details)


def check_monoid_gn() -> CriterionResult:
    ok, details = True, []
    for n in range(1, 21):
        for k in range(1, 21):
            if cnk_generating_number(n, k) != n:
                ok = False
                details.append(f"gn(C({n},{k})) != {n}")
    details.append("generating numbers match for n,k <= 20")
    mismatches = 0
    for n in range(1, 11):
        for k in range(1, 11):
            canon, reach = cnk_reach_oracle(n, k, 100)
            for lam in range(101):
                for mu in range(101):
                    if cnk_leq(n, k, lam, mu) != (canon[mu] in reach[lam]):
                        mismatches += 1
    ok &= mismatches == 0
    details.append(f"closed form vs closure oracle: {mismatches} mismatches "
                   "(lam,mu <= 100, n,k <= 10)")
    return CriterionResult(8, "monoid generating numbers", bool(ok), details)


def check_separators() -> CriterionResult:
    ok, details = True, []
    bad_hom = []
    for n in range(1, 6):
        for k in range(1, 6):
            for l in range(1, 4):
                if not mnkl_homomorphisms_well_defined(MnklParams(n, k, l)):
                    bad_hom.append((n, k, l))
    ok &= not bad_hom
    details.append(f"separator well-definedness: {len(bad_hom)} failures")
    bad_sep = 0
    for n in range(1, 6):
        for k in range(1, 6):
            for l in range(1, 4):
                params = MnklParams(n, k, l)
                for j in range(1, l + 1):
                    for mu in range(0, 6):
                        for lam in range(mu + 1, 7):
                            s = mnkl_vector(params, x={j: lam})
                            t = mnkl_vector(params, x={j: mu})
                            res = mnkl_leq(params, s, t)
                            if res.verdict != "no" or not _separator_valid(
                                    params, s, t, res):
                                bad_sep += 1
    ok &= bad_sep == 0
    details.append(f"lam x_j <= mu x_j refutations (lam > mu): {bad_sep} failures")
    return CriterionResult(9, "monoid separators", bool(ok), details)


def _separator_valid(params, s, t, res) -> bool:
    fs, ft = mnkl_phi(params, s), mnkl_phi(params, t)
    if res.separator == "phi":
        return not cnk_leq(params.n, params.k, fs, ft)
    if res.separator.startswith("psi_"):
        j = int(res.separator[4:])
        return fs == 0 and ft == 0 and s[j] > t[j]
    return False


def check_bs_witnesses(seed: int = DEFAULT_SEED) -> CriterionResult:
    ok, details = True, []
    for k in (2, 3):
        for r in range(0, 6):
            rep = bs_example_check(k, r)
            if not rep.ok:
                ok = False
                details.append(f"k={k}, r={r}: " + "; ".join(rep.lines()))
    details.append("subset/disjointness/shift checks pass for k in {2,3}, r <= 5")
    rng = random.Random(seed)
    failures = 0
    for _ in range(50):
        k = rng.choice([2, 3])
        G = BaumslagSolitar(k)
        nv = rng.randint(2, 6)
        nu = rng.randint(0, nv - 1)
        u = tuple(_random_bs(G, rng) for _ in range(nu))
        v = tuple(_random_bs(G, rng) for _ in range(nv))
        try:
            res = rosenblatt_find(k, u, v)
            if not res.u_count < res.v_count:
                failures += 1
        except AssertionError:
            failures += 1
    ok &= failures == 0
    details.append(f"coset pigeonhole on 50 random tuple pairs: "
                   f"{failures} failures (seed {seed})")
    return CriterionResult(10, "one-sided amenability witnesses", bool(ok), details)


def _random_bs(G: BaumslagSolitar, rng: random.Random):
    x = G.identity()
    gens = G.symmetric_generators()
    for _ in range(rng.randint(0, 5)):
        x = G.mul(x, rng.choice(gens))
    return x


def check_weyl(seed: int = DEFAULT_SEED) -> CriterionResult:
    ok, details = True, []
    ring = WeylRing([1], [1])
    rng = random.Random(seed)
    gens = [ring.x(1), ring.y(), ring.scalar(ring.base.from_int(2)), ring.one()]
    assoc_failures = 0
    for _ in range(500):
        u, v, w = (_random_word(ring, gens, rng) for _ in range(3))
        lhs = ring.mul(ring.mul(u, v), w)
        rhs = ring.mul(u, ring.mul(v, w))
        if not ring.eq(lhs, rhs):
            assoc_failures += 1
    ok &= assoc_failures == 0
    details.append(f"product corpus (500 triples): {assoc_failures} "
                   f"associativity failures (seed {seed})")
    pairs = []
    for _ in range(200):
        pairs.append((_random_degree0(ring, rng), _random_degree0(ring, rng)))
    good = weyl_phi0_multiplicative(ring, pairs)
    ok &= good
    details.append(f"coefficient-of-1 map multiplicative on 200 degree-0 pairs: "
                   f"{good}")
    ring2 = WeylRing([1, 1], [1, 0])
    for m in range(-4, 5):
        basis = weyl_component_basis(ring2, m)
        if m > 0:
            good = (basis.monomials is not None
                    and len(basis.monomials) == 2 ** m
                    and all(len(w) == m and l == 0 for w, l in basis.monomials))
        elif m < 0:
            good = basis.monomials == [((), -m)]
        else:
            good = basis.monomials is None and bool(basis.rule)
        ok &= good
        if not good:
            details.append(f"component basis wrong at degree {m}")
    details.append("component bases match for |m| <= 4")
    return CriterionResult(11, "Weyl rewriting", bool(ok), details)


def _random_word(ring: WeylRing, gens, rng: random.Random):
    out = ring.one()
    for _ in range(rng.randint(0, 8)):
        out = ring.mul(out, rng.choice(gens))
    return out


def _random_degree0(ring: WeylRing, rng: random.Random):
    out = ring.zero()
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(0, 3)
        word = tuple(rng.randint(1, ring.n) for _ in range(k))
        out = ring.add(out, {(word, k): ring.base.from_int(rng.randint(-3, 3))})
    return out


def check_certificate_algebra() -> CriterionResult:
    ok, details = True, []
    Zr = IntegerRing()
    for n in (2, 3):
        base = leavitt_rank_certificate(n)
        if base.m > base.n + 1:
            base = truncate_certificate(base)
        for target in range(base.n + 1, 7):
            ext = extend_certificate(base, target)
            v = verify_certificate(ext)
            ok &= bool(v) and v.bgn and ext.m == target
        details.append(f"L(1,{n}): extensions up to m=6 verify")
        op = opposite_certificate(base)
        ok &= bool(verify_certificate(op))
        back = opposite_certificate(op)
        ok &= back.A.eq(base.A.reinterpret(back.ring)) \
            and back.B.eq(base.B.reinterpret(back.ring))
    details.append("opposite is an involution (entrywise)")
    ident4 = RankCertificate(Zr, 4, 4, RingMatrix.identity(Zr, 4),
                             RingMatrix.identity(Zr, 4))
    up = block_up_certificate(ident4, 2)
    down = block_down_certificate(up)
    ok &= down.A.eq(ident4.A) and down.B.eq(ident4.B)
    M2 = MatrixRing(LeavittRing(2), 2)
    blocked = block_up_certificate(_stack_twice(leavitt_rank_certificate(2)), 2)
    ok &= bool(verify_certificate(blocked)) and blocked.ring == M2
    flat = block_down_certificate(blocked)
    ok &= bool(verify_certificate(flat))
    details.append("block round trips verify")
    prod = product_certificate([leavitt_rank_certificate(2),
                                leavitt_rank_certificate(3)])
    ok &= bool(verify_certificate(prod)) and (prod.n, prod.m) == (1, 2)
    details.append("product certificate verifies with shape (1,2)")
    RG = group_ring(Cyclic(2), Zr)
    g = RG.term(1, 1)
    cert = RankCertificate(RG, 1, 1, RingMatrix(RG, 1, 1, [g]),
                           RingMatrix(RG, 1, 1, [g]))
    pushed = hom_certificate(cert, lambda e: group_ring_augmentation(RG, e), Zr)
    ok &= bool(verify_certificate(pushed))
    Z5 = IntegerModRing(5)
    zc = RankCertificate(Zr, 2, 2,
                         RingMatrix.from_rows(Zr, [[1, 2], [0, 1]]),
                         RingMatrix.from_rows(Zr, [[1, -2], [0, 1]]))
    pushed5 = hom_certificate(zc, Z5.from_int, Z5)
    ok &= bool(verify_certificate(pushed5))
    details.append("augmentation and mod-5 pushforwards verify")
    return CriterionResult(12, "certificate algebra", bool(ok), details)


def _stack_twice(cert: RankCertificate) -> RankCertificate:
    """Duplicate a (1,2) certificate into a (2,4) block-diagonal one."""
    R = cert.ring
    A = RingMatrix.from_rows(R, [
        [cert.A[0, 0], R.zero()], [R.zero(), cert.A[0, 0]],
        [cert.A[1, 0], R.zero()], [R.zero(), cert.A[1, 0]]])
    B = RingMatrix.from_rows(R, [
        [cert.B[0, 0], R.zero(), cert.B[0, 1], R.zero()],
        [R.zero(), cert.B[0, 0], R.zero(), cert.B[0, 1]]])
    out = RankCertificate(R, 2, 4, A, B)
    v = verify_certificate(out)
    assert v and v.bgn
    return out


def check_endo_graded() -> CriterionResult:
    ok, details = True, []
    for G, n, l, S in [(Cyclic(2), 2, 1, IntegerModRing(5)),
                       (Cyclic(3), 2, 2, IntegerRing())]:
        _, rep = endo_graded_construction(S, G, n, l)
        ok &= rep.ok
        details.append(f"{G.name}, n={n}, l={l} over {S.name}: "
                       + ("pass" if rep.ok else "; ".join(rep.lines())))
    return CriterionResult(13, "graded endomorphism rings", bool(ok), details)


ALL_CHECKS = [
    ("leavitt-rank", check_leavitt_rank),
    ("matrix-units", check_matrix_units),
    ("compression", check_compression),
    ("collapse", check_collapse),
    ("folner", check_folner),
    ("matching", check_matching),
    ("finite-iso", check_finite_iso),
    ("monoid-gn", check_monoid_gn),
    ("separators", check_separators),
    ("bs-witnesses", check_bs_witnesses),
    ("weyl", check_weyl),
    ("cert-algebra", check_certificate_algebra),
    ("endo-graded", check_endo_graded),
]


def run_all():
    return [fn() for _, fn in ALL_CHECKS]
