import pytest

from gradedrings.amenability import (InjectionWitness, bs_X,
                                     find_two_to_one_injection, whole_group)
from gradedrings.groups import (BaumslagSolitar, Cyclic, DirectProduct,
                                FreeAbelian, FreeGroup)
from gradedrings.rings import (IntegerModRing, IntegerRing, RankCertificate,
                               RingMatrix, verify_certificate)
from gradedrings.special_algebras import LeavittRing
from gradedrings.translation import (CoeffFn, CompressionInput,
                                     RightTranslationRing, TranslationRing,
                                     collapse_matrices, compress_certificate,
                                     finite_group_iso, right_translation_iso,
                                     right_translation_iso_check, tr_entry,
                                     tr_mul, tr_mul_oracle_entry, tr_transpose)

Z = IntegerRing()


def _zring():
    G = FreeAbelian(1)
    return G, TranslationRing(G, whole_group(G), Z)


def test_shift_composition():
    G, T = _zring()
    s1 = T.shift((1,))
    s2 = T.shift((2,))
    assert T.eq(T.mul(s1, s2), T.shift((3,)))
    assert T.eq(T.mul(s1, T.shift((-1,))), T.one())


def test_entry_rule():
    G, T = _zring()
    M = T.term((1,), T.fn(2, {(0,): 5}))
    assert tr_entry(T, M, (0,), (-1,)) == 5
    assert tr_entry(T, M, (3,), (2,)) == 2
    assert tr_entry(T, M, (3,), (1,)) == 0


def test_mul_matches_convolution_oracle():
    G, T = _zring()
    M = T.add(T.term((1,), T.fn(1, {(0,): 3})), T.diag(T.fn(2)))
    N = T.add(T.term((-1,), T.fn(4)), T.term((2,), T.fn(1, {(1,): -2})))
    P = tr_mul(T, M, N)
    for x in range(-3, 4):
        for y in range(-3, 4):
            assert tr_entry(T, P, (x,), (y,)) == \
                tr_mul_oracle_entry(T, M, N, (x,), (y,))


def test_transpose_is_entry_swap():
    G, T = _zring()
    M = T.add(T.term((2,), T.fn(1, {(0,): 7})), T.diag(T.fn(0, {(1,): 1})))
    Mt = tr_transpose(T, M)
    for x in range(-3, 4):
        for y in range(-3, 4):
            assert tr_entry(T, Mt, (x,), (y,)) == tr_entry(T, M, (y,), (x,))


def test_coeff_fn_canonicalizes():
    f = CoeffFn(Z, 2, {(0,): 2, (1,): 3})
    assert (0,) not in f.overrides      # equal to the constant, dropped
    assert f((1,)) == 3 and f((5,)) == 2


@pytest.mark.parametrize("group", [Cyclic(1), Cyclic(2), Cyclic(5),
                                   DirectProduct([Cyclic(2), Cyclic(2)])])
@pytest.mark.parametrize("ring", [IntegerRing(), IntegerModRing(5)])
def test_finite_group_iso(group, ring):
    rep = finite_group_iso(group, ring)
    assert rep.ok, rep.lines()


def test_collapse_matrices_identities():
    F2 = FreeGroup(2)
    w = find_two_to_one_injection(F2, F2.ball(1), F2.ball(2), F2.ball(1))
    assert isinstance(w, InjectionWitness)
    res = collapse_matrices(F2, w, Z)
    assert res.ok, res.lines()
    # the unreached part of W stays uncovered by the projection
    assert len(res.uncovered) == len(w.W) - 2 * len(w.V)


def _leavitt_tcert():
    G = FreeAbelian(1)
    L = LeavittRing(2)
    T = TranslationRing(G, whole_group(G), L)
    A = RingMatrix(T, 2, 1, [T.diag_const(L.gen_star(1)),
                             T.diag_const(L.gen_star(2))])
    B = RingMatrix(T, 1, 2, [T.diag_const(L.gen(1)), T.diag_const(L.gen(2))])
    return T, RankCertificate(T, 1, 2, A, B)


def test_compress_diagonal_certificate():
    T, cert = _leavitt_tcert()
    res = compress_certificate(CompressionInput(T, cert, [(0,)], [(0,), (1,)]))
    out = res.certificate
    assert (out.n, out.m) == (2, 4)
    v = verify_certificate(out)
    assert v and v.bgn


def test_compress_enforces_folner_inequality():
    T, cert = _leavitt_tcert()
    with pytest.raises(ValueError, match="Folner"):
        compress_certificate(CompressionInput(
            T, cert, [(-1,), (0,), (1,)], [(0,), (1,)]))


def test_compress_requires_symmetric_k_with_identity():
    T, cert = _leavitt_tcert()
    with pytest.raises(ValueError):
        compress_certificate(CompressionInput(T, cert, [(1,)], [(0,)]))
    with pytest.raises(ValueError):
        compress_certificate(CompressionInput(T, cert, [(-1,), (1,)], [(0,)]))


def test_compress_shifted_certificate():
    """A certificate whose entries move along the group needs K to dominate
    the shifts."""
    G = FreeAbelian(1)
    L = LeavittRing(2)
    T = TranslationRing(G, whole_group(G), L)
    A = RingMatrix(T, 2, 1, [T.mul(T.shift((1,)), T.diag_const(L.gen_star(1))),
                             T.diag_const(L.gen_star(2))])
    B = RingMatrix(T, 1, 2, [T.mul(T.diag_const(L.gen(1)), T.shift((-1,))),
                             T.diag_const(L.gen(2))])
    cert = RankCertificate(T, 1, 2, A, B)
    with pytest.raises(ValueError, match="dominate"):
        compress_certificate(CompressionInput(T, cert, [(0,)], [(0,)]))
    K = [(-1,), (0,), (1,)]
    F = [(v,) for v in range(9)]
    res = compress_certificate(CompressionInput(T, cert, K, F))
    assert verify_certificate(res.certificate)


def test_right_translation_iso():
    G = BaumslagSolitar(2)
    R = RightTranslationRing(G, bs_X(G), Z)
    a, b = G.generators()
    M = R.term(a, R.fn(1))
    N = R.term(b, R.fn(2, {G.identity(): 3}))
    assert right_translation_iso_check(R, [(M, N), (N, M), (M, M)])
    lring, img = right_translation_iso(R, M)
    assert lring.X.name.endswith("^-1")
    assert set(img) == {a}
