import pytest

from gradedrings.amenability import (InjectionWitness,
                                     find_two_to_one_injection, folner_search,
                                     verify_injection_witness, whole_group)
from gradedrings.groups import FreeAbelian, FreeGroup
from gradedrings.rings import (IntegerModRing, IntegerRing, MatrixRing,
                               ProductRing, RankCertificate, RingMatrix,
                               verify_certificate)
from gradedrings.serialize import (certificate_from_json, certificate_to_json,
                                   dump_json, element_from_jsonable,
                                   element_to_jsonable, folner_witness_to_json,
                                   injection_witness_from_json,
                                   injection_witness_to_json, load_json,
                                   ring_from_spec, ring_to_spec,
                                   translation_certificate_from_json,
                                   translation_certificate_to_json)
from gradedrings.special_algebras import LeavittRing, leavitt_rank_certificate
from gradedrings.translation import TranslationRing

from fractions import Fraction

SPECS = ["Z", "Q", "Z/5", "M2(Z)", "L(1,2)", "L(1,3;Z/5)", "op(L(1,2))",
         "prod(Z, Z/3)", "group(Z, C(2))"]


@pytest.mark.parametrize("spec", SPECS)
def test_ring_spec_round_trip(spec):
    ring = ring_from_spec(spec)
    assert ring_from_spec(ring_to_spec(ring)) == ring


def test_unknown_spec_rejected():
    with pytest.raises(ValueError):
        ring_from_spec("H")


def test_element_jsonable_matrix_and_product():
    M2 = MatrixRing(IntegerRing(), 2)
    x = RingMatrix.from_rows(IntegerRing(), [[1, -2], [0, 3]])
    data = element_to_jsonable(M2, x)
    assert data == [["1", "-2"], ["0", "3"]]
    assert element_from_jsonable(M2, data).eq(x)
    P = ProductRing([IntegerRing(), IntegerModRing(3)])
    y = (5, 2)
    assert P.eq(element_from_jsonable(P, element_to_jsonable(P, y)), y)


def test_certificate_round_trip(tmp_path):
    cert = leavitt_rank_certificate(2)
    path = tmp_path / "cert.json"
    dump_json(certificate_to_json(cert), str(path))
    back = certificate_from_json(load_json(str(path)))
    assert back.ring == cert.ring
    assert back.A.eq(cert.A) and back.B.eq(cert.B)
    assert verify_certificate(back)


def test_translation_certificate_round_trip():
    G = FreeAbelian(1)
    L = LeavittRing(2)
    T = TranslationRing(G, whole_group(G), L)
    A = RingMatrix(T, 2, 1, [T.mul(T.shift((1,)), T.diag_const(L.gen_star(1))),
                             T.term((0,), T.fn(L.gen_star(2),
                                               {(0,): L.zero()}))])
    B = RingMatrix(T, 1, 2, [T.mul(T.diag_const(L.gen(1)), T.shift((-1,))),
                             T.diag_const(L.gen(2))])
    cert = RankCertificate(T, 1, 2, A, B)
    data = translation_certificate_to_json(T, cert)
    T2, back = translation_certificate_from_json(data)
    assert T2 == T
    assert back.A.eq(A.reinterpret(T2)) and back.B.eq(B.reinterpret(T2))


def test_injection_witness_round_trip():
    F2 = FreeGroup(2)
    w = find_two_to_one_injection(F2, F2.ball(1), F2.ball(2), F2.ball(1))
    assert isinstance(w, InjectionWitness)
    G2, back = injection_witness_from_json(injection_witness_to_json(F2, w))
    assert G2 == F2
    ok, msg = verify_injection_witness(G2, back)
    assert ok, msg
    assert back.alpha == w.alpha and back.beta == w.beta


def test_folner_witness_json():
    Z = FreeAbelian(1)
    w = folner_search(Z, whole_group(Z), Z.ball(1), Fraction(1, 2), 8)
    data = folner_witness_to_json(Z, w)
    assert data["counts"] == {"KF_in_X": w.kf_count, "F_in_X": w.f_count}
    assert len(data["F"]) == len(w.F)
