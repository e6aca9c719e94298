import pytest

from xyangian import relations
from xyangian.backends import Abstract, Oracle
from xyangian.identities import center_cases, symmetry_cases, twist_cases
from xyangian.relations import Case, main_cases, presentation_cases
from xyangian.tensor import AlgebraContext, RootData

from conftest import assert_cases_pass


def test_case_ids_sort_params():
    c = Case("gauss/hihj", {"j": 2, "i": 1}, None)
    assert c.id == "gauss/hihj[i=1,j=2]"


def test_serre_exponents():
    R = RootData(AlgebraContext.of("B", 2))
    assert R.serre_m(1, 2) == 2 and R.serre_m(2, 1) == 3
    R = RootData(AlgebraContext.of("C", 2))
    assert R.serre_m(1, 2) == 3 and R.serre_m(2, 1) == 2
    R = RootData(AlgebraContext.of("D", 3))
    assert R.aa(2, 3) == 0


def test_type_d_has_orthogonal_pair():
    B = Abstract(AlgebraContext.of("D", 3), 2)
    ids = {c.id for c in presentation_cases(B.D, 2)}
    assert "gauss/eiej0[i=2,j=3]" in ids


def test_type_b_serre_cube():
    B = Abstract(AlgebraContext.of("B", 2), 2)
    ids = {c.id for c in presentation_cases(B.D, 2)}
    assert "gauss/serre_e[i=2,j=1,m=3]" in ids


@pytest.mark.parametrize("kind,n", [("B", 1), ("C", 1), ("D", 2)])
def test_presentation_abstract(kind, n):
    B = Abstract(AlgebraContext.of(kind, n), 3)
    D = B.D
    assert_cases_pass(presentation_cases(D, 3) + relations.adjacent_root_cases(D)
                      + relations.root_vector_cases(D) + relations.block_cases(D, 3))


def test_presentation_oracle_c2(oracle_c2):
    D = oracle_c2.D
    assert_cases_pass(presentation_cases(D, 4) + relations.adjacent_root_cases(D) + relations.root_vector_cases(D))


@pytest.mark.parametrize("kind,n", [("B", 1), ("D", 2)])
def test_main_abstract(kind, n):
    B = Abstract(AlgebraContext.of(kind, n), 3)
    assert_cases_pass(main_cases(B.D, 3))


def test_main_oracle_c2(oracle_c2):
    assert_cases_pass(main_cases(oracle_c2.D, 4))


def test_type_a_catalog():
    B = Abstract(AlgebraContext.of("A", 3), 3)
    assert_cases_pass(relations.gl_cases(B.G, 3))


def test_center_and_symmetries_b1(abstract_b1):
    assert_cases_pass(center_cases(abstract_b1) + symmetry_cases(abstract_b1) + twist_cases(abstract_b1))


def test_center_oracle_c2(oracle_c2):
    assert_cases_pass(center_cases(oracle_c2))


def test_wrong_coefficient_fails(oracle_c2):
    D = oracle_c2.D
    good = relations._hiej(D.h[1], D.e[1], D.roots.ea(1, 1))
    bad = relations._hiej(D.h[1], D.e[1], -D.roots.ea(1, 1))
    assert good.ok and not bad.ok
    assert "order" in bad.witness or bad.witness


def test_wrong_serre_exponent_fails(oracle_c2):
    D = oracle_c2.D
    # m = 1 - a_ij is needed; one bracket fewer does not vanish
    assert relations.serre_outcome(D.e[1], D.e[2], 3, 3).ok
    assert not relations.serre_outcome(D.e[1], D.e[2], 2, 3).ok


def test_swapped_tail_order_fails(oracle_c2):
    D = oracle_c2.D
    c = -D.roots.aa(1, 2)
    assert relations._tail_e(D.e[1], D.e[2], c, True).ok
    assert not relations._tail_e(D.e[1], D.e[2], -c, True).ok
