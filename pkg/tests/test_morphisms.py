import pytest

from xyangian.algebra import RTTAlgebra
from xyangian.backends import Abstract, Oracle
from xyangian.morphisms import (
    check_homomorphism,
    embedding_cases,
    lowrank_cases,
    psi_bound,
    psi_image,
    sigma_cases,
    sigma_image,
)
from xyangian.tensor import AlgebraContext, ContextError

from conftest import assert_cases_pass


def test_psi_zero_is_identity(abstract_c2):
    assert psi_image(abstract_c2.T, abstract_c2.ctx, 0) is abstract_c2.T


def test_psi_bounds():
    assert psi_bound(AlgebraContext.of("B", 2)) == 2
    assert psi_bound(AlgebraContext.of("C", 2)) == 1
    with pytest.raises(ContextError):
        psi_image(Abstract(AlgebraContext.of("D", 2), 2).T, AlgebraContext.of("D", 2), 2)


def test_sigma_constant_term(abstract_b1):
    S = sigma_image(abstract_b1.T)
    one = abstract_b1.ring.one()
    assert (S[0, 0].c[0] - one).is_zero()


def test_psi_is_homomorphism_b2_sampled():
    B = Abstract(AlgebraContext.of("B", 2), 3)
    src = RTTAlgebra(B.ctx.sub(1))
    out = check_homomorphism(psi_image(B.T, B.ctx, 1), src, limit=150)
    assert out.ok and out.checked == 150


def test_identity_map_is_not_a_homomorphism_for_wrong_type():
    # T of X(sp_4) does not satisfy the relations of X(o_4)
    B = Oracle(AlgebraContext.of("C", 2), 3)
    out = check_homomorphism(B.T, RTTAlgebra(AlgebraContext.of("D", 2)))
    assert not out.ok


def test_embeddings_oracle_c2(oracle_c2):
    assert_cases_pass(embedding_cases(oracle_c2) + sigma_cases(oracle_c2))


def test_embeddings_abstract_b1(abstract_b1):
    cases = embedding_cases(abstract_b1) + sigma_cases(abstract_b1)
    assert_cases_pass(cases)
    skipped = [c.id for c in cases if c.run().status == "SKIP"]
    assert skipped == ["embed/emjmtkl[m=1]"]


def test_psi_consistency_b3_oracle():
    B = Oracle(AlgebraContext.of("B", 3), 3, points=(0,))
    cases = [c for c in embedding_cases(B) if c.family in ("embed/psi_consistency", "embed/gauss_submatrix")]
    assert len(cases) == 3
    assert_cases_pass(cases)


def test_lowrank_k3():
    assert_cases_pass(lowrank_cases(3))
