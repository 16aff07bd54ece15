from fractions import Fraction as Q

import pytest

from kostroot import bases as B
from kostroot import build
from kostroot import kostant as K
from kostroot import theorems as T
from listed_bases import D21A_BASE, F4_BASES, G3_BASES


def test_sl3_toral_projection_is_not_a_center():
    rs = build("A2")
    KS = K.project_by_toral(rs, [(1, 0, -1)])
    assert sorted(v[0] for v in KS.vectors) == [-2, -1, 1, 2]
    assert set(KS.fiber((1,))) == {rs.root(1, -1, 0), rs.root(0, 1, -1)}
    assert KS.centralizer == ()
    cc = K.center_check(KS)
    assert (cc.kernel_dim, cc.centralizer_rank, cc.holds) == (1, 0, False)


@pytest.mark.parametrize("m", [3, 4])
def test_supertrace_quotient_toral_is_a_center(m):
    rs = build(f"gl({m}|{m})")
    KS = K.project_by_toral(rs, T.remark_5_8_toral(m), supertrace_quotient=True)
    cc = K.center_check(KS)
    assert cc.holds
    fiber = set(KS.fiber((1, 0, -1)))
    e = rs.coord_labels
    names = {rs.format(v) for v in fiber}
    assert names == {f"e1 - d{m - 1}", f"-e2 + d{m}"}, e


def test_toral_rejects_nonzero_supertrace():
    with pytest.raises(K.ProjectionError):
        K.project_by_toral(build("A2"), [(1, 0, 0)])


def test_d21a_odd_root_collapse():
    rs = build("D(2,1;a)")
    KS = K.project(rs, [(1, -1, -1)], D21A_BASE)
    assert len(KS.vectors) == 6
    for nu in KS.vectors:
        assert len(KS.parities(nu)) == 2
    assert {b.key for b in K.enumerate_bases_of_R(KS)} == {b.key for b in B.enumerate_bases(KS)}


def test_project_validates_collapse():
    rs = build("sl(2|1)")
    with pytest.raises(K.ProjectionError):
        K.project(rs, [(1, 0, 0)])
    with pytest.raises(K.ProjectionError):
        K.project(rs, [(1, 0, -1)], [(1, -1, 0), (0, 1, -1)])


def test_images_are_integral_in_base_coordinates():
    rs = build("F4")
    S1 = F4_BASES["S1"]
    KS = K.project(rs, S1[:2], S1)
    assert all(x.denominator == 1 for nu in KS.vectors for x in nu)
    assert KS.pi(S1[2]) == (1, 0) and KS.pi(S1[3]) == (0, 1)


def test_base_of_r_witnesses():
    rs = build("G3")
    S1 = G3_BASES["S1"]
    I = [S1[2]]
    KS = K.project(rs, I, S1)
    assert set(K.base_of_R(KS, S1).elements) == {KS.pi(S1[0]), KS.pi(S1[1])}
    # a base that does not contain a base of the centralizer roots
    outside = next(b for b in B.enumerate_bases(rs) if not K.contains_centralizer_base(KS, b.elements))
    with pytest.raises(K.NotABaseError) as err:
        K.base_of_R(KS, outside.elements)
    assert err.value.witness


def test_compose_projections_commutes():
    rs = build("F4")
    S1 = F4_BASES["S1"]
    comp = K.compose_projections(rs, S1[:1], S1[:2], S1)
    for v in rs.vectors:
        assert comp.apply(comp.inner.pi(v)) == comp.outer.pi(v)
    with pytest.raises(K.ProjectionError):
        K.compose_projections(rs, S1[:2], S1[:1], S1)


def test_primitive_and_strings():
    rs = build("G3")
    KS = K.project(rs, [G3_BASES["S4"][0], G3_BASES["S4"][1]], G3_BASES["S4"])
    assert sorted(v[0] for v in KS.vectors) == [-3, -2, -1, 1, 2, 3]
    assert K.is_primitive(KS, (1,)) and not K.is_primitive(KS, (2,)) and not K.is_primitive(KS, (3,))
    assert K.root_string(KS, (1,), (1,)) == [-4, -3, -2, 0, 1, 2]
    assert K.root_string(KS, (1,), (1,), include_zero=True) == [-4, -3, -2, -1, 0, 1, 2]


def test_chain_to_zero_in_g3():
    rs = build("G3")
    S = G3_BASES["S2"]
    for g in B.positive_cone(rs, S):
        chain = K.chain_to_zero(rs, S, g)
        assert chain[0] == g and all(x == (0, 0, 0) or x in rs for x in chain)
    with pytest.raises(K.ChainError):
        K.chain_to_zero(rs, S, tuple(-x for x in S[0]))


def test_divisible_subsystem_g3():
    rs = build("G3")
    S = G3_BASES["S1"]
    sub = K.sub_system_divisible(rs, S, S[2], 2)
    assert len(sub.vectors) == 14
    assert set(sub.vectors) == {tuple(-x for x in v) for v in sub.vectors}
