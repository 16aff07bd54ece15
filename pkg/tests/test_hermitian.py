import pytest

from kostroot import bases as B
from kostroot import hermitian as H

EXPECTED = {
    "sl-generic": (24, 4, 6),
    "sl-p0": (6, 2, 3),
    "sl-p0-r0": (2, 1, 2),
    "osp-odd": (8, 4, 2),
    "osp-1": (2, 2, 1),
    "osp-2-gl": (6, 2, 3),
    "osp-2-sp": (2, 1, 2),
    "osp-even-so": (8, 4, 2),
    "osp-even-gl": (8, 4, 2),
    "d21a-cartan": (32, 8, 4),
    "d21a-sl2": (2, 2, 1),
    "f4-so5": (2, 2, 1),
    "f4-so7": (2, 2, 1),
    "g3": (2, 2, 1),
}


def test_catalog_ids():
    assert [c.id for c in H.CATALOG] == list(EXPECTED)


@pytest.mark.parametrize("case_id", sorted(EXPECTED))
def test_counts(case_id):
    pair = H.get_case(case_id)
    counts = H.count_positive_systems(pair).as_tuple()
    assert counts == EXPECTED[case_id]
    n_pos, n_even, n_ext = counts
    assert n_ext * n_even == n_pos


@pytest.mark.parametrize("case_id", sorted(EXPECTED))
def test_compact_roots_span_nothing_odd(case_id):
    pair = H.get_case(case_id)
    assert pair.compact <= set(pair.g.even)
    assert pair.span_closed()


def test_explicit_lists():
    odd = H.get_case("osp-odd")
    assert sorted(odd.format(v) for v in odd.R0) == ["-2d", "-e", "2d", "e"]
    assert sorted(odd.format(v) for v in odd.R1) == ["-d", "-e + d", "-e - d", "d", "e + d", "e - d"]
    g3 = H.get_case("g3")
    assert sorted(g3.format(v) for v in g3.R0) == ["-2d", "2d"]
    cartan = H.get_case("d21a-cartan")
    assert set(cartan.kostant.vectors) == set(cartan.g.vectors)


def test_catalog_mismatch_detected():
    case = next(c for c in H.CATALOG if c.id == "g3")
    wrong = H.HermitianCase(case.id, case.algebra, case.real_form, case.compact, case.bars, case.R1, case.R0, case.counts)
    with pytest.raises(H.CatalogError):
        H.hermitian_pair(wrong)


@pytest.mark.parametrize("case_id", ["sl-generic", "sl-p0", "osp-odd", "osp-2-gl", "osp-even-gl", "d21a-cartan", "d21a-sl2", "g3"])
def test_extensions_match_filter(case_id):
    pair = H.get_case(case_id)
    evens = H.admissible_even_systems(pair)
    assert evens
    for P0 in evens:
        built = {e.positives for e in H.admissible_extensions(pair, P0)}
        assert built == set(H.admissible_by_filter(pair, P0))
        assert len(built) == EXPECTED[case_id][2]
        one = H.extend_admissible(pair, P0)
        assert P0 <= one.positives
        assert H.is_admissible(pair.g.vectors, pair.compact, one.positives)
        assert B.is_base(pair.g, one.base)
        assert set(pair.compact) & set(one.base) <= set(one.positives)


def test_standard_system_is_admissible():
    pair = H.get_case("f4-so5")
    base = B.adapted_base(pair.g, sorted(pair.compact)).elements
    positives = B.positive_cone(pair.g, base)
    even = frozenset(v for v in positives if v in set(pair.g.even))
    ext = H.extend_admissible(pair, even)
    assert ext.positives == positives


def test_non_admissible_input_rejected():
    pair = H.get_case("sl-generic")
    all_even = [p.positives for p in B.enumerate_positive_systems(pair.g.even)]
    bad = [P for P in all_even if not H.is_admissible(pair.g.even, pair.compact, P)]
    assert bad
    with pytest.raises(H.AdmissibilityError):
        H.extend_admissible(pair, bad[0])
    with pytest.raises(H.AdmissibilityError):
        H.extend_admissible(pair, list(pair.g.even)[:1])


def test_rows_json():
    import json

    rows = json.loads(H.format_rows(H.count_rows([H.get_case("osp-1")]), "json"))
    (row,) = rows
    assert {"case", "R0", "R1", "n_pos", "n_pos_even", "n_ext"} <= set(row)
    assert (row["n_pos"], row["n_pos_even"], row["n_ext"]) == (2, 2, 1)
