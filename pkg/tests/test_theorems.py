import pytest

from kostroot import bases as B
from kostroot import build
from kostroot import theorems as T
from listed_bases import F4_BASES


def test_default_scope(monkeypatch):
    monkeypatch.delenv("KOSTANT_RANK_BOUND", raising=False)
    scope = T.default_scope()
    assert scope[:3] == ["sl(2|1)", "sl(3|1)", "sl(4|1)"]
    assert "gl(3|3)" in scope and "osp(5|2)" in scope and "osp(1|6)" in scope
    assert "osp(7|2)" not in scope and "sl(2|2)" not in scope
    assert scope[-3:] == ["D(2,1;a)", "G(3)", "F(4)"]
    assert len(scope) == 21


def test_rank_bound_env(monkeypatch):
    monkeypatch.setenv("KOSTANT_RANK_BOUND", "3")
    assert T.default_scope() == ["sl(2|1)", "gl(1|1)", "osp(1|2)", "osp(2|2)", "D(2,1;a)", "G(3)", "F(4)"]
    assert len(T.default_scope(4)) > len(T.default_scope())


@pytest.mark.parametrize(
    "name,distinct,reduced",
    [("sl(2|1)", 13, 7), ("osp(3|2)", 17, 6), ("D(2,1;a)", 95, 18), ("G3", 267, 18), ("F4", 2137, 40)],
)
def test_universe_sizes(name, distinct, reduced):
    uni = T.universe(name)
    assert len(uni.sets()) == distinct
    assert len(uni.sets(up_to_weyl=True)) == reduced


@pytest.mark.parametrize("name", ["sl(2|1)", "sl(3|1)", "gl(2|2)", "osp(1|4)", "osp(3|2)", "osp(4|2)", "D(2,1;a)", "G3"])
def test_theorem_claims_small(name):
    for verify in (T.verify_theorem3_i, T.verify_theorem3_ii, T.verify_theorem3_iii, T.verify_theorem2):
        report = verify(name)
        assert report.passed, report.failures[:3]
        assert report.checked > 0


def test_reduction_agrees_with_full_universe():
    for verify in (T.verify_theorem3_ii, T.verify_theorem3_iii, T.verify_theorem2):
        full = verify("D(2,1;a)", up_to_weyl=False)
        assert full.passed and full.universe["checked_I"] == 95


def test_literal_root_string_reading_fails():
    # over R alone the string from -nu to nu skips 0
    q = T.Quotient(build("sl(2|1)"), [(1, -1, 0), (0, 1, -1)], [])
    nu = q.R[0]
    mu = tuple(-x for x in nu)
    assert tuple(a + 2 * b for a, b in zip(mu, nu)) in q.Rset
    assert tuple(a + b for a, b in zip(mu, nu)) not in q.Rset
    report = T.VerificationReport("thm3iii", "sl(2|1)")
    T.check_strings(q, report)
    assert report.passed


def test_quotient_base_test_rejects():
    rs = build("F4")
    S1 = F4_BASES["S1"]
    q = T.Quotient(rs, S1, [0])
    assert T.is_base_of_quotient(q, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not T.is_base_of_quotient(q, [(1, 0, 0), (0, 1, 0), (0, 1, 1)])
    assert not T.is_base_of_quotient(q, [(1, 0, 0), (0, 1, 0)])


def test_edge_lifting_and_centralizers():
    for name in ("osp(3|2)", "D(2,1;a)", "G3"):
        assert T.verify_edge_lifting(name).passed
        rep = T.verify_centralizers(name)
        assert rep.passed
    assert T.verify_centralizers("G3").details["types"] == [
        "A(0|0)", "A(1|0)", "A1", "B(0|1)", "B(1|1)", "G(3)", "G2"]


@pytest.mark.parametrize(
    "name,expected",
    [
        ("sl(3|2)", "A(2|1)"), ("gl(2|2)", "A(1|1)"), ("osp(1|4)", "B(0|2)"), ("osp(2|4)", "C(3)"),
        ("osp(5|2)", "B(2|1)"), ("osp(6|2)", "D(3|1)"), ("osp(4|4)", "D(2|2)"), ("D(2,1;a)", "D(2,1;a)"),
        ("G3", "G(3)"), ("F4", "F(4)"), ("F_4", "F4"), ("C3", "C3"), ("B3", "B3"), ("D4", "D4"),
    ],
)
def test_classify_full_base(name, expected):
    rs = build(name)
    b = B.enumerate_bases(rs)[0].elements
    (comp,) = T.classify_centralizer(rs, b, b)
    assert comp.type == expected
    assert comp.needs_gl_completion == (name == "gl(2|2)")


def test_classify_splits_components():
    rs = build("F4")
    S1 = F4_BASES["S1"]
    comps = T.classify_centralizer(rs, S1, [S1[0], S1[2]])
    assert sorted(c.type for c in comps) == ["A(0|0)", "A1"]


def test_counterexamples():
    r = T.counterexample_remark_5_4()
    assert r.passed and r.expect_reducible
    assert r.details["fiber(1)"] == ["e2 - e3", "e1 - e2"]
    for m in (3, 4):
        r = T.counterexample_remark_5_8(m)
        assert r.passed, r.failures
    with pytest.raises(ValueError):
        T.counterexample_remark_5_8(2)


@pytest.mark.parametrize("name", ["sl(3|1)", "gl(2|2)", "osp(1|4)", "osp(2|2)", "osp(3|4)", "osp(4|2)"])
def test_superization(name):
    assert T.verify_superization(name).passed


def test_e8_facts():
    r = T.verify_e8()
    assert r.passed
    assert r.details["highest_root"] == [2, 3, 4, 6, 5, 4, 3, 2]
    assert r.details["alpha4"]["R"] == [-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6]
    assert r.details["alpha5"]["R"] == [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]
    assert r.details["alpha4"]["witness"] is not None


def test_appendix_sets():
    d = T.appendix_listed_sets("D(2,1;a)")
    assert d.passed
    assert [row["status"] for row in d.details["sets"]] == ["literal", "sign-adjusted"]
    f = T.appendix_listed_sets("F4")
    assert f.passed
    status = {row["set"]: row["status"] for row in f.details["sets"]}
    assert status["I3 = odd roots of S4"] == "literal"
    assert status["I2^1"] == "sign-adjusted" and status["I2 = {I1, e1-e2}"] == "literal"
    assert sum(s == "unrealisable" for s in status.values()) == 14
    eq = {tuple(c["sets"]): c["equivalent"] for c in f.details["equivalences"]}
    assert eq[("I2^1", "I2^3")] and eq[("I2^2", "I2^5")]
    assert not eq[("I2 = {I1, d}", "I2^2")] and eq[("I2 = {I1, d}", "I2^4")]


def test_structural_suite_small():
    r = T.structural_suite("osp(3|2)", samples=20)
    assert r.passed and r.checked > 20


def test_run_claim_dispatch():
    assert [r.claim for r in T.run_claim("rem58")] == ["rem58", "rem58"]
    assert T.run_claim("superization", ["G3"]) == []
    with pytest.raises(ValueError):
        T.run_claim("nope", ["sl(2|1)"])
    d = T.run_claim("thm3i", ["sl(2|1)"])[0].to_dict()
    assert d["passed"] and d["universe"]["distinct_I"] == 13
