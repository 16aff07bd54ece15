"""Acceptance criteria, one test each.

Every test prints a line ``PASS <n> <title> (<seconds>s)`` or ``FAIL ...``
to the terminal (pytest -s is not needed) and then asserts.  All
comparisons are exact.  Where a criterion states a runtime limit, it is
checked too.
"""

import time

import pytest

from kostroot import bases as B
from kostroot import build
from kostroot import hermitian as H
from kostroot import theorems as T
from kostroot.cli import main

from listed_bases import D21A_BASE, F4_BASES, G3_BASES

EXCEPTIONAL = ("D(2,1;a)", "G3", "F4")


@pytest.fixture
def criterion(capsys):
    def record(number, title, ok, started, limit=None, detail=""):
        seconds = time.perf_counter() - started
        in_time = limit is None or seconds < limit
        passed = bool(ok) and in_time
        bound = f" limit {limit}s" if limit is not None else ""
        extra = f" {detail}" if detail else ""
        with capsys.disabled():
            print(f"\n{'PASS' if passed else 'FAIL'} {number} {title} ({seconds:.2f}s{bound}){extra}")
        assert ok, f"criterion {number} failed: {detail}"
        assert in_time, f"criterion {number} took {seconds:.1f}s, limit {limit}s"

    return record


def _reports_pass(reports):
    bad = [r.summary() for r in reports if not r.passed]
    return not bad, "; ".join(bad[:3])


def _scope():
    return [a for a in T.default_scope() if build(a).spec.family not in ("D21a", "G3", "F4")]


def test_1_d21a_positive_systems(criterion):
    t0 = time.perf_counter()
    counts = H.count_positive_systems(H.get_case("d21a-cartan")).as_tuple()
    criterion(1, "D(2,1;a) positive systems 32/8/4", counts == (32, 8, 4), t0, limit=1, detail=str(counts))


def test_2_hermitian_table(criterion):
    t0 = time.perf_counter()
    rows = H.count_rows()
    got = {r["case"]: (r["n_pos"], r["n_pos_even"], r["n_ext"]) for r in rows}
    want = {c.id: c.counts for c in H.CATALOG}
    table = {
        "sl-generic": (24, 4, 6), "sl-p0": (6, 2, 3), "sl-p0-r0": (2, 1, 2),
        "osp-odd": (8, 4, 2), "osp-1": (2, 2, 1), "osp-2-gl": (6, 2, 3), "osp-2-sp": (2, 1, 2),
        "osp-even-so": (8, 4, 2), "osp-even-gl": (8, 4, 2),
        "d21a-cartan": (32, 8, 4), "d21a-sl2": (2, 2, 1),
        "f4-so5": (2, 2, 1), "f4-so7": (2, 2, 1), "g3": (2, 2, 1),
    }
    ok = got == want == table and all(n_ext * n_even == n_pos for n_pos, n_even, n_ext in got.values())
    criterion(2, "Hermitian count table", ok, t0, limit=5, detail=f"{len(got)} cases")


def test_3_base_classes(criterion):
    t0 = time.perf_counter()
    g3, f4, d21a = build("G3"), build("F4"), build("D(2,1;a)")
    n_g3 = len(B.base_classes_up_to_W(g3).representatives)
    n_f4 = len(B.base_classes_up_to_W(f4).representatives)
    listed = B.is_base(d21a, D21A_BASE)
    listed &= all(B.is_base(g3, S) for S in G3_BASES.values())
    listed &= all(B.is_base(f4, S) for S in F4_BASES.values())
    keys = {b.key for b in B.enumerate_bases(f4)} | {b.key for b in B.enumerate_bases(g3)}
    listed &= all(frozenset(S) in keys for S in list(G3_BASES.values()) + list(F4_BASES.values()))
    ok = n_g3 == 4 and n_f4 == 6 and listed
    criterion(3, "W-classes of bases G(3)=4 F(4)=6, listed bases present", ok, t0, limit=30,
              detail=f"G3={n_g3} F4={n_f4}")


def test_4_theorem3_i_exceptional(criterion):
    t0 = time.perf_counter()
    ok, detail = _reports_pass(T.run_claim("thm3i", EXCEPTIONAL))
    criterion(4, "Theorem 3(i) fibers connected, exceptional", ok, t0, limit=120, detail=detail)


def test_4_theorem3_i_classical(criterion):
    t0 = time.perf_counter()
    ok, detail = _reports_pass(T.run_claim("thm3i", _scope()))
    criterion(4, "Theorem 3(i) fibers connected, classical", ok, t0, limit=300, detail=detail)


def test_5_theorem3_ii(criterion):
    t0 = time.perf_counter()
    reports = T.run_claim("thm3ii") + [T.verify_e8()]
    ok, detail = _reports_pass(reports)
    e8 = reports[-1].details
    ok = ok and "alpha4" in e8 and "alpha5" in e8 and e8["alpha4"]["witness"] and e8["alpha5"]["witness"]
    criterion(5, "Theorem 3(ii) bracket witnesses incl. E8", ok, t0, detail=detail)


def test_6_theorem3_iii(criterion):
    t0 = time.perf_counter()
    ok, detail = _reports_pass(T.run_claim("thm3iii"))
    criterion(6, "Theorem 3(iii) unbroken strings", ok, t0, detail=detail)


def test_7_theorem2(criterion):
    t0 = time.perf_counter()
    ok, detail = _reports_pass(T.run_claim("thm2"))
    criterion(7, "Theorem 2 and base bijection", ok, t0, detail=detail)


def test_8_counterexamples(criterion):
    t0 = time.perf_counter()
    r54 = T.counterexample_remark_5_4()
    r58 = [T.counterexample_remark_5_8(m) for m in (3, 4)]
    ok = r54.passed and all(r.passed for r in r58)
    ok = ok and len(r54.details["fiber(1)"]) == 2 and not r54.details["connected(1)"] and not r54.details["connected(-1)"]
    ok = ok and all(len(r.details["fiber"]) == 2 for r in r58)
    criterion(8, "Counterexamples reducible as stated", ok, t0)


def test_9_e8(criterion):
    t0 = time.perf_counter()
    r = T.verify_e8()
    ok = r.passed and r.details["highest_root"] == [2, 3, 4, 6, 5, 4, 3, 2]
    criterion(9, "E8 highest root and coefficient-5 fact", ok, t0, limit=1)


def test_10_edge_lifting(criterion):
    t0 = time.perf_counter()
    reports = [T.verify_edge_lifting(a) for a in T.default_scope()]
    ok, detail = _reports_pass(reports)
    criterion(10, "Fiber graph edges equal quotient edges", ok, t0, detail=detail)


def test_11_structural_suite(criterion, capsys):
    t0 = time.perf_counter()
    code = main(["verify", "--claim", "all"])
    out = capsys.readouterr().out
    ok = code == 0 and out.rstrip().endswith("PASS")
    criterion(11, "Structural suite via verify --claim all", ok, t0, detail=f"exit {code}")
