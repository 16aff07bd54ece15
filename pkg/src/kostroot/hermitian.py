"""Hermitian symmetric pairs: the compact/non-compact split, admissible
positive systems and the extension counts at the level of Kostant roots.

Each catalog case fixes small parameters; the R-level counts do not depend
on them. Compact roots Delta_k are even, and the Kostant system collapses a
base of Delta_k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import bases as B
from . import linalg
from .kostant import KostantSystem, project
from .linalg import Vec
from .rootsys import RootSystem, build


class AdmissibilityError(ValueError):
    pass


class CatalogError(AssertionError):
    """A computed Kostant root list differs from the catalog constant."""


@dataclass(frozen=True)
class HermitianCase:
    id: str
    algebra: str
    real_form: str
    compact: str
    bars: Tuple[Tuple[str, Tuple], ...]
    R0: Tuple[Tuple[Tuple[str, Q], ...], ...]
    R1: Tuple[Tuple[Tuple[str, Q], ...], ...]
    counts: Tuple[int, int, int]


def _pm(*terms) -> List[Tuple[Tuple[str, Q], ...]]:
    """All sign patterns of a combination given as (name, coeff) pairs."""
    out = [()]
    for name, c in terms:
        out = [t + ((name, s * Q(c)),) for t in out for s in (1, -1)]
    return out


def _both(*terms):
    t = tuple((n, Q(c)) for n, c in terms)
    return [t, tuple((n, -c) for n, c in t)]


# -- compact root sets -------------------------------------------------------


def _compact(rs: RootSystem, rule) -> FrozenSet[Vec]:
    return frozenset(v for v in rs.even if rule(v))


def _support(v: Vec) -> List[int]:
    return [i for i, x in enumerate(v) if x]


def _within(idx):
    idx = set(idx)
    return lambda v: set(_support(v)) <= idx


def _type_a(idx):
    """e_i - e_j with i, j in idx."""
    idx = set(idx)
    return lambda v: set(_support(v)) <= idx and sum(v) == 0 and len(_support(v)) == 2


def _or(*rules):
    return lambda v: any(r(v) for r in rules)


def _dims(rs: RootSystem, prefix: str) -> List[int]:
    return [i for i, lab in enumerate(rs.coord_labels) if lab.startswith(prefix)]


CATALOG: Tuple[HermitianCase, ...] = (
    HermitianCase(
        "sl-generic", "sl(3|2)", "su(1,2) + su(1,1) + u(1)", "sl_1+sl_2 on e, sl_1+sl_1 on d",
        (("e1", (1, 0, 0, 0, 0)), ("e2", (0, 1, 0, 0, 0)), ("d1", (0, 0, 0, 1, 0)), ("d2", (0, 0, 0, 0, 1))),
        tuple(_both(("e1", 1), ("e2", -1)) + _both(("d1", 1), ("d2", -1))),
        tuple(x for i in ("e1", "e2") for j in ("d1", "d2") for x in _both((i, 1), (j, -1))),
        (24, 4, 6),
    ),
    HermitianCase(
        "sl-p0", "sl(3|2)", "su(0,3) + su(1,1) + u(1)", "sl_3 on e",
        (("e", (1, 0, 0, 0, 0)), ("d1", (0, 0, 0, 1, 0)), ("d2", (0, 0, 0, 0, 1))),
        tuple(_both(("d1", 1), ("d2", -1))),
        tuple(x for j in ("d1", "d2") for x in _both(("e", 1), (j, -1))),
        (6, 2, 3),
    ),
    HermitianCase(
        "sl-p0-r0", "sl(3|2)", "su(0,3) + su(0,2) + u(1)", "sl_3 on e, sl_2 on d",
        (("e", (1, 0, 0, 0, 0)), ("d", (0, 0, 0, 1, 0))),
        (),
        tuple(_both(("e", 1), ("d", -1))),
        (2, 1, 2),
    ),
    HermitianCase(
        "osp-odd", "osp(5|4)", "so(2,3) + sp_2(R)", "so_3 on e2, gl_2 on d",
        (("e", (1, 0, 0, 0)), ("d", (0, 0, 1, 0))),
        tuple(_both(("e", 1)) + _both(("d", 2))),
        tuple(_pm(("e", 1), ("d", 1)) + _both(("d", 1))),
        (8, 4, 2),
    ),
    HermitianCase(
        "osp-1", "osp(1|4)", "sp_2(R)", "gl_2 on d",
        (("d", (1, 0)),),
        tuple(_both(("d", 2))),
        tuple(_both(("d", 1))),
        (2, 2, 1),
    ),
    HermitianCase(
        "osp-2-gl", "osp(2|4)", "so(2) + sp_2(R)", "gl_2 on d",
        (("e", (1, 0, 0)), ("d", (0, 1, 0))),
        tuple(_both(("d", 2))),
        tuple(_pm(("e", 1), ("d", 1))),
        (6, 2, 3),
    ),
    HermitianCase(
        "osp-2-sp", "osp(2|4)", "so(2) + sp(2)", "sp_2 on d",
        (("e", (1, 0, 0)),),
        (),
        tuple(_both(("e", 1))),
        (2, 1, 2),
    ),
    HermitianCase(
        "osp-even-so", "osp(6|2)", "so(2,4) + sp_1(R)", "so_4 on e2, e3",
        (("e", (1, 0, 0, 0)), ("d", (0, 0, 0, 1))),
        tuple(_both(("e", 1)) + _both(("d", 2))),
        tuple(_pm(("e", 1), ("d", 1)) + _both(("d", 1))),
        (8, 4, 2),
    ),
    HermitianCase(
        "osp-even-gl", "osp(4|2)", "so*(4) + sp(1)", "gl_2 on e",
        (("e", (1, 0, 0)), ("d", (0, 0, 1))),
        tuple(_both(("e", 2)) + _both(("d", 2))),
        tuple(_pm(("e", 1), ("d", 1))),
        (8, 4, 2),
    ),
    HermitianCase(
        "d21a-cartan", "D(2,1;a)", "sl_2(R) + sl_2(R) + sl_2(R)", "none (Cartan subalgebra)",
        (("d1", (1, 0, 0)), ("d2", (0, 1, 0)), ("d3", (0, 0, 1))),
        tuple(x for n in ("d1", "d2", "d3") for x in _both((n, 2))),
        tuple(_pm(("d1", 1), ("d2", 1), ("d3", 1))),
        (32, 8, 4),
    ),
    HermitianCase(
        "d21a-sl2", "D(2,1;a)", "sl_2(R) + su(2) + su(2)", "sl_2 + sl_2 on d2, d3",
        (("d", (1, 0, 0)),),
        tuple(_both(("d", 2))),
        tuple(_both(("d", 1))),
        (2, 2, 1),
    ),
    HermitianCase(
        "f4-so5", "F(4)", "su(2) + so(2,5)", "sl_2 on d, so_5 on e2, e3",
        (("e", (1, 0, 0, 0)),),
        tuple(_both(("e", 1))),
        tuple(_both(("e", Q(1, 2)))),
        (2, 2, 1),
    ),
    HermitianCase(
        "f4-so7", "F(4)", "sl_2(R) + so(7)", "so_7 on e",
        (("d", (0, 0, 0, 1)),),
        tuple(_both(("d", 1))),
        tuple(_both(("d", Q(1, 2)))),
        (2, 2, 1),
    ),
    HermitianCase(
        "g3", "G(3)", "G_2 + C", "G_2",
        (("d", (0, 0, 1)),),
        tuple(_both(("d", 2))),
        tuple(_both(("d", 1))),
        (2, 2, 1),
    ),
)


def _compact_rule(case_id: str, rs: RootSystem):
    e, d = _dims(rs, "e"), _dims(rs, "d")
    rules = {
        "sl-generic": _type_a(e[1:]),
        "sl-p0": _type_a(e),
        "sl-p0-r0": _or(_type_a(e), _type_a(d)),
        "osp-odd": _or(_within(e[1:]), _type_a(d)),
        "osp-1": _type_a(d),
        "osp-2-gl": _type_a(d),
        "osp-2-sp": _within(d),
        "osp-even-so": _within(e[1:]),
        "osp-even-gl": _or(_type_a(e), _type_a(d)),
        "d21a-cartan": lambda v: False,
        "d21a-sl2": _within(d[1:]),
        "f4-so5": _or(_within(d), _within(e[1:])),
        "f4-so7": _within(e),
        "g3": _within(e),
    }
    return rules[case_id]


# -- pairs -----------------------------------------------------------------


def _sum_set(universe, A, Bs) -> set:
    present = set(universe)
    return {s for a in A for b in Bs if (s := linalg.add(a, b)) in present}


@dataclass(eq=False)
class HermitianPair:
    case: HermitianCase
    g: RootSystem
    compact: FrozenSet[Vec]

    @property
    def id(self) -> str:
        return self.case.id

    @property
    def noncompact(self) -> FrozenSet[Vec]:
        return frozenset(self.g.vectors) - self.compact

    @cached_property
    def compact_base(self) -> Tuple[Vec, ...]:
        if not self.compact:
            return ()
        return B.adapted_base(sorted(self.compact), ()).elements

    @cached_property
    def kostant(self) -> KostantSystem:
        return project(self.g, self.compact_base)

    @property
    def R0(self) -> Tuple[Vec, ...]:
        return self.kostant.even

    @property
    def R1(self) -> Tuple[Vec, ...]:
        return self.kostant.odd

    def expected(self, combos) -> set:
        bars = {n: tuple(Q(x) for x in v) for n, v in self.case.bars}
        out = set()
        for combo in combos:
            v = linalg.zero(self.g.ambient_dim)
            for n, c in combo:
                v = linalg.add(v, linalg.scale(c, bars[n]))
            out.add(self.kostant.pi(v))
        return out

    def span_closed(self) -> bool:
        """<Delta_k> meets Delta exactly in Delta_k."""
        if not self.compact:
            return True
        dec = linalg.Decomposer(list(self.compact_base))
        return {v for v in self.g.vectors if dec.coefficients(v) is not None} == set(self.compact)

    def check(self) -> None:
        if not self.compact <= set(self.g.even):
            raise CatalogError(f"{self.id}: compact roots must be even")
        if not self.span_closed():
            raise CatalogError(f"{self.id}: the span of the compact roots contains other roots")
        if set(self.R0) != self.expected(self.case.R0):
            raise CatalogError(f"{self.id}: R0 differs from the catalog")
        if set(self.R1) != self.expected(self.case.R1):
            raise CatalogError(f"{self.id}: R1 differs from the catalog")

    def format(self, nu) -> str:
        """Kostant root written in the case's named coordinates."""
        names = [n for n, _ in self.case.bars]
        imgs = [self.kostant.pi(tuple(Q(x) for x in v)) for _, v in self.case.bars]
        coeffs = linalg.Decomposer(imgs).coefficients(tuple(nu))
        parts = []
        for n, c in zip(names, coeffs):
            if not c:
                continue
            mag = abs(c)
            num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            term = n if mag == 1 else f"{num}{n}"
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def hermitian_pair(case: HermitianCase) -> HermitianPair:
    g = build(case.algebra)
    pair = HermitianPair(case, g, _compact(g, _compact_rule(case.id, g)))
    pair.check()
    return pair


def hermitian_catalog() -> List[HermitianPair]:
    return [hermitian_pair(c) for c in CATALOG]


def get_case(case_id: str) -> HermitianPair:
    for c in CATALOG:
        if c.id == case_id:
            return hermitian_pair(c)
    raise KeyError(f"unknown case {case_id!r}; known: {', '.join(c.id for c in CATALOG)}")


# -- counts ----------------------------------------------------------------


@dataclass(frozen=True)
class Counts:
    n_pos: int
    n_pos_even: int
    n_ext: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.n_pos, self.n_pos_even, self.n_ext)


def _positive_sets(vectors: Sequence[Vec]) -> List[FrozenSet[Vec]]:
    if not vectors:
        return [frozenset()]
    return [p.positives for p in B.enumerate_positive_systems(sorted(vectors))]


def count_positive_systems(pair: HermitianPair) -> Counts:
    """(#R+, #R0+, #extensions of each R0+); raises if the extension count varies."""
    pos = _positive_sets(pair.kostant.vectors)
    pos0 = _positive_sets(pair.R0)
    ext = {P0: sum(1 for P in pos if P0 <= P) for P0 in pos0}
    values = set(ext.values())
    if len(values) != 1:
        raise CatalogError(f"{pair.id}: extension count depends on R0+ ({sorted(values)})")
    return Counts(len(pos), len(pos0), values.pop())


# -- admissibility ---------------------------------------------------------


def is_admissible(universe: Sequence[Vec], compact: FrozenSet[Vec], positives: FrozenSet[Vec]) -> bool:
    """(Delta_k + Delta_p+) n Delta and (Delta_p+ + Delta_p+) n Delta both lie in Delta_p+."""
    p_plus = set(positives) - set(compact)
    ks = set(compact) & set(universe)
    return _sum_set(universe, ks, p_plus) <= p_plus and _sum_set(universe, p_plus, p_plus) <= p_plus


def admissible_even_systems(pair: HermitianPair) -> List[FrozenSet[Vec]]:
    even = pair.g.even
    return [P for P in _positive_sets(even) if is_admissible(even, pair.compact, P)]


@dataclass(frozen=True)
class AdmissibleSystem:
    positives: FrozenSet[Vec]
    compact: FrozenSet[Vec]
    base: Tuple[Vec, ...]

    @property
    def compact_positive(self) -> FrozenSet[Vec]:
        return self.positives & self.compact

    @property
    def noncompact_positive(self) -> FrozenSet[Vec]:
        return self.positives - self.compact


def _lift(pair: HermitianPair, even_positive: FrozenSet[Vec], R_plus: FrozenSet[Vec], K: KostantSystem) -> AdmissibleSystem:
    compact_pos = even_positive & pair.compact
    positives = frozenset(v for v in pair.g.vectors if K.pi(v) in R_plus) | compact_pos
    g = pair.g
    if not B.is_positive_system(g, positives):
        raise AdmissibilityError("lifted set is not a positive system")
    if not even_positive <= positives:
        raise AdmissibilityError("lift does not contain the even system")
    if not is_admissible(g.vectors, pair.compact, positives):
        raise AdmissibilityError("lift is not admissible")
    return AdmissibleSystem(positives, pair.compact, B.indecomposables(g, positives).elements)


def _setup(pair: HermitianPair, even_positive):
    P0 = frozenset(tuple(Q(x) for x in v) for v in even_positive)
    even = pair.g.even
    if not B.is_positive_system(even, P0):
        raise AdmissibilityError("not a positive system of the even roots")
    if not is_admissible(even, pair.compact, P0):
        raise AdmissibilityError("even positive system is not admissible")
    S0 = B.indecomposables(even, P0).elements
    I = tuple(v for v in S0 if v in pair.compact)
    if pair.compact and not B.is_base(sorted(pair.compact), I):
        raise AdmissibilityError("S0 n Delta_k is not a base of the compact roots")
    K = project(pair.g, I)
    image = {K.pi(v) for v in P0} - {linalg.zero(K.dim)}
    return P0, K, image


def admissible_extensions(pair: HermitianPair, even_positive) -> List[AdmissibleSystem]:
    """Every admissible positive system of Delta containing ``even_positive``,
    built from the positive systems of R containing its image."""
    P0, K, image = _setup(pair, even_positive)
    return [_lift(pair, P0, R_plus, K) for R_plus in _positive_sets(K.vectors) if image <= R_plus]


def extend_admissible(pair: HermitianPair, even_positive) -> AdmissibleSystem:
    """I = S0 n Delta_k, a base of Delta/<I> containing the image, lifted to Delta."""
    P0, K, image = _setup(pair, even_positive)
    for R_plus in _positive_sets(K.vectors):
        if image <= R_plus:
            return _lift(pair, P0, R_plus, K)
    raise AdmissibilityError("no positive system of R contains the image")


def admissible_by_filter(pair: HermitianPair, even_positive) -> List[FrozenSet[Vec]]:
    """Oracle: filter all positive systems of Delta by containment and admissibility."""
    P0 = frozenset(even_positive)
    g = pair.g
    return [P for P in _positive_sets(g.vectors) if P0 <= P and is_admissible(g.vectors, pair.compact, P)]


# -- report ----------------------------------------------------------------


def count_rows(pairs: Optional[Sequence[HermitianPair]] = None) -> List[dict]:
    rows = []
    for pair in pairs if pairs is not None else hermitian_catalog():
        c = count_positive_systems(pair)
        rows.append({
            "case": pair.id,
            "algebra": pair.case.algebra,
            "real_form": pair.case.real_form,
            "R0": sorted(pair.format(v) for v in pair.R0),
            "R1": sorted(pair.format(v) for v in pair.R1),
            "n_pos": c.n_pos,
            "n_pos_even": c.n_pos_even,
            "n_ext": c.n_ext,
            "expected": list(pair.case.counts),
            "match": c.as_tuple() == pair.case.counts,
        })
    return rows


def format_rows(rows: List[dict], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    out = []
    for r in rows:
        status = "ok" if r["match"] else "MISMATCH"
        out.append(
            f"{r['case']:<12} {r['algebra']:<9} n_pos={r['n_pos']:<3} n_pos_even={r['n_pos_even']:<2} "
            f"n_ext={r['n_ext']:<2} {status}\n"
            f"    R0 = {{{', '.join(r['R0'])}}}\n    R1 = {{{', '.join(r['R1'])}}}"
        )
    return "\n".join(out) + "\n"
