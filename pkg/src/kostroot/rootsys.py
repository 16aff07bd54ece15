"""Coordinate models of root systems of reductive Lie superalgebras.

Every algebra is realised in fixed coordinates (epsilon_i, delta_j or e_i)
with exact rational entries. Only the root combinatorics is modelled: no
brackets, structure constants or invariant forms.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property
from typing import Dict, Iterable, Optional, Tuple

from . import linalg
from .linalg import Vec

EVEN = "even"
ODD = "odd"

LIE_TYPES = "ABCDEFG"
SUPER_FAMILIES = ("sl", "gl", "osp", "D21a", "G3", "F4")


class AlgebraSpecError(ValueError):
    """Raised for algebra names outside the supported catalog."""


@dataclass(frozen=True)
class AlgebraSpec:
    """Family tag plus integer parameters.

    ``osp`` stores ``(m, n)`` for osp(m|2n). Simple Lie algebras use the
    Cartan letter as family and ``(rank,)`` as params.
    """

    family: str
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_params(self.family, self.params)

    @property
    def name(self) -> str:
        f, p = self.family, self.params
        if f in ("sl", "gl"):
            return f"{f}({p[0]}|{p[1]})"
        if f == "osp":
            return f"osp({p[0]}|{2 * p[1]})"
        if f == "D21a":
            return "D(2,1;a)"
        if f == "G3":
            return "G(3)"
        if f == "F4":
            return "F(4)"
        if f == "F":
            return "F_4"
        return f"{f}{p[0]}"

    @property
    def is_lie(self) -> bool:
        return self.family in LIE_TYPES

    def __str__(self) -> str:
        return self.name


def _check_params(family: str, params: Tuple[int, ...]) -> None:
    if family in ("sl", "gl"):
        if len(params) != 2 or min(params) < 0:
            raise AlgebraSpecError(f"{family} needs two nonnegative sizes, got {params}")
        m, n = params
        if family == "sl":
            if m == n:
                raise AlgebraSpecError(
                    f"sl({m}|{n}) is not in the reductive catalog: sl(m|m) has degenerate "
                    f"root spaces; use gl({m}|{m}) instead"
                )
            if m + n < 2:
                raise AlgebraSpecError("sl(m|n) needs m + n >= 2")
        else:
            if m != n or m < 1:
                raise AlgebraSpecError(f"gl(m|n) is supported only for m = n >= 1, got gl({m}|{n})")
    elif family == "osp":
        if len(params) != 2 or params[0] < 0 or params[1] < 1:
            raise AlgebraSpecError(f"osp(m|2n) needs m >= 0 and n >= 1, got {params}")
    elif family in ("D21a", "G3", "F4"):
        if params:
            raise AlgebraSpecError(f"{family} takes no parameters")
    elif family in LIE_TYPES:
        if len(params) != 1:
            raise AlgebraSpecError(f"type {family} needs a rank")
        r = params[0]
        ok = {
            "A": r >= 1,
            "B": r >= 1,
            "C": r >= 1,
            "D": r >= 2,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[family]
        if not ok:
            raise AlgebraSpecError(f"no simple Lie algebra of type {family}{r}")
    else:
        raise AlgebraSpecError(f"unknown family {family!r}")


_PATTERNS = [
    (re.compile(r"^(sl|gl)\((\d+)\|(\d+)\)$"), lambda m: (m[1], (int(m[2]), int(m[3])))),
    (re.compile(r"^osp\((\d+)\|(\d+)\)$"), None),
    (re.compile(r"^D\(2,1;?[a-zA-Z]*\)$|^D21a?$"), lambda m: ("D21a", ())),
    (re.compile(r"^G\(3\)$|^G3$"), lambda m: ("G3", ())),
    (re.compile(r"^F\(4\)$|^F4$"), lambda m: ("F4", ())),
    (re.compile(r"^F_4$"), lambda m: ("F", (4,))),
    (re.compile(r"^([A-G])_?(\d+)$"), lambda m: (m[1], (int(m[2]),))),
]


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse names like ``sl(2|1)``, ``gl(2|2)``, ``osp(3|2)``, ``D(2,1;a)``, ``G3``, ``F4``, ``E8``.

    ``F4`` means the superalgebra F(4); the Lie algebra is written ``F_4``.
    """
    s = text.replace(" ", "")
    for pat, conv in _PATTERNS:
        m = pat.match(s)
        if not m:
            continue
        if conv is None:
            m_, two_n = int(m[1]), int(m[2])
            if two_n % 2:
                raise AlgebraSpecError(f"osp(m|2n) needs an even second entry, got {text!r}")
            return AlgebraSpec("osp", (m_, two_n // 2))
        fam, params = conv(m)
        return AlgebraSpec(fam, params)
    raise AlgebraSpecError(
        f"cannot parse algebra {text!r}; expected sl(M|N), gl(M|M), osp(M|2N), "
        "D(2,1;a), G3, F4 or A<r>..G2 (F_4 for the Lie algebra)"
    )


@dataclass(frozen=True, order=True)
class Root:
    vector: Vec
    parity: str = EVEN

    def __post_init__(self):
        if linalg.is_zero(self.vector):
            raise ValueError("a root is nonzero")
        if self.parity not in (EVEN, ODD):
            raise ValueError(f"bad parity {self.parity!r}")


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A finite root set with parities and the ambient Cartan data."""

    spec: Optional[AlgebraSpec]
    roots: Tuple[Root, ...]
    ambient_dim: int
    coord_labels: Tuple[str, ...]
    dim_h: int
    dim_center: int
    label: str = ""

    def __post_init__(self):
        vs = [r.vector for r in self.roots]
        if len(set(vs)) != len(vs):
            raise ValueError("roots must be pairwise distinct")
        if any(len(v) != self.ambient_dim for v in vs):
            raise ValueError("root dimension does not match ambient_dim")
        if list(self.roots) != sorted(self.roots, key=lambda r: r.vector):
            object.__setattr__(self, "roots", tuple(sorted(self.roots, key=lambda r: r.vector)))

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        return self.spec.name if self.spec is not None else "<root system>"

    @cached_property
    def vectors(self) -> Tuple[Vec, ...]:
        return tuple(r.vector for r in self.roots)

    @cached_property
    def _parity(self) -> Dict[Vec, str]:
        return {r.vector: r.parity for r in self.roots}

    @cached_property
    def even(self) -> Tuple[Vec, ...]:
        return tuple(r.vector for r in self.roots if r.parity == EVEN)

    @cached_property
    def odd(self) -> Tuple[Vec, ...]:
        return tuple(r.vector for r in self.roots if r.parity == ODD)

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.vectors)

    def __contains__(self, v) -> bool:
        return _as_vec(v) in self._parity

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.vectors)

    def parity(self, v) -> str:
        try:
            return self._parity[_as_vec(v)]
        except KeyError:
            raise KeyError(f"{format_vector(_as_vec(v), self.coord_labels)} is not a root of {self.name}")

    def root(self, *coords) -> Vec:
        """Return the root with the given coordinates (validated)."""
        v = linalg.vec(*coords)
        if v not in self._parity:
            raise KeyError(f"{coords} is not a root of {self.name}")
        return v

    def format(self, v) -> str:
        return format_vector(_as_vec(v), self.coord_labels)


def _as_vec(v) -> Vec:
    if isinstance(v, Root):
        return v.vector
    return tuple(Q(x) for x in v)


def format_vector(v: Vec, labels: Iterable[str]) -> str:
    """Human-readable linear combination, e.g. ``e1 - d2`` or ``1/2(e1+e2+e3+d)``."""
    terms = []
    for c, lab in zip(v, labels):
        if not c:
            continue
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{coef}{lab}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


# -- builders --------------------------------------------------------------


def _roots_from(dim: int, even: Iterable[Vec], odd: Iterable[Vec]) -> Tuple[Root, ...]:
    out = {}
    for v in even:
        out[tuple(Q(x) for x in v)] = EVEN
    for v in odd:
        v = tuple(Q(x) for x in v)
        if v in out:
            raise ValueError(f"root {v} listed with both parities")
        out[v] = ODD
    return tuple(Root(v, p) for v, p in sorted(out.items()))


def _e(dim: int, *pairs) -> Vec:
    """Vector with coefficient c at position i for each (i, c)."""
    v = [Q(0)] * dim
    for i, c in pairs:
        v[i] += Q(c)
    return tuple(v)


def _pm_pairs(dim: int, idx: Iterable[int]) -> list:
    idx = list(idx)
    out = []
    for a, b in itertools.combinations(idx, 2):
        for s, t in itertools.product((1, -1), repeat=2):
            out.append(_e(dim, (a, s), (b, t)))
    return out


def _sl_like(m: int, n: int):
    d = m + n
    even, odd = [], []
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            v = _e(d, (i, 1), (j, -1))
            if (i < m) == (j < m):
                even.append(v)
            else:
                odd.append(v)
    labels = tuple(f"e{i + 1}" for i in range(m)) + tuple(f"d{j + 1}" for j in range(n))
    return d, even, odd, labels


def _osp(m: int, n: int):
    k = m // 2
    d = k + n
    eps = range(k)
    dl = range(k, d)
    even = _pm_pairs(d, eps) + _pm_pairs(d, dl)
    even += [_e(d, (j, s * 2)) for j in dl for s in (1, -1)]
    odd = [_e(d, (i, s), (j, t)) for i in eps for j in dl for s in (1, -1) for t in (1, -1)]
    if m % 2:
        even += [_e(d, (i, s)) for i in eps for s in (1, -1)]
        odd += [_e(d, (j, s)) for j in dl for s in (1, -1)]
    labels = tuple(f"e{i + 1}" for i in range(k)) + tuple(f"d{j + 1}" for j in range(n))
    return d, even, odd, labels


def _d21a():
    d = 3
    even = [_e(d, (i, 2 * s)) for i in range(3) for s in (1, -1)]
    odd = [tuple(Q(x) for x in signs) for signs in itertools.product((1, -1), repeat=3)]
    return d, even, odd, ("d1", "d2", "d3")


def _g2_vectors() -> list:
    # coordinates (e1, e2) with e3 = -e1 - e2
    eps = [(1, 0), (0, 1), (-1, -1)]
    out = []
    for i in range(3):
        out.append(eps[i])
        out.append(tuple(-x for x in eps[i]))
        for j in range(3):
            if i != j:
                out.append(tuple(a - b for a, b in zip(eps[i], eps[j])))
    return out


def _g3():
    d = 3
    g2 = [(a, b, 0) for a, b in _g2_vectors()]
    even = g2 + [(0, 0, 2), (0, 0, -2)]
    eps = [(1, 0), (0, 1), (-1, -1)]
    odd = [(0, 0, 1), (0, 0, -1)]
    for e in eps:
        for s in (1, -1):
            for t in (1, -1):
                odd.append((s * e[0], s * e[1], t))
    return d, even, odd, ("e1", "e2", "d")


def _f4():
    d = 4
    h = Q(1, 2)
    even = _pm_pairs(d, range(3))
    even += [_e(d, (i, s)) for i in range(3) for s in (1, -1)]
    even += [_e(d, (3, 1)), _e(d, (3, -1))]
    odd = [tuple(h * s for s in signs) for signs in itertools.product((1, -1), repeat=4)]
    return d, even, odd, ("e1", "e2", "e3", "d")


def _e8_vectors() -> list:
    out = _pm_pairs(8, range(8))
    h = Q(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(h * s for s in signs))
    return out


def _lie(letter: str, r: int):
    if letter == "A":
        d, even, _, _ = _sl_like(r + 1, 0)
        return d, even, [], tuple(f"e{i + 1}" for i in range(d)), r
    if letter in "BCD":
        even = _pm_pairs(r, range(r))
        if letter == "B":
            even += [_e(r, (i, s)) for i in range(r) for s in (1, -1)]
        if letter == "C":
            even += [_e(r, (i, 2 * s)) for i in range(r) for s in (1, -1)]
        return r, even, [], tuple(f"e{i + 1}" for i in range(r)), r
    if letter == "E":
        e8 = _e8_vectors()
        # E7, E6 as the E8 roots orthogonal (coordinatewise) to e7+e8 and e6+e8
        cuts = {8: [], 7: [(6, 7)], 6: [(6, 7), (5, 7)]}[r]
        keep = [v for v in e8 if all(v[a] + v[b] == 0 for a, b in cuts)]
        return 8, keep, [], tuple(f"e{i + 1}" for i in range(8)), r
    if letter == "F":
        h = Q(1, 2)
        vecs = _pm_pairs(4, range(4)) + [_e(4, (i, s)) for i in range(4) for s in (1, -1)]
        vecs += [tuple(h * s for s in signs) for signs in itertools.product((1, -1), repeat=4)]
        return 4, vecs, [], ("e1", "e2", "e3", "e4"), 4
    if letter == "G":
        return 2, _g2_vectors(), [], ("e1", "e2"), 2
    raise AlgebraSpecError(letter)


def build_root_system(spec) -> RootSystem:
    """Full root set with parities for an algebra of the catalog."""
    if isinstance(spec, str):
        spec = parse_algebra(spec)
    f, p = spec.family, spec.params
    center = 0
    if f == "sl":
        d, even, odd, labels = _sl_like(*p)
        dim_h = d - 1
    elif f == "gl":
        d, even, odd, labels = _sl_like(*p)
        dim_h, center = d, 1
    elif f == "osp":
        d, even, odd, labels = _osp(*p)
        dim_h = d
    elif f == "D21a":
        d, even, odd, labels = _d21a()
        dim_h = 3
    elif f == "G3":
        d, even, odd, labels = _g3()
        dim_h = 3
    elif f == "F4":
        d, even, odd, labels = _f4()
        dim_h = 4
    else:
        d, even, odd, labels, dim_h = _lie(f, p[0])
    return RootSystem(spec, _roots_from(d, even, odd), d, labels, dim_h, center)


def build(text: str) -> RootSystem:
    return build_root_system(parse_algebra(text))


def subsystem(source: RootSystem, vectors: Iterable, label: str) -> RootSystem:
    """Root system on a subset of ``source``'s roots, parities inherited."""
    vs = sorted({_as_vec(v) for v in vectors})
    roots = tuple(Root(v, source.parity(v)) for v in vs)
    rk = linalg.rank(vs) if vs else 0
    return RootSystem(
        None, roots, source.ambient_dim, source.coord_labels, source.dim_h,
        source.dim_h - rk, label=label,
    )


# -- root-level predicates -------------------------------------------------


def bracket_support(rs: RootSystem, alpha, beta) -> str:
    """``'root'`` if alpha+beta is a root, ``'zero'`` if it vanishes, else ``'none'``.

    By the standard nondegeneracy of brackets of root vectors this is exactly
    the support of [g_alpha, g_beta].
    """
    a, b = _as_vec(alpha), _as_vec(beta)
    for v in (a, b):
        if v not in rs:
            raise KeyError(f"{rs.format(v)} is not a root of {rs.name}")
    s = linalg.add(a, b)
    if linalg.is_zero(s):
        return "zero"
    return "root" if s in rs else "none"


@dataclass(frozen=True)
class DimensionReport:
    family: str
    rank: int
    dim_center: int
    dim_h: int

    @property
    def ok(self) -> bool:
        return self.rank + self.dim_center == self.dim_h


def verify_dimension_identity(rs: RootSystem) -> DimensionReport:
    """Check dim h = rank of the root span + dim of the center."""
    return DimensionReport(rs.name, rs.rank, rs.dim_center, rs.dim_h)


def negation_closed(rs: RootSystem) -> bool:
    return all(linalg.neg(v) in rs and rs.parity(linalg.neg(v)) == rs.parity(v) for v in rs)


# -- serialisation ---------------------------------------------------------


def to_dict(rs: RootSystem) -> dict:
    return {
        "family": rs.spec.family if rs.spec else rs.name,
        "params": list(rs.spec.params) if rs.spec else [],
        "coord_labels": list(rs.coord_labels),
        "roots": [
            {"coords": [linalg.fmt(x) for x in r.vector], "parity": r.parity} for r in rs.roots
        ],
    }


def from_dict(data: dict) -> RootSystem:
    spec = AlgebraSpec(data["family"], tuple(data["params"]))
    base = build_root_system(spec)
    roots = tuple(
        Root(tuple(linalg.parse_rational(c) for c in r["coords"]), r["parity"]) for r in data["roots"]
    )
    return RootSystem(spec, roots, base.ambient_dim, tuple(data["coord_labels"]), base.dim_h, base.dim_center)


def to_json(rs: RootSystem) -> str:
    return json.dumps(to_dict(rs), indent=2)


CATALOG_EXAMPLES = (
    "sl(2|1)", "sl(3|1)", "gl(1|1)", "gl(2|2)", "osp(1|2)", "osp(3|2)", "osp(2|2)",
    "osp(4|2)", "D(2,1;a)", "G3", "F4", "A2", "B3", "C3", "D4", "G2", "F_4", "E6", "E7", "E8",
)
