"""Bases, positive systems and Weyl groups of finite root sets.

All functions accept either a :class:`~kostroot.rootsys.RootSystem`, a
:class:`~kostroot.kostant.KostantSystem`, or a plain collection of vectors
closed under negation.

Positive systems are enumerated as chambers of the arrangement of root
hyperplanes: starting from the chamber of one generic functional we walk
across walls, each wall being the kernel of one indecomposable element.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .linalg import Vec

SUBSET_FILTER_LIMIT = 10**6
WEYL_ORDER_LIMIT = 200_000
CHAMBER_LIMIT = 20_000


class WeylGroupError(RuntimeError):
    """A reflection failed to permute the roots."""


# -- shared lookup tables --------------------------------------------------


class RootTable:
    """Index-based view of a finite vector set: negation, sums, rays."""

    def __init__(self, vectors: Sequence[Vec]):
        self.vecs: Tuple[Vec, ...] = tuple(vectors)
        self.index: Dict[Vec, int] = {v: i for i, v in enumerate(self.vecs)}
        self.n = len(self.vecs)
        self.dim = len(self.vecs[0]) if self.vecs else 0
        try:
            self.neg = [self.index[linalg.neg(v)] for v in self.vecs]
        except KeyError:
            raise ValueError("root set is not closed under negation") from None

    @cached_property
    def sums(self) -> List[List[int]]:
        """sums[i][j] = index of v_i + v_j, or -1 (also -1 when the sum is zero)."""
        idx = self.index
        out = []
        for i, u in enumerate(self.vecs):
            row = []
            for j, v in enumerate(self.vecs):
                row.append(idx.get(tuple(a + b for a, b in zip(u, v)), -1))
            out.append(row)
        return out

    @cached_property
    def ray(self) -> List[int]:
        keys: Dict[Vec, int] = {}
        out = []
        for v in self.vecs:
            out.append(keys.setdefault(linalg.ray_key(v), len(keys)))
        return out

    @cached_property
    def ray_members(self) -> Dict[int, Tuple[int, ...]]:
        groups: Dict[int, list] = {}
        for i, r in enumerate(self.ray):
            groups.setdefault(r, []).append(i)
        return {r: tuple(m) for r, m in groups.items()}

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.vecs) if self.vecs else 0


@lru_cache(maxsize=256)
def _table_for_tuple(vectors: Tuple[Vec, ...]) -> RootTable:
    return RootTable(vectors)


def vectors_of(system) -> Tuple[Vec, ...]:
    if hasattr(system, "vectors"):
        return tuple(system.vectors)
    return tuple(sorted({tuple(Q(x) for x in v) for v in system}))


def table(system) -> RootTable:
    cached = getattr(system, "__dict__", {}).get("_root_table")
    if cached is not None:
        return cached
    t = _table_for_tuple(vectors_of(system))
    if hasattr(system, "__dict__") and hasattr(system, "vectors"):
        system.__dict__["_root_table"] = t
    return t


# -- value types -----------------------------------------------------------


@dataclass(frozen=True)
class Base:
    """An ordered simple system."""

    elements: Tuple[Vec, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, v):
        return tuple(v) in self.elements

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def key(self) -> FrozenSet[Vec]:
        return frozenset(self.elements)

    @classmethod
    def of(cls, vectors: Iterable) -> "Base":
        return cls(tuple(sorted((tuple(Q(x) for x in v) for v in vectors), reverse=True)))


@dataclass(frozen=True)
class PositiveSystem:
    positives: FrozenSet[Vec]
    functional: Optional[Vec] = None

    def __contains__(self, v):
        return tuple(v) in self.positives

    def __len__(self):
        return len(self.positives)


# -- positive systems ------------------------------------------------------


def _generic_functional(vectors: Sequence[Vec], dim: int) -> Vec:
    """Integer functional t^0, t^1, ... nonzero on every vector, smallest t >= 2 that works."""
    t = 2
    while True:
        f = tuple(Q(t**k) for k in range(dim))
        if all(linalg.dot(f, v) != 0 for v in vectors):
            return f
        t += 1


def _indecomposable_indices(tab: RootTable, pos: FrozenSet[int]) -> List[int]:
    sums = tab.sums
    hit = set()
    plist = sorted(pos)
    for a in plist:
        row = sums[a]
        for b in plist:
            s = row[b]
            if s >= 0 and s in pos:
                hit.add(s)
    return [i for i in plist if i not in hit]


def _ones_on(vs: Sequence[Vec], dim: int) -> Vec:
    """A functional equal to 1 on each of the independent vectors ``vs``."""
    rows = linalg.dual_rows(linalg.extend_to_basis(list(vs), dim))
    f = [Q(0)] * dim
    for k in range(len(vs)):
        f = [a + b for a, b in zip(f, rows[k])]
    return tuple(f)


def _functional_for(tab: RootTable, simple: Sequence[int]) -> Vec:
    return _ones_on([tab.vecs[i] for i in simple], tab.dim)


def _chambers(tab: RootTable) -> List[FrozenSet[int]]:
    if tab.n == 0:
        return [frozenset()]
    f = _generic_functional(tab.vecs, tab.dim)
    start = frozenset(i for i, v in enumerate(tab.vecs) if linalg.dot(f, v) > 0)
    seen = {start}
    queue = deque([start])
    members = tab.ray_members
    while queue:
        pos = queue.popleft()
        for s in _indecomposable_indices(tab, pos):
            flip = members[tab.ray[s]]
            nxt = (pos - set(flip)) | {tab.neg[j] for j in flip}
            nxt = frozenset(nxt)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > CHAMBER_LIMIT:
                    raise ValueError(f"more than {CHAMBER_LIMIT} positive systems; enumeration refused")
                queue.append(nxt)
    return sorted(seen, key=lambda p: sorted(p))


@lru_cache(maxsize=128)
def _chambers_cached(vectors: Tuple[Vec, ...]) -> Tuple[FrozenSet[int], ...]:
    return tuple(_chambers(_table_for_tuple(vectors)))


def enumerate_positive_systems(system) -> List[PositiveSystem]:
    """All positive systems, each with an exact functional positive exactly on it."""
    tab = table(system)
    out = []
    for pos in _chambers_cached(tab.vecs):
        simple = _indecomposable_indices(tab, pos)
        f = _functional_for(tab, simple) if simple else None
        out.append(PositiveSystem(frozenset(tab.vecs[i] for i in pos), f))
    return out


def is_positive_system(system, subset: Iterable) -> bool:
    """Axiom check: R = P u -P, P n -P empty, closed under sums lying in R."""
    tab = table(system)
    pos = {tab.index[tuple(v)] for v in subset}
    for i in range(tab.n):
        if (i in pos) == (tab.neg[i] in pos):
            return False
    sums = tab.sums
    for a in pos:
        for b in pos:
            s = sums[a][b]
            if s >= 0 and s not in pos:
                return False
    return True


def positive_systems_by_axioms(system) -> List[FrozenSet[Vec]]:
    """Brute-force oracle: test every choice of one vector per +-pair."""
    tab = table(system)
    pairs = sorted({min(i, tab.neg[i]) for i in range(tab.n)})
    if len(pairs) > 24:
        raise ValueError("axiom filter is limited to 48 roots")
    out = []
    for signs in itertools.product((0, 1), repeat=len(pairs)):
        chosen = [p if s == 0 else tab.neg[p] for p, s in zip(pairs, signs)]
        if is_positive_system(tab.vecs, [tab.vecs[i] for i in chosen]):
            out.append(frozenset(tab.vecs[i] for i in chosen))
    return out


def indecomposables(system, positive) -> Base:
    """Elements of a positive system not expressible as a sum of two of its elements."""
    tab = table(system)
    pos = positive.positives if isinstance(positive, PositiveSystem) else positive
    idx = frozenset(tab.index[tuple(v)] for v in pos)
    return Base.of(tab.vecs[i] for i in _indecomposable_indices(tab, idx))


# -- bases -----------------------------------------------------------------


def decompose(base: Sequence[Vec], v: Sequence) -> Optional[Vec]:
    return linalg.Decomposer(list(base)).coefficients(v)


def is_base(system, candidate: Iterable) -> bool:
    """Linear independence plus one-signed integral generation of every root."""
    tab = table(system)
    cand = [tuple(Q(x) for x in c) for c in candidate]
    if tab.n == 0:
        return not cand
    if not cand or len(set(cand)) != len(cand):
        return False
    if any(c not in tab.index for c in cand):
        return False
    if len(cand) != tab.rank or not linalg.independent(cand):
        return False
    dec = linalg.Decomposer(cand)
    for v in tab.vecs:
        c = dec.coefficients(v)
        if c is None or any(x.denominator != 1 for x in c):
            return False
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            return False
    return True


def positive_cone(system, base: Sequence[Vec]) -> FrozenSet[Vec]:
    """Roots that are nonnegative combinations of ``base``."""
    tab = table(system)
    dec = linalg.Decomposer(list(base))
    out = set()
    for v in tab.vecs:
        c = dec.coefficients(v)
        if c is not None and all(x >= 0 for x in c):
            out.add(v)
    return frozenset(out)


def enumerate_bases(system) -> List[Base]:
    """Bases of ``system`` in a fixed order, one per positive system."""
    tab = table(system)
    return list(_bases_cached(tab.vecs))


@lru_cache(maxsize=128)
def _bases_cached(vectors: Tuple[Vec, ...]) -> Tuple[Base, ...]:
    tab = _table_for_tuple(vectors)
    bases = [Base.of(tab.vecs[i] for i in _indecomposable_indices(tab, p)) for p in _chambers_cached(vectors)]
    return tuple(sorted(bases, key=lambda b: b.elements))


def bases_by_subsets(system) -> List[Base]:
    """Independent oracle: filter every rank-sized subset with :func:`is_base`."""
    tab = table(system)
    r = tab.rank
    if comb(tab.n, r) > SUBSET_FILTER_LIMIT:
        raise ValueError(f"C({tab.n}, {r}) exceeds the subset-filter guardrail")
    out = [Base.of(s) for s in itertools.combinations(tab.vecs, r) if is_base(tab.vecs, s)]
    return sorted(out, key=lambda b: b.elements)


def base_index(system, base: Iterable) -> int:
    """Position of ``base`` in :func:`enumerate_bases` order."""
    key = frozenset(tuple(Q(x) for x in v) for v in base)
    for i, b in enumerate(enumerate_bases(system)):
        if b.key == key:
            return i
    raise ValueError("not a base of this system")


def contains_in_base(system, subset: Iterable) -> bool:
    """Whether ``subset`` lies in some base.

    Equivalent to: ``subset`` is a base of the roots in its own span.
    """
    sub = [tuple(Q(x) for x in v) for v in subset]
    if not sub:
        return True
    if not linalg.independent(sub):
        return False
    tab = table(system)
    dec = linalg.Decomposer(sub)
    inside = [v for v in tab.vecs if dec.coefficients(v) is not None]
    return is_base(inside, sub)


def _lex_positive(tab: RootTable, functionals: Sequence[Vec]) -> FrozenSet[int]:
    out = set()
    for i, v in enumerate(tab.vecs):
        for f in functionals:
            x = linalg.dot(f, v)
            if x:
                if x > 0:
                    out.add(i)
                break
        else:
            raise ValueError("functionals are not generic on the roots")
    return frozenset(out)


def _generic_in(span_rows: Sequence[Vec], avoid: Sequence[Vec]) -> Vec:
    """Combination sum t^k rows[k] nonzero on every vector of ``avoid``."""
    dim = len(span_rows[0])
    t = 2
    while True:
        f = [Q(0)] * dim
        for k, row in enumerate(span_rows):
            f = [a + Q(t**k) * b for a, b in zip(f, row)]
        if all(linalg.dot(f, v) != 0 for v in avoid):
            return tuple(f)
        t += 1


def _ann(vectors: Sequence[Vec], dim: int) -> List[Vec]:
    """Functionals vanishing on every vector of ``vectors``."""
    cols = [tuple(v[i] for v in vectors) for i in range(dim)]
    return linalg.nullspace(cols)


def extend_to_base(system, subset: Iterable) -> Base:
    """A base containing ``subset`` (which must lie in some base)."""
    sub = [tuple(Q(x) for x in v) for v in subset]
    if not contains_in_base(system, sub):
        raise ValueError("subset is not contained in any base")
    tab = table(system)
    dim = tab.dim
    in_span = set()
    if sub:
        dec = linalg.Decomposer(sub)
        in_span = {i for i, v in enumerate(tab.vecs) if dec.coefficients(v) is not None}
    outside = [tab.vecs[i] for i in range(tab.n) if i not in in_span]
    functionals = []
    if outside:
        functionals.append(_generic_in(_ann(sub, dim), outside) if sub else _generic_functional(outside, dim))
    if sub:
        functionals.append(_ones_on(sub, dim))
        functionals.append(_generic_functional(tab.vecs, dim))
    pos = _lex_positive(tab, functionals) if tab.n else frozenset()
    base = Base.of(tab.vecs[i] for i in _indecomposable_indices(tab, pos))
    assert set(sub) <= set(base.elements)
    return base


def adapted_base(system, subspace: Iterable) -> Base:
    """A base whose elements inside ``span(subspace)`` generate every root there.

    Positive system of a functional vanishing on the subspace and on no root
    outside it, with ties broken by a generic secondary functional.
    """
    tab = table(system)
    dim = tab.dim
    w = [tuple(Q(x) for x in v) for v in subspace if not linalg.is_zero(v)]
    if w:
        red, _ = linalg.rref(w)
        w = [tuple(r) for r in red]
    in_w = set()
    if w:
        dec = linalg.Decomposer(w)
        in_w = {i for i, v in enumerate(tab.vecs) if dec.coefficients(v) is not None}
    outside = [tab.vecs[i] for i in range(tab.n) if i not in in_w]
    functionals = []
    if outside:
        functionals.append(_generic_in(_ann(w, dim), outside) if w else _generic_functional(outside, dim))
    functionals.append(_generic_functional(tab.vecs, dim))
    pos = _lex_positive(tab, functionals) if tab.n else frozenset()
    return Base.of(tab.vecs[i] for i in _indecomposable_indices(tab, pos))


def in_span(vectors: Sequence[Vec], v: Vec) -> bool:
    if not vectors:
        return linalg.is_zero(v)
    return linalg.rank(list(vectors) + [v]) == linalg.rank(vectors)


# -- Weyl group ------------------------------------------------------------


Perm = Tuple[int, ...]


def _string_reflection(tab: RootTable, a: int) -> Perm:
    """s_alpha(beta) = beta - (p - q) alpha from the alpha-string through beta in roots u {0}."""
    alpha = tab.vecs[a]
    index = tab.index
    zero = linalg.zero(tab.dim)

    def member(v):
        return v in index or v == zero

    images = []
    for b, beta in enumerate(tab.vecs):
        p = 0
        v = beta
        while True:
            v = linalg.sub(v, alpha)
            if not member(v):
                break
            p += 1
        q = 0
        v = beta
        while True:
            v = linalg.add(v, alpha)
            if not member(v):
                break
            q += 1
        img = linalg.sub(beta, linalg.scale(p - q, alpha))
        if img not in index:
            raise WeylGroupError(f"reflection in {alpha} sends {beta} outside the roots")
        images.append(index[img])
    perm = tuple(images)
    if sorted(perm) != list(range(tab.n)):
        raise WeylGroupError(f"reflection in {alpha} is not a permutation")
    return perm


def _check_linear(tab: RootTable, perm: Perm) -> None:
    basis_idx = []
    for i, v in enumerate(tab.vecs):
        if linalg.rank([tab.vecs[j] for j in basis_idx] + [v]) > len(basis_idx):
            basis_idx.append(i)
    dec = linalg.Decomposer([tab.vecs[i] for i in basis_idx])
    images = [tab.vecs[perm[i]] for i in basis_idx]
    for i, v in enumerate(tab.vecs):
        c = dec.coefficients(v)
        if linalg.lin_comb(c, images, tab.dim) != tab.vecs[perm[i]]:
            raise WeylGroupError("reflection is not linear on the root span")


@dataclass(frozen=True)
class WeylGroup:
    """Group generated by reflections in the even roots, as permutations of root indices."""

    vectors: Tuple[Vec, ...]
    generators: Tuple[Perm, ...]
    elements: Tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def act(self, w: Perm, v) -> Vec:
        idx = _table_for_tuple(self.vectors).index
        return self.vectors[w[idx[tuple(v)]]]

    def matrix(self, w: Perm) -> Tuple[Vec, ...]:
        """Matrix of ``w`` on the root span, in the coordinates of a basis of roots.

        Returns (basis, image rows) pairs flattened as rows of coefficients.
        """
        tab = _table_for_tuple(self.vectors)
        basis_idx = []
        for i, v in enumerate(tab.vecs):
            if linalg.rank([tab.vecs[j] for j in basis_idx] + [v]) > len(basis_idx):
                basis_idx.append(i)
        dec = linalg.Decomposer([tab.vecs[i] for i in basis_idx])
        cols = [dec.coefficients(tab.vecs[w[i]]) for i in basis_idx]
        return tuple(tuple(col[r] for col in cols) for r in range(len(basis_idx)))


def _close(generators: Sequence[Perm], n: int, limit: int) -> Tuple[Perm, ...]:
    ident = tuple(range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = tuple(s[g[i]] for i in range(n))
            if h not in seen:
                seen.add(h)
                if len(seen) > limit:
                    raise ValueError(f"group order exceeds {limit}")
                queue.append(h)
    return tuple(sorted(seen))


def weyl_group(system, limit: int = WEYL_ORDER_LIMIT) -> WeylGroup:
    """Closure of the reflections in the even roots, acting on all roots."""
    tab = table(system)
    even = getattr(system, "even", tab.vecs)
    gens = []
    seen = set()
    for v in even:
        a = tab.index[v]
        if tab.ray[a] in seen:
            continue
        seen.add(tab.ray[a])
        perm = _string_reflection(tab, a)
        _check_linear(tab, perm)
        if hasattr(system, "parity"):
            for i, j in enumerate(perm):
                if system.parity(tab.vecs[i]) != system.parity(tab.vecs[j]):
                    raise WeylGroupError("reflection does not preserve parity")
        gens.append(perm)
    gens = tuple(sorted(set(gens)))
    return WeylGroup(tab.vecs, gens, _close(gens, tab.n, limit))


def coordinate_symmetries(system) -> List[Perm]:
    """Coordinate permutations mapping the root set (with parities) to itself."""
    tab = table(system)
    out = []
    for sigma in itertools.permutations(range(tab.dim)):
        perm = []
        for v in tab.vecs:
            w = tuple(v[sigma[k]] for k in range(tab.dim))
            if w not in tab.index:
                break
            if hasattr(system, "parity") and system.parity(w) != system.parity(v):
                break
            perm.append(tab.index[w])
        else:
            out.append(tuple(perm))
    return out


def _canonical(vectors: Iterable[Vec]) -> Tuple[Vec, ...]:
    return tuple(sorted(vectors))


def _base_orbits(system, group: Sequence[Perm]) -> List[List[Base]]:
    tab = table(system)
    bases = enumerate_bases(system)
    pos = {b.key: k for k, b in enumerate(bases)}
    assigned = [False] * len(bases)
    orbits = []
    for k, b in enumerate(bases):
        if assigned[k]:
            continue
        idx = [tab.index[v] for v in b.elements]
        orbit = []
        for w in group:
            img = frozenset(tab.vecs[w[i]] for i in idx)
            j = pos[img]
            if not assigned[j]:
                assigned[j] = True
                orbit.append(bases[j])
        orbits.append(orbit)
    return orbits


@dataclass(frozen=True)
class BaseClasses:
    representatives: Tuple[Base, ...]
    orbit_sizes: Tuple[int, ...]
    group_order: int

    def __len__(self):
        return len(self.representatives)


def base_classes_up_to_W(system, coordinate_permutations: bool = False) -> BaseClasses:
    """Weyl orbits of bases with lexicographically minimal representatives.

    With ``coordinate_permutations`` the group is enlarged by the coordinate
    permutations preserving the roots (not Weyl equivalences in general).
    """
    W = weyl_group(system)
    gens = list(W.generators)
    group = W.elements
    if coordinate_permutations:
        gens += coordinate_symmetries(system)
        group = _close(gens, table(system).n, WEYL_ORDER_LIMIT)
    orbits = _base_orbits(system, group)
    reps = []
    for orbit in orbits:
        best = min(orbit, key=lambda b: _canonical(b.elements))
        reps.append((best, len(orbit)))
    reps.sort(key=lambda t: _canonical(t[0].elements))
    return BaseClasses(tuple(r for r, _ in reps), tuple(s for _, s in reps), len(group))


def same_class(system, a: Iterable, b: Iterable, group: Optional[Sequence[Perm]] = None) -> bool:
    tab = table(system)
    if group is None:
        group = weyl_group(system).elements
    ia = [tab.index[tuple(v)] for v in a]
    kb = frozenset(tuple(v) for v in b)
    return any(frozenset(tab.vecs[w[i]] for i in ia) == kb for w in group)
