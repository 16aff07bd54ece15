"""Kostant root systems: images of a root system under a linear projection.

Two ways to build one:

* :func:`project` collapses a set ``I`` contained in a base, so that
  ``ker pi`` meets the roots exactly in ``span(I)``;
* :func:`project_by_toral` evaluates roots on explicit diagonal elements of
  the matrix model (the setting of the two counterexamples), with no
  hypothesis on the centralizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import bases as B
from . import linalg
from .linalg import Vec
from .rootsys import EVEN, ODD, RootSystem, format_vector


class ProjectionError(ValueError):
    """The collapsing set or toral data is not admissible."""


class NotABaseError(ValueError):
    """pi(Sigma) minus zero is not a base of R; ``witness`` says why."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class KostantRoot:
    vector: Vec
    parities: FrozenSet[str]


@dataclass(eq=False)
class KostantSystem:
    """R = pi(Delta) minus 0 together with its fibers.

    ``matrix`` has one row per quotient coordinate. ``section`` (when present)
    lists, per quotient coordinate, an ambient vector mapping to the matching
    unit vector; it is used to factor one projection through another.
    """

    source: RootSystem
    matrix: Tuple[Vec, ...]
    collapsed: Optional[Tuple[Vec, ...]] = None
    section: Optional[Tuple[Vec, ...]] = None
    base: Optional[Tuple[Vec, ...]] = None
    supertrace_quotient: bool = False
    images: Dict[Vec, Vec] = field(default_factory=dict)

    def __post_init__(self):
        if not self.images:
            self.images = {v: linalg.apply(self.matrix, v) for v in self.source.vectors}

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def pi(self, v) -> Vec:
        v = tuple(Q(x) for x in v)
        img = self.images.get(v)
        return img if img is not None else linalg.apply(self.matrix, v)

    @cached_property
    def fibers(self) -> Dict[Vec, Tuple[Vec, ...]]:
        """Image -> preimage roots; the zero image holds the centralizer roots."""
        groups: Dict[Vec, list] = {}
        for v in self.source.vectors:
            groups.setdefault(self.images[v], []).append(v)
        return {k: tuple(g) for k, g in sorted(groups.items())}

    @cached_property
    def vectors(self) -> Tuple[Vec, ...]:
        zero = linalg.zero(self.dim)
        return tuple(k for k in self.fibers if k != zero)

    @property
    def R(self) -> Tuple[Vec, ...]:
        return self.vectors

    @cached_property
    def centralizer(self) -> Tuple[Vec, ...]:
        return self.fibers.get(linalg.zero(self.dim), ())

    def fiber(self, nu) -> Tuple[Vec, ...]:
        nu = tuple(Q(x) for x in nu)
        if linalg.is_zero(nu) or nu not in self.fibers:
            raise KeyError(f"{nu} is not a Kostant root")
        return self.fibers[nu]

    def parities(self, nu) -> FrozenSet[str]:
        return frozenset(self.source.parity(a) for a in self.fiber(nu))

    def kostant_roots(self) -> List[KostantRoot]:
        return [KostantRoot(nu, self.parities(nu)) for nu in self.vectors]

    @cached_property
    def even(self) -> Tuple[Vec, ...]:
        """pi(Delta_0) minus 0."""
        zero = linalg.zero(self.dim)
        return tuple(sorted({self.images[v] for v in self.source.even} - {zero}))

    @cached_property
    def odd(self) -> Tuple[Vec, ...]:
        """pi(Delta_1) (the zero image included if an odd root is collapsed)."""
        return tuple(sorted({self.images[v] for v in self.source.odd}))

    def __contains__(self, nu) -> bool:
        nu = tuple(Q(x) for x in nu)
        return nu in self.fibers and not linalg.is_zero(nu)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def format(self, nu) -> str:
        labels = [f"x{i + 1}" for i in range(self.dim)]
        return format_vector(tuple(nu), labels)


# -- construction ----------------------------------------------------------


def _as_vecs(vectors: Iterable) -> Tuple[Vec, ...]:
    return tuple(tuple(Q(x) for x in v) for v in vectors)


@lru_cache(maxsize=4096)
def _adapted_frame(ambient: int, front: Tuple[Vec, ...]) -> Tuple[Tuple[Vec, ...], Tuple[Vec, ...]]:
    """(basis, dual rows) for ``front`` extended by standard vectors."""
    basis = tuple(linalg.extend_to_basis(list(front), ambient))
    return basis, linalg.dual_rows(basis)


def project(rs: RootSystem, collapse: Iterable, base: Optional[Iterable] = None) -> KostantSystem:
    """Kostant system Delta/<I> for ``I = collapse``.

    Quotient coordinates are the dual coordinates of a basis starting with
    ``I``; with ``base`` given, the basis is I, then the rest of the base, then
    standard vectors, so roots get integer coordinates.
    """
    I = _as_vecs(collapse)
    for v in I:
        if v not in rs:
            raise ProjectionError(f"{format_vector(v, rs.coord_labels)} is not a root of {rs.name}")
    if base is not None:
        S = _as_vecs(base)
        if not set(I) <= set(S):
            raise ProjectionError("the collapsed set must be a subset of the given base")
        if not B.is_base(rs, S):
            raise ProjectionError("the given set is not a base")
        rest = tuple(v for v in S if v not in I)
    else:
        if not B.contains_in_base(rs, I):
            raise ProjectionError(
                "the collapsed set is not contained in any base; "
                "Kostant systems Delta/<I> are only formed for such I"
            )
        S = None
        rest = ()
    basis, rows = _adapted_frame(rs.ambient_dim, I + rest)
    k = len(I)
    matrix = tuple(rows[k:])
    section = tuple(basis[k:])
    return KostantSystem(rs, matrix, collapsed=I, section=section, base=S)


_TORAL_FAMILIES = ("sl", "gl", "osp")


def project_by_toral(rs: RootSystem, elements: Sequence[Sequence], supertrace_quotient: bool = False) -> KostantSystem:
    """Restriction of roots to the span of diagonal Cartan elements.

    Each element is given by its coordinates in the diagonal model (one entry
    per ambient coordinate); pi(alpha) = (alpha(t_1), ..., alpha(t_k)).
    For sl-type models the elements must have (super)trace zero.
    """
    fam = rs.spec.family
    lie_a = rs.spec.is_lie and fam == "A"
    if fam not in _TORAL_FAMILIES and not lie_a:
        raise ProjectionError(f"toral projections are modelled for sl, gl, osp and type A, not {rs.name}")
    t = _as_vecs(elements)
    for h in t:
        if len(h) != rs.ambient_dim:
            raise ProjectionError(f"toral element {h} has {len(h)} entries, expected {rs.ambient_dim}")
        if (fam == "sl" or lie_a or supertrace_quotient) and supertrace(rs, h) != 0:
            raise ProjectionError(f"toral element {h} is not in the Cartan subalgebra (nonzero supertrace)")
    if t and linalg.rank(t) != len(t):
        raise ProjectionError("toral elements are linearly dependent")
    return KostantSystem(rs, t, supertrace_quotient=supertrace_quotient)


def supertrace_vector(rs: RootSystem) -> Vec:
    """The functional sum(eps) - sum(delta) in the diagonal coordinates."""
    m = rs.spec.params[0] if rs.spec.family in ("sl", "gl") else rs.ambient_dim
    return tuple(Q(1) if i < m else Q(-1) for i in range(rs.ambient_dim))


def supertrace(rs: RootSystem, h: Vec) -> Q:
    return linalg.dot(supertrace_vector(rs), h)


@dataclass(frozen=True)
class CenterCheck:
    """Compares the annihilator of t inside h* with the span of the centralizer roots."""

    kernel_dim: int
    centralizer_rank: int

    @property
    def holds(self) -> bool:
        return self.kernel_dim == self.centralizer_rank


def center_check(K: KostantSystem) -> CenterCheck:
    """Weight-level test of t = z(m): ann(t) in h* equals <Delta_m>.

    h* is the full coordinate space when the roots plus the center fill it,
    otherwise the span of the roots. In the supertrace quotient h* is the
    span of the roots modulo the supertrace functional.
    """
    rs = K.source
    roots = list(rs.vectors)
    ambient = rs.ambient_dim
    if rs.dim_h == ambient and not K.supertrace_quotient:
        space = [linalg.unit(ambient, i) for i in range(ambient)]
    else:
        red, _ = linalg.rref(roots)
        space = [tuple(r) for r in red]
    # kernel of pi restricted to the span of ``space``
    cols = [linalg.apply(K.matrix, v) for v in space] if K.matrix else [() for _ in space]
    if K.matrix:
        null = linalg.nullspace(cols)
    else:
        null = [linalg.unit(len(space), i) for i in range(len(space))]
    kernel = [linalg.lin_comb(c, space, ambient) for c in null]
    m_span = list(K.centralizer)
    if K.supertrace_quotient:
        s = supertrace_vector(rs)
        kdim = linalg.rank(kernel + [s]) - 1 if kernel else 0
        mdim = linalg.rank(m_span + [s]) - 1
        return CenterCheck(kdim, mdim)
    return CenterCheck(linalg.rank(kernel) if kernel else 0, linalg.rank(m_span) if m_span else 0)


# -- bases of R ------------------------------------------------------------


def contains_centralizer_base(K: KostantSystem, sigma: Iterable) -> bool:
    """Whether the base ``sigma`` contains a base of the centralizer roots.

    Any such sub-base must equal sigma n span(Delta_m), so one test suffices.
    """
    sigma = _as_vecs(sigma)
    m = set(K.centralizer)
    return B.is_base(tuple(sorted(m)), [v for v in sigma if v in m]) if m else True


def base_of_R(K: KostantSystem, sigma: Iterable) -> B.Base:
    """pi(sigma) minus 0 as a base of R, or :class:`NotABaseError` with a witness.

    Coincident images are kept (they make the family dependent) rather than
    merged.
    """
    sigma = _as_vecs(sigma)
    images = [K.pi(v) for v in sigma]
    images = [v for v in images if not linalg.is_zero(v)]
    if len(set(images)) != len(images):
        dup = next(v for v in images if images.count(v) > 1)
        raise NotABaseError("two base elements have the same image", {"repeated": dup})
    if any(v not in K for v in images):
        raise NotABaseError("an image is not a Kostant root", {"images": images})
    if images and not linalg.independent(images):
        null = linalg.nullspace(images)[0]
        raise NotABaseError("images are linearly dependent", {"relation": null, "images": images})
    if not images and K.vectors:
        raise NotABaseError("no nonzero images", {})
    if images:
        dec = linalg.Decomposer(images)
        for nu in K.vectors:
            c = dec.coefficients(nu)
            if c is None:
                raise NotABaseError("a Kostant root is outside the span of the images", {"root": nu})
            if any(x.denominator != 1 for x in c) or (any(x > 0 for x in c) and any(x < 0 for x in c)):
                raise NotABaseError("a Kostant root is not a one-signed integral combination", {"root": nu, "coefficients": c})
    return B.Base.of(images)


def enumerate_bases_of_R(K: KostantSystem, source_bases: Optional[Sequence[B.Base]] = None) -> List[B.Base]:
    """{pi(Sigma) minus 0 : Sigma a base of Delta containing the collapsed set}."""
    if K.collapsed is None:
        raise ProjectionError("base lifting needs a Kostant system built from a collapsed set")
    I = set(K.collapsed)
    if source_bases is None:
        source_bases = B.enumerate_bases(K.source)
    out = {}
    for sigma in source_bases:
        if I <= set(sigma.elements):
            b = base_of_R(K, sigma.elements)
            out[b.key] = b
    return sorted(out.values(), key=lambda b: b.elements)


@dataclass(frozen=True)
class Composition:
    """pi_J = pi_IJ o pi_I, checked on every root."""

    outer: KostantSystem
    inner: KostantSystem
    matrix: Tuple[Vec, ...]

    def apply(self, nu) -> Vec:
        return linalg.apply(self.matrix, nu)


def compose_projections(rs: RootSystem, I: Iterable, J: Iterable, base: Optional[Iterable] = None) -> Composition:
    I = _as_vecs(I)
    J = _as_vecs(J)
    if not set(I) <= set(J):
        raise ProjectionError("the inner collapsed set must be contained in the outer one")
    if base is None:
        base = B.extend_to_base(rs, J).elements
    KI = project(rs, I, base)
    KJ = project(rs, J, base)
    # pi_IJ = P_J . Q_I where Q_I has the section vectors as columns
    cols = KI.section
    matrix = tuple(tuple(linalg.dot(row, c) for c in cols) for row in KJ.matrix)
    for v in rs.vectors:
        if linalg.apply(matrix, KI.images[v]) != KJ.images[v]:
            raise AssertionError(f"projections do not commute on {format_vector(v, rs.coord_labels)}")
    return Composition(outer=KJ, inner=KI, matrix=matrix)


# -- root-level helpers ----------------------------------------------------


def is_primitive(K: KostantSystem, nu) -> bool:
    nu = tuple(Q(x) for x in nu)
    if nu not in K:
        raise KeyError(f"{nu} is not a Kostant root")
    for rho in K.vectors:
        c = linalg.multiple_of(nu, rho)
        if c is not None and c.denominator == 1 and c >= 2:
            return False
    return True


def root_string(K, mu, nu, include_zero: bool = False) -> List[int]:
    """Sorted integers j with mu + j*nu in R (or in R u {0})."""
    vecs = K.vectors if hasattr(K, "vectors") else tuple(K)
    mu = tuple(Q(x) for x in mu)
    nu = tuple(Q(x) for x in nu)
    targets = list(vecs)
    if include_zero:
        targets.append(linalg.zero(len(mu)))
    out = set()
    for rho in targets:
        c = linalg.multiple_of(linalg.sub(rho, mu), nu) if not linalg.is_zero(nu) else None
        if c is not None and c.denominator == 1:
            out.add(int(c))
    return sorted(out)


class ChainError(RuntimeError):
    pass


def chain_to_zero(system, base: Iterable, gamma) -> List[Vec]:
    """gamma = g_1, ..., g_N, 0 with every g_i positive and g_i - g_(i+1) in the base."""
    base = _as_vecs(base)
    gamma = tuple(Q(x) for x in gamma)
    pos = B.positive_cone(system, base)
    if gamma not in pos:
        raise ChainError("gamma is not positive with respect to the base")
    zero = linalg.zero(len(gamma))
    memo: Dict[Vec, Optional[List[Vec]]] = {}

    def walk(g):
        if g == zero:
            return [zero]
        if g in memo:
            return memo[g]
        memo[g] = None
        for a in base:
            h = linalg.sub(g, a)
            if h == zero or h in pos:
                tail = walk(h)
                if tail is not None:
                    memo[g] = [g] + tail
                    break
        return memo[g]

    chain = walk(gamma)
    if chain is None:
        raise ChainError(f"no chain from {gamma} to zero")
    return chain


def sub_system_divisible(rs: RootSystem, base: Iterable, alpha, s: int) -> RootSystem:
    """Roots whose alpha-coefficient in the base decomposition is divisible by s."""
    from .rootsys import subsystem

    base = _as_vecs(base)
    alpha = tuple(Q(x) for x in alpha)
    if alpha not in base:
        raise ValueError("alpha must be an element of the base")
    if s < 1:
        raise ValueError("s must be a positive integer")
    k = base.index(alpha)
    dec = linalg.Decomposer(base)
    keep = [v for v in rs.vectors if dec.coefficients(v)[k] % s == 0]
    sub = subsystem(rs, keep, f"{rs.name}[{format_vector(alpha, rs.coord_labels)},{s}]")
    if sub.vectors and not B.is_base(sub, B.adapted_base(sub, ()).elements):
        raise AssertionError("divisibility subsystem admits no base")
    return sub
