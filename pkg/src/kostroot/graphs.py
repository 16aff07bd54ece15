"""Labelled root graphs, fiber graphs and their projections.

An edge joins two vertices whose difference is plus or minus a label. Edges
are stored with the smaller vertex first, the label as given, and a sign so
that ``target - source == sign * label``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import bases as B
from . import linalg
from .kostant import KostantSystem, compose_projections, project
from .linalg import Vec
from .rootsys import RootSystem, format_vector


class GraphError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Edge:
    source: Vec
    target: Vec
    label: Vec
    sign: int


@dataclass(frozen=True)
class LabeledGraph:
    vertices: Tuple[Vec, ...]
    edges: Tuple[Edge, ...]
    labels: Tuple[Vec, ...] = ()
    coord_labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def neighbors(self) -> Dict[Vec, List[Vec]]:
        adj: Dict[Vec, List[Vec]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.source].append(e.target)
            adj[e.target].append(e.source)
        return adj

    def edge_set(self) -> set:
        return {(e.source, e.target) for e in self.edges}

    def name(self, v: Vec) -> str:
        if self.coord_labels and len(self.coord_labels) == len(v):
            return format_vector(v, self.coord_labels)
        return "(" + ", ".join(_num(x) for x in v) + ")"


def _num(x) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vecs(vs: Iterable) -> Tuple[Vec, ...]:
    return tuple(tuple(Q(x) for x in v) for v in vs)


def _build(vertices: Iterable, labels: Iterable, coord_labels=None) -> LabeledGraph:
    verts = tuple(sorted(set(_vecs(vertices))))
    labs = tuple(sorted(set(_vecs(labels))))
    present = set(verts)
    edges = set()
    for v in verts:
        for lab in labs:
            w = linalg.add(v, lab)
            if w in present:
                a, b, sign = (v, w, 1) if v < w else (w, v, -1)
                edges.add(Edge(a, b, lab, sign))
    return LabeledGraph(verts, tuple(sorted(edges)), labs, coord_labels)


def _coords_of(system) -> Optional[Tuple[str, ...]]:
    return getattr(system, "coord_labels", None)


def graph_of(system, base: Iterable) -> LabeledGraph:
    """Gamma_{R,S}: vertices R, an edge when the difference lies in +-S."""
    base = _vecs(base)
    if not B.is_base(system, base):
        raise GraphError("the label set is not a base of the root system")
    return _build(B.vectors_of(system), base, _coords_of(system))


def _centralizer_base(K: KostantSystem) -> Tuple[Vec, ...]:
    if K.collapsed is not None:
        return K.collapsed
    m = K.centralizer
    if not m:
        return ()
    return B.adapted_base(m, ()).elements


def fiber_graph(K: KostantSystem, tau) -> LabeledGraph:
    """Gamma^tau: the fiber of tau with edges labelled by +-I.

    For toral projections I is a base of the centralizer roots.
    """
    tau = tuple(Q(x) for x in tau)
    if linalg.is_zero(tau) or tau not in K:
        raise GraphError("tau must be a nonzero Kostant root")
    return _build(K.fiber(tau), _centralizer_base(K), K.source.coord_labels)


def fiber_graph_of(rs: RootSystem, base: Iterable, collapse: Iterable, tau) -> LabeledGraph:
    return fiber_graph(project(rs, collapse, base), tau)


def project_graph(graph: LabeledGraph, K: KostantSystem) -> LabeledGraph:
    """Image graph: projected vertices, projected edges with loops removed."""
    for v in graph.vertices:
        if linalg.is_zero(K.pi(v)):
            raise GraphError("a vertex lies in the collapsed span")
    verts = {K.pi(v) for v in graph.vertices}
    edges = {}
    labels = set()
    for e in graph.edges:
        a, b = K.pi(e.source), K.pi(e.target)
        if a == b:
            continue
        lab = K.pi(e.label)
        sign = e.sign
        if a > b:
            a, b, sign = b, a, -sign
        labels.add(lab)
        edges.setdefault((a, b), Edge(a, b, lab, sign))
    return LabeledGraph(tuple(sorted(verts)), tuple(sorted(edges.values())), tuple(sorted(labels)))


def components(graph: LabeledGraph) -> List[List[Vec]]:
    parent = {v: v for v in graph.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in graph.edges:
        ra, rb = find(e.source), find(e.target)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[Vec, List[Vec]] = {}
    for v in graph.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_connected(graph: LabeledGraph) -> bool:
    return len(components(graph)) <= 1


# -- Lemma-style comparison of projected and quotient fiber graphs ----------


@dataclass(frozen=True)
class EdgeLiftingReport:
    nu: Vec
    vertices_equal: bool
    edges_included: bool
    edges_equal: bool
    unlifted: Tuple[Tuple[Vec, Vec], ...]
    extra: Tuple[Tuple[Vec, Vec], ...]

    @property
    def ok(self) -> bool:
        return self.vertices_equal and self.edges_included


def edge_lifting_report(rs: RootSystem, base: Iterable, I: Iterable, J: Iterable, nu) -> EdgeLiftingReport:
    """Compare pi_I(Gamma^nu over J) with the fiber graph of nu in Delta/<I>.

    ``unlifted`` lists quotient edges with no preimage edge; ``extra`` lists
    projected edges missing from the quotient graph (these would break the
    inclusion).
    """
    comp = compose_projections(rs, I, J, base)
    KI, KJ = comp.inner, comp.outer
    nu = tuple(Q(x) for x in nu)
    upstairs = fiber_graph(KJ, nu)
    projected = project_graph(upstairs, KI)
    quotient_vertices = [rho for rho in KI.vectors if comp.apply(rho) == nu]
    labels = [KI.pi(a) for a in KJ.collapsed]
    labels = [v for v in labels if not linalg.is_zero(v)]
    quotient = _build(quotient_vertices, labels)
    pe, qe = projected.edge_set(), quotient.edge_set()
    return EdgeLiftingReport(
        nu,
        set(projected.vertices) == set(quotient.vertices),
        pe <= qe,
        pe == qe,
        tuple(sorted(qe - pe)),
        tuple(sorted(pe - qe)),
    )


# -- export ----------------------------------------------------------------


def to_dot(graph: LabeledGraph, name: str = "G") -> str:
    index = {v: i for i, v in enumerate(graph.vertices)}
    lines = [f"graph {json.dumps(name)} {{"]
    for v, i in index.items():
        lines.append(f"  n{i} [label={json.dumps(graph.name(v))}];")
    for e in graph.edges:
        lines.append(
            f"  n{index[e.source]} -- n{index[e.target]} [label={json.dumps(graph.name(e.label))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(graph: LabeledGraph) -> dict:
    index = {v: i for i, v in enumerate(graph.vertices)}
    return {
        "vertices": [[linalg.fmt(x) for x in v] for v in graph.vertices],
        "edges": [
            {
                "source": index[e.source],
                "target": index[e.target],
                "label": [linalg.fmt(x) for x in e.label],
                "sign": e.sign,
            }
            for e in graph.edges
        ],
        "connected": is_connected(graph),
    }


def to_json(graph: LabeledGraph) -> str:
    return json.dumps(to_dict(graph), indent=2, sort_keys=True)
