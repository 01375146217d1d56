"""Finite directed multigraphs, walks, tree recognition, realization.

A graph is a shape for diagrams: vertex ids plus identified edges i -> j.
Loops and parallel edges are permitted.  The realization of a graph is the
1-complex with one vertex per graph vertex and one oriented edge per graph
edge; a graph is a tree when that realization is contractible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .complexes import EdgeWord, TwoComplex
from .errors import CertificateError, ValidationError


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...] = ()  # (id, src, dst)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((e, s, d) for e, s, d in self.edges))
        vs = set()
        for v in self.vertices:
            if v in vs:
                raise ValidationError(f"duplicate vertex id {v!r}")
            vs.add(v)
        es = set()
        for e, s, d in self.edges:
            if e in es:
                raise ValidationError(f"duplicate edge id {e!r}")
            es.add(e)
            if s not in vs:
                raise ValidationError(f"edge {e!r} has unknown src {s!r}")
            if d not in vs:
                raise ValidationError(f"edge {e!r} has unknown dst {d!r}")

    @cached_property
    def edge_ends(self) -> dict[str, tuple[str, str]]:
        return {e: (s, d) for e, s, d in self.edges}

    def src(self, e: str) -> str:
        return self.edge_ends[e][0]

    def dst(self, e: str) -> str:
        return self.edge_ends[e][1]

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e, "src": s, "dst": d} for e, s, d in self.edges],
        }

    @staticmethod
    def from_json(obj) -> "Graph":
        return Graph(
            tuple(obj["vertices"]),
            tuple((e["id"], e["src"], e["dst"]) for e in obj.get("edges", ())),
        )


SPAN = Graph(("l", "m", "r"), (("a", "m", "l"), ("b", "m", "r")))
LOOP = Graph(("v",), (("e", "v", "v"),))


@dataclass(frozen=True)
class Walk:
    """Directed walk: a start vertex and consecutive edge ids."""

    start: str
    steps: tuple[str, ...] = ()

    def to_json(self):
        return {"start": self.start, "steps": list(self.steps)}


def walk_end(g: Graph, w: Walk) -> str:
    """End vertex of a walk; validates that consecutive steps chain."""
    if w.start not in set(g.vertices):
        raise ValidationError(f"walk starts at unknown vertex {w.start!r}")
    at = w.start
    for e in w.steps:
        if e not in g.edge_ends:
            raise ValidationError(f"walk uses unknown edge {e!r}")
        s, d = g.edge_ends[e]
        if s != at:
            raise ValidationError(f"walk does not chain at edge {e!r}")
        at = d
    return at


def realize(g: Graph) -> TwoComplex:
    """Geometric realization: one vertex per graph vertex, one edge per
    graph edge (oriented src -> dst), no 2-cells."""
    return TwoComplex(g.vertices, g.edges, ())


def is_tree(g: Graph) -> bool:
    """Whether the realization is contractible: the underlying undirected
    multigraph is connected and acyclic (no self-loops, no repeated joins)."""
    if not g.vertices:
        return False
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for _, s, d in g.edges:
        rs, rd = find(s), find(d)
        if rs == rd:
            return False
        parent[rs] = rd
    roots = {find(v) for v in g.vertices}
    return len(roots) == 1


def enumerate_walks(g: Graph, i: str, j: str, max_len: int) -> list[Walk]:
    """All walks i -> j with at most ``max_len`` steps, in lexicographic
    order of their edge-id sequences."""
    if i not in set(g.vertices):
        raise ValidationError(f"unknown vertex {i!r}")
    if j not in set(g.vertices):
        raise ValidationError(f"unknown vertex {j!r}")
    if max_len < 0:
        raise ValidationError("max_len must be >= 0")
    outgoing: dict[str, list[tuple[str, str]]] = {v: [] for v in g.vertices}
    for e, s, d in g.edges:
        outgoing[s].append((e, d))
    for v in outgoing:
        outgoing[v].sort()
    out: list[Walk] = []

    def search(at: str, prefix: list[str]):
        if at == j:
            out.append(Walk(i, tuple(prefix)))
        if len(prefix) == max_len:
            return
        for e, nxt in outgoing[at]:
            prefix.append(e)
            search(nxt, prefix)
            prefix.pop()

    search(i, [])
    return out


def verify_combinatorial_tree(g: Graph, root: str, nu: dict[str, Walk]) -> bool:
    """Check a combinatorial-tree certificate: canonical walks nu(i) to the
    root satisfying nu(i) = cons(e, nu(j)) for every edge e: i -> j."""
    if root not in set(g.vertices):
        raise CertificateError(f"unknown root {root!r}")
    for v in g.vertices:
        if v not in nu:
            raise CertificateError(f"nu misses vertex {v!r}")
        w = nu[v]
        if w.start != v:
            raise CertificateError(f"nu({v!r}) does not start at {v!r}")
        if walk_end(g, w) != root:
            raise CertificateError(f"nu({v!r}) does not end at the root")
    for e, s, d in g.edges:
        if nu[s] != Walk(s, (e,) + nu[d].steps):
            return False
    return True


def walk_to_path(g: Graph, w: Walk) -> EdgeWord:
    """Image of a walk in the realization: the forward edge word along it."""
    walk_end(g, w)
    return EdgeWord(w.start, tuple((e, 1) for e in w.steps))
