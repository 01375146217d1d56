"""Finite cell complexes of dimension <= 2 and cellular maps.

A complex has vertices, oriented edges, and 2-cells attached along closed
edge words.  Maps send vertices to vertices and edges to edge words (so edge
images may subdivide); no face-level data is carried.  Everything is
immutable after construction and validated eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import ValidationError

Step = tuple[str, int]  # (edge id, +1 forward / -1 reversed)


@dataclass(frozen=True)
class EdgeWord:
    """A path: a start vertex and a sequence of signed edge traversals."""

    start: str
    steps: tuple[Step, ...] = ()

    def reversed(self, end: str) -> "EdgeWord":
        return EdgeWord(end, tuple((e, -s) for e, s in reversed(self.steps)))

    def to_json(self):
        return {"start": self.start, "steps": [{"edge": e, "sign": s} for e, s in self.steps]}

    @staticmethod
    def from_json(obj) -> "EdgeWord":
        return EdgeWord(obj["start"], tuple((s["edge"], int(s["sign"])) for s in obj["steps"]))


@dataclass(frozen=True)
class TwoComplex:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...] = ()  # (id, src, dst)
    faces: tuple[tuple[str, tuple[Step, ...]], ...] = ()  # (id, boundary word)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((e, s, d) for e, s, d in self.edges))
        object.__setattr__(
            self, "faces", tuple((f, tuple((e, int(s)) for e, s in b)) for f, b in self.faces)
        )
        vs = set()
        for v in self.vertices:
            if v in vs:
                raise ValidationError(f"duplicate vertex id {v!r}")
            vs.add(v)
        es = {}
        for e, s, d in self.edges:
            if e in es:
                raise ValidationError(f"duplicate edge id {e!r}")
            if s not in vs:
                raise ValidationError(f"edge {e!r} has unknown src {s!r}")
            if d not in vs:
                raise ValidationError(f"edge {e!r} has unknown dst {d!r}")
            es[e] = (s, d)
        fs = set()
        for f, boundary in self.faces:
            if f in fs:
                raise ValidationError(f"duplicate face id {f!r}")
            fs.add(f)
            if not boundary:
                raise ValidationError(f"face {f!r} has empty boundary")
            pts = []
            for e, sign in boundary:
                if e not in es:
                    raise ValidationError(f"face {f!r} uses unknown edge {e!r}")
                if sign not in (1, -1):
                    raise ValidationError(f"face {f!r} has sign {sign!r} on edge {e!r}")
                s, d = es[e]
                pts.append((s, d) if sign == 1 else (d, s))
            for (_, out), (into, _) in zip(pts, pts[1:] + pts[:1]):
                if out != into:
                    raise ValidationError(f"face {f!r} boundary does not chain")

    @cached_property
    def edge_ends(self) -> dict[str, tuple[str, str]]:
        return {e: (s, d) for e, s, d in self.edges}

    def src(self, e: str) -> str:
        return self.edge_ends[e][0]

    def dst(self, e: str) -> str:
        return self.edge_ends[e][1]

    def has_vertex(self, v: str) -> bool:
        return v in set(self.vertices)

    def word_end(self, w: EdgeWord) -> str:
        at = w.start
        for e, sign in w.steps:
            s, d = self.edge_ends[e]
            frm, to = (s, d) if sign == 1 else (d, s)
            if frm != at:
                raise ValidationError(f"word does not chain at edge {e!r}")
            at = to
        return at

    def validate_word(self, w: EdgeWord) -> str:
        if w.start not in set(self.vertices):
            raise ValidationError(f"word starts at unknown vertex {w.start!r}")
        return self.word_end(w)

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e, "src": s, "dst": d} for e, s, d in self.edges],
            "faces": [
                {"id": f, "boundary": [{"edge": e, "sign": s} for e, s in b]}
                for f, b in self.faces
            ],
        }

    @staticmethod
    def from_json(obj) -> "TwoComplex":
        return TwoComplex(
            tuple(obj["vertices"]),
            tuple((e["id"], e["src"], e["dst"]) for e in obj.get("edges", ())),
            tuple(
                (f["id"], tuple((s["edge"], int(s["sign"])) for s in f["boundary"]))
                for f in obj.get("faces", ())
            ),
        )


POINT = TwoComplex(("pt",))


def euler_characteristic(x: TwoComplex) -> int:
    return len(x.vertices) - len(x.edges) + len(x.faces)


@dataclass(frozen=True)
class CellMap:
    """Map of complexes: vertices to vertices, edges to edge words.

    Validated on construction: the image word of an edge must start at the
    image of its source and end at the image of its target.
    """

    source: TwoComplex
    target: TwoComplex
    vertex_map: dict[str, str]
    edge_map: dict[str, EdgeWord]

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.vertex_map:
                raise ValidationError(f"vertex_map misses {v!r}")
            if self.vertex_map[v] not in set(self.target.vertices):
                raise ValidationError(f"vertex_map sends {v!r} outside the target")
        for e, s, d in self.source.edges:
            w = self.edge_map.get(e)
            if w is None:
                raise ValidationError(f"edge_map misses {e!r}")
            if w.start != self.vertex_map[s]:
                raise ValidationError(f"edge_map({e!r}) starts at the wrong vertex")
            if self.target.validate_word(w) != self.vertex_map[d]:
                raise ValidationError(f"edge_map({e!r}) ends at the wrong vertex")

    def vertex(self, v: str) -> str:
        return self.vertex_map[v]

    def word(self, w: EdgeWord) -> EdgeWord:
        """Image of an edge word, respecting signs (reversal on -1)."""
        steps: list[Step] = []
        for e, sign in w.steps:
            img = self.edge_map[e]
            if sign == 1:
                steps.extend(img.steps)
            else:
                steps.extend((e2, -s2) for e2, s2 in reversed(img.steps))
        return EdgeWord(self.vertex_map[w.start], tuple(steps))

    def to_json(self):
        return {
            "vertex_map": dict(sorted(self.vertex_map.items())),
            "edge_map": {e: w.to_json() for e, w in sorted(self.edge_map.items())},
        }


def identity_map(x: TwoComplex) -> CellMap:
    return CellMap(
        x,
        x,
        {v: v for v in x.vertices},
        {e: EdgeWord(s, ((e, 1),)) for e, s, _ in x.edges},
    )


def compose_cell_maps(g: CellMap, f: CellMap) -> CellMap:
    """g after f; requires cod(f) = dom(g)."""
    if f.target is not g.source and f.target != g.source:
        raise ValidationError("composition mismatch: cod(f) != dom(g)")
    return CellMap(
        f.source,
        g.target,
        {v: g.vertex_map[w] for v, w in f.vertex_map.items()},
        {e: g.word(w) for e, w in f.edge_map.items()},
    )


def constant_map(x: TwoComplex, target: TwoComplex, at: str) -> CellMap:
    return CellMap(
        x,
        target,
        {v: at for v in x.vertices},
        {e: EdgeWord(at) for e, _, _ in x.edges},
    )


# ---------------------------------------------------------------------------
# Constructions


def disjoint_union(xs: list[TwoComplex]) -> tuple[TwoComplex, list[CellMap]]:
    """Tagged disjoint union with the summand inclusions."""
    vertices = []
    edges = []
    faces = []
    for k, x in enumerate(xs):
        vertices.extend(f"{k}:{v}" for v in x.vertices)
        edges.extend((f"{k}:{e}", f"{k}:{s}", f"{k}:{d}") for e, s, d in x.edges)
        faces.extend(
            (f"{k}:{f}", tuple((f"{k}:{e}", sign) for e, sign in b)) for f, b in x.faces
        )
    total = TwoComplex(tuple(vertices), tuple(edges), tuple(faces))
    injections = [
        CellMap(
            x,
            total,
            {v: f"{k}:{v}" for v in x.vertices},
            {e: EdgeWord(f"{k}:{s}", ((f"{k}:{e}", 1),)) for e, s, _ in x.edges},
        )
        for k, x in enumerate(xs)
    ]
    return total, injections


@dataclass(frozen=True)
class PushoutResult:
    complex: TwoComplex
    inl: CellMap  # A -> P
    inr: CellMap  # B -> P
    glue: dict[str, str]  # vertex of C -> glue edge id
    squares: dict[str, str]  # edge of C -> 2-cell id


def pushout(f: CellMap, g: CellMap) -> PushoutResult:
    """Double mapping cylinder of A <-f- C -g-> B.

    Cells: those of A and B; one glue edge per vertex v of C, oriented
    inl(f(v)) -> inr(g(v)); one square per edge e of C with boundary

        glue(src e)^-1 . f(e) . glue(dst e) . g(e)^-1 .

    Faces of C contribute nothing (their 3-cells are discarded), so the
    result only models the homotopy type up to dimension-2 invariants.
    """
    if f.source != g.source:
        raise ValidationError("pushout legs must share their source")
    c, a, b = f.source, f.target, g.target
    vertices = [f"l:{v}" for v in a.vertices] + [f"r:{v}" for v in b.vertices]
    edges = [(f"l:{e}", f"l:{s}", f"l:{d}") for e, s, d in a.edges]
    edges += [(f"r:{e}", f"r:{s}", f"r:{d}") for e, s, d in b.edges]
    faces = [(f"l:{fc}", tuple((f"l:{e}", s) for e, s in bd)) for fc, bd in a.faces]
    faces += [(f"r:{fc}", tuple((f"r:{e}", s) for e, s in bd)) for fc, bd in b.faces]
    glue = {}
    for v in c.vertices:
        gid = f"g:{v}"
        glue[v] = gid
        edges.append((gid, f"l:{f.vertex_map[v]}", f"r:{g.vertex_map[v]}"))
    squares = {}
    for e, s, d in c.edges:
        fid = f"q:{e}"
        squares[e] = fid
        boundary = [(glue[s], -1)]
        boundary += [(f"l:{e2}", s2) for e2, s2 in f.edge_map[e].steps]
        boundary.append((glue[d], 1))
        boundary += [(f"r:{e2}", -s2) for e2, s2 in reversed(g.edge_map[e].steps)]
        faces.append((fid, tuple(boundary)))
    total = TwoComplex(tuple(vertices), tuple(edges), tuple(faces))
    inl = CellMap(
        a,
        total,
        {v: f"l:{v}" for v in a.vertices},
        {e: EdgeWord(f"l:{s}", ((f"l:{e}", 1),)) for e, s, _ in a.edges},
    )
    inr = CellMap(
        b,
        total,
        {v: f"r:{v}" for v in b.vertices},
        {e: EdgeWord(f"r:{s}", ((f"r:{e}", 1),)) for e, s, _ in b.edges},
    )
    return PushoutResult(total, inl, inr, glue, squares)


# ---------------------------------------------------------------------------
# Invariants


@dataclass(frozen=True)
class Partition:
    """Partition of vertex ids; representatives are the least id of each class."""

    classes: tuple[tuple[str, ...], ...]
    representative: dict[str, str] = field(repr=False, default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.classes)

    def rep(self, v: str) -> str:
        return self.representative[v]

    def to_json(self):
        return [list(c) for c in self.classes]


def _union_find_partition(items, pairs) -> Partition:
    parent = {v: v for v in items}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
    classes: dict[str, list] = {}
    for v in items:
        classes.setdefault(find(v), []).append(v)
    out = []
    rep = {}
    for members in classes.values():
        members.sort()
        out.append(tuple(members))
        for v in members:
            rep[v] = members[0]
    out.sort()
    return Partition(tuple(out), rep)


def pi0(x: TwoComplex) -> Partition:
    """Path components: union-find closure over edge endpoints."""
    return _union_find_partition(x.vertices, ((s, d) for _, s, d in x.edges))


@dataclass(frozen=True)
class GroupPresentation:
    """Fundamental group presentation: free generators and relator words.

    Reported raw, without Tietze simplification; generator letters are
    non-tree edge ids of the base's component.
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[Step, ...], ...]
    base: str

    def abelianization(self):
        from . import intlinalg

        index = {g: k for k, g in enumerate(self.generators)}
        rel = []
        for word in self.relators:
            row = [0] * len(self.generators)
            for e, s in word:
                row[index[e]] += s
            rel.append(row)
        return intlinalg.quotient_presentation(rel, len(self.generators)).group

    def to_json(self):
        return {
            "base": self.base,
            "generators": list(self.generators),
            "relators": [[{"edge": e, "sign": s} for e, s in w] for w in self.relators],
        }


def _component_spanning_tree(x: TwoComplex, base: str):
    """Breadth-first spanning tree by sorted ids; returns (component, tree edges)."""
    incident: dict[str, list[tuple[str, str]]] = {v: [] for v in x.vertices}
    for e, s, d in x.edges:
        incident[s].append((e, d))
        if d != s:
            incident[d].append((e, s))
    for v in incident:
        incident[v].sort()
    seen = {base}
    tree: set[str] = set()
    frontier = [base]
    while frontier:
        next_frontier = []
        for v in sorted(frontier):
            for e, w in incident[v]:
                if w not in seen:
                    seen.add(w)
                    tree.add(e)
                    next_frontier.append(w)
        frontier = next_frontier
    return seen, tree


def pi1_presentation(x: TwoComplex, base: str) -> GroupPresentation:
    """Presentation of the fundamental group of the component of ``base``.

    Generators are the non-tree edges of a deterministic breadth-first
    spanning tree; relators are the face boundary words with tree edges
    deleted.
    """
    if base not in set(x.vertices):
        raise ValidationError(f"unknown base vertex {base!r}")
    component, tree = _component_spanning_tree(x, base)
    generators = tuple(
        e for e, s, d in x.edges if e not in tree and s in component
    )
    gen_set = set(generators)
    relators = []
    for _, boundary in sorted(x.faces):
        word_vertices = set()
        for e, _ in boundary:
            word_vertices.add(x.src(e))
        if not word_vertices & component:
            continue
        word = tuple((e, s) for e, s in boundary if e in gen_set)
        relators.append(word)
    return GroupPresentation(generators, tuple(relators), base)
