"""Coslice colimits at the complex level.

Two constructions of the colimit of a diagram of complexes under a base
complex A, together with the comparison map between them, the wedge-sum
coproduct, augmented diagrams, the action on diagram morphisms, and the
tree-creation and connectivity checks.

Construction 1 pushes the underlying colimit out against the folded constant
colimit, filling the distinguished loops traced by basepoint images.
Construction 2 assembles the same object from a span of wedge sums indexed
by the shape's edges and vertices.  Equality of the two is certified through
computable invariants (component count, Euler count, degree-1 homology, and
unimodularity of the induced comparison), never through a claimed homotopy
equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import homology
from .complexes import (
    CellMap,
    EdgeWord,
    Partition,
    TwoComplex,
    compose_cell_maps,
    disjoint_union,
    euler_characteristic,
    pi0,
    pushout,
    PushoutResult,
)
from .errors import PreconditionError, ValidationError
from .graphs import Graph, is_tree
from .setmodel import CosliceSetDiagram, FinFun, FinSet, coslice_colim_set


@dataclass(frozen=True)
class CosliceComplex:
    """A complex under the base: total space plus the structure map."""

    base: TwoComplex
    total: TwoComplex
    basept: CellMap

    def __post_init__(self):
        if self.basept.source != self.base or self.basept.target != self.total:
            raise ValidationError("basept must map the base into the total complex")


@dataclass(frozen=True)
class ADiagramCx:
    """A shape-indexed family of complexes under a shared base.

    ``pointedness[e][a]`` is an edge word in the target object from
    arrow_e(basept_i(a)) to basept_j(a), for each edge e : i -> j and each
    vertex a of the base; these witnesses are exactly what the colimit
    constructions consume.
    """

    shape: Graph
    base: TwoComplex
    objects: dict[str, CosliceComplex]
    arrows: dict[str, CellMap]
    pointedness: dict[str, dict[str, EdgeWord]]

    def __post_init__(self):
        for i in self.shape.vertices:
            obj = self.objects.get(i)
            if obj is None:
                raise ValidationError(f"diagram misses object at {i!r}")
            if obj.base != self.base:
                raise ValidationError(f"object at {i!r} has a different base")
        for e, i, j in self.shape.edges:
            arrow = self.arrows.get(e)
            if arrow is None:
                raise ValidationError(f"diagram misses arrow at {e!r}")
            fi, fj = self.objects[i], self.objects[j]
            if arrow.source != fi.total or arrow.target != fj.total:
                raise ValidationError(f"arrow {e!r} endpoints do not match its objects")
            words = self.pointedness.get(e)
            if words is None:
                raise ValidationError(f"diagram misses pointedness words at {e!r}")
            for a in self.base.vertices:
                w = words.get(a)
                if w is None:
                    raise ValidationError(f"edge {e!r} misses a pointedness word at {a!r}")
                start = arrow.vertex_map[fi.basept.vertex_map[a]]
                end = fj.basept.vertex_map[a]
                if w.start != start or fj.total.validate_word(w) != end:
                    raise ValidationError(
                        f"pointedness word at edge {e!r}, base vertex {a!r} has wrong endpoints"
                    )

    def basepoint(self, i: str) -> CellMap:
        return self.objects[i].basept


# ---------------------------------------------------------------------------
# The plain (underlying) colimit of complexes


@dataclass(frozen=True)
class ColimitComplex:
    """Mapping-telescope model of the colimit of a diagram of complexes."""

    total: TwoComplex
    iotas: dict[str, CellMap]
    kappa: dict[tuple[str, str], str]  # (shape edge, source-object vertex) -> edge id


def _obj_cell(i: str, c: str) -> str:
    return f"o:{i}:{c}"


def colim_cx(shape: Graph, objects: dict[str, TwoComplex], arrows: dict[str, CellMap]) -> ColimitComplex:
    """Colimit of a plain diagram of complexes.

    Cells: all object cells, one extra edge per (shape edge e : i -> j,
    vertex x of the source object) oriented iota_j(F_e x) -> iota_i(x), and
    one naturality square per (e, edge of the source object).
    """
    for e, i, j in shape.edges:
        arrow = arrows.get(e)
        if arrow is None:
            raise ValidationError(f"diagram misses arrow at {e!r}")
        if arrow.source != objects[i] or arrow.target != objects[j]:
            raise ValidationError(f"arrow {e!r} endpoints do not match its objects")
    vertices = []
    edges = []
    faces = []
    for i in shape.vertices:
        x = objects[i]
        vertices.extend(_obj_cell(i, v) for v in x.vertices)
        edges.extend(
            (_obj_cell(i, e2), _obj_cell(i, s), _obj_cell(i, d)) for e2, s, d in x.edges
        )
        faces.extend(
            (_obj_cell(i, f), tuple((_obj_cell(i, e2), sg) for e2, sg in b))
            for f, b in x.faces
        )
    kappa = {}
    for e, i, j in shape.edges:
        arrow = arrows[e]
        for x in objects[i].vertices:
            eid = f"k:{e}:{x}"
            kappa[(e, x)] = eid
            edges.append((eid, _obj_cell(j, arrow.vertex_map[x]), _obj_cell(i, x)))
    for e, i, j in shape.edges:
        arrow = arrows[e]
        for y, s, d in objects[i].edges:
            boundary = [(_obj_cell(j, e2), sg) for e2, sg in arrow.edge_map[y].steps]
            boundary.append((kappa[(e, d)], 1))
            boundary.append((_obj_cell(i, y), -1))
            boundary.append((kappa[(e, s)], -1))
            faces.append((f"q:{e}:{y}", tuple(boundary)))
    total = TwoComplex(tuple(vertices), tuple(edges), tuple(faces))
    iotas = {
        i: CellMap(
            objects[i],
            total,
            {v: _obj_cell(i, v) for v in objects[i].vertices},
            {
                e2: EdgeWord(_obj_cell(i, s), ((_obj_cell(i, e2), 1),))
                for e2, s, _ in objects[i].edges
            },
        )
        for i in shape.vertices
    }
    return ColimitComplex(total, iotas, kappa)


def constant_diagram(shape: Graph, a: TwoComplex):
    from .complexes import identity_map

    objects = {i: a for i in shape.vertices}
    arrows = {e: identity_map(a) for e, _, _ in shape.edges}
    return objects, arrows


def fold_map(shape: Graph, a: TwoComplex) -> tuple[ColimitComplex, CellMap]:
    """The constant-diagram colimit together with its fold onto the base:
    every copy of a base cell goes to itself and every connecting edge
    collapses.  An equivalence precisely when the shape is a tree."""
    objects, arrows = constant_diagram(shape, a)
    colim = colim_cx(shape, objects, arrows)
    vertex_map = {}
    edge_map = {}
    for i in shape.vertices:
        for v in a.vertices:
            vertex_map[_obj_cell(i, v)] = v
        for e2, s, _ in a.edges:
            edge_map[_obj_cell(i, e2)] = EdgeWord(s, ((e2, 1),))
    for (e, x), eid in colim.kappa.items():
        edge_map[eid] = EdgeWord(x)
    fold = CellMap(colim.total, a, vertex_map, edge_map)
    return colim, fold


def build_psi(d: ADiagramCx) -> tuple[ColimitComplex, ColimitComplex, CellMap]:
    """The canonical map from the constant-base colimit into the underlying
    colimit of the diagram: on the copy of the base at index i it is the
    basepoint map, and each connecting edge goes to the inverse of the
    pointedness word followed by the connecting edge of the target."""
    colim_a, _ = fold_map(d.shape, d.base)
    objects = {i: d.objects[i].total for i in d.shape.vertices}
    colim_f = colim_cx(d.shape, objects, d.arrows)
    vertex_map = {}
    edge_map = {}
    for i in d.shape.vertices:
        b = d.objects[i].basept
        iota = colim_f.iotas[i]
        for a in d.base.vertices:
            vertex_map[_obj_cell(i, a)] = _obj_cell(i, b.vertex_map[a])
        for e2, _, _ in d.base.edges:
            edge_map[_obj_cell(i, e2)] = iota.word(b.edge_map[e2])
    for e, i, j in d.shape.edges:
        b_i = d.objects[i].basept
        iota_j = colim_f.iotas[j]
        for a in d.base.vertices:
            word = d.pointedness[e][a]
            img = iota_j.word(word)
            end = colim_f.total.validate_word(img)
            steps = tuple((e2, -sg) for e2, sg in reversed(img.steps))
            steps += ((colim_f.kappa[(e, b_i.vertex_map[a])], 1),)
            edge_map[f"k:{e}:{a}"] = EdgeWord(end, steps)
    psi = CellMap(colim_a.total, colim_f.total, vertex_map, edge_map)
    return colim_a, colim_f, psi


# ---------------------------------------------------------------------------
# Construction 1


@dataclass(frozen=True)
class CoconeDataCx:
    """Cocone carried by a constructed coslice colimit.

    ``leg_pointedness[(i, a)]`` runs from leg_i(basept_i(a)) to the tip's
    basepoint at a; ``commuting[(e, x)]`` witnesses leg_j(F_e x) -> leg_i(x);
    ``squares[(e, a)]`` names the 2-cell of the tip realizing the coherence
    of those witnesses over the base vertex a.
    """

    tip: CosliceComplex
    legs: dict[str, CellMap]
    leg_pointedness: dict[tuple[str, str], EdgeWord]
    commuting: dict[tuple[str, str], EdgeWord]
    squares: dict[tuple[str, str], str]

    def __post_init__(self):
        total = self.tip.total
        faces = {f for f, _ in total.faces}
        for (i, a), w in self.leg_pointedness.items():
            if total.validate_word(w) != self.tip.basept.vertex_map[a]:
                raise ValidationError(f"pointedness word of leg {i!r} at {a!r} is broken")
        for w in self.commuting.values():
            total.validate_word(w)
        for ref in self.squares.values():
            if ref not in faces:
                raise ValidationError(f"cocone refers to a missing 2-cell {ref!r}")


@dataclass(frozen=True)
class Construction1:
    coslice: CosliceComplex
    cocone: CoconeDataCx
    colim_a: ColimitComplex
    colim_f: ColimitComplex
    psi: CellMap
    fold: CellMap
    po: PushoutResult

    @property
    def inr(self) -> CellMap:
        """Inclusion of the underlying colimit into the coslice colimit."""
        return self.po.inr


def construction_one(d: ADiagramCx) -> Construction1:
    """The coslice colimit as the pushout of the base against the underlying
    colimit along the constant-diagram colimit."""
    colim_a, fold = fold_map(d.shape, d.base)
    _, colim_f, psi = build_psi(d)
    po = pushout(fold, psi)
    tip = CosliceComplex(d.base, po.complex, po.inl)
    legs = {}
    leg_pointedness = {}
    for i in d.shape.vertices:
        legs[i] = compose_cell_maps(po.inr, colim_f.iotas[i])
        for a in d.base.vertices:
            glue_edge = po.glue[_obj_cell(i, a)]
            start = po.complex.dst(glue_edge)
            leg_pointedness[(i, a)] = EdgeWord(start, ((glue_edge, -1),))
    commuting = {}
    squares = {}
    for e, i, j in d.shape.edges:
        for x in d.objects[i].total.vertices:
            kid = colim_f.kappa[(e, x)]
            commuting[(e, x)] = po.inr.word(
                EdgeWord(colim_f.total.src(kid), ((kid, 1),))
            )
        for a in d.base.vertices:
            squares[(e, a)] = po.squares[f"k:{e}:{a}"]
    cocone = CoconeDataCx(tip, legs, leg_pointedness, commuting, squares)
    return Construction1(tip, cocone, colim_a, colim_f, psi, fold, po)


# ---------------------------------------------------------------------------
# Wedge sums (coproducts in the coslice)


@dataclass(frozen=True)
class WedgeResult:
    coslice: CosliceComplex
    legs: dict[str, CellMap]  # object totals -> wedge total
    glue: dict[tuple[str, str], str]  # (index label, base vertex) -> glue edge id
    index: tuple[str, ...]
    po: PushoutResult


def coslice_coproduct(
    index: tuple[str, ...],
    objects: dict[str, CosliceComplex],
    base: TwoComplex | None = None,
) -> WedgeResult:
    """Coproduct in the coslice: the pushout of A <- index x A -> Sigma objects,
    glued along the basepoint maps.  The empty index returns A itself."""
    bases = {objects[i].base for i in index} if index else set()
    if base is not None:
        bases.add(base)
    if len(bases) > 1:
        raise ValidationError("wedge summands must share their base")
    a = next(iter(bases)) if bases else None
    if a is None:
        raise ValidationError("coslice_coproduct needs at least one object or an explicit base")
    copies, copy_inj = disjoint_union([a] * len(index))
    summands, summand_inj = disjoint_union([objects[i].total for i in index])
    f_vertex = {}
    f_edge = {}
    g_vertex = {}
    g_edge = {}
    for k, label in enumerate(index):
        b = objects[label].basept
        for v in a.vertices:
            f_vertex[f"{k}:{v}"] = v
            g_vertex[f"{k}:{v}"] = f"{k}:{b.vertex_map[v]}"
        for e, s, _ in a.edges:
            f_edge[f"{k}:{e}"] = EdgeWord(s, ((e, 1),))
            img = b.edge_map[e]
            g_edge[f"{k}:{e}"] = EdgeWord(
                f"{k}:{img.start}", tuple((f"{k}:{e2}", sg) for e2, sg in img.steps)
            )
    f = CellMap(copies, a, f_vertex, f_edge)
    g = CellMap(copies, summands, g_vertex, g_edge)
    po = pushout(f, g)
    tip = CosliceComplex(a, po.complex, po.inl)
    legs = {
        label: compose_cell_maps(po.inr, summand_inj[k]) for k, label in enumerate(index)
    }
    glue = {
        (label, v): po.glue[f"{k}:{v}"]
        for k, label in enumerate(index)
        for v in a.vertices
    }
    return WedgeResult(tip, legs, glue, tuple(index), po)


def base_as_wedge(a: TwoComplex) -> CosliceComplex:
    from .complexes import identity_map

    return CosliceComplex(a, a, identity_map(a))


def augmented_diagram(delta: Graph, g: ADiagramCx):
    """Plain diagram over delta plus a fresh apex vertex mapping to every
    object by its basepoint map.  Its plain colimit computes the coslice
    coproduct for discrete shapes but not the coslice colimit in general."""
    fresh = "@base"
    while fresh in set(delta.vertices):
        fresh = "@" + fresh
    vertices = tuple(delta.vertices) + (fresh,)
    edges = list(delta.edges)
    for i in delta.vertices:
        eid = f"@to:{i}"
        while any(eid == e for e, _, _ in edges):
            eid = "@" + eid
        edges.append((eid, fresh, i))
    shape = Graph(vertices, tuple(edges))
    objects = {i: g.objects[i].total for i in delta.vertices}
    objects[fresh] = g.base
    arrows = dict(g.arrows)
    for i in delta.vertices:
        arrows[f"@to:{i}"] = g.objects[i].basept
    return shape, objects, arrows


# ---------------------------------------------------------------------------
# Construction 2


@dataclass(frozen=True)
class Construction2:
    coslice: CosliceComplex
    edge_wedge: WedgeResult  # W, indexed by shape edges
    vertex_wedge: WedgeResult  # V3, indexed by shape vertices
    double_wedge: WedgeResult  # W v W
    fold_ww: CellMap  # id v id : WW -> W
    sigma: CellMap  # WW -> V3
    po: PushoutResult


def _edge_order(shape: Graph) -> tuple[str, ...]:
    return tuple(e for e, _, _ in sorted(shape.edges, key=lambda t: (t[1], t[2], t[0])))


def construction_two(d: ADiagramCx) -> Construction2:
    """The coslice colimit as the pushout of the span of wedges

        W  <-[fold]-  W v W  -[sigma]->  V

    where W is the wedge of the source objects over the shape's edges and V
    the wedge of all objects over its vertices.  One sigma leg includes each
    edge summand at its source; the other pushes it along the diagram arrow
    into its target, correcting the glue edge by the pointedness word.

    All cell assignments are built by forward iteration over the wedge
    provenance, never by parsing constructed ids.
    """
    edge_index = _edge_order(d.shape)
    vertex_index = tuple(sorted(d.shape.vertices))
    w = coslice_coproduct(
        edge_index, {e: d.objects[d.shape.src(e)] for e in edge_index}, base=d.base
    )
    v3 = coslice_coproduct(vertex_index, {i: d.objects[i] for i in vertex_index}, base=d.base)
    ww = coslice_coproduct(("0", "1"), {"0": w.coslice, "1": w.coslice})
    a = d.base
    w_total = w.coslice.total
    ww_total = ww.coslice.total
    v3_total = v3.coslice.total

    def ww_cell(copy: int, wcell: str) -> str:
        return f"r:{copy}:{wcell}"

    # fold (id v id) : WW -> W collapses both copies; base parts of WW and W
    # share their ids, and the binary glue edges collapse to nothing.
    fold_vertex = {}
    fold_edge = {}
    for v in a.vertices:
        fold_vertex[f"l:{v}"] = f"l:{v}"
    for e, s, _ in a.edges:
        fold_edge[f"l:{e}"] = EdgeWord(f"l:{s}", ((f"l:{e}", 1),))
    for copy in (0, 1):
        for v in w_total.vertices:
            fold_vertex[ww_cell(copy, v)] = v
        for e, s, _ in w_total.edges:
            fold_edge[ww_cell(copy, e)] = EdgeWord(s, ((e, 1),))
        for v in a.vertices:
            glue_id = ww.po.glue[f"{copy}:{v}"]
            fold_edge[glue_id] = EdgeWord(f"l:{v}")
    fold_ww = CellMap(ww_total, w_total, fold_vertex, fold_edge)

    # sigma : WW -> V3, with legs alpha_1 (copy 0) and alpha_2 (copy 1)
    kv = {label: k for k, label in enumerate(vertex_index)}

    def v3_summand_cell(i: str, cell: str) -> str:
        return f"r:{kv[i]}:{cell}"

    sigma_vertex = {}
    sigma_edge = {}
    for v in a.vertices:
        sigma_vertex[f"l:{v}"] = f"l:{v}"
    for e, s, _ in a.edges:
        sigma_edge[f"l:{e}"] = EdgeWord(f"l:{s}", ((f"l:{e}", 1),))
    for copy in (0, 1):
        # W base part goes to the V3 base part
        for v in a.vertices:
            sigma_vertex[ww_cell(copy, f"l:{v}")] = f"l:{v}"
        for e, s, _ in a.edges:
            sigma_edge[ww_cell(copy, f"l:{e}")] = EdgeWord(f"l:{s}", ((f"l:{e}", 1),))
        for k, label in enumerate(edge_index):
            i, j = d.shape.src(label), d.shape.dst(label)
            fi = d.objects[i].total
            arrow = d.arrows[label]
            for x in fi.vertices:
                key = ww_cell(copy, f"r:{k}:{x}")
                if copy == 0:
                    sigma_vertex[key] = v3_summand_cell(i, x)
                else:
                    sigma_vertex[key] = v3_summand_cell(j, arrow.vertex_map[x])
            for e, s, _ in fi.edges:
                key = ww_cell(copy, f"r:{k}:{e}")
                if copy == 0:
                    sigma_edge[key] = EdgeWord(
                        v3_summand_cell(i, s), ((v3_summand_cell(i, e), 1),)
                    )
                else:
                    img = arrow.edge_map[e]
                    sigma_edge[key] = EdgeWord(
                        v3_summand_cell(j, img.start),
                        tuple((v3_summand_cell(j, e2), sg) for e2, sg in img.steps),
                    )
            for av in a.vertices:
                key = ww_cell(copy, w.po.glue[f"{k}:{av}"])
                if copy == 0:
                    sigma_edge[key] = EdgeWord(f"l:{av}", ((v3.po.glue[f"{kv[i]}:{av}"], 1),))
                else:
                    word = d.pointedness[label][av]
                    steps = [(v3.po.glue[f"{kv[j]}:{av}"], 1)]
                    steps += [
                        (v3_summand_cell(j, e2), -sg) for e2, sg in reversed(word.steps)
                    ]
                    sigma_edge[key] = EdgeWord(f"l:{av}", tuple(steps))
        for av in a.vertices:
            glue_id = ww.po.glue[f"{copy}:{av}"]
            sigma_edge[glue_id] = EdgeWord(f"l:{av}")
    sigma = CellMap(ww_total, v3_total, sigma_vertex, sigma_edge)

    po = pushout(fold_ww, sigma)
    basept = compose_cell_maps(po.inl, w.coslice.basept)
    tip = CosliceComplex(d.base, po.complex, basept)
    return Construction2(tip, w, v3, ww, fold_ww, sigma, po)


def t_f_map(d: ADiagramCx, c1: Construction1 | None = None, c2: Construction2 | None = None) -> CellMap:
    """The comparison map from construction 1 to construction 2, realized
    directly on generators: base cells into the base part of the edge wedge,
    object cells into their vertex-wedge summands, connecting edges across
    the two glue families of the final pushout."""
    c1 = c1 or construction_one(d)
    c2 = c2 or construction_two(d)
    edge_index = c2.edge_wedge.index
    vertex_index = c2.vertex_wedge.index
    kv = {label: k for k, label in enumerate(vertex_index)}
    ke = {label: k for k, label in enumerate(edge_index)}
    a = d.base
    p = c1.coslice.total
    pw = c2.coslice.total
    vertex_map = {}
    edge_map = {}
    # base side: A -> base part of W -> PW
    for v in a.vertices:
        vertex_map[f"l:{v}"] = f"l:l:{v}"
    for e, s, _ in a.edges:
        edge_map[f"l:{e}"] = EdgeWord(f"l:l:{s}", ((f"l:l:{e}", 1),))
    # object cells: summand i of the underlying colimit -> vertex-wedge summand
    for i in d.shape.vertices:
        fi = d.objects[i].total
        for x in fi.vertices:
            vertex_map[f"r:{_obj_cell(i, x)}"] = f"r:r:{kv[i]}:{x}"
        for e, s, _ in fi.edges:
            edge_map[f"r:{_obj_cell(i, e)}"] = EdgeWord(
                f"r:r:{kv[i]}:{s}", ((f"r:r:{kv[i]}:{e}", 1),)
            )
    # connecting edges of the underlying colimit: across the two glue
    # families over the corresponding double-wedge vertex
    for (label, x), kid in c1.colim_f.kappa.items():
        k = ke[label]
        ww_vertex_0 = f"r:0:r:{k}:{x}"
        ww_vertex_1 = f"r:1:r:{k}:{x}"
        glue0 = c2.po.glue[ww_vertex_0]
        glue1 = c2.po.glue[ww_vertex_1]
        start = vertex_map[f"r:{c1.colim_f.total.src(kid)}"]
        edge_map[f"r:{kid}"] = EdgeWord(start, ((glue1, -1), (glue0, 1)))
    # glue edges of construction 1 at (i, a): through the base glue of PW
    # followed by the vertex-wedge glue edge
    for i in d.shape.vertices:
        for av in a.vertices:
            pw_base_glue = c2.po.glue[f"l:{av}"]
            v3_glue = c2.vertex_wedge.po.glue[f"{kv[i]}:{av}"]
            edge_map[c1.po.glue[_obj_cell(i, av)]] = EdgeWord(
                f"l:l:{av}", ((pw_base_glue, 1), (f"r:{v3_glue}", 1))
            )
    return CellMap(p, pw, vertex_map, edge_map)


# ---------------------------------------------------------------------------
# Action on diagram morphisms


@dataclass(frozen=True)
class ADMorphism:
    """Morphism of diagrams under the same base.

    ``pointedness[i][a]`` runs from component_i(basept^F_i(a)) to
    basept^G_i(a); ``naturality[e][x]`` runs from G_e(component_i(x)) to
    component_j(F_e(x)) inside G_j, for e : i -> j and x a vertex of F_i.
    """

    source: ADiagramCx
    target: ADiagramCx
    components: dict[str, CellMap]
    pointedness: dict[str, dict[str, EdgeWord]]
    naturality: dict[str, dict[str, EdgeWord]]

    def __post_init__(self):
        if self.source.shape != self.target.shape:
            raise ValidationError("morphism requires a shared shape")
        if self.source.base != self.target.base:
            raise ValidationError("morphism requires a shared base")
        for i in self.source.shape.vertices:
            comp = self.components.get(i)
            if comp is None:
                raise ValidationError(f"morphism misses component at {i!r}")
            if comp.source != self.source.objects[i].total or comp.target != self.target.objects[i].total:
                raise ValidationError(f"component at {i!r} has wrong endpoints")
            words = self.pointedness.get(i)
            if words is None:
                raise ValidationError(f"morphism misses pointedness words at {i!r}")
            for a in self.source.base.vertices:
                w = words.get(a)
                if w is None:
                    raise ValidationError(f"component {i!r} misses pointedness at {a!r}")
                start = comp.vertex_map[self.source.objects[i].basept.vertex_map[a]]
                end = self.target.objects[i].basept.vertex_map[a]
                gi = self.target.objects[i].total
                if w.start != start or gi.validate_word(w) != end:
                    raise ValidationError(
                        f"pointedness word of component {i!r} at {a!r} has wrong endpoints"
                    )
        for e, i, j in self.source.shape.edges:
            words = self.naturality.get(e)
            if words is None:
                raise ValidationError(f"morphism misses naturality words at {e!r}")
            gj = self.target.objects[j].total
            for x in self.source.objects[i].total.vertices:
                w = words.get(x)
                if w is None:
                    raise ValidationError(f"edge {e!r} misses a naturality word at {x!r}")
                start = self.target.arrows[e].vertex_map[self.components[i].vertex_map[x]]
                end = self.components[j].vertex_map[self.source.arrows[e].vertex_map[x]]
                if w.start != start or gj.validate_word(w) != end:
                    raise ValidationError(
                        f"naturality word at edge {e!r}, vertex {x!r} has wrong endpoints"
                    )


def colim_morphism_underlying(delta: ADMorphism) -> CellMap:
    """Functorial action on the underlying colimits: object cells map by the
    components, each connecting edge by the inverse naturality word followed
    by the connecting edge of the target diagram."""
    src_objects = {i: delta.source.objects[i].total for i in delta.source.shape.vertices}
    tgt_objects = {i: delta.target.objects[i].total for i in delta.target.shape.vertices}
    colim_src = colim_cx(delta.source.shape, src_objects, delta.source.arrows)
    colim_tgt = colim_cx(delta.target.shape, tgt_objects, delta.target.arrows)
    vertex_map = {}
    edge_map = {}
    for i in delta.source.shape.vertices:
        comp = delta.components[i]
        iota = colim_tgt.iotas[i]
        for v in src_objects[i].vertices:
            vertex_map[_obj_cell(i, v)] = _obj_cell(i, comp.vertex_map[v])
        for e2, _, _ in src_objects[i].edges:
            edge_map[_obj_cell(i, e2)] = iota.word(comp.edge_map[e2])
    for e, i, j in delta.source.shape.edges:
        comp_i = delta.components[i]
        iota_j = colim_tgt.iotas[j]
        for x in src_objects[i].vertices:
            w = delta.naturality[e][x]
            img = iota_j.word(w)
            end = colim_tgt.total.validate_word(img)
            steps = tuple((e2, -sg) for e2, sg in reversed(img.steps))
            steps += ((colim_tgt.kappa[(e, comp_i.vertex_map[x])], 1),)
            edge_map[f"k:{e}:{x}"] = EdgeWord(end, steps)
    return CellMap(colim_src.total, colim_tgt.total, vertex_map, edge_map)


def colim_map(delta: ADMorphism, c_src: Construction1 | None = None, c_tgt: Construction1 | None = None) -> CellMap:
    """Action of the coslice colimit on a diagram morphism: identity on the
    base side, components on object cells, connecting edges through the
    naturality words, and each glue edge to the target's glue edge followed
    by the inverse image of the component's pointedness word."""
    c_src = c_src or construction_one(delta.source)
    c_tgt = c_tgt or construction_one(delta.target)
    p_src = c_src.coslice.total
    p_tgt = c_tgt.coslice.total
    hat = colim_morphism_underlying(delta)
    a = delta.source.base
    shape = delta.source.shape
    vertex_map = {}
    edge_map = {}
    for v in a.vertices:
        vertex_map[f"l:{v}"] = f"l:{v}"
    for e, s, _ in a.edges:
        edge_map[f"l:{e}"] = EdgeWord(f"l:{s}", ((f"l:{e}", 1),))
    for v in c_src.colim_f.total.vertices:
        vertex_map[f"r:{v}"] = f"r:{hat.vertex_map[v]}"
    for e, _, _ in c_src.colim_f.total.edges:
        img = hat.edge_map[e]
        edge_map[f"r:{e}"] = EdgeWord(
            f"r:{img.start}", tuple((f"r:{e2}", sg) for e2, sg in img.steps)
        )
    for i in shape.vertices:
        for av in a.vertices:
            word = delta.pointedness[i][av]
            img = c_tgt.cocone.legs[i].word(word)
            steps = ((c_tgt.po.glue[_obj_cell(i, av)], 1),) + tuple(
                (e2, -sg) for e2, sg in reversed(img.steps)
            )
            edge_map[c_src.po.glue[_obj_cell(i, av)]] = EdgeWord(f"l:{av}", steps)
    return CellMap(p_src, p_tgt, vertex_map, edge_map)


# ---------------------------------------------------------------------------
# Checks and reports


def induced_pi0(f: CellMap) -> tuple[dict[str, str], bool]:
    """Map on path components; returns (rep -> rep, bijective)."""
    psrc = pi0(f.source)
    ptgt = pi0(f.target)
    mapping = {}
    for v in f.source.vertices:
        r = psrc.rep(v)
        val = ptgt.rep(f.vertex_map[v])
        if mapping.get(r, val) != val:
            raise AssertionError("component map is not well defined")
        mapping[r] = val
    bijective = len(set(mapping.values())) == len(mapping) == ptgt.count
    return mapping, bijective


def check_tree_creation(d: ADiagramCx) -> dict:
    """Over a tree shape, the inclusion of the underlying colimit into the
    coslice colimit must induce a bijection on components and an isomorphism
    on degree-1 homology."""
    if not is_tree(d.shape):
        raise PreconditionError("check_tree_creation requires a tree shape")
    c1 = construction_one(d)
    inr = c1.inr
    _, pi0_bijective = induced_pi0(inr)
    ind = homology.induced_h1(inr)
    return {
        "pi0_bijective": pi0_bijective,
        "h1_source": ind.source.to_json(),
        "h1_target": ind.target.to_json(),
        "h1_matrix": ind.matrix,
        "h1_isomorphism": ind.is_isomorphism(),
        "ok": pi0_bijective and ind.is_isomorphism(),
        "cells": {
            "underlying": [
                len(c1.colim_f.total.vertices),
                len(c1.colim_f.total.edges),
                len(c1.colim_f.total.faces),
            ],
            "coslice": [
                len(c1.coslice.total.vertices),
                len(c1.coslice.total.edges),
                len(c1.coslice.total.faces),
            ],
        },
    }


def check_connectivity(d: ADiagramCx) -> dict:
    """Connectivity preservation: connected base and objects force a
    connected coslice colimit."""
    base_connected = pi0(d.base).count == 1
    objects_connected = all(
        pi0(d.objects[i].total).count == 1 for i in d.shape.vertices
    )
    c1 = construction_one(d)
    out_components = pi0(c1.coslice.total).count
    applicable = base_connected and objects_connected
    return {
        "inputs_connected": applicable,
        "colimit_components": out_components,
        "ok": (not applicable) or out_components == 1,
    }


def pi0_diagram(d: ADiagramCx) -> CosliceSetDiagram:
    """Apply pi0 objectwise: the set-level diagram of component classes."""
    base_part = pi0(d.base)
    base = FinSet(tuple(sorted({base_part.rep(v) for v in d.base.vertices})))
    parts = {i: pi0(d.objects[i].total) for i in d.shape.vertices}
    objects = {
        i: FinSet(tuple(c[0] for c in parts[i].classes)) for i in d.shape.vertices
    }
    basepoints = {}
    arrows = {}
    for i in d.shape.vertices:
        b = d.objects[i].basept
        basepoints[i] = FinFun(
            base, objects[i], {a: parts[i].rep(b.vertex_map[a]) for a in base}
        )
    for e, i, j in d.shape.edges:
        arrow = d.arrows[e]
        arrows[e] = FinFun(
            objects[i],
            objects[j],
            {c: parts[j].rep(arrow.vertex_map[c]) for c in objects[i]},
        )
    return CosliceSetDiagram(d.shape, base, objects, arrows, basepoints)


def truncation_compatibility(d: ADiagramCx, c1: Construction1 | None = None) -> dict:
    """pi0 of construction 1 versus the set-level coslice colimit of the
    pi0 diagram: the canonical comparison must be a bijection commuting with
    the colimit legs."""
    c1 = c1 or construction_one(d)
    set_diagram = pi0_diagram(d)
    set_colim = coslice_colim_set(set_diagram)
    cx_part = pi0(c1.coslice.total)
    base_part = pi0(d.base)
    parts = {i: pi0(d.objects[i].total) for i in d.shape.vertices}
    mapping = {}
    well_defined = True
    for a in d.base.vertices:
        src = cx_part.rep(f"l:{a}")
        val = set_colim.object.basepoint(base_part.rep(a))
        if mapping.get(src, val) != val:
            well_defined = False
        mapping[src] = val
    for i in d.shape.vertices:
        for x in d.objects[i].total.vertices:
            src = cx_part.rep(f"r:{_obj_cell(i, x)}")
            val = set_colim.legs[i](parts[i].rep(x))
            if mapping.get(src, val) != val:
                well_defined = False
            mapping[src] = val
    bijective = (
        well_defined
        and len(mapping) == cx_part.count
        and len(set(mapping.values())) == len(mapping)
        and set(mapping.values()) == set(set_colim.object.carrier.elements)
    )
    return {
        "bijective": bijective,
        "well_defined": well_defined,
        "complex_components": cx_part.count,
        "set_colimit_size": len(set_colim.object.carrier),
    }


def invariants_report(x: TwoComplex) -> dict:
    """Standard invariant bundle for a complex."""
    h0, h1 = homology.homology_groups(x)
    coh1 = homology.cohomology_h1(x)
    part = pi0(x)
    base = min(x.vertices) if x.vertices else None
    report = {
        "cells": [len(x.vertices), len(x.edges), len(x.faces)],
        "euler_characteristic": euler_characteristic(x),
        "pi0_classes": part.count,
        "h0": h0.to_json(),
        "h1": h1.to_json(),
        "h1_str": str(h1),
        "cohomology_h1": coh1.to_json(),
    }
    if base is not None:
        from .complexes import pi1_presentation

        pres = pi1_presentation(x, base)
        report["pi1"] = {
            "base": base,
            "generators": len(pres.generators),
            "relators": len(pres.relators),
            "abelianization": pres.abelianization().to_json(),
        }
    return report
