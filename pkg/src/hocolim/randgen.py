"""Seeded random generators for graphs, complexes, maps, and diagrams.

Every generator takes an explicit ``random.Random`` so that suites are
reproducible from a single seed.  Complexes are generated connected (via a
spanning tree) so that edge words between any two prescribed endpoints
always exist; paths are found breadth-first over sorted ids, keeping the
output a deterministic function of the RNG stream.
"""

from __future__ import annotations

import random
from collections import deque

from .complexes import CellMap, EdgeWord, TwoComplex
from .coslice import ADiagramCx, ADMorphism, CosliceComplex
from .graphs import Graph
from .setmodel import CosliceSetDiagram, CosliceTransformation, FinFun, FinSet, SetDiagram


def rand_graph(rng: random.Random, max_vertices: int, max_edges: int, prefix: str = "v") -> Graph:
    n = rng.randint(1, max_vertices)
    vertices = tuple(f"{prefix}{k}" for k in range(n))
    m = rng.randint(0, max_edges)
    edges = tuple(
        (f"e{k}", rng.choice(vertices), rng.choice(vertices)) for k in range(m)
    )
    return Graph(vertices, edges)


def rand_tree_graph(rng: random.Random, max_vertices: int) -> Graph:
    """Random tree shape: each new vertex attaches to an earlier one with a
    random edge orientation."""
    n = rng.randint(1, max_vertices)
    vertices = tuple(f"v{k}" for k in range(n))
    edges = []
    for k in range(1, n):
        p = rng.randrange(k)
        if rng.random() < 0.5:
            edges.append((f"e{k}", f"v{k}", f"v{p}"))
        else:
            edges.append((f"e{k}", f"v{p}", f"v{k}"))
    return Graph(vertices, tuple(edges))


def bfs_word(x: TwoComplex, start: str, end: str) -> EdgeWord:
    """Deterministic edge word from start to end (undirected breadth-first
    search over sorted edge ids); requires both in one component."""
    if start == end:
        return EdgeWord(start)
    incident: dict[str, list[tuple[str, str, int]]] = {v: [] for v in x.vertices}
    for e, s, d in sorted(x.edges):
        incident[s].append((e, d, 1))
        incident[d].append((e, s, -1))
    back: dict[str, tuple[str, str, int]] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        v = queue.popleft()
        for e, w, sign in incident[v]:
            if w not in seen:
                seen.add(w)
                back[w] = (v, e, sign)
                if w == end:
                    queue.clear()
                    break
                queue.append(w)
    if end not in seen:
        raise ValueError(f"no path from {start!r} to {end!r}")
    steps = []
    at = end
    while at != start:
        v, e, sign = back[at]
        steps.append((e, sign))
        at = v
    return EdgeWord(start, tuple(reversed(steps)))


def rand_complex(
    rng: random.Random,
    max_cells: int,
    allow_faces: bool = True,
    prefix: str = "",
) -> TwoComplex:
    """Random connected complex with at most max_cells cells per dimension."""
    n = rng.randint(1, max_cells)
    vertices = tuple(f"{prefix}x{k}" for k in range(n))
    edges = []
    for k in range(1, n):
        p = rng.randrange(k)
        edges.append((f"{prefix}y{k}", vertices[p], vertices[k]))
    extra = rng.randint(0, max(0, max_cells - len(edges)))
    for k in range(extra):
        edges.append(
            (f"{prefix}z{k}", rng.choice(vertices), rng.choice(vertices))
        )
    x = TwoComplex(vertices, tuple(edges))
    if not allow_faces or not edges:
        return x
    faces = []
    for k in range(rng.randint(0, max_cells // 2)):
        # closed loop: wander, then walk back along a breadth-first path
        at = rng.choice(vertices)
        word: list[tuple[str, int]] = []
        pos = at
        for _ in range(rng.randint(1, 3)):
            options = [(e, d, 1) for e, s, d in edges if s == pos]
            options += [(e, s, -1) for e, s, d in edges if d == pos]
            if not options:
                break
            e, nxt, sign = rng.choice(options)
            word.append((e, sign))
            pos = nxt
        closing = bfs_word(x, pos, at)
        word.extend(closing.steps)
        if word:
            faces.append((f"{prefix}f{k}", tuple(word)))
    return TwoComplex(vertices, tuple(edges), tuple(faces))


def spanning_tree_word(x: TwoComplex, start: str, end: str) -> EdgeWord:
    """Edge word from start to end through one global breadth-first spanning
    tree (rooted at the least vertex id).  Any loop routed entirely through
    the tree is freely contractible."""
    if start == end:
        return EdgeWord(start)
    root = min(x.vertices)
    incident: dict[str, list[tuple[str, str, int]]] = {v: [] for v in x.vertices}
    for e, s, d in sorted(x.edges):
        incident[s].append((e, d, 1))
        incident[d].append((e, s, -1))
    parent: dict[str, tuple[str, str, int]] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e, w, sign in incident[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = (v, e, sign)
                queue.append(w)

    def path_to_root(v: str) -> list[tuple[str, int]]:
        steps = []
        while v != root:
            p, e, sign = parent[v]
            steps.append((e, -sign))
            v = p
        return steps

    up = path_to_root(start)  # start -> root
    down = [(e, -sg) for e, sg in reversed(path_to_root(end))]  # root -> end
    # cancel the common tail through the root
    while up and down and up[-1][0] == down[0][0] and up[-1][1] == -down[0][1]:
        up.pop()
        down.pop(0)
    return EdgeWord(start, tuple(up + down))


def rand_cellmap(rng: random.Random, src: TwoComplex, tgt: TwoComplex) -> CellMap:
    """Random map into a connected target: random vertex images, edge images
    along breadth-first paths with occasional detours.

    When the source carries 2-cells the images are routed through a single
    spanning tree of the target, so that the image of every face boundary is
    freely contractible and the map is an honest map of spaces; face-free
    sources get unconstrained images.
    """
    vertex_map = {v: rng.choice(tgt.vertices) for v in src.vertices}
    edge_map = {}
    honest = bool(src.faces)
    for e, s, d in src.edges:
        a, b = vertex_map[s], vertex_map[d]
        if honest:
            edge_map[e] = spanning_tree_word(tgt, a, b)
        elif rng.random() < 0.3 and len(tgt.vertices) > 1:
            mid = rng.choice(tgt.vertices)
            w1 = bfs_word(tgt, a, mid)
            w2 = bfs_word(tgt, mid, b)
            edge_map[e] = EdgeWord(a, w1.steps + w2.steps)
        else:
            edge_map[e] = bfs_word(tgt, a, b)
    return CellMap(src, tgt, vertex_map, edge_map)


def rand_coslice_complex(
    rng: random.Random, base: TwoComplex, max_cells: int, allow_faces: bool = True, prefix: str = ""
) -> CosliceComplex:
    total = rand_complex(rng, max_cells, allow_faces, prefix)
    return CosliceComplex(base, total, rand_cellmap(rng, base, total))


def strict_coslice_complex(
    rng: random.Random, base: TwoComplex, max_extra: int, allow_faces: bool = True, prefix: str = ""
) -> CosliceComplex:
    """Object whose basepoint map is the inclusion of a tagged copy of the
    base, padded with random extra cells attached to that copy."""
    vertices = [f"{prefix}b:{v}" for v in base.vertices]
    edges = [(f"{prefix}b:{e}", f"{prefix}b:{s}", f"{prefix}b:{d}") for e, s, d in base.edges]
    faces = [
        (f"{prefix}b:{f}", tuple((f"{prefix}b:{e}", sg) for e, sg in b)) for f, b in base.faces
    ]
    n_extra = rng.randint(0, max_extra)
    for k in range(n_extra):
        v = f"{prefix}x{k}"
        anchor = rng.choice(vertices)
        vertices.append(v)
        edges.append((f"{prefix}y{k}", anchor, v))
    for k in range(rng.randint(0, max_extra)):
        vs = vertices
        edges.append((f"{prefix}z{k}", rng.choice(vs), rng.choice(vs)))
    # extra faces would make random arrows out of this object dishonest
    # (their boundary images need fillers); only the base faces carry over
    if not allow_faces:
        faces = []
    total = TwoComplex(tuple(vertices), tuple(edges), tuple(faces))
    basept = CellMap(
        base,
        total,
        {v: f"{prefix}b:{v}" for v in base.vertices},
        {
            e: EdgeWord(f"{prefix}b:{s}", ((f"{prefix}b:{e}", 1),))
            for e, s, _ in base.edges
        },
    )
    return CosliceComplex(base, total, basept)


def rand_adiagram(
    rng: random.Random,
    shape: Graph,
    base: TwoComplex,
    max_cells: int,
    allow_faces: bool = True,
) -> ADiagramCx:
    """Random genuine diagram under the base.

    When the base has edges, per-vertex pointedness words alone cannot
    express a coherent homotopy, so the diagram is generated strictly
    pointed: objects contain a tagged copy of the base, arrows restrict to
    the identity on it, and every witness word is empty.  Over an edge-free
    base the witnesses are unconstrained and are drawn freely.
    """
    if base.edges:
        return strict_adiagram(rng, shape, base, max_cells, allow_faces)
    objects = {
        i: rand_coslice_complex(rng, base, max_cells, allow_faces, prefix=f"{i}.")
        for i in shape.vertices
    }
    arrows = {}
    pointedness = {}
    for e, i, j in shape.edges:
        arrow = rand_cellmap(rng, objects[i].total, objects[j].total)
        arrows[e] = arrow
        fj = objects[j]
        pointedness[e] = {
            a: bfs_word(
                fj.total,
                arrow.vertex_map[objects[i].basept.vertex_map[a]],
                fj.basept.vertex_map[a],
            )
            for a in base.vertices
        }
    return ADiagramCx(shape, base, objects, arrows, pointedness)


def strict_adiagram(
    rng: random.Random,
    shape: Graph,
    base: TwoComplex,
    max_extra: int,
    allow_faces: bool = True,
) -> ADiagramCx:
    """Strictly pointed diagram: arrows fix the embedded base copy, all
    pointedness words empty."""
    objects = {
        i: strict_coslice_complex(rng, base, max_extra, allow_faces, prefix=f"{i}.")
        for i in shape.vertices
    }
    arrows = {}
    pointedness = {}
    for e, i, j in shape.edges:
        fi, fj = objects[i], objects[j]
        vertex_map = {}
        edge_map = {}
        for v in base.vertices:
            vertex_map[f"{i}.b:{v}"] = f"{j}.b:{v}"
        for e2, s, _ in base.edges:
            edge_map[f"{i}.b:{e2}"] = EdgeWord(f"{j}.b:{s}", ((f"{j}.b:{e2}", 1),))
        for v in fi.total.vertices:
            if v not in vertex_map:
                vertex_map[v] = rng.choice(fj.total.vertices)
        for e2, s, d in fi.total.edges:
            if e2 not in edge_map:
                edge_map[e2] = bfs_word(fj.total, vertex_map[s], vertex_map[d])
        arrows[e] = CellMap(fi.total, fj.total, vertex_map, edge_map)
        pointedness[e] = {a: EdgeWord(f"{j}.b:{a}") for a in base.vertices}
    return ADiagramCx(shape, base, objects, arrows, pointedness)


def inclusion_admorphism(rng: random.Random, source: ADiagramCx, max_extra: int) -> ADMorphism:
    """Strictly natural morphism: the target enlarges each object by random
    extra cells and the components are the inclusions, so every witness word
    is empty and all coherence holds on the nose."""
    shape = source.shape
    tgt_objects = {}
    for i in shape.vertices:
        fi = source.objects[i].total
        vertices = list(fi.vertices)
        edges = list(fi.edges)
        faces = list(fi.faces)
        salt = f"{len(vertices)}.{len(edges)}"
        for k in range(rng.randint(0, max_extra)):
            v = f"{i}+x{salt}.{k}"
            anchor = rng.choice(vertices)
            vertices.append(v)
            edges.append((f"{i}+y{salt}.{k}", anchor, v))
        for k in range(rng.randint(0, max_extra)):
            edges.append((f"{i}+z{salt}.{k}", rng.choice(vertices), rng.choice(vertices)))
        total = TwoComplex(tuple(vertices), tuple(edges), tuple(faces))
        basept = CellMap(
            source.base,
            total,
            dict(source.objects[i].basept.vertex_map),
            dict(source.objects[i].basept.edge_map),
        )
        tgt_objects[i] = CosliceComplex(source.base, total, basept)
    tgt_arrows = {}
    tgt_pointedness = {}
    for e, i, j in shape.edges:
        fi, gj = tgt_objects[i].total, tgt_objects[j].total
        old = source.arrows[e]
        vertex_map = dict(old.vertex_map)
        edge_map = dict(old.edge_map)
        for v in fi.vertices:
            if v not in vertex_map:
                vertex_map[v] = rng.choice(gj.vertices)
        for e2, s, d in fi.edges:
            if e2 not in edge_map:
                edge_map[e2] = bfs_word(gj, vertex_map[s], vertex_map[d])
        tgt_arrows[e] = CellMap(fi, gj, vertex_map, edge_map)
        tgt_pointedness[e] = dict(source.pointedness[e])
    target = ADiagramCx(shape, source.base, tgt_objects, tgt_arrows, tgt_pointedness)
    components = {}
    pointedness = {}
    naturality = {}
    for i in shape.vertices:
        fi = source.objects[i].total
        components[i] = CellMap(
            fi,
            tgt_objects[i].total,
            {v: v for v in fi.vertices},
            {e2: EdgeWord(s, ((e2, 1),)) for e2, s, _ in fi.edges},
        )
        pointedness[i] = {
            a: EdgeWord(tgt_objects[i].basept.vertex_map[a]) for a in source.base.vertices
        }
    for e, i, j in shape.edges:
        naturality[e] = {
            x: EdgeWord(tgt_arrows[e].vertex_map[x])
            for x in source.objects[i].total.vertices
        }
    return ADMorphism(source, target, components, pointedness, naturality)


def collapse_admorphism(source: ADiagramCx) -> ADMorphism:
    """Morphism collapsing every object onto the constant diagram at the
    base (strictly natural, all witnesses empty)."""
    from .complexes import constant_map, identity_map

    shape = source.shape
    base = source.base
    a0 = base.vertices[0]
    point = TwoComplex((a0,))
    basept = constant_map(base, point, a0)
    tgt_obj = CosliceComplex(base, point, basept)
    tgt_objects = {i: tgt_obj for i in shape.vertices}
    tgt_arrows = {e: identity_map(point) for e, _, _ in shape.edges}
    tgt_pointedness = {
        e: {a: EdgeWord(a0) for a in base.vertices} for e, _, _ in shape.edges
    }
    target = ADiagramCx(shape, base, tgt_objects, tgt_arrows, tgt_pointedness)
    components = {
        i: constant_map(source.objects[i].total, point, a0) for i in shape.vertices
    }
    pointedness = {i: {a: EdgeWord(a0) for a in base.vertices} for i in shape.vertices}
    naturality = {
        e: {x: EdgeWord(a0) for x in source.objects[i].total.vertices}
        for e, i, j in shape.edges
    }
    return ADMorphism(source, target, components, pointedness, naturality)


def compose_admorphisms(outer: ADMorphism, inner: ADMorphism) -> ADMorphism:
    """Composite morphism; witness words compose by whiskering."""
    from .complexes import compose_cell_maps

    shape = inner.source.shape
    components = {
        i: compose_cell_maps(outer.components[i], inner.components[i])
        for i in shape.vertices
    }
    pointedness = {}
    for i in shape.vertices:
        words = {}
        for a in inner.source.base.vertices:
            img = outer.components[i].word(inner.pointedness[i][a])
            tail = outer.pointedness[i][a]
            words[a] = EdgeWord(img.start, img.steps + tail.steps)
        pointedness[i] = words
    naturality = {}
    for e, i, j in shape.edges:
        words = {}
        for x in inner.source.objects[i].total.vertices:
            wo = outer.naturality[e][inner.components[i].vertex_map[x]]
            img = outer.components[j].word(inner.naturality[e][x])
            words[x] = EdgeWord(wo.start, wo.steps + img.steps)
        naturality[e] = words
    return ADMorphism(inner.source, outer.target, components, pointedness, naturality)


# ---------------------------------------------------------------------------
# Set-level generators


def rand_finset(rng: random.Random, max_size: int, prefix: str = "x", min_size: int = 0) -> FinSet:
    n = rng.randint(min_size, max_size)
    return FinSet(tuple(f"{prefix}{k}" for k in range(n)))


def rand_finfun(rng: random.Random, dom: FinSet, cod: FinSet) -> FinFun:
    return FinFun(dom, cod, {x: rng.choice(cod.elements) for x in dom})


def rand_surjection(rng: random.Random, dom: FinSet, cod: FinSet) -> FinFun:
    if len(cod) > len(dom):
        raise ValueError("no surjection onto a larger set")
    values = list(cod.elements)
    values += [rng.choice(cod.elements) for _ in range(len(dom) - len(cod))]
    rng.shuffle(values)
    return FinFun(dom, cod, dict(zip(dom.elements, values)))


def rand_set_diagram(rng: random.Random, max_vertices: int, max_edges: int, max_size: int) -> SetDiagram:
    shape = rand_graph(rng, max_vertices, max_edges)
    objects = {i: rand_finset(rng, max_size, prefix=f"{i}.") for i in shape.vertices}
    # a map out of a nonempty set needs a nonempty target; close off first
    changed = True
    while changed:
        changed = False
        for _, i, j in shape.edges:
            if len(objects[i]) > 0 and len(objects[j]) == 0:
                objects[j] = FinSet((f"{j}.x0",))
                changed = True
    arrows = {e: rand_finfun(rng, objects[i], objects[j]) for e, i, j in shape.edges}
    return SetDiagram(shape, objects, arrows)


def rand_coslice_set_diagram(
    rng: random.Random,
    max_vertices: int,
    max_edges: int,
    max_size: int,
    max_base: int,
) -> CosliceSetDiagram:
    """Random diagram under a base, with injective basepoint maps so that
    pointed arrows always exist (their basepoint values are forced)."""
    shape = rand_graph(rng, max_vertices, max_edges)
    base = rand_finset(rng, max_base, prefix="a", min_size=1)
    objects = {}
    basepoints = {}
    for i in shape.vertices:
        extra = rng.randint(0, max(0, max_size - len(base)))
        elems = tuple(f"{i}.b{k}" for k in range(len(base))) + tuple(
            f"{i}.x{k}" for k in range(extra)
        )
        objects[i] = FinSet(elems)
        basepoints[i] = FinFun(
            base, objects[i], {a: f"{i}.b{k}" for k, a in enumerate(base.elements)}
        )
    arrows = {}
    for e, i, j in shape.edges:
        mapping = {}
        for k, a in enumerate(base.elements):
            mapping[f"{i}.b{k}"] = f"{j}.b{k}"
        for x in objects[i]:
            if x not in mapping:
                mapping[x] = rng.choice(objects[j].elements)
        arrows[e] = FinFun(objects[i], objects[j], mapping)
    return CosliceSetDiagram(shape, base, objects, arrows, basepoints)


def rand_surjective_transformation(
    rng: random.Random,
    max_vertices: int,
    max_edges: int,
    max_size: int,
    max_base: int,
) -> CosliceTransformation:
    """Pointwise-surjective transformation built as the projection from a
    product diagram: naturality and pointedness hold by construction."""
    target = rand_coslice_set_diagram(rng, max_vertices, max_edges, max_size, max_base)
    shape = target.shape
    base = target.base
    # pointed auxiliary factor (K, f_base) with a pointed self-map
    elems = tuple(f"k{n}" for n in range(1 + rng.randint(0, 2)))
    f_obj = FinSet(elems)
    f_base = FinFun(base, f_obj, {a: rng.choice(elems) for a in base})
    f_map = rand_finfun(rng, f_obj, f_obj)
    if not f_map.compose(f_base).equals_on(f_base):
        f_map = FinFun.identity(f_obj)
    objects = {}
    basepoints = {}
    arrows = {}
    components = {}
    for i in shape.vertices:
        pairs = tuple(f"({g},{k})" for g in target.objects[i] for k in f_obj)
        objects[i] = FinSet(pairs)
        basepoints[i] = FinFun(
            base,
            objects[i],
            {a: f"({target.basepoints[i](a)},{f_base(a)})" for a in base},
        )
        components[i] = FinFun(
            objects[i],
            target.objects[i],
            {f"({g},{k})": g for g in target.objects[i] for k in f_obj},
        )
    for e, i, j in shape.edges:
        arrows[e] = FinFun(
            objects[i],
            objects[j],
            {
                f"({g},{k})": f"({target.arrows[e](g)},{f_map(k)})"
                for g in target.objects[i]
                for k in f_obj
            },
        )
    source = CosliceSetDiagram(shape, base, objects, arrows, basepoints)
    return CosliceTransformation(source, target, components)
