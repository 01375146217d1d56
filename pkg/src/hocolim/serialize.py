"""JSON (de)serialization for graphs, complexes, maps, and diagrams.

File ordering is preserved and normative: list order in a document fixes
the canonical cell and element order of the loaded value, which in turn
fixes every deterministic choice downstream (spanning trees, class
representatives, generated cell ids).
"""

from __future__ import annotations

from .complexes import CellMap, EdgeWord, TwoComplex
from .coslice import ADiagramCx, CosliceComplex
from .errors import ValidationError
from .graphs import Graph
from .setmodel import CosliceSetDiagram, FinFun, FinSet, SetDiagram


def word_from_json(obj) -> EdgeWord:
    return EdgeWord.from_json(obj)


def cellmap_to_json(f: CellMap) -> dict:
    return f.to_json()


def cellmap_from_json(obj, source: TwoComplex, target: TwoComplex) -> CellMap:
    try:
        vertex_map = dict(obj["vertex_map"])
        edge_map = {e: EdgeWord.from_json(w) for e, w in obj["edge_map"].items()}
    except KeyError as exc:
        raise ValidationError(f"cell map document misses key {exc}") from exc
    return CellMap(source, target, vertex_map, edge_map)


def complex_diagram_from_json(obj) -> tuple[Graph, dict[str, TwoComplex], dict[str, CellMap]]:
    """Plain diagram of complexes: {"shape", "objects", "arrows"}."""
    shape = Graph.from_json(obj["shape"])
    objects = {i: TwoComplex.from_json(x) for i, x in obj["objects"].items()}
    for i in shape.vertices:
        if i not in objects:
            raise ValidationError(f"diagram misses object at {i!r}")
    arrows = {}
    for e, i, j in shape.edges:
        if e not in obj.get("arrows", {}):
            raise ValidationError(f"diagram misses arrow at {e!r}")
        arrows[e] = cellmap_from_json(obj["arrows"][e], objects[i], objects[j])
    return shape, objects, arrows


def adiagram_to_json(d: ADiagramCx) -> dict:
    return {
        "shape": d.shape.to_json(),
        "base": d.base.to_json(),
        "objects": {i: d.objects[i].total.to_json() for i in d.shape.vertices},
        "basepoints": {i: d.objects[i].basept.to_json() for i in d.shape.vertices},
        "arrows": {e: f.to_json() for e, f in d.arrows.items()},
        "pointedness": {
            e: {a: w.to_json() for a, w in words.items()}
            for e, words in d.pointedness.items()
        },
    }


def adiagram_from_json(obj) -> ADiagramCx:
    shape = Graph.from_json(obj["shape"])
    base = TwoComplex.from_json(obj["base"])
    totals = {i: TwoComplex.from_json(x) for i, x in obj["objects"].items()}
    objects = {}
    for i in shape.vertices:
        if i not in totals:
            raise ValidationError(f"diagram misses object at {i!r}")
        basept = cellmap_from_json(obj["basepoints"][i], base, totals[i])
        objects[i] = CosliceComplex(base, totals[i], basept)
    arrows = {}
    pointedness = {}
    for e, i, j in shape.edges:
        arrows[e] = cellmap_from_json(obj["arrows"][e], totals[i], totals[j])
        words = obj.get("pointedness", {}).get(e)
        if words is None:
            raise ValidationError(f"diagram misses pointedness words at {e!r}")
        pointedness[e] = {a: EdgeWord.from_json(w) for a, w in words.items()}
    return ADiagramCx(shape, base, objects, arrows, pointedness)


def set_diagram_to_json(d: SetDiagram) -> dict:
    return {
        "shape": d.shape.to_json(),
        "objects": {i: list(d.objects[i].elements) for i in d.shape.vertices},
        "arrows": {e: dict(sorted(f.mapping.items())) for e, f in d.arrows.items()},
    }


def set_diagram_from_json(obj) -> SetDiagram:
    shape = Graph.from_json(obj["shape"])
    objects = {i: FinSet(tuple(x)) for i, x in obj["objects"].items()}
    arrows = {}
    for e, i, j in shape.edges:
        arrows[e] = FinFun(objects[i], objects[j], dict(obj["arrows"][e]))
    return SetDiagram(shape, objects, arrows)


def coslice_set_diagram_to_json(d: CosliceSetDiagram) -> dict:
    out = set_diagram_to_json(SetDiagram(d.shape, d.objects, d.arrows))
    out["base"] = list(d.base.elements)
    out["basepoints"] = {i: dict(sorted(b.mapping.items())) for i, b in d.basepoints.items()}
    return out


def coslice_set_diagram_from_json(obj) -> CosliceSetDiagram:
    shape = Graph.from_json(obj["shape"])
    base = FinSet(tuple(obj["base"]))
    objects = {i: FinSet(tuple(x)) for i, x in obj["objects"].items()}
    arrows = {}
    for e, i, j in shape.edges:
        arrows[e] = FinFun(objects[i], objects[j], dict(obj["arrows"][e]))
    basepoints = {
        i: FinFun(base, objects[i], dict(obj["basepoints"][i])) for i in shape.vertices
    }
    return CosliceSetDiagram(shape, base, objects, arrows, basepoints)
