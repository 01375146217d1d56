"""The 0-truncated model: finite sets and exact verification by enumeration.

At the set level every path witness of the corresponding higher-dimensional
structure degenerates to an equality of functions, so colimits, limits,
pullbacks, the (surjection, injection) factorization system, and the
universal properties of coslice colimits are all decidable by brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionError, SizeLimitError, ValidationError
from .graphs import Graph, is_tree


@dataclass(frozen=True)
class FinSet:
    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValidationError("duplicate element ids")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def to_json(self):
        return list(self.elements)


@dataclass(frozen=True)
class FinFun:
    dom: FinSet
    cod: FinSet
    mapping: dict[str, str]

    def __post_init__(self):
        for x in self.dom:
            if x not in self.mapping:
                raise ValidationError(f"function misses {x!r}")
            if self.mapping[x] not in self.cod:
                raise ValidationError(f"value of {x!r} is outside the codomain")

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def compose(self, other: "FinFun") -> "FinFun":
        """self after other."""
        if other.cod != self.dom:
            raise ValidationError("composition mismatch")
        return FinFun(other.dom, self.cod, {x: self.mapping[other.mapping[x]] for x in other.dom})

    def is_surjective(self) -> bool:
        return set(self.mapping[x] for x in self.dom) == set(self.cod.elements)

    def is_injective(self) -> bool:
        return len(set(self.mapping[x] for x in self.dom)) == len(self.dom)

    def equals_on(self, other: "FinFun") -> bool:
        return all(self.mapping[x] == other.mapping[x] for x in self.dom)

    @staticmethod
    def identity(s: FinSet) -> "FinFun":
        return FinFun(s, s, {x: x for x in s})

    def to_json(self):
        return dict(sorted(self.mapping.items()))


def all_functions(dom: FinSet, cod: FinSet):
    """Every function dom -> cod, in lexicographic order of value tuples."""
    xs = dom.elements
    if not xs:
        yield FinFun(dom, cod, {})
        return
    if not cod.elements:
        return
    for values in itertools.product(cod.elements, repeat=len(xs)):
        yield FinFun(dom, cod, dict(zip(xs, values)))


@dataclass(frozen=True)
class SetDiagram:
    shape: Graph
    objects: dict[str, FinSet]
    arrows: dict[str, FinFun]

    def __post_init__(self):
        for i in self.shape.vertices:
            if i not in self.objects:
                raise ValidationError(f"diagram misses object at {i!r}")
        for e, i, j in self.shape.edges:
            f = self.arrows.get(e)
            if f is None:
                raise ValidationError(f"diagram misses arrow at {e!r}")
            if f.dom != self.objects[i] or f.cod != self.objects[j]:
                raise ValidationError(f"arrow {e!r} endpoints do not match its objects")


@dataclass(frozen=True)
class CosliceSet:
    """An object under A: a carrier with a basepoint map from the base."""

    base: FinSet
    carrier: FinSet
    basepoint: FinFun

    def __post_init__(self):
        if self.basepoint.dom != self.base or self.basepoint.cod != self.carrier:
            raise ValidationError("basepoint map endpoints are wrong")


@dataclass(frozen=True)
class AMap:
    """A map under A; the pointedness equation holds on the nose."""

    source: CosliceSet
    target: CosliceSet
    fun: FinFun

    def __post_init__(self):
        if self.source.base != self.target.base:
            raise ValidationError("A-map between different bases")
        if self.fun.dom != self.source.carrier or self.fun.cod != self.target.carrier:
            raise ValidationError("A-map endpoints are wrong")
        lhs = self.fun.compose(self.source.basepoint)
        if not lhs.equals_on(self.target.basepoint):
            raise ValidationError("A-map does not respect basepoints")


@dataclass(frozen=True)
class CosliceSetDiagram:
    shape: Graph
    base: FinSet
    objects: dict[str, FinSet]
    arrows: dict[str, FinFun]
    basepoints: dict[str, FinFun]  # b_i : A -> F_i

    def __post_init__(self):
        for i in self.shape.vertices:
            if i not in self.objects:
                raise ValidationError(f"diagram misses object at {i!r}")
            b = self.basepoints.get(i)
            if b is None:
                raise ValidationError(f"diagram misses basepoint map at {i!r}")
            if b.dom != self.base or b.cod != self.objects[i]:
                raise ValidationError(f"basepoint map at {i!r} has wrong endpoints")
        for e, i, j in self.shape.edges:
            f = self.arrows.get(e)
            if f is None:
                raise ValidationError(f"diagram misses arrow at {e!r}")
            if f.dom != self.objects[i] or f.cod != self.objects[j]:
                raise ValidationError(f"arrow {e!r} endpoints do not match its objects")
            if not f.compose(self.basepoints[i]).equals_on(self.basepoints[j]):
                raise ValidationError(f"arrow {e!r} is not pointed")

    def underlying(self) -> SetDiagram:
        return SetDiagram(self.shape, self.objects, self.arrows)

    def coslice_object(self, i: str) -> CosliceSet:
        return CosliceSet(self.base, self.objects[i], self.basepoints[i])


# ---------------------------------------------------------------------------
# Colimits and limits


def _quotient(tags: list[str], pairs) -> tuple[FinSet, dict[str, str]]:
    """Union-find quotient; class representative = least tag, carrier ordered
    by representative."""
    parent = {t: t for t in tags}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    members: dict[str, list[str]] = {}
    for t in tags:
        members.setdefault(find(t), []).append(t)
    rep = {}
    for group in members.values():
        least = min(group)
        for t in group:
            rep[t] = least
    carrier = FinSet(tuple(sorted(set(rep.values()))))
    return carrier, rep


@dataclass(frozen=True)
class SetColimit:
    set: FinSet
    injections: dict[str, FinFun]
    class_of: dict[str, str]  # tag "i:x" -> representative


def tag(i: str, x: str) -> str:
    return f"{i}:{x}"


def colim_set(d: SetDiagram) -> SetColimit:
    """Colimit as the quotient of the tagged disjoint union by the closure
    of (j, F_e x) ~ (i, x) over every edge e : i -> j."""
    tags = [tag(i, x) for i in d.shape.vertices for x in d.objects[i]]
    pairs = []
    for e, i, j in d.shape.edges:
        f = d.arrows[e]
        for x in d.objects[i]:
            pairs.append((tag(j, f(x)), tag(i, x)))
    carrier, rep = _quotient(tags, pairs)
    injections = {
        i: FinFun(d.objects[i], carrier, {x: rep[tag(i, x)] for x in d.objects[i]})
        for i in d.shape.vertices
    }
    return SetColimit(carrier, injections, rep)


@dataclass(frozen=True)
class SetLimit:
    set: FinSet
    projections: dict[str, FinFun]
    families: dict[str, dict[str, str]]  # element id -> vertex -> component


def lim_set(d: SetDiagram) -> SetLimit:
    """Matching families (alpha_i)_i with F_e(alpha_i) = alpha_j per edge."""
    vs = d.shape.vertices
    families = {}
    order = []
    for combo in itertools.product(*(d.objects[i].elements for i in vs)):
        alpha = dict(zip(vs, combo))
        if all(d.arrows[e](alpha[i]) == alpha[j] for e, i, j in d.shape.edges):
            key = "|".join(combo)
            families[key] = alpha
            order.append(key)
    carrier = FinSet(tuple(order))
    projections = {
        i: FinFun(carrier, d.objects[i], {k: families[k][i] for k in order}) for i in vs
    }
    return SetLimit(carrier, projections, families)


def pullback_coslice(f: AMap, g: AMap) -> tuple[CosliceSet, FinFun, FinFun]:
    """Pullback of X -f-> Z <-g- Y in the coslice: carrier {(x, y) | f x = g y},
    basepoint a |-> (b_X a, b_Y a); returns (object, projection to X,
    projection to Y)."""
    if f.target != g.target:
        raise ValidationError("pullback legs must share their target")
    x_obj, y_obj = f.source, g.source
    pairs = [
        (x, y)
        for x in x_obj.carrier
        for y in y_obj.carrier
        if f.fun(x) == g.fun(y)
    ]
    carrier = FinSet(tuple(f"({x},{y})" for x, y in pairs))
    base = x_obj.base
    basepoint = FinFun(
        base,
        carrier,
        {a: f"({x_obj.basepoint(a)},{y_obj.basepoint(a)})" for a in base},
    )
    p1 = FinFun(carrier, x_obj.carrier, {f"({x},{y})": x for x, y in pairs})
    p2 = FinFun(carrier, y_obj.carrier, {f"({x},{y})": y for x, y in pairs})
    return CosliceSet(base, carrier, basepoint), p1, p2


@dataclass(frozen=True)
class CosliceSetColimit:
    object: CosliceSet
    legs: dict[str, FinFun]  # F_i -> carrier
    class_of: dict[str, str]  # tags "A:a" and "i:x" -> representative


def coslice_colim_set(d: CosliceSetDiagram) -> CosliceSetColimit:
    """Colimit under A: quotient of A + Sigma_i F_i by the edge relations
    (j, F_e x) ~ (i, x) and the basepoint relations a ~ (i, b_i a)."""
    tags = [tag("A", a) for a in d.base]
    tags += [tag(i, x) for i in d.shape.vertices for x in d.objects[i]]
    pairs = []
    for e, i, j in d.shape.edges:
        f = d.arrows[e]
        for x in d.objects[i]:
            pairs.append((tag(j, f(x)), tag(i, x)))
    for i in d.shape.vertices:
        b = d.basepoints[i]
        for a in d.base:
            pairs.append((tag("A", a), tag(i, b(a))))
    carrier, rep = _quotient(tags, pairs)
    basepoint = FinFun(d.base, carrier, {a: rep[tag("A", a)] for a in d.base})
    legs = {
        i: FinFun(d.objects[i], carrier, {x: rep[tag(i, x)] for x in d.objects[i]})
        for i in d.shape.vertices
    }
    return CosliceSetColimit(CosliceSet(d.base, carrier, basepoint), legs, rep)


# ---------------------------------------------------------------------------
# The (surjection, injection) factorization system


def factorize(f: FinFun) -> tuple[FinSet, FinFun, FinFun]:
    """Epi-mono factorization through the image, in codomain order."""
    attained = set(f.mapping[x] for x in f.dom)
    image = FinSet(tuple(y for y in f.cod if y in attained))
    s = FinFun(f.dom, image, dict(f.mapping))
    t = FinFun(image, f.cod, {y: y for y in image})
    return image, s, t


def unique_filler(l: FinFun, r: FinFun, top: FinFun, bottom: FinFun) -> FinFun:
    """The unique diagonal d with d . l = top and r . d = bottom, for l
    surjective and r injective in a commuting square

        A --top--> C
        |l         |r
        B -bottom-> D
    """
    if not l.is_surjective():
        raise PreconditionError("left map must be surjective")
    if not r.is_injective():
        raise PreconditionError("right map must be injective")
    if not r.compose(top).equals_on(bottom.compose(l)):
        raise PreconditionError("square does not commute")
    mapping = {}
    for a in l.dom:
        b = l(a)
        v = top(a)
        if b in mapping and mapping[b] != v:
            raise PreconditionError("square admits no filler")  # unreachable when r injective
        mapping[b] = v
    d = FinFun(l.cod, top.cod, mapping)
    assert d.compose(l).equals_on(top)
    assert r.compose(d).equals_on(bottom)
    return d


def has_unique_filler(l: FinFun, r: FinFun, top: FinFun, bottom: FinFun) -> bool:
    """Brute-force: exactly one diagonal filler exists for the square."""
    count = 0
    for d in all_functions(l.cod, r.dom):
        if d.compose(l).equals_on(top) and r.compose(d).equals_on(bottom):
            count += 1
            if count > 1:
                return False
    return count == 1


# ---------------------------------------------------------------------------
# Universal properties by enumeration


def _pointed_functions(src: FinSet, b_src: FinFun, tgt: FinSet, b_tgt: FinFun):
    """Functions f : src -> tgt with f . b_src = b_tgt; basepoint-image
    positions are forced, the rest enumerated."""
    forced: dict[str, str] = {}
    for a in b_src.dom:
        x = b_src(a)
        v = b_tgt(a)
        if forced.get(x, v) != v:
            return
        forced[x] = v
    free = [x for x in src if x not in forced]
    if free and not tgt.elements:
        return
    for values in itertools.product(tgt.elements, repeat=len(free)):
        mapping = dict(forced)
        mapping.update(zip(free, values))
        yield FinFun(src, tgt, mapping)


def count_pointed_functions(src: FinSet, b_src: FinFun, tgt: FinSet, b_tgt: FinFun) -> int:
    forced: dict[str, str] = {}
    for a in b_src.dom:
        x = b_src(a)
        v = b_tgt(a)
        if forced.get(x, v) != v:
            return 0
        forced[x] = v
    free = sum(1 for x in src if x not in forced)
    return len(tgt.elements) ** free if free else 1


def enumerate_cocones(d: CosliceSetDiagram, t: CosliceSet):
    """All cocones under the diagram on tip t: pointed legs commuting with
    every arrow on the nose."""
    vs = d.shape.vertices
    leg_choices = [
        list(_pointed_functions(d.objects[i], d.basepoints[i], t.carrier, t.basepoint))
        for i in vs
    ]
    for combo in itertools.product(*leg_choices):
        legs = dict(zip(vs, combo))
        if all(
            legs[j].compose(d.arrows[e]).equals_on(legs[i]) for e, i, j in d.shape.edges
        ):
            yield legs


def verify_universal_property(
    d: CosliceSetDiagram, t: CosliceSet, enum_cap: int = 10**6
) -> bool:
    """Whether postcomposition with the colimiting cocone is a bijection
    from A-maps (colim -> t) to cocones under the diagram on t."""
    if t.base != d.base:
        raise ValidationError("tip must live under the same base")
    colim = coslice_colim_set(d)
    cost = count_pointed_functions(
        colim.object.carrier, colim.object.basepoint, t.carrier, t.basepoint
    )
    cocone_cost = 1
    for i in d.shape.vertices:
        cocone_cost *= count_pointed_functions(
            d.objects[i], d.basepoints[i], t.carrier, t.basepoint
        )
    cost += cocone_cost
    if cost > enum_cap:
        raise SizeLimitError(f"enumeration of {cost} functions exceeds the cap {enum_cap}")
    seen = set()
    for m in _pointed_functions(
        colim.object.carrier, colim.object.basepoint, t.carrier, t.basepoint
    ):
        legs = tuple(
            tuple(sorted(m.compose(colim.legs[i]).mapping.items())) for i in d.shape.vertices
        )
        if legs in seen:
            return False  # postcomposition is not injective
        seen.add(legs)
    cocones = set()
    for legs in enumerate_cocones(d, t):
        cocones.add(tuple(tuple(sorted(legs[i].mapping.items())) for i in d.shape.vertices))
    return seen == cocones


def postcompose_cocone(d: CosliceSetDiagram, colim: CosliceSetColimit, m: FinFun) -> dict:
    """The cocone obtained by postcomposing the colimiting cocone with m."""
    return {i: m.compose(colim.legs[i]) for i in d.shape.vertices}


# ---------------------------------------------------------------------------
# Universality (pullback stability)


def check_universality_plain(d: SetDiagram, f: FinFun, h: FinFun) -> dict:
    """Pullback stability of a plain colimit: compare colim_i(F_i x_V Y)
    with colim(F) x_V Y along the canonical map."""
    colim = colim_set(d)
    if f.dom != colim.set:
        raise ValidationError("f must start at the colimit")
    if f.cod != h.cod:
        raise ValidationError("f and h must share their codomain")
    y = h.dom
    pb_objects = {}
    pb_arrows = {}
    for i in d.shape.vertices:
        leg = f.compose(colim.injections[i])
        pairs = [(x, yy) for x in d.objects[i] for yy in y if leg(x) == h(yy)]
        pb_objects[i] = FinSet(tuple(f"({x},{yy})" for x, yy in pairs))
    for e, i, j in d.shape.edges:
        arr = d.arrows[e]
        pb_arrows[e] = FinFun(
            pb_objects[i],
            pb_objects[j],
            {
                f"({x},{yy})": f"({arr(x)},{yy})"
                for x in d.objects[i]
                for yy in y
                if f.compose(colim.injections[i])(x) == h(yy)
            },
        )
    side1 = colim_set(SetDiagram(d.shape, pb_objects, pb_arrows))
    side2_pairs = [(c, yy) for c in colim.set for yy in y if f(c) == h(yy)]
    comparison = {}
    well_defined = True
    for i in d.shape.vertices:
        for x in d.objects[i]:
            for yy in y:
                if f.compose(colim.injections[i])(x) != h(yy):
                    continue
                src = side1.injections[i](f"({x},{yy})")
                val = (colim.injections[i](x), yy)
                if comparison.get(src, val) != val:
                    well_defined = False
                comparison[src] = val
    bijective = (
        well_defined
        and len(comparison) == len(side1.set)
        and len(set(comparison.values())) == len(comparison)
        and set(comparison.values()) == set(side2_pairs)
    )
    return {
        "bijective": bijective,
        "well_defined": well_defined,
        "colim_of_pullbacks_size": len(side1.set),
        "pullback_of_colim_size": len(side2_pairs),
    }


def check_universality(d: CosliceSetDiagram, f: AMap, h: AMap) -> dict:
    """Pullback stability of a coslice colimit along f : colim -> V against
    h : Y -> V; bijective for tree shapes, may fail otherwise."""
    colim = coslice_colim_set(d)
    if f.source.carrier != colim.object.carrier:
        raise ValidationError("f must start at the coslice colimit")
    if f.target != h.target:
        raise ValidationError("f and h must share their target")
    y = h.source
    pb_objects = {}
    pb_basepoints = {}
    pb_proj = {}
    pb_arrows = {}
    for i in d.shape.vertices:
        leg = f.fun.compose(colim.legs[i])
        obj = CosliceSet(d.base, d.objects[i], d.basepoints[i])
        pb, p1, p2 = pullback_coslice(AMap(obj, f.target, leg), h)
        pb_objects[i] = pb.carrier
        pb_basepoints[i] = pb.basepoint
        pb_proj[i] = (p1, p2)
    for e, i, j in d.shape.edges:
        arr = d.arrows[e]
        p1, p2 = pb_proj[i]
        mapping = {
            key: f"({arr(p1(key))},{p2(key)})" for key in pb_objects[i]
        }
        pb_arrows[e] = FinFun(pb_objects[i], pb_objects[j], mapping)
    side1 = coslice_colim_set(
        CosliceSetDiagram(d.shape, d.base, pb_objects, pb_arrows, pb_basepoints)
    )
    side2_pairs = [
        (c, yy) for c in colim.object.carrier for yy in y.carrier if f.fun(c) == h.fun(yy)
    ]
    comparison = {}
    well_defined = True
    for a in d.base:
        src = side1.object.basepoint(a)
        val = (colim.object.basepoint(a), y.basepoint(a))
        if comparison.get(src, val) != val:
            well_defined = False
        comparison[src] = val
    for i in d.shape.vertices:
        p1, p2 = pb_proj[i]
        for key in pb_objects[i]:
            src = side1.legs[i](key)
            val = (colim.legs[i](p1(key)), p2(key))
            if comparison.get(src, val) != val:
                well_defined = False
            comparison[src] = val
    bijective = (
        well_defined
        and len(comparison) == len(side1.object.carrier)
        and len(set(comparison.values())) == len(comparison)
        and set(comparison.values()) == set(side2_pairs)
    )
    return {
        "bijective": bijective,
        "well_defined": well_defined,
        "colim_of_pullbacks_size": len(side1.object.carrier),
        "pullback_of_colim_size": len(side2_pairs),
        "shape_is_tree": is_tree(d.shape),
    }


# ---------------------------------------------------------------------------
# Preservation of surjections


@dataclass(frozen=True)
class CosliceTransformation:
    source: CosliceSetDiagram
    target: CosliceSetDiagram
    components: dict[str, FinFun]

    def __post_init__(self):
        if self.source.shape != self.target.shape:
            raise ValidationError("transformation requires a shared shape")
        if self.source.base != self.target.base:
            raise ValidationError("transformation requires a shared base")
        for i in self.source.shape.vertices:
            t = self.components.get(i)
            if t is None:
                raise ValidationError(f"transformation misses component at {i!r}")
            if t.dom != self.source.objects[i] or t.cod != self.target.objects[i]:
                raise ValidationError(f"component at {i!r} has wrong endpoints")
            if not t.compose(self.source.basepoints[i]).equals_on(self.target.basepoints[i]):
                raise ValidationError(f"component at {i!r} is not pointed")
        for e, i, j in self.source.shape.edges:
            lhs = self.components[j].compose(self.source.arrows[e])
            rhs = self.target.arrows[e].compose(self.components[i])
            if not lhs.equals_on(rhs):
                raise ValidationError(f"naturality fails at edge {e!r}")


def induced_colimit_map(delta: CosliceTransformation) -> FinFun:
    src = coslice_colim_set(delta.source)
    tgt = coslice_colim_set(delta.target)
    mapping = {}
    for a in delta.source.base:
        mapping[src.object.basepoint(a)] = tgt.object.basepoint(a)
    for i in delta.source.shape.vertices:
        comp = delta.components[i]
        for x in delta.source.objects[i]:
            c = src.legs[i](x)
            v = tgt.legs[i](comp(x))
            if mapping.get(c, v) != v:
                raise AssertionError("induced map is not well defined")
            mapping[c] = v
    return FinFun(src.object.carrier, tgt.object.carrier, mapping)


def preservation_surjectivity(delta: CosliceTransformation) -> bool:
    """Whether the induced map on coslice colimits is surjective; it must be
    whenever every component is surjective."""
    return induced_colimit_map(delta).is_surjective()
