import random

import pytest

from hocolim import homology, randgen
from hocolim.complexes import (
    POINT,
    EdgeWord,
    TwoComplex,
    compose_cell_maps,
    constant_map,
    euler_characteristic,
    identity_map,
    pi0,
    pushout,
)
from hocolim.coslice import (
    ADiagramCx,
    CosliceComplex,
    augmented_diagram,
    base_as_wedge,
    build_psi,
    check_connectivity,
    check_tree_creation,
    colim_cx,
    colim_map,
    colim_morphism_underlying,
    construction_one,
    construction_two,
    coslice_coproduct,
    fold_map,
    induced_pi0,
    pi0_diagram,
    t_f_map,
    truncation_compatibility,
)
from hocolim.errors import PreconditionError
from hocolim.graphs import LOOP, SPAN, Graph
from hocolim.selftest import point_diagram_over_loop

CIRCLE = TwoComplex(("p",), (("a", "p", "p"),))
PT_COSLICE = CosliceComplex(POINT, POINT, identity_map(POINT))
CIRCLE_COSLICE = CosliceComplex(POINT, CIRCLE, constant_map(POINT, CIRCLE, "p"))


def h1(x):
    return homology.homology_groups(x)[1]


class TestColimCx:
    def test_single_vertex(self):
        shape = Graph(("v",))
        col = colim_cx(shape, {"v": CIRCLE}, {})
        assert len(col.total.vertices) == 1
        assert str(h1(col.total)) == "Z"

    def test_loop_of_point_is_circle(self):
        col = colim_cx(LOOP, {"v": POINT}, {"e": identity_map(POINT)})
        assert len(col.total.vertices) == 1 and len(col.total.edges) == 1
        assert str(h1(col.total)) == "Z"

    def test_span_of_points_contractible(self):
        objects = {"l": POINT, "m": POINT, "r": POINT}
        arrows = {"a": identity_map(POINT), "b": identity_map(POINT)}
        col = colim_cx(SPAN, objects, arrows)
        assert pi0(col.total).count == 1
        assert h1(col.total).is_trivial

    def test_po_colim_square(self):
        # span-shaped diagrams: the telescope and the double mapping
        # cylinder agree on components and H1; their Euler counts differ by
        # exactly the apex face count (the telescope keeps the apex cells)
        rng = random.Random(61)
        for _ in range(30):
            fm = randgen.rand_complex(rng, 4, allow_faces=True, prefix="m.")
            fl = randgen.rand_complex(rng, 4, allow_faces=True, prefix="l.")
            fr = randgen.rand_complex(rng, 4, allow_faces=True, prefix="r.")
            f = randgen.rand_cellmap(rng, fm, fl)
            g = randgen.rand_cellmap(rng, fm, fr)
            col = colim_cx(SPAN, {"l": fl, "m": fm, "r": fr}, {"a": f, "b": g})
            po = pushout(f, g)
            assert pi0(col.total).count == pi0(po.complex).count
            assert h1(col.total) == h1(po.complex)
            assert euler_characteristic(col.total) == euler_characteristic(po.complex) + len(fm.faces)


class TestFoldAndPsi:
    def test_fold_single_vertex_identity(self):
        shape = Graph(("v",))
        colim, fold = fold_map(shape, CIRCLE)
        assert len(colim.total.vertices) == len(CIRCLE.vertices)
        ind = homology.induced_h1(fold)
        assert ind.is_isomorphism()

    def test_fold_over_tree_is_equivalence_on_invariants(self):
        rng = random.Random(62)
        for _ in range(20):
            shape = randgen.rand_tree_graph(rng, 5)
            a = randgen.rand_complex(rng, 4, allow_faces=True)
            colim, fold = fold_map(shape, a)
            assert induced_pi0(fold)[1]
            assert homology.induced_h1(fold).is_isomorphism()

    def test_fold_over_loop_collapses_circle(self):
        colim, fold = fold_map(LOOP, POINT)
        assert str(h1(colim.total)) == "Z"
        assert h1(fold.target).is_trivial

    def test_psi_kappa_formula_degenerates_at_point(self):
        d = point_diagram_over_loop()
        _, colim_f, psi = build_psi(d)
        # empty pointedness words: the connecting edge maps to the
        # connecting edge on the nose
        w = psi.edge_map["k:e:pt"]
        assert w.steps == (("k:e:pt", 1),)

    def test_psi_injective_on_vertices_for_identity_span(self):
        d = ADiagramCx(
            SPAN,
            POINT,
            {"l": PT_COSLICE, "m": PT_COSLICE, "r": PT_COSLICE},
            {"a": identity_map(POINT), "b": identity_map(POINT)},
            {"a": {"pt": EdgeWord("pt")}, "b": {"pt": EdgeWord("pt")}},
        )
        _, _, psi = build_psi(d)
        values = list(psi.vertex_map.values())
        assert len(set(values)) == len(values)


class TestConstructionOne:
    def test_loop_point_trivial(self):
        c1 = construction_one(point_diagram_over_loop())
        assert pi0(c1.coslice.total).count == 1
        assert h1(c1.coslice.total).is_trivial

    def test_cocone_data_well_formed(self):
        rng = random.Random(63)
        shape = randgen.rand_graph(rng, 3, 3)
        d = randgen.rand_adiagram(rng, shape, POINT, 4, allow_faces=True)
        c1 = construction_one(d)
        # commuting words run from leg_j(F_e x) to leg_i(x)
        for (e, x), w in c1.cocone.commuting.items():
            i, j = d.shape.src(e), d.shape.dst(e)
            arrow = d.arrows[e]
            assert w.start == c1.cocone.legs[j].vertex_map[arrow.vertex_map[x]]
            assert c1.coslice.total.word_end(w) == c1.cocone.legs[i].vertex_map[x]

    def test_tree_shape_inr_iso(self):
        rng = random.Random(64)
        for _ in range(15):
            shape = randgen.rand_tree_graph(rng, 5)
            base = randgen.rand_complex(rng, 3, allow_faces=True, prefix="A.")
            d = randgen.rand_adiagram(rng, shape, base, 5, allow_faces=True)
            rep = check_tree_creation(d)
            assert rep["ok"]

    def test_tree_creation_requires_tree(self):
        with pytest.raises(PreconditionError):
            check_tree_creation(point_diagram_over_loop())


class TestWedges:
    def test_singleton_wedge_invariants(self):
        w = coslice_coproduct(("c",), {"c": CIRCLE_COSLICE})
        assert pi0(w.coslice.total).count == 1
        assert h1(w.coslice.total) == h1(CIRCLE)

    def test_figure_eight(self):
        w = coslice_coproduct(("c1", "c2"), {"c1": CIRCLE_COSLICE, "c2": CIRCLE_COSLICE})
        assert str(h1(w.coslice.total)) == "Z^2"

    def test_empty_index(self):
        w = coslice_coproduct((), {}, base=CIRCLE)
        assert pi0(w.coslice.total).count == 1
        assert h1(w.coslice.total) == h1(CIRCLE)

    def test_base_as_wedge(self):
        bw = base_as_wedge(CIRCLE)
        assert bw.total is CIRCLE


class TestAugmentedDiagram:
    def test_discrete_matches_coproduct(self):
        delta = Graph(("u", "w"))
        dg = ADiagramCx(delta, POINT, {"u": CIRCLE_COSLICE, "w": CIRCLE_COSLICE}, {}, {})
        shape, objects, arrows = augmented_diagram(delta, dg)
        plain = colim_cx(shape, objects, arrows)
        wedge = coslice_coproduct(("u", "w"), {"u": CIRCLE_COSLICE, "w": CIRCLE_COSLICE})
        assert pi0(plain.total).count == pi0(wedge.coslice.total).count
        assert h1(plain.total) == h1(wedge.coslice.total)

    def test_single_arrow_gives_circle(self):
        delta = Graph(("u", "w"), (("e", "u", "w"),))
        dg = ADiagramCx(
            delta,
            POINT,
            {"u": PT_COSLICE, "w": PT_COSLICE},
            {"e": identity_map(POINT)},
            {"e": {"pt": EdgeWord("pt")}},
        )
        shape, objects, arrows = augmented_diagram(delta, dg)
        plain = colim_cx(shape, objects, arrows)
        assert str(h1(plain.total)) == "Z"
        c1 = construction_one(dg)
        assert h1(c1.coslice.total).is_trivial

    def test_empty_delta(self):
        delta = Graph(())
        dg = ADiagramCx(delta, CIRCLE, {}, {}, {})
        shape, objects, arrows = augmented_diagram(delta, dg)
        assert len(shape.vertices) == 1
        col = colim_cx(shape, objects, arrows)
        assert h1(col.total) == h1(CIRCLE)


class TestConstructionTwo:
    def test_edge_free_shape_degenerates_to_coproduct(self):
        shape = Graph(("u", "w"))
        d = ADiagramCx(shape, POINT, {"u": CIRCLE_COSLICE, "w": CIRCLE_COSLICE}, {}, {})
        c2 = construction_two(d)
        wedge = coslice_coproduct(("u", "w"), {"u": CIRCLE_COSLICE, "w": CIRCLE_COSLICE})
        assert pi0(c2.coslice.total).count == pi0(wedge.coslice.total).count
        assert h1(c2.coslice.total) == h1(wedge.coslice.total)

    def test_loop_point(self):
        c2 = construction_two(point_diagram_over_loop())
        assert pi0(c2.coslice.total).count == 1
        assert h1(c2.coslice.total).is_trivial

    def test_agreement_with_construction_one(self):
        rng = random.Random(65)
        for trial in range(25):
            shape = randgen.rand_graph(rng, 3, 3)
            base = TwoComplex(tuple(f"a{k}" for k in range(rng.randint(1, 2))))
            d = randgen.rand_adiagram(rng, shape, base, 4, allow_faces=False)
            c1 = construction_one(d)
            c2 = construction_two(d)
            assert pi0(c1.coslice.total).count == pi0(c2.coslice.total).count
            assert euler_characteristic(c1.coslice.total) == euler_characteristic(c2.coslice.total)
            assert h1(c1.coslice.total) == h1(c2.coslice.total)


class TestComparisonMap:
    def test_loop_point_iso(self):
        d = point_diagram_over_loop()
        t = t_f_map(d)
        ind = homology.induced_h1(t)
        assert ind.source.is_trivial and ind.target.is_trivial
        assert ind.is_isomorphism()
        assert induced_pi0(t)[1]

    def test_edge_free_shape(self):
        shape = Graph(("u", "w"))
        d = ADiagramCx(shape, POINT, {"u": CIRCLE_COSLICE, "w": PT_COSLICE}, {}, {})
        t = t_f_map(d)
        assert induced_pi0(t)[1]
        assert homology.induced_h1(t).is_isomorphism()

    def test_random_unimodular(self):
        rng = random.Random(66)
        for _ in range(15):
            shape = randgen.rand_graph(rng, 3, 3)
            d = randgen.rand_adiagram(rng, shape, POINT, 4, allow_faces=True)
            t = t_f_map(d)
            assert homology.induced_h1(t).is_isomorphism()
            assert induced_pi0(t)[1]


class TestColimMap:
    def test_identity_morphism(self):
        rng = random.Random(67)
        shape = randgen.rand_graph(rng, 3, 2)
        d = randgen.rand_adiagram(rng, shape, POINT, 3, allow_faces=True)
        ident = randgen.inclusion_admorphism(random.Random(0), d, 0)
        # zero extra cells: the inclusion is the identity morphism
        f = colim_map(ident)
        ind = homology.induced_h1(f)
        assert ind.is_isomorphism()
        n = ind.matrix and len(ind.matrix)
        for i in range(len(ind.matrix)):
            for j in range(len(ind.matrix[0])):
                assert ind.matrix[i][j] == (1 if i == j else 0)

    def test_collapse_is_zero_on_h1(self):
        rng = random.Random(68)
        shape = SPAN
        d = randgen.rand_adiagram(rng, shape, POINT, 4, allow_faces=False)
        delta = randgen.collapse_admorphism(d)
        ind = homology.induced_h1(colim_map(delta))
        assert all(v == 0 for row in ind.matrix for v in row)

    def test_functoriality_on_h1(self):
        rng = random.Random(69)
        for _ in range(10):
            shape = randgen.rand_graph(rng, 3, 2)
            d = randgen.rand_adiagram(rng, shape, POINT, 3, allow_faces=True)
            d1 = randgen.inclusion_admorphism(rng, d, 2)
            d2 = randgen.inclusion_admorphism(rng, d1.target, 2)
            comp = randgen.compose_admorphisms(d2, d1)
            lhs = homology.induced_h1(colim_map(comp))
            rhs = homology.induced_h1(
                compose_cell_maps(colim_map(d2), colim_map(d1))
            )
            assert lhs.matrix == rhs.matrix
            assert lhs.source == rhs.source and lhs.target == rhs.target

    def test_triangle_with_psi(self):
        rng = random.Random(70)
        for _ in range(10):
            shape = randgen.rand_graph(rng, 3, 2)
            d = randgen.rand_adiagram(rng, shape, POINT, 3, allow_faces=True)
            delta = randgen.inclusion_admorphism(rng, d, 2)
            _, _, psi_f = build_psi(delta.source)
            _, _, psi_g = build_psi(delta.target)
            hat = colim_morphism_underlying(delta)
            lhs = compose_cell_maps(hat, psi_f)
            assert homology.induced_h1(lhs).matrix == homology.induced_h1(psi_g).matrix
            assert induced_pi0(lhs)[0] == induced_pi0(psi_g)[0]


class TestConnectivityAndTruncation:
    def test_all_points_connected(self):
        rng = random.Random(71)
        for _ in range(10):
            shape = randgen.rand_graph(rng, 3, 3)
            d = randgen.rand_adiagram(rng, shape, POINT, 1, allow_faces=False)
            assert check_connectivity(d)["ok"]

    def test_counterexample_mode(self):
        # the plain colimit over the loop keeps an essential circle
        col = colim_cx(LOOP, {"v": POINT}, {"e": identity_map(POINT)})
        assert str(h1(col.total)) == "Z"

    def test_random_connected(self):
        rng = random.Random(72)
        for _ in range(20):
            shape = randgen.rand_graph(rng, 3, 3)
            d = randgen.rand_adiagram(rng, shape, POINT, 4, allow_faces=True)
            assert check_connectivity(d)["ok"]

    def test_truncation_bijection(self):
        rng = random.Random(73)
        for _ in range(25):
            shape = randgen.rand_graph(rng, 3, 3)
            base = TwoComplex(tuple(f"a{k}" for k in range(rng.randint(1, 2))))
            d = randgen.rand_adiagram(rng, shape, base, 4, allow_faces=True)
            assert truncation_compatibility(d)["bijective"]

    def test_truncation_natural_in_morphisms(self):
        # pi0(colim_map) corresponds to the set-level induced map through
        # the canonical bijections of the truncation comparison
        from hocolim.setmodel import (
            CosliceTransformation,
            FinFun,
            coslice_colim_set,
            induced_colimit_map,
        )

        rng = random.Random(74)
        for _ in range(10):
            shape = randgen.rand_graph(rng, 2, 2)
            d = randgen.rand_adiagram(rng, shape, POINT, 3, allow_faces=False)
            delta = randgen.inclusion_admorphism(rng, d, 2)
            c_src = construction_one(delta.source)
            c_tgt = construction_one(delta.target)
            f = colim_map(delta, c_src, c_tgt)
            cx_map, _ = induced_pi0(f)

            src_set = pi0_diagram(delta.source)
            tgt_set = pi0_diagram(delta.target)
            parts_src = {i: pi0(delta.source.objects[i].total) for i in shape.vertices}
            parts_tgt = {i: pi0(delta.target.objects[i].total) for i in shape.vertices}
            components = {
                i: FinFun(
                    src_set.objects[i],
                    tgt_set.objects[i],
                    {
                        c: parts_tgt[i].rep(delta.components[i].vertex_map[c])
                        for c in src_set.objects[i]
                    },
                )
                for i in shape.vertices
            }
            set_map = induced_colimit_map(
                CosliceTransformation(src_set, tgt_set, components)
            )
            src_col = coslice_colim_set(src_set)
            tgt_col = coslice_colim_set(tgt_set)
            src_cx = pi0(c_src.coslice.total)
            tgt_cx = pi0(c_tgt.coslice.total)

            def bijection(d_cx, parts, col, cx_part):
                out = {}
                out[cx_part.rep("l:pt")] = col.object.basepoint("pt")
                for i in d_cx.shape.vertices:
                    for x in d_cx.objects[i].total.vertices:
                        out[cx_part.rep(f"r:o:{i}:{x}")] = col.legs[i](parts[i].rep(x))
                return out

            phi_src = bijection(delta.source, parts_src, src_col, src_cx)
            phi_tgt = bijection(delta.target, parts_tgt, tgt_col, tgt_cx)
            for cls, image_cls in cx_map.items():
                assert phi_tgt[image_cls] == set_map(phi_src[cls])
