import random

import pytest

from hocolim import homology, intlinalg, randgen
from hocolim.complexes import (
    POINT,
    CellMap,
    EdgeWord,
    TwoComplex,
    constant_map,
    identity_map,
    pi0,
)

CIRCLE = TwoComplex(("p",), (("a", "p", "p"),))
TORUS = TwoComplex(
    ("p",),
    (("a", "p", "p"), ("b", "p", "p")),
    (("f", (("a", 1), ("b", 1), ("a", -1), ("b", -1))),),
)
RP2 = TwoComplex(("p",), (("a", "p", "p"),), (("f", (("a", 1), ("a", 1))),))


class TestHomologyGroups:
    def test_point(self):
        h0, h1 = homology.homology_groups(POINT)
        assert str(h0) == "Z" and h1.is_trivial

    def test_circle(self):
        h0, h1 = homology.homology_groups(CIRCLE)
        assert str(h0) == "Z" and str(h1) == "Z"

    def test_torus(self):
        assert str(homology.homology_groups(TORUS)[1]) == "Z^2"

    def test_projective_plane(self):
        # boundary a^2 gives exponent sum 2 on the single loop
        assert str(homology.homology_groups(RP2)[1]) == "Z/2"

    def test_h0_rank_is_component_count(self):
        rng = random.Random(17)
        for _ in range(40):
            pieces = [randgen.rand_complex(rng, 3, prefix=f"{k}.") for k in range(rng.randint(1, 3))]
            from hocolim.complexes import disjoint_union

            total, _ = disjoint_union(pieces)
            h0 = homology.homology_groups(total)[0]
            assert h0.rank == pi0(total).count
            assert not h0.torsion

    def test_boundary_composability(self):
        rng = random.Random(18)
        for _ in range(40):
            x = randgen.rand_complex(rng, 6, allow_faces=True)
            cd = homology.boundary_matrices(x)
            if cd.d1 and cd.d2 and cd.d2[0]:
                prod = intlinalg.mat_mul(cd.d1, cd.d2)
                assert all(v == 0 for row in prod for v in row)


class TestCohomology:
    def test_point(self):
        assert homology.cohomology_h1(POINT).is_trivial

    def test_circle(self):
        assert str(homology.cohomology_h1(CIRCLE)) == "Z"

    def test_projective_plane(self):
        # universal coefficients: H^1 = Hom(H1, Z) = Hom(Z/2, Z) = 0
        assert homology.cohomology_h1(RP2).is_trivial

    def test_always_free(self):
        rng = random.Random(19)
        for _ in range(40):
            x = randgen.rand_complex(rng, 6, allow_faces=True)
            assert not homology.cohomology_h1(x).torsion

    def test_free_rank_matches_h1(self):
        rng = random.Random(20)
        for _ in range(40):
            x = randgen.rand_complex(rng, 6, allow_faces=True)
            assert homology.cohomology_h1(x).rank == homology.homology_groups(x)[1].rank

    def test_classes_are_cocycles(self):
        for cls in homology.cohomology_classes(TORUS):
            cd = homology.boundary_matrices(TORUS)
            delta1 = intlinalg.transpose(cd.d2)
            assert all(v == 0 for v in intlinalg.mat_vec(delta1, list(cls.representative)))


class TestInducedMaps:
    def test_identity(self):
        ind = homology.induced_h1(identity_map(TORUS))
        assert ind.matrix == [[1, 0], [0, 1]]
        assert ind.is_isomorphism()

    def test_degree_two(self):
        double = CellMap(CIRCLE, CIRCLE, {"p": "p"}, {"a": EdgeWord("p", (("a", 1), ("a", 1)))})
        ind = homology.induced_h1(double)
        assert ind.matrix == [[2]]
        assert not ind.is_isomorphism()

    def test_constant(self):
        ind = homology.induced_h1(constant_map(CIRCLE, POINT, "pt"))
        assert ind.matrix == []
        assert str(ind.source) == "Z"

    def test_cohomology_degree_two(self):
        double = CellMap(CIRCLE, CIRCLE, {"p": "p"}, {"a": EdgeWord("p", (("a", 1), ("a", 1)))})
        ind = homology.induced_cohomology_h1(double)
        assert ind.matrix == [[2]]

    def test_functoriality_on_honest_maps(self):
        rng = random.Random(23)
        from hocolim.complexes import compose_cell_maps

        for _ in range(25):
            x = randgen.rand_complex(rng, 4, allow_faces=False, prefix="x.")
            y = randgen.rand_complex(rng, 4, allow_faces=False, prefix="y.")
            z = randgen.rand_complex(rng, 4, allow_faces=False, prefix="z.")
            f = randgen.rand_cellmap(rng, x, y)
            g = randgen.rand_cellmap(rng, y, z)
            both = homology.induced_h1(compose_cell_maps(g, f))
            mf = homology.induced_h1(f)
            mg = homology.induced_h1(g)
            rows = len(both.matrix)
            cols = len(both.matrix[0]) if both.matrix else 0
            mid = len(mf.matrix)
            composed = [
                [sum(mg.matrix[i][k] * mf.matrix[k][j] for k in range(mid)) for j in range(cols)]
                for i in range(rows)
            ]
            assert both.matrix == composed


class TestWeakLimitErrors:
    def test_non_point_base_rejected(self):
        from hocolim.coslice import ADiagramCx, CosliceComplex
        from hocolim.errors import UnsupportedConfigurationError
        from hocolim.graphs import Graph

        base = TwoComplex(("a0", "a1"))
        obj = CosliceComplex(base, base, identity_map(base))
        shape = Graph(("v",))
        d = ADiagramCx(shape, base, {"v": obj}, {}, {})
        with pytest.raises(UnsupportedConfigurationError):
            homology.weak_limit_check(shape, d)
