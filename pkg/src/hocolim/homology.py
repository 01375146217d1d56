"""Integer (co)homology of 2-complexes in degrees 0 and 1, induced maps,
and the exactness check that cohomology turns finite pointed colimits into
weak limits.

All arithmetic is exact.  Generator bases are fixed by the deterministic
Smith normal form, so matrices of induced maps are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import intlinalg
from .complexes import CellMap, TwoComplex
from .errors import UnsupportedConfigurationError
from .intlinalg import FgAbelianGroup, Matrix


@dataclass(frozen=True)
class ChainData:
    """Cellular boundary maps: d1 (edges -> vertices), d2 (faces -> edges)."""

    d1: Matrix  # V x E
    d2: Matrix  # E x F


def boundary_matrices(x: TwoComplex) -> ChainData:
    v_index = {v: i for i, v in enumerate(x.vertices)}
    e_index = {e: i for i, (e, _, _) in enumerate(x.edges)}
    nv, ne, nf = len(x.vertices), len(x.edges), len(x.faces)
    d1 = intlinalg.matrix(nv, ne)
    for j, (e, s, d) in enumerate(x.edges):
        d1[v_index[d]][j] += 1
        d1[v_index[s]][j] -= 1
    d2 = intlinalg.matrix(ne, nf)
    for j, (f, boundary) in enumerate(x.faces):
        for e, sign in boundary:
            d2[e_index[e]][j] += sign
    if nf and ne:
        prod = intlinalg.mat_mul(d1, d2)
        assert all(all(v == 0 for v in row) for row in prod), "d1 * d2 != 0"
    return ChainData(d1, d2)


@dataclass(frozen=True)
class DegreeOneBasis:
    """H1 (covariant) or H^1 (contravariant) of a fixed complex, with an
    explicit basis: representative (co)cycles and a coordinate map.

    ``kernel`` spans the relevant (co)cycle lattice inside Z^edges;
    ``presentation`` quotients its coordinates by the (co)boundary image.
    Generator order: torsion generators (invariant-factor order), then free.
    """

    ambient: int  # number of edges
    kernel: tuple[tuple[int, ...], ...]  # basis vectors of the cycle lattice
    presentation: intlinalg.QuotientPresentation

    @property
    def group(self) -> FgAbelianGroup:
        return self.presentation.group

    @property
    def n_generators(self) -> int:
        return self.presentation.n_generators

    @cached_property
    def _kernel_matrix(self) -> Matrix:
        return [[col[i] for col in self.kernel] for i in range(self.ambient)]

    @cached_property
    def _solver(self) -> intlinalg.SnfSolver:
        return intlinalg.SnfSolver(self._kernel_matrix, self.ambient, len(self.kernel))

    def representatives(self) -> list[list[int]]:
        """Edge vectors representing the canonical generators."""
        kmat = self._kernel_matrix
        return [intlinalg.mat_vec(kmat, rep) for rep in self.presentation.gen_reps()]

    def coords(self, cycle: list[int]) -> list[int]:
        """Coordinates of a (co)cycle in the canonical generators."""
        sol = self._solver.solve(cycle)
        if sol is None:
            raise ValueError("vector is not a (co)cycle of this complex")
        return self.presentation.coords(sol)


def _degree_one_basis(kernel_of: Matrix, image_of: Matrix, ambient: int) -> DegreeOneBasis:
    kernel = intlinalg.kernel_basis(kernel_of)
    kmat = [[col[i] for col in kernel] for i in range(ambient)]
    solver = intlinalg.SnfSolver(kmat, ambient, len(kernel))
    relators = []
    img_cols = list(zip(*image_of)) if image_of and image_of[0] else []
    for col in img_cols:
        sol = solver.solve(list(col))
        assert sol is not None, "boundary image escapes the cycle lattice"
        relators.append(sol)
    pres = intlinalg.quotient_presentation(relators, len(kernel))
    return DegreeOneBasis(ambient, tuple(tuple(c) for c in kernel), pres)


def h1_basis(x: TwoComplex) -> DegreeOneBasis:
    """H1 = ker d1 / im d2."""
    cd = boundary_matrices(x)
    return _degree_one_basis(cd.d1, cd.d2, len(x.edges))


def cohomology_h1_basis(x: TwoComplex) -> DegreeOneBasis:
    """H^1 = ker(d2^T) / im(d1^T); always free for a 2-complex."""
    cd = boundary_matrices(x)
    delta1 = intlinalg.transpose(cd.d2) if cd.d2 and cd.d2[0] else []
    if not delta1:
        delta1 = [[0] * len(x.edges)] if x.edges else [[]]
    delta0 = intlinalg.transpose(cd.d1) if cd.d1 and cd.d1[0] else []
    if not delta0:
        delta0 = [[0] * len(x.vertices) for _ in range(len(x.edges))]
    return _degree_one_basis(delta1, delta0, len(x.edges))


def homology_groups(x: TwoComplex) -> tuple[FgAbelianGroup, FgAbelianGroup]:
    """(H0, H1) with integer coefficients.

    H0 is free of rank the number of path components; H1 is computed from
    the Smith form of the boundary maps.
    """
    cd = boundary_matrices(x)
    relators = intlinalg.transpose(cd.d1) if cd.d1 and cd.d1[0] else []
    h0 = intlinalg.quotient_presentation(relators, len(x.vertices)).group
    h1 = h1_basis(x).group
    return h0, h1


def cohomology_h1(x: TwoComplex) -> FgAbelianGroup:
    return cohomology_h1_basis(x).group


@dataclass(frozen=True)
class CohomClass:
    """A degree-1 cohomology class: an integer cochain over edges lying in
    the kernel of the coboundary, plus the group it generates within."""

    representative: tuple[int, ...]
    group: FgAbelianGroup


def cohomology_classes(x: TwoComplex) -> list[CohomClass]:
    basis = cohomology_h1_basis(x)
    return [CohomClass(tuple(rep), basis.group) for rep in basis.representatives()]


def chain_map_edges(f: CellMap) -> Matrix:
    """Matrix of f on 1-chains (edges of the target x edges of the source);
    each source edge contributes the signed exponent sums of its image word."""
    e_target = {e: i for i, (e, _, _) in enumerate(f.target.edges)}
    rows = len(f.target.edges)
    cols = len(f.source.edges)
    m = intlinalg.matrix(rows, cols)
    for j, (e, _, _) in enumerate(f.source.edges):
        for e2, sign in f.edge_map[e].steps:
            m[e_target[e2]][j] += sign
    return m


@dataclass(frozen=True)
class InducedMap:
    """A homomorphism between homology groups on their canonical generators."""

    matrix: Matrix  # target generators x source generators
    source: FgAbelianGroup
    target: FgAbelianGroup

    def is_isomorphism(self) -> bool:
        return intlinalg.hom_is_isomorphism(self.matrix, self.source, self.target)

    def is_surjective(self) -> bool:
        return intlinalg.hom_is_surjective(self.matrix, self.target)

    def to_json(self):
        return {
            "matrix": self.matrix,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
        }


def induced_h1(
    f: CellMap,
    source_basis: DegreeOneBasis | None = None,
    target_basis: DegreeOneBasis | None = None,
) -> InducedMap:
    """Covariant map H1(source) -> H1(target) on the canonical generators."""
    sb = source_basis or h1_basis(f.source)
    tb = target_basis or h1_basis(f.target)
    cm = chain_map_edges(f)
    cols = []
    for rep in sb.representatives():
        image = intlinalg.mat_vec(cm, rep) if cm else []
        cols.append(tb.coords(image))
    m = [[col[i] for col in cols] for i in range(tb.n_generators)]
    return InducedMap(m, sb.group, tb.group)


def induced_cohomology_h1(
    f: CellMap,
    source_basis: DegreeOneBasis | None = None,
    target_basis: DegreeOneBasis | None = None,
) -> InducedMap:
    """Contravariant map H^1(target) -> H^1(source), by dualizing the chain
    map: a cocycle pulls back along the edge-word images."""
    sb = source_basis or cohomology_h1_basis(f.source)
    tb = target_basis or cohomology_h1_basis(f.target)
    cm = chain_map_edges(f)  # target-edges x source-edges
    cmt = intlinalg.transpose(cm) if cm and cm[0] else [[0] * len(f.target.edges) for _ in range(len(f.source.edges))]
    cols = []
    for rep in tb.representatives():
        pulled = intlinalg.mat_vec(cmt, rep) if cmt and cmt[0] else [0] * sb.ambient
        cols.append(sb.coords(pulled))
    m = [[col[i] for col in cols] for i in range(sb.n_generators)]
    return InducedMap(m, tb.group, sb.group)


# ---------------------------------------------------------------------------
# Weak-limit (exactness) check for pointed colimits


def weak_limit_check(gamma, diagram) -> dict:
    """Verify that H^1 takes the pointed colimit of ``diagram`` to a weak
    limit: the image of the map induced by the colimit legs equals the
    kernel of the difference map assembled from the edge constraints.

    ``diagram`` is a complex-level A-diagram whose base must be a single
    point.  Returns a report with both lattices and the verdict.
    """
    from .coslice import construction_one

    if len(diagram.base.vertices) != 1 or diagram.base.edges:
        raise UnsupportedConfigurationError(
            "the weak-limit statement applies to pointed diagrams (base = point)"
        )
    built = construction_one(diagram)
    total = built.coslice.total
    bases = {i: cohomology_h1_basis(diagram.objects[i].total) for i in gamma.vertices}
    for i in gamma.vertices:
        assert not bases[i].group.torsion, "H^1 of a 2-complex must be free"
    colim_basis = cohomology_h1_basis(total)
    ranks = {i: bases[i].group.rank for i in gamma.vertices}
    offset = {}
    at = 0
    for i in gamma.vertices:
        offset[i] = at
        at += ranks[i]
    total_rank = at

    # legs H^1(colim) -> H^1(F_i), stacked into Delta
    leg_mats = {}
    for i in gamma.vertices:
        leg = built.cocone.legs[i]
        ind = induced_cohomology_h1(leg, source_basis=bases[i], target_basis=colim_basis)
        leg_mats[i] = ind.matrix
    n_colim = colim_basis.group.rank
    delta = intlinalg.matrix(total_rank, n_colim)
    for i in gamma.vertices:
        for r, row in enumerate(leg_mats[i]):
            delta[offset[i] + r] = list(row)

    # edge maps H^1(F_j) -> H^1(F_i) for g : i -> j, assembled into the
    # difference map (h_i)_i |-> (h_i - H1(F_g)(h_j))_g
    edge_rows = 0
    diff_rows = []
    cone_commutes = True
    for e, i, j in gamma.edges:
        arrow = diagram.arrows[e]
        ind = induced_cohomology_h1(arrow, source_basis=bases[i], target_basis=bases[j])
        block = [[0] * total_rank for _ in range(ranks[i])]
        for r in range(ranks[i]):
            block[r][offset[i] + r] += 1
            for c in range(ranks[j]):
                block[r][offset[j] + c] -= ind.matrix[r][c]
        diff_rows.extend(block)
        edge_rows += ranks[i]
        if ranks[i] == 0:
            composite = []
        elif ranks[j] == 0:
            composite = [[0] * n_colim for _ in range(ranks[i])]
        else:
            composite = intlinalg.mat_mul(ind.matrix, leg_mats[j])
        if not intlinalg.mat_eq(composite, leg_mats[i]):
            cone_commutes = False
    diff = diff_rows if diff_rows else [[0] * total_rank]

    image_gens = delta
    kernel_gens_cols = intlinalg.kernel_basis(diff)
    kernel_gens = [[col[i] for col in kernel_gens_cols] for i in range(total_rank)]
    if not kernel_gens:
        kernel_gens = [[] for _ in range(total_rank)]
    exact = intlinalg.subgroup_equal(image_gens, kernel_gens)
    return {
        "exact": exact and cone_commutes,
        "cone_commutes": cone_commutes,
        "colimit_h1_dual": colim_basis.group.to_json(),
        "object_h1_dual": {i: bases[i].group.to_json() for i in gamma.vertices},
        "delta_matrix": delta,
        "image_rank": len(intlinalg.hermite_normal_form(image_gens)[0]) if total_rank else 0,
        "kernel_rank": len(intlinalg.hermite_normal_form(kernel_gens)[0]) if total_rank else 0,
    }
