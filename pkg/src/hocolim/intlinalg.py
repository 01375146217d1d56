"""Exact integer matrix algebra.

Matrices are lists of rows of Python ints (arbitrary precision), viewed as
homomorphisms Z^cols -> Z^rows acting on column vectors.  The one global
convention, used by every consumer in this package: when a matrix presents an
abelian group, *columns index generators and rows index relators*, so the
presented group is Z^cols / (row space).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Matrix = list[list[int]]


def matrix(rows: int, cols: int, entries=None) -> Matrix:
    if entries is None:
        return [[0] * cols for _ in range(rows)]
    m = [list(map(int, r)) for r in entries]
    if len(m) != rows or any(len(r) != cols for r in m):
        raise ValueError(f"expected {rows}x{cols} entries")
    return m


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def shape(m: Matrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    r, c = shape(a)
    if len(v) != c:
        raise ValueError("dimension mismatch")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(m: Matrix) -> Matrix:
    return [list(r) for r in zip(*m)] if m and m[0] else [[] for _ in range(shape(m)[1])] if m else []


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(ra == rb for ra, rb in zip(a, b))


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


def _min_abs_pivot(m: Matrix, t: int) -> tuple[int, int] | None:
    """Smallest |entry| != 0 in m[t:,t:], ties broken row-major."""
    best = None
    rows, cols = shape(m)
    for i in range(t, rows):
        row = m[i]
        for j in range(t, cols):
            v = row[j]
            if v != 0:
                a = abs(v)
                if best is None or a < best[0]:
                    best = (a, i, j)
    if best is None:
        return None
    return best[1], best[2]


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with D = U*m*V, U and V unimodular, D diagonal
    with d1 | d2 | ... and every di >= 0.

    Pivot choice is deterministic (smallest absolute nonzero entry, then
    row-major), so the output is reproducible.
    """
    rows, cols = shape(m)
    d = [row[:] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst -= q * row_src
        if q:
            drow, srow = d[dst], d[src]
            for k in range(cols):
                drow[k] -= q * srow[k]
            urow, usrow = u[dst], u[src]
            for k in range(rows):
                urow[k] -= q * usrow[k]

    def add_col(src, dst, q):
        if q:
            for row in d:
                row[dst] -= q * row[src]
            for row in v:
                row[dst] -= q * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    n = min(rows, cols)
    for t in range(n):
        while True:
            pos = _min_abs_pivot(d, t)
            if pos is None:
                break
            swap_rows(t, pos[0])
            swap_cols(t, pos[1])
            if d[t][t] < 0:
                negate_row(t)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(t, i, d[i][t] // p)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(t, j, d[t][j] // p)
                    if d[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the remaining block for the divisibility chain
            witness = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % p:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            add_row(witness, t, -1)
        if d[t][t] == 0:
            break
    return u, d, v


def snf_diagonal(m: Matrix) -> list[int]:
    _, d, _ = smith_normal_form(m)
    n = min(shape(d))
    return [d[i][i] for i in range(n)]


def kernel_basis(m: Matrix) -> list[list[int]]:
    """Basis (as column vectors) of {x : m*x = 0}.

    The basis spans a pure sublattice (a direct summand) of Z^cols, since it
    consists of columns of a unimodular matrix.
    """
    rows, cols = shape(m)
    _, d, v = smith_normal_form(m)
    n = min(rows, cols)
    free = [t for t in range(n) if d[t][t] == 0] + list(range(n, cols))
    return [[v[i][t] for i in range(cols)] for t in free]


class SnfSolver:
    """Reusable exact solver for m*x = rhs, factoring m once."""

    def __init__(self, m: Matrix, rows: int | None = None, cols: int | None = None):
        r, c = shape(m)
        self.rows = rows if rows is not None else r
        self.cols = cols if cols is not None else c
        self.u, self.d, self.v = smith_normal_form(m)

    def solve(self, rhs: list[int]) -> list[int] | None:
        if len(rhs) != self.rows:
            raise ValueError("dimension mismatch")
        w = mat_vec(self.u, rhs) if self.u else []
        y = [0] * self.cols
        n = min(self.rows, self.cols)
        for t in range(n):
            dt = self.d[t][t]
            if dt == 0:
                if w[t] != 0:
                    return None
            else:
                if w[t] % dt:
                    return None
                y[t] = w[t] // dt
        for t in range(n, self.rows):
            if w[t] != 0:
                return None
        return mat_vec(self.v, y) if self.v else []


def solve(m: Matrix, rhs: list[int]) -> list[int] | None:
    """Some integer x with m*x = rhs, or None when no solution exists."""
    return SnfSolver(m).solve(rhs)


def column_span_contains(m: Matrix, vec: list[int]) -> bool:
    return solve(m, vec) is not None


# ---------------------------------------------------------------------------
# Hermite normal form and lattice comparison


def hermite_normal_form(m: Matrix) -> Matrix:
    """Canonical column-style HNF of the lattice spanned by the columns of m.

    The result is in column echelon form with positive pivots descending the
    rows, entries left of each pivot reduced into [0, pivot), and zero
    columns dropped.  Two generating sets span the same lattice iff their
    HNFs are identical.
    """
    rows, cols = shape(m)
    a = [row[:] for row in m]

    def col(j):
        return [a[i][j] for i in range(rows)]

    k = 0  # next pivot column slot
    for r in range(rows):
        # clear row r across columns >= k by gcd column operations
        piv = None
        for j in range(k, cols):
            if a[r][j] != 0:
                piv = j
                break
        if piv is None:
            continue
        for j in range(piv + 1, cols):
            while a[r][j] != 0:
                q = a[r][piv] // a[r][j]
                for i in range(rows):
                    a[i][piv] -= q * a[i][j]
                for i in range(rows):
                    a[i][piv], a[i][j] = a[i][j], a[i][piv]
        if piv != k:
            for i in range(rows):
                a[i][piv], a[i][k] = a[i][k], a[i][piv]
        if a[r][k] < 0:
            for i in range(rows):
                a[i][k] = -a[i][k]
        p = a[r][k]
        for j in range(k):
            q = a[r][j] // p
            if q:
                for i in range(rows):
                    a[i][j] -= q * a[i][k]
        k += 1
        if k == cols:
            break
    out = []
    for j in range(cols):
        c = col(j)
        if any(c):
            out.append(c)
    # columns back to a rows x len(out) matrix
    return [[c[i] for c in out] for i in range(rows)]


def subgroup_equal(gens1: Matrix, gens2: Matrix) -> bool:
    """Whether two sets of column generators span the same sublattice.

    Both matrices must share the ambient dimension (row count).  Decided by
    comparing canonical Hermite normal forms.
    """
    r1, _ = shape(gens1)
    r2, _ = shape(gens2)
    if r1 != r2:
        raise ValueError(f"ambient dimension mismatch: {r1} vs {r2}")
    return mat_eq(hermite_normal_form(gens1), hermite_normal_form(gens2))


# ---------------------------------------------------------------------------
# Finitely generated abelian groups


@dataclass(frozen=True)
class FgAbelianGroup:
    """Canonical form Z^rank x Z/d1 x ... x Z/dk with 2 <= d1 | d2 | ... | dk."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        prev = None
        for t in self.torsion:
            if t < 2:
                raise ValueError("torsion factors must be >= 2")
            if prev is not None and t % prev:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = t

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def group_from_diagonal(diag: list[int], n_generators: int) -> FgAbelianGroup:
    """Group Z^n / <d_i * e_i> read off a Smith diagonal."""
    nonzero = [d for d in diag if d != 0]
    torsion = tuple(sorted(abs(d) for d in nonzero if abs(d) > 1))
    return FgAbelianGroup(rank=n_generators - len(nonzero), torsion=torsion)


@dataclass(frozen=True)
class QuotientPresentation:
    """Z^n modulo the row space of a relator matrix, with explicit coordinates.

    ``group`` is the canonical form.  ``gen_reps`` are representatives in Z^n
    of the canonical generators (torsion generators first, in invariant-factor
    order, then free generators); ``coords`` maps any ambient vector to its
    coordinate tuple in those generators (torsion coordinates reduced mod the
    factor).
    """

    ambient: int
    group: FgAbelianGroup
    _u: tuple[tuple[int, ...], ...]
    _uinv: tuple[tuple[int, ...], ...]
    _torsion_idx: tuple[int, ...]
    _free_idx: tuple[int, ...]

    @property
    def n_generators(self) -> int:
        return len(self._torsion_idx) + len(self._free_idx)

    def gen_reps(self) -> list[list[int]]:
        uinv = self._uinv
        out = []
        for t in self._torsion_idx + self._free_idx:
            out.append([uinv[i][t] for i in range(self.ambient)])
        return out

    def coords(self, vec: list[int]) -> list[int]:
        if len(vec) != self.ambient:
            raise ValueError("dimension mismatch")
        w = mat_vec([list(r) for r in self._u], vec)
        out = []
        for k, t in enumerate(self._torsion_idx):
            out.append(w[t] % self.group.torsion[k])
        for t in self._free_idx:
            out.append(w[t])
        return out


def quotient_presentation(relators: Matrix, n_generators: int) -> QuotientPresentation:
    """Present Z^n_generators modulo the row space of ``relators``.

    ``relators`` has n_generators columns (the global convention); an empty
    relator list is allowed.
    """
    if relators and len(relators[0]) != n_generators:
        raise ValueError("relator width must equal the generator count")
    n = n_generators
    rel_t = transpose(relators) if relators else [[] for _ in range(n)]
    # columns of rel_t are the relation vectors inside Z^n
    u, d, _ = smith_normal_form(rel_t)
    ncols = len(relators)
    diag = [d[i][i] for i in range(min(n, ncols))]
    torsion_idx = []
    factors = []
    free_idx = []
    for i in range(n):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            free_idx.append(i)
        elif di > 1:
            torsion_idx.append(i)
            factors.append(di)
    group = FgAbelianGroup(rank=len(free_idx), torsion=tuple(factors))
    # inverse of u, exact: u is unimodular
    uinv = _unimodular_inverse(u)
    return QuotientPresentation(
        ambient=n,
        group=group,
        _u=tuple(tuple(r) for r in u),
        _uinv=tuple(tuple(r) for r in uinv),
        _torsion_idx=tuple(torsion_idx),
        _free_idx=tuple(free_idx),
    )


def _unimodular_inverse(u: Matrix) -> Matrix:
    n, c = shape(u)
    if n != c:
        raise ValueError("not square")
    aug = [row[:] + ident for row, ident in zip(u, identity(n))]
    # integer Gauss-Jordan; pivots are +-1 up to unimodular row ops
    for col in range(n):
        piv = None
        for i in range(col, n):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        # reduce pivot to +-1 via gcd steps with other rows
        while abs(aug[col][col]) != 1:
            cand = None
            for i in range(col + 1, n):
                if aug[i][col] != 0:
                    cand = i
                    break
            if cand is None:
                raise ValueError("matrix is not unimodular")
            q = aug[col][col] // aug[cand][col]
            aug[col] = [a - q * b for a, b in zip(aug[col], aug[cand])]
            aug[col], aug[cand] = aug[cand], aug[col]
        if aug[col][col] == -1:
            aug[col] = [-a for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                q = aug[i][col]
                aug[i] = [a - q * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def cokernel_group(m: Matrix) -> FgAbelianGroup:
    """Group presented by ``m`` under the global convention
    (columns = generators, rows = relators): Z^cols / row space."""
    rows, cols = shape(m)
    return quotient_presentation(m, cols).group


def hom_is_surjective(mat: Matrix, target: FgAbelianGroup) -> bool:
    """Whether the columns of ``mat`` generate ``target``.

    ``mat`` holds images of some generating family written in the canonical
    generator coordinates of ``target`` (torsion generators first).
    """
    n = len(target.torsion) + target.rank
    rows, _ = shape(mat)
    if rows != n:
        raise ValueError("matrix rows must match target generator count")
    rel = []
    for k, t in enumerate(target.torsion):
        row = [0] * n
        row[k] = t
        rel.append(row)
    cols = [list(c) for c in zip(*mat)] if mat and mat[0] else []
    presentation = cols + rel
    if not presentation:
        return n == 0
    diag = snf_diagonal(transpose(presentation))
    # quotient of Z^n by the span is trivial iff n pivots, all units
    nonzero = [abs(d) for d in diag if d != 0]
    return len(nonzero) == n and all(d == 1 for d in nonzero)


def hom_is_isomorphism(mat: Matrix, source: FgAbelianGroup, target: FgAbelianGroup) -> bool:
    """Whether a homomorphism given on canonical generators is an isomorphism.

    Finitely generated abelian groups are Hopfian, so for isomorphic groups
    surjectivity already forces bijectivity.
    """
    return source == target and hom_is_surjective(mat, target)


def lattice_gcd(v: list[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
