"""Exact arithmetic for finitely generated abelian groups.

Everything here runs on plain Python integers, which are arbitrary
precision; no floating point enters any code path.  The two central
objects are

* :class:`IntegerMatrix`, an immutable integer matrix with exact
  solve/kernel/Smith routines, and
* :class:`FGAbelianGroup`, a finitely generated abelian group carried
  around together with a presentation (generator count plus integer
  relation rows) and the unimodular change of basis that brings the
  relation matrix to Smith normal form.

The Smith decomposition is the workhorse: solving integer linear
systems, deciding membership in a sublattice, and canonicalizing
presentations all reduce to it.  Subgroup equality is decided by
mutual generator membership, never by comparing generator lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class IntegerMatrix:
    """Immutable integer matrix stored as a tuple of row tuples.

    A matrix with zero rows or zero columns is legal (boundary
    matrices of complexes routinely are); ``ncols`` must be passed
    explicitly when there are no rows to infer it from.

    >>> m = IntegerMatrix([[1, 2], [3, 4]])
    >>> m.nrows, m.ncols
    (2, 2)
    >>> (m * IntegerMatrix.identity(2)) == m
    True
    """

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: Optional[int] = None):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            inferred = widths.pop()
            if ncols is not None and ncols != inferred:
                raise ValueError("ncols disagrees with row width")
            self.ncols = inferred
        else:
            if ncols is None:
                raise ValueError("ncols required for a matrix with no rows")
            self.ncols = int(ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntegerMatrix":
        return cls([[0] * n for _ in range(m)], ncols=n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: Optional[int] = None) -> "IntegerMatrix":
        cols = [tuple(c) for c in cols]
        if cols:
            heights = {len(c) for c in cols}
            if len(heights) != 1:
                raise ValueError("ragged columns")
            m = heights.pop()
            if nrows is not None and nrows != m:
                raise ValueError("nrows disagrees with column height")
        else:
            if nrows is None:
                raise ValueError("nrows required for a matrix with no columns")
            m = nrows
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(m)], ncols=len(cols))

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        ot = other.transpose()
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot.rows] for row in self.rows],
            ncols=other.ncols,
        )

    def matvec(self, x: Sequence[int]) -> tuple:
        if len(x) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, x)) for row in self.rows)

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        if self.nrows == 0:
            return IntegerMatrix([], ncols=self.ncols + other.ncols)
        return IntegerMatrix(
            [row_a + row_b for row_a, row_b in zip(self.rows, other.rows)],
            ncols=self.ncols + other.ncols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntegerMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"IntegerMatrix({[list(r) for r in self.rows]!r}, ncols={self.ncols})"


@dataclass(frozen=True)
class SmithDecomposition:
    """Result of ``smith_normal_form``: U * M * V = D.

    U and V are unimodular (built purely from elementary operations),
    D is diagonal with nonnegative entries, every diagonal entry
    divides the next, and zero entries trail.  ``uinv`` and ``vinv``
    are the tracked inverses of U and V.  The defining identity is
    re-verified on construction.
    """

    matrix: IntegerMatrix
    u: IntegerMatrix
    uinv: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix
    vinv: IntegerMatrix

    def __post_init__(self):
        if (self.u * self.matrix) * self.v != self.d:
            raise AssertionError("Smith decomposition identity U*M*V = D failed")
        if self.u * self.uinv != IntegerMatrix.identity(self.u.nrows):
            raise AssertionError("tracked inverse of U is wrong")
        if self.v * self.vinv != IntegerMatrix.identity(self.v.nrows):
            raise AssertionError("tracked inverse of V is wrong")
        diag = self.diagonal()
        for i, x in enumerate(diag):
            if x < 0:
                raise AssertionError("negative entry on Smith diagonal")
            if i + 1 < len(diag):
                nxt = diag[i + 1]
                if x == 0 and nxt != 0:
                    raise AssertionError("zero entry precedes nonzero on Smith diagonal")
                if x != 0 and nxt % x != 0:
                    raise AssertionError("divisibility chain broken on Smith diagonal")
        for i in range(self.d.nrows):
            for j in range(self.d.ncols):
                if i != j and self.d.rows[i][j] != 0:
                    raise AssertionError("off-diagonal entry in Smith form")

    def diagonal(self) -> list:
        return [self.d.rows[i][i] for i in range(min(self.d.nrows, self.d.ncols))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal() if x != 0)

    @property
    def invariant_factors(self) -> tuple:
        return tuple(x for x in self.diagonal() if x != 0)


def _balanced_quotient(x: int, p: int) -> int:
    """Quotient leaving a remainder of absolute value at most ``|p| / 2``."""
    q, r = divmod(x, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


def smith_normal_form(matrix: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form over Z with unimodular transforms tracked.

    Pivots are re-chosen by least absolute value after every reduction
    pass and remainders are balanced, so the pivot at least halves on
    every repeat and entries cannot blow up.

    >>> s = smith_normal_form(IntegerMatrix([[2, 4], [6, 8]]))
    >>> s.invariant_factors
    (2, 4)
    >>> s = smith_normal_form(IntegerMatrix([[1, 0], [0, 1]]))
    >>> s.diagonal()
    [1, 1]
    """
    m, n = matrix.nrows, matrix.ncols
    a = [list(row) for row in matrix.rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for row in uinv:  # column swap on the inverse
            row[i], row[k] = row[k], row[i]

    def add_row(i, k, q):
        # row_i += q * row_k on a and u; col_k -= q * col_i on uinv
        a[i] = [x + q * y for x, y in zip(a[i], a[k])]
        u[i] = [x + q * y for x, y in zip(u[i], u[k])]
        for row in uinv:
            row[k] -= q * row[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    def add_col(j, k, q):
        # col_j += q * col_k on a and v; row_k -= q * row_j on vinv
        for row in a:
            row[j] += q * row[k]
        for row in v:
            row[j] += q * row[k]
        vinv[k] = [x - q * y for x, y in zip(vinv[k], vinv[j])]

    def min_entry(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    def move_pivot(t, spot):
        if spot[0] != t:
            swap_rows(t, spot[0])
        if spot[1] != t:
            swap_cols(t, spot[1])

    t = 0
    while t < m and t < n:
        spot = min_entry(t)
        if spot is None:
            break
        move_pivot(t, spot)
        while True:
            # one pass of balanced remainders against a fixed pivot
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    add_row(i, t, -_balanced_quotient(a[i][t], a[t][t]))
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    add_col(j, t, -_balanced_quotient(a[t][j], a[t][t]))
            # any leftover residue is at most half the pivot, so the
            # trailing block now holds a strictly smaller entry iff the
            # pass was incomplete; chase it and the pivot keeps halving
            spot = min_entry(t)
            if abs(a[spot[0]][spot[1]]) < abs(a[t][t]):
                move_pivot(t, spot)
                continue
            # column and row are clear; enforce the divisibility chain
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1

    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
            for row in uinv:
                row[i] = -row[i]

    return SmithDecomposition(
        matrix=matrix,
        u=IntegerMatrix(u, ncols=m),
        uinv=IntegerMatrix(uinv, ncols=m),
        d=IntegerMatrix(a, ncols=n),
        v=IntegerMatrix(v, ncols=n),
        vinv=IntegerMatrix(vinv, ncols=n),
    )


def solve(matrix: IntegerMatrix, b: Sequence[int], snf: Optional[SmithDecomposition] = None):
    """One integer solution x of matrix * x = b, or None when unsolvable.

    >>> solve(IntegerMatrix([[2, 0], [0, 3]]), (4, 9))
    (2, 3)
    >>> solve(IntegerMatrix([[2]]), (3,)) is None
    True
    """
    if snf is None:
        snf = smith_normal_form(matrix)
    c = snf.u.matvec(b)
    diag = snf.diagonal()
    w = [0] * matrix.ncols
    for i, ci in enumerate(c):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if ci != 0:
                return None
        else:
            if ci % di != 0:
                return None
            w[i] = ci // di
    return snf.v.matvec(w)


def kernel_basis(matrix: IntegerMatrix, snf: Optional[SmithDecomposition] = None) -> list:
    """Columns forming a basis of the integer kernel of ``matrix``.

    The basis spans the kernel as a direct summand of the domain
    lattice (it consists of columns of the unimodular V), so solving
    in terms of it is exact.
    """
    if snf is None:
        snf = smith_normal_form(matrix)
    return [snf.v.column(j) for j in range(snf.rank, matrix.ncols)]


class FGAbelianGroup:
    """Finitely generated abelian group with an attached presentation.

    The presentation is ``ngens`` generators subject to the rows of
    ``relations``.  Canonical form (free rank plus invariant-factor
    torsion list, each factor at least 2 and dividing the next) is
    computed once from the Smith normal form of the transposed
    relation matrix, and the unimodular change of basis is kept so
    elements can be moved between presentation coordinates and
    canonical coordinates exactly.

    Canonical coordinates list the free positions first, then the
    torsion positions in divisibility order.

    >>> g = FGAbelianGroup(2, IntegerMatrix([[2, 0]], ncols=2))
    >>> g.free_rank, g.torsion
    (1, (2,))
    >>> g.describe()
    'Z + Z/2'
    """

    __slots__ = (
        "ngens",
        "relations",
        "free_rank",
        "torsion",
        "_snf",
        "_free_positions",
        "_torsion_positions",
    )

    def __init__(self, ngens: int, relations: Optional[IntegerMatrix] = None):
        if ngens < 0:
            raise ValueError("generator count must be nonnegative")
        if relations is None:
            relations = IntegerMatrix([], ncols=ngens)
        if relations.ncols != ngens:
            raise ValueError("relation width must equal generator count")
        self.ngens = ngens
        self.relations = relations
        # columns of relations^T are the relation vectors
        self._snf = smith_normal_form(relations.transpose())
        diag = self._snf.diagonal()
        rank = self._snf.rank
        torsion_positions = [i for i in range(rank) if diag[i] > 1]
        free_positions = list(range(rank, ngens))
        self.free_rank = len(free_positions)
        self.torsion = tuple(diag[i] for i in torsion_positions)
        self._free_positions = tuple(free_positions)
        self._torsion_positions = tuple(torsion_positions)

    # -- constructors -------------------------------------------------

    @classmethod
    def free(cls, rank: int) -> "FGAbelianGroup":
        return cls(rank)

    @classmethod
    def trivial(cls) -> "FGAbelianGroup":
        return cls(0)

    @classmethod
    def from_invariants(cls, free_rank: int, torsion: Sequence[int] = ()) -> "FGAbelianGroup":
        """Group in canonical shape: free generators first, then torsion."""
        torsion = [int(t) for t in torsion]
        for i, t in enumerate(torsion):
            if t < 2:
                raise ValueError("torsion invariants must be at least 2")
            if i + 1 < len(torsion) and torsion[i + 1] % t != 0:
                raise ValueError("torsion invariants must form a divisibility chain")
        n = free_rank + len(torsion)
        rows = []
        for i, t in enumerate(torsion):
            row = [0] * n
            row[free_rank + i] = t
            rows.append(row)
        return cls(n, IntegerMatrix(rows, ncols=n))

    # -- canonical coordinates ----------------------------------------

    @property
    def canonical_ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def invariants(self) -> tuple:
        return (self.free_rank, self.torsion)

    def is_trivial(self) -> bool:
        return self.canonical_ngens == 0

    def to_canonical(self, x: Sequence[int]) -> tuple:
        """Canonical coordinates of an element given in presentation coordinates."""
        if len(x) != self.ngens:
            raise ValueError("element length must equal generator count")
        y = self._snf.u.matvec(x)
        free = [y[i] for i in self._free_positions]
        tors = [y[i] % t for i, t in zip(self._torsion_positions, self.torsion)]
        return tuple(free + tors)

    def from_canonical(self, y: Sequence[int]) -> tuple:
        """One presentation-coordinate representative of canonical coordinates."""
        if len(y) != self.canonical_ngens:
            raise ValueError("canonical length mismatch")
        lifted = [0] * self.ngens
        for k, i in enumerate(self._free_positions):
            lifted[i] = y[k]
        for k, i in enumerate(self._torsion_positions):
            lifted[i] = y[self.free_rank + k]
        return self._snf.uinv.matvec(lifted)

    def reduce_canonical(self, y: Sequence[int]) -> tuple:
        """Normalize raw canonical coordinates (torsion entries mod invariant)."""
        if len(y) != self.canonical_ngens:
            raise ValueError("canonical length mismatch")
        free = list(y[: self.free_rank])
        tors = [y[self.free_rank + k] % t for k, t in enumerate(self.torsion)]
        return tuple(free + tors)

    def canonical_is_zero(self, y: Sequence[int]) -> bool:
        return all(c == 0 for c in self.reduce_canonical(y))

    def element_is_zero(self, x: Sequence[int]) -> bool:
        return all(c == 0 for c in self.to_canonical(x))

    def canonical_relation_columns(self) -> list:
        """Columns spanning the relation lattice in canonical coordinates."""
        n = self.canonical_ngens
        cols = []
        for k, t in enumerate(self.torsion):
            col = [0] * n
            col[self.free_rank + k] = t
            cols.append(tuple(col))
        return cols

    def canonical_generators(self) -> list:
        n = self.canonical_ngens
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]

    # -- display and comparison ---------------------------------------

    def describe(self) -> str:
        """Human-readable canonical form, e.g. ``'Z^2 + Z/4'`` or ``'0'``."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def same_invariants(self, other: "FGAbelianGroup") -> bool:
        return self.invariants == other.invariants

    def __eq__(self, other) -> bool:
        # structural identity of the presentation, not abstract isomorphism
        return (
            isinstance(other, FGAbelianGroup)
            and self.ngens == other.ngens
            and self.relations == other.relations
        )

    def __hash__(self) -> int:
        return hash((self.ngens, self.relations))

    def __repr__(self) -> str:
        return f"<FGAbelianGroup {self.describe()} on {self.ngens} generators>"


def canonicalize_presentation(generators: int, relations: IntegerMatrix) -> FGAbelianGroup:
    """Build the group presented by ``generators`` and relation rows.

    >>> canonicalize_presentation(2, IntegerMatrix([[2, 4], [6, 8]])).describe()
    'Z/2 + Z/4'
    >>> canonicalize_presentation(1, IntegerMatrix([], ncols=1)).describe()
    'Z'
    """
    return FGAbelianGroup(generators, relations)


class GroupHom:
    """Homomorphism between finitely generated abelian groups.

    ``matrix`` acts on presentation coordinates: column j is the image
    of source generator j written in target generators.  Construction
    verifies well-definedness (every source relation must land in the
    target relation lattice); this is a real check, not an assumption,
    because chain-level inputs arrive in presentation coordinates.
    """

    __slots__ = ("source", "target", "matrix", "_canonical")

    def __init__(self, source: FGAbelianGroup, target: FGAbelianGroup, matrix: IntegerMatrix):
        if matrix.ncols != source.ngens or matrix.nrows != target.ngens:
            raise ValueError("hom matrix shape must be target.ngens x source.ngens")
        self.source = source
        self.target = target
        self.matrix = matrix
        self._canonical = None
        for row in source.relations.rows:
            image = matrix.matvec(row)
            if not target.element_is_zero(image):
                raise ValueError("matrix does not carry source relations into target relations")

    @classmethod
    def identity(cls, group: FGAbelianGroup) -> "GroupHom":
        return cls(group, group, IntegerMatrix.identity(group.ngens))

    @classmethod
    def zero(cls, source: FGAbelianGroup, target: FGAbelianGroup) -> "GroupHom":
        return cls(source, target, IntegerMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def from_canonical_matrix(
        cls, source: FGAbelianGroup, target: FGAbelianGroup, canonical: IntegerMatrix
    ) -> "GroupHom":
        """Hom given by a matrix in canonical coordinates on both sides."""
        if canonical.ncols != source.canonical_ngens or canonical.nrows != target.canonical_ngens:
            raise ValueError("canonical matrix shape mismatch")
        cols = []
        for j in range(source.ngens):
            y = source.to_canonical(tuple(1 if i == j else 0 for i in range(source.ngens)))
            cols.append(target.from_canonical(target.reduce_canonical(canonical.matvec(y))))
        return cls(source, target, IntegerMatrix.from_columns(cols, nrows=target.ngens))

    def canonical_matrix(self) -> IntegerMatrix:
        """Matrix in canonical coordinates (torsion rows reduced mod invariant)."""
        if self._canonical is None:
            cols = []
            for j in range(self.source.canonical_ngens):
                e = [0] * self.source.canonical_ngens
                e[j] = 1
                x = self.source.from_canonical(e)
                cols.append(self.target.to_canonical(self.matrix.matvec(x)))
            self._canonical = IntegerMatrix.from_columns(cols, nrows=self.target.canonical_ngens)
        return self._canonical

    def apply(self, x: Sequence[int]) -> tuple:
        """Image in target presentation coordinates."""
        return self.matrix.matvec(x)

    def apply_canonical(self, y: Sequence[int]) -> tuple:
        return self.target.reduce_canonical(self.canonical_matrix().matvec(y))

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner; requires inner.target to be the same presentation."""
        if inner.target != self.source:
            raise ValueError("composition requires matching middle presentation")
        return GroupHom(inner.source, self.target, self.matrix * inner.matrix)

    def image_subgroup(self) -> "Subgroup":
        gens = [
            self.apply_canonical(e) for e in self.source.canonical_generators()
        ]
        return Subgroup(self.target, gens)

    def kernel_subgroup(self) -> "Subgroup":
        """Kernel as a subgroup of the source (canonical coordinates)."""
        can = self.canonical_matrix()
        rel_cols = self.target.canonical_relation_columns()
        stacked = can.hstack(
            IntegerMatrix.from_columns(rel_cols, nrows=self.target.canonical_ngens)
        )
        n = self.source.canonical_ngens
        gens = [tuple(col[:n]) for col in kernel_basis(stacked)]
        # source torsion relations are kernel members as well
        gens.extend(self.source.canonical_relation_columns())
        return Subgroup(self.source, [self.source.reduce_canonical(g) for g in gens])

    def is_injective(self) -> bool:
        return self.kernel_subgroup().is_trivial()

    def is_surjective(self) -> bool:
        return self.image_subgroup().is_full()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def equal_hom(self, other: "GroupHom") -> bool:
        """Same map on elements (sources and targets presented identically)."""
        return (
            self.source == other.source
            and self.target == other.target
            and self.canonical_matrix() == other.canonical_matrix()
        )

    def __repr__(self) -> str:
        return f"<GroupHom {self.source.describe()} -> {self.target.describe()}>"


def compose_homs(f: GroupHom, g: GroupHom) -> GroupHom:
    """The composite g o f (f applied first).

    >>> z = FGAbelianGroup.free(1)
    >>> two = GroupHom(z, z, IntegerMatrix([[2]]))
    >>> compose_homs(two, two).matrix.rows
    ((4,),)
    """
    return g.compose(f)


class Subgroup:
    """Subgroup of an FGAbelianGroup given by canonical-coordinate generators.

    Membership, containment and equality are decided exactly by
    SNF-based solving against the generators together with the ambient
    relation lattice.
    """

    __slots__ = ("group", "generators", "_snf", "_stacked", "_as_group")

    def __init__(self, group: FGAbelianGroup, generators: Iterable[Sequence[int]]):
        self.group = group
        gens = []
        for g in generators:
            red = group.reduce_canonical(g)
            if any(red):
                gens.append(red)
        self.generators = tuple(gens)
        self._snf = None
        self._stacked = None
        self._as_group = None

    @classmethod
    def full(cls, group: FGAbelianGroup) -> "Subgroup":
        return cls(group, group.canonical_generators())

    @classmethod
    def trivial(cls, group: FGAbelianGroup) -> "Subgroup":
        return cls(group, [])

    def _solver(self):
        if self._snf is None:
            n = self.group.canonical_ngens
            cols = list(self.generators) + self.group.canonical_relation_columns()
            self._stacked = IntegerMatrix.from_columns(cols, nrows=n)
            self._snf = smith_normal_form(self._stacked)
        return self._stacked, self._snf

    def contains(self, y: Sequence[int]) -> bool:
        y = self.group.reduce_canonical(y)
        if not any(y):
            return True
        stacked, snf = self._solver()
        return solve(stacked, y, snf) is not None

    def coordinates(self, y: Sequence[int]):
        """Express an element over this subgroup's generators, or None.

        The coefficient vector is a presentation vector of ``as_group()``,
        whose generators are exactly ``self.generators`` in order.
        """
        y = self.group.reduce_canonical(y)
        k = len(self.generators)
        if not any(y):
            return tuple([0] * k)
        stacked, snf = self._solver()
        sol = solve(stacked, y, snf)
        if sol is None:
            return None
        return tuple(sol[:k])

    def is_subset_of(self, other: "Subgroup") -> bool:
        if self.group is not other.group and self.group != other.group:
            raise ValueError("subgroups live in different groups")
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "Subgroup") -> bool:
        return self.is_subset_of(other) and other.is_subset_of(self)

    def is_trivial(self) -> bool:
        return not self.generators

    def is_full(self) -> bool:
        return all(self.contains(e) for e in self.group.canonical_generators())

    def image_under(self, hom: GroupHom) -> "Subgroup":
        if hom.source != self.group:
            raise ValueError("hom source does not match subgroup ambient group")
        return Subgroup(hom.target, [hom.apply_canonical(g) for g in self.generators])

    def as_group(self) -> FGAbelianGroup:
        """The subgroup itself as an abstract group (canonicalized)."""
        if self._as_group is None:
            k = len(self.generators)
            n = self.group.canonical_ngens
            cols = list(self.generators) + self.group.canonical_relation_columns()
            stacked = IntegerMatrix.from_columns(cols, nrows=n)
            rows = [tuple(col[:k]) for col in kernel_basis(stacked)]
            self._as_group = FGAbelianGroup(k, IntegerMatrix(rows, ncols=k))
        return self._as_group

    def __repr__(self) -> str:
        return f"<Subgroup of {self.group.describe()} with {len(self.generators)} generators>"
