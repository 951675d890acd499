"""Exact integer linear algebra for finitely presented abelian groups.

Everything here is fraction-free arithmetic on arbitrary-precision Python
integers: Hermite bases of column lattices, Smith normal form with unimodular
transforms, and their application to presentations of abelian groups (with an
optional square-class action), homomorphisms, kernels, quotients and odd
localization.

A group is presented as Z^n / L where L is the column lattice of a relation
matrix (each column is a relator in generator coordinates).  Smith normal
form U * A * V = D of a Hermite basis A of L gives a coordinate change
y = U * x in which L becomes the diagonal lattice spanned by d_i * e_i, so
elements are canonicalised by reducing y_i modulo d_i.

Relators are columns throughout.  Dense matrices are fine at the scale this
package targets (a few thousand relator columns on at most ~120 generators).
"""

from __future__ import annotations

import json
from math import gcd, inf, lcm


class ExactAlgError(Exception):
    pass


class DimensionMismatch(ExactAlgError):
    pass


class RelationNotKilled(ExactAlgError):
    """A homomorphism candidate maps some source relator outside the target
    relation lattice.  `column` is the index of the offending relator."""

    def __init__(self, column, message=None):
        self.column = column
        super().__init__(message or f"relator column {column} is not killed")


class ForeignElement(ExactAlgError):
    pass


class NonIntegralDivision(ExactAlgError):
    """Division by a power of two that does not exist in this group."""


def gcdext(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = tuple(tuple(int(v) for v in row) for row in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise DimensionMismatch("ragged rows")
        self.data = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def diag(cls, entries, rows=None, cols=None):
        entries = list(entries)
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(entries):
            m[i][i] = d
        return cls(m)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = list(columns)
        for c in columns:
            if len(c) != nrows:
                raise DimensionMismatch("column of wrong length")
        return cls([[c[i] for c in columns] for i in range(nrows)])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def apply(self, vec):
        """Matrix-vector product as a list."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector of wrong length")
        return [sum(r[j] * vec[j] for j in range(self.cols)) for r in self.data]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shapes")
        bT = list(zip(*other.data)) if other.data else []
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bT] for row in self.data]
        )

    def __neg__(self):
        return IntMatrix([[-v for v in row] for row in self.data])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def transpose(self):
        return IntMatrix(list(zip(*self.data)) if self.data else [])

    def is_identity(self):
        return self.rows == self.cols and all(
            self.data[i][j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]!r})"


# ---------------------------------------------------------------------------
# Column-lattice arithmetic.  A lattice in Z^n is handled as a list of columns
# (plain lists of ints).  `echelon_basis` keeps one pivot per row; pivots are
# made positive, making membership tests a simple downward sweep.
# ---------------------------------------------------------------------------


def _first_nonzero(col):
    for i, v in enumerate(col):
        if v:
            return i
    return None


def echelon_basis(columns, nrows):
    """Echelon basis (one positive pivot per row) of the column lattice."""
    basis = {}  # pivot row -> column
    for col in columns:
        col = list(col)
        while True:
            r = _first_nonzero(col)
            if r is None:
                break
            if r not in basis:
                if col[r] < 0:
                    col = [-v for v in col]
                basis[r] = col
                break
            b = basis[r]
            p, v = b[r], col[r]
            if v % p == 0:
                q = v // p
                col = [cv - q * bv for cv, bv in zip(col, b)]
            else:
                g, s, t = gcdext(p, v)
                pg, vg = p // g, v // g
                new_b = [s * bv + t * cv for bv, cv in zip(b, col)]
                col = [vg * bv - pg * cv for bv, cv in zip(b, col)]
                basis[r] = new_b
    return [basis[r] for r in sorted(basis)]


def hnf_basis(columns, nrows):
    """Canonical Hermite basis: echelon plus reduction of earlier columns,
    so two generating sets of the same lattice produce identical output."""
    basis = [list(c) for c in echelon_basis(columns, nrows)]
    for i, bi in enumerate(basis):
        r = _first_nonzero(bi)
        p = bi[r]
        for j in range(i):
            q = basis[j][r] // p  # floor: leaves remainder in [0, p)
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], bi)]
    return basis


def lattice_solve(basis, vec):
    """Coefficients of `vec` in an echelon `basis`, or None if not in the
    lattice."""
    v = list(vec)
    coeffs = [0] * len(basis)
    pivots = [(_first_nonzero(b), k) for k, b in enumerate(basis)]
    for r, k in pivots:
        if v[r] == 0:
            continue
        p = basis[k][r]
        if v[r] % p:
            return None
        q = v[r] // p
        coeffs[k] = q
        v = [a - q * b for a, b in zip(v, basis[k])]
    if any(v):
        return None
    return coeffs


def lattice_contains(basis, vec) -> bool:
    return lattice_solve(basis, vec) is not None


def kernel_columns(columns, nrows):
    """Canonical basis of {x in Z^k : sum x_j * columns[j] = 0}."""
    k = len(columns)
    stacked = []
    for j, col in enumerate(columns):
        bottom = [0] * k
        bottom[j] = 1
        stacked.append(list(col) + bottom)
    # Eliminate on the top block only; columns whose top part dies carry a
    # kernel vector in the bottom block.
    basis = {}
    kernel = []
    for col in stacked:
        while True:
            r = _first_nonzero(col[:nrows])
            if r is None:
                kernel.append(col[nrows:])
                break
            if r not in basis:
                if col[r] < 0:
                    col = [-v for v in col]
                basis[r] = col
                break
            b = basis[r]
            p, v = b[r], col[r]
            if v % p == 0:
                q = v // p
                col = [cv - q * bv for cv, bv in zip(col, b)]
            else:
                g, s, t = gcdext(p, v)
                pg, vg = p // g, v // g
                new_b = [s * bv + t * cv for bv, cv in zip(b, col)]
                col = [vg * bv - pg * cv for bv, cv in zip(b, col)]
                basis[r] = new_b
    return hnf_basis(kernel, k)


def smith_normal_form(mat: IntMatrix):
    """Smith normal form with transforms.

    Returns (diag, U, Uinv, V) where U (rows x rows) and V (cols x cols) are
    unimodular, U * mat * V is diagonal with diag[i] >= 0 and
    diag[i] | diag[i+1].  The factorisation and U * Uinv = I are re-verified
    by multiplication before returning.
    """
    m, n = mat.rows, mat.cols
    a = [list(r) for r in mat.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    Uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        if i == j:
            return
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-v for v in a[i]]
        U[i] = [-v for v in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    def row_addmul(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        U[i] = [x + q * y for x, y in zip(U[i], U[j])]
        for r in Uinv:
            r[j] -= q * r[i]

    def col_addmul(i, j, q):
        # col_i += q * col_j
        for r in a:
            r[i] += q * r[j]
        for r in V:
            r[i] += q * r[j]

    def row_bezout(i, j, t):
        # combine rows i, j so that a[i][t] = gcd, a[j][t] = 0
        p, v = a[i][t], a[j][t]
        g, s, u = gcdext(p, v)
        pg, vg = p // g, v // g
        a[i], a[j] = (
            [s * x + u * y for x, y in zip(a[i], a[j])],
            [-vg * x + pg * y for x, y in zip(a[i], a[j])],
        )
        U[i], U[j] = (
            [s * x + u * y for x, y in zip(U[i], U[j])],
            [-vg * x + pg * y for x, y in zip(U[i], U[j])],
        )
        for r in Uinv:
            r[i], r[j] = pg * r[i] + vg * r[j], -u * r[i] + s * r[j]

    def col_bezout(i, j, t):
        p, v = a[t][i], a[t][j]
        g, s, u = gcdext(p, v)
        pg, vg = p // g, v // g
        for r in a:
            r[i], r[j] = s * r[i] + u * r[j], -vg * r[i] + pg * r[j]
        for r in V:
            r[i], r[j] = s * r[i] + u * r[j], -vg * r[i] + pg * r[j]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        if a[t][t] < 0:
            row_negate(t)
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    if a[i][t] % a[t][t] == 0:
                        row_addmul(i, t, -(a[i][t] // a[t][t]))
                    else:
                        row_bezout(t, i, t)
            for j in range(t + 1, n):
                if a[t][j]:
                    if a[t][j] % a[t][t] == 0:
                        col_addmul(j, t, -(a[t][j] // a[t][t]))
                    else:
                        col_bezout(t, j, t)
            if all(a[i][t] == 0 for i in range(t + 1, m)) and all(
                a[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        d = a[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % d:
                    offender = j
                    break
            if offender is not None:
                break
        if offender is not None:
            col_addmul(t, offender, 1)
            continue
        t += 1

    diag = [a[i][i] for i in range(min(m, n))]
    Um, Uinvm, Vm = IntMatrix(U), IntMatrix(Uinv), IntMatrix(V)
    # exactness check: the whole point of the fraction-free route
    assert (Um @ Uinvm).is_identity()
    prod = (Um @ mat) @ Vm
    assert prod == IntMatrix.diag(diag, rows=m, cols=n)
    for i in range(len(diag) - 1):
        assert diag[i + 1] % diag[i] == 0 if diag[i] else diag[i + 1] == 0
    return diag, Um, Uinvm, Vm


# ---------------------------------------------------------------------------
# Presented groups
# ---------------------------------------------------------------------------


class PresentedGroup:
    """Finitely presented abelian group Z^n_gens / (column lattice).

    `action`, if given, is a list of n x n IntMatrix, one per generator of the
    acting group of square classes; each must stabilise the relation lattice
    and square to the identity modulo it.
    """

    def __init__(self, n_gens, relations=None, action=None, two_localized=False):
        self.n_gens = int(n_gens)
        if relations is None:
            relations = []
        if isinstance(relations, IntMatrix):
            if relations.cols and relations.rows != self.n_gens:
                raise DimensionMismatch("relation columns of wrong length")
            cols = relations.columns()
        else:
            cols = [list(c) for c in relations]
            for c in cols:
                if len(c) != self.n_gens:
                    raise DimensionMismatch("relation columns of wrong length")
        self.relations = IntMatrix.from_columns(cols, self.n_gens)
        self.rel_basis = hnf_basis(cols, self.n_gens)
        rank = len(self.rel_basis)
        basis_mat = IntMatrix.from_columns(self.rel_basis, self.n_gens)
        if rank:
            diag, U, Uinv, _V = smith_normal_form(basis_mat)
        else:
            diag = []
            U = Uinv = IntMatrix.identity(self.n_gens)
        self._U = U
        self._Uinv = Uinv
        # per-coordinate modulus in y-space; 0 marks a free direction
        self.mods = tuple(diag) + (0,) * (self.n_gens - len(diag))
        self.invariant_factors = tuple(d for d in diag if d != 1)
        self.free_rank = self.n_gens - rank
        self.two_localized = two_localized
        self.action = None
        if action is not None:
            mats = [m if isinstance(m, IntMatrix) else IntMatrix(m) for m in action]
            for k, mat in enumerate(mats):
                if mat.rows != self.n_gens or mat.cols != self.n_gens:
                    raise DimensionMismatch(f"action matrix {k} has wrong shape")
                for b in self.rel_basis:
                    if not lattice_contains(self.rel_basis, mat.apply(b)):
                        raise ExactAlgError(
                            f"action matrix {k} does not stabilise the relations"
                        )
                sq = mat @ mat
                for j in range(self.n_gens):
                    col = [sq.data[i][j] - (1 if i == j else 0) for i in range(self.n_gens)]
                    if not lattice_contains(self.rel_basis, col):
                        raise ExactAlgError(
                            f"action matrix {k} is not an involution mod relations"
                        )
            self.action = mats

    # -- elements ---------------------------------------------------------

    def canonical(self, coords):
        if len(coords) != self.n_gens:
            raise DimensionMismatch("coordinate vector of wrong length")
        y = self._U.apply(list(coords))
        y = [v % d if d else v for v, d in zip(y, self.mods)]
        return tuple(self._Uinv.apply(y))

    def element(self, coords):
        return GroupElement(self, self.canonical(coords))

    def zero(self):
        return self.element([0] * self.n_gens)

    def generator(self, i):
        coords = [0] * self.n_gens
        coords[i] = 1
        return self.element(coords)

    def generators(self):
        return [self.generator(i) for i in range(self.n_gens)]

    def order(self):
        """Group order, or None when there is a free part."""
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def is_trivial(self):
        return self.order() == 1

    # -- internals shared with GroupElement --------------------------------

    def _ycoords(self, coords):
        y = self._U.apply(list(coords))
        return [v % d if d else v for v, d in zip(y, self.mods)]

    def _element_order(self, coords):
        y = self._ycoords(coords)
        o = 1
        for v, d in zip(y, self.mods):
            if d == 0:
                if v:
                    return inf
            elif v % d:
                o = lcm(o, d // gcd(d, v % d))
        return o

    def _divide_pow2(self, coords, k):
        if not self.two_localized:
            raise NonIntegralDivision("group is not odd-localized")
        y = self._U.apply(list(coords))
        out = []
        for v, d in zip(y, self.mods):
            if d:
                out.append((v * pow(2, -k, d)) % d)
            else:
                if v % (1 << k):
                    raise NonIntegralDivision("free coordinate not divisible by 2^k")
                out.append(v >> k)
        return tuple(self._Uinv.apply(out))

    def act_bit(self, gen_index, coords):
        """Apply the action of the `gen_index`-th acting generator."""
        if self.action is None:
            raise ExactAlgError("group carries no action")
        return self.action[gen_index].apply(list(coords))

    def dump_json(self):
        return json.dumps(
            {
                "n_gens": self.n_gens,
                "relators": [self.relations.column(j) for j in range(self.relations.cols)],
                "invariant_factors": list(self.invariant_factors),
                "free_rank": self.free_rank,
            }
        )

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        return "PresentedGroup(" + (" + ".join(parts) if parts else "0") + ")"


class GroupElement:
    """Element of a PresentedGroup in canonical coordinates."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = tuple(coords)

    def _binop(self, other, op):
        if not isinstance(other, GroupElement) or other.parent is not self.parent:
            raise ForeignElement("elements of different groups")
        return self.parent.element(
            [op(a, b) for a, b in zip(self.coords, other.coords)]
        )

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __neg__(self):
        return self.parent.element([-a for a in self.coords])

    def __rmul__(self, n):
        return self.parent.element([n * a for a in self.coords])

    def __mul__(self, n):
        return self.__rmul__(n)

    def is_zero(self):
        return all(v == 0 for v in self.coords)

    def order(self):
        return self.parent._element_order(self.coords)

    def divide_pow2(self, k):
        return GroupElement(self.parent, self.parent._divide_pow2(self.coords, k))

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and other.parent is self.parent
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.parent), self.coords))

    def __repr__(self):
        return f"GroupElement{self.coords}"


class GroupHom:
    """Homomorphism between presented groups, given on generator coordinates.

    Construction verifies that every source relator maps into the target
    relation lattice; failure raises RelationNotKilled with the column index,
    which doubles as a mathematical test for maps that are only conjecturally
    well defined.
    """

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        if matrix.rows != target.n_gens or matrix.cols != source.n_gens:
            raise DimensionMismatch("hom matrix shape")
        self.matrix = matrix
        for j, col in enumerate(source.rel_basis):
            if not lattice_contains(target.rel_basis, matrix.apply(col)):
                raise RelationNotKilled(j)

    def __call__(self, elem):
        if elem.parent is not self.source:
            raise ForeignElement("element not in hom source")
        return self.target.element(self.matrix.apply(list(elem.coords)))

    def compose(self, inner):
        """self o inner."""
        if inner.target is not self.source:
            raise DimensionMismatch("homs do not compose")
        return GroupHom(inner.source, self.target, self.matrix @ inner.matrix)

    def kernel(self):
        """Presented kernel with its inclusion into the source.

        Generators come from a Hermite basis of the preimage lattice
        {x : M x in L_target}; relators express the source relation lattice
        in that basis.
        """
        cols = self.matrix.columns() + self.target.rel_basis
        kb = kernel_columns(cols, self.target.n_gens)
        n_src = self.source.n_gens
        pre = hnf_basis([k[:n_src] for k in kb], n_src)
        rels = []
        for rel in self.source.rel_basis:
            z = lattice_solve(pre, rel)
            assert z is not None  # relation lattice sits inside the preimage
            rels.append(z)
        ker = PresentedGroup(len(pre), rels)
        incl = GroupHom(ker, self.source, IntMatrix.from_columns(pre, n_src))
        return ker, incl

    def is_zero(self):
        return all(
            lattice_contains(self.target.rel_basis, col)
            for col in self.matrix.columns()
        )


def present(n_gens, relations=None, action=None) -> PresentedGroup:
    """Spec-facing constructor; see PresentedGroup."""
    return PresentedGroup(n_gens, relations, action=action)


def hom(source, target, matrix) -> GroupHom:
    return GroupHom(source, target, matrix)


def quotient(g: PresentedGroup, sub_gens, keep_action=True):
    """Quotient of g by the subgroup generated by `sub_gens`.

    Returns (quotient group, projection hom).  The action is inherited when
    present; it must stabilise the enlarged lattice (pass a translate-closed
    generating set for module quotients).
    """
    extra = []
    for e in sub_gens:
        if isinstance(e, GroupElement):
            if e.parent is not g:
                raise ForeignElement("quotient generator from another group")
            extra.append(list(e.coords))
        else:
            if len(e) != g.n_gens:
                raise DimensionMismatch("quotient generator of wrong length")
            extra.append(list(e))
    rels = [g.relations.column(j) for j in range(g.relations.cols)] + extra
    action = g.action if keep_action else None
    q = PresentedGroup(g.n_gens, rels, action=action, two_localized=g.two_localized)
    proj = GroupHom(g, q, IntMatrix.identity(g.n_gens))
    return q, proj


def odd_localize(g: PresentedGroup):
    """Tensor with Z[1/2]: invariant factors are replaced by their odd parts
    and 2 becomes invertible.  Free rank is preserved.  Returns
    (localized group, hom from g)."""
    rels = []
    for i, d in enumerate(g.mods):
        if d:
            col = [0] * g.n_gens
            col[i] = _odd_part(d)
            rels.append(g._Uinv.apply(col))
    loc = PresentedGroup(g.n_gens, rels, action=g.action, two_localized=True)
    return loc, GroupHom(g, loc, IntMatrix.identity(g.n_gens))


def direct_sum(g1: PresentedGroup, g2: PresentedGroup) -> PresentedGroup:
    """Block direct sum; generators of g1 come first.  Actions are combined
    blockwise when both factors carry one over acting groups of equal size."""
    n = g1.n_gens + g2.n_gens
    rels = []
    for j in range(g1.relations.cols):
        rels.append(g1.relations.column(j) + [0] * g2.n_gens)
    for j in range(g2.relations.cols):
        rels.append([0] * g1.n_gens + g2.relations.column(j))
    action = None
    if g1.action is not None and g2.action is not None:
        if len(g1.action) != len(g2.action):
            raise DimensionMismatch("direct sum of actions over different groups")
        action = []
        for a1, a2 in zip(g1.action, g2.action):
            block = [[0] * n for _ in range(n)]
            for i in range(g1.n_gens):
                for j in range(g1.n_gens):
                    block[i][j] = a1.data[i][j]
            for i in range(g2.n_gens):
                for j in range(g2.n_gens):
                    block[g1.n_gens + i][g1.n_gens + j] = a2.data[i][j]
            action.append(block)
    return PresentedGroup(n, rels, action=action)


def subgroup_basis(g: PresentedGroup, elements):
    """Canonical Hermite basis of the full preimage lattice of the subgroup
    generated by `elements` (their coordinates together with the relations).
    Two subgroups of g are equal iff their bases are equal."""
    cols = []
    for e in elements:
        cols.append(list(e.coords) if isinstance(e, GroupElement) else list(e))
    cols.extend(g.rel_basis)
    return hnf_basis(cols, g.n_gens)


def same_subgroup(g: PresentedGroup, elems1, elems2) -> bool:
    return subgroup_basis(g, elems1) == subgroup_basis(g, elems2)
