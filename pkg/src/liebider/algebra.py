"""Finite-dimensional associative unital algebras given by structure constants.

An algebra is a basis b_0..b_{dim-1} plus the sparse tensor c[i][j][k] with
b_i b_j = sum_k c[i][j][k] b_k and the coordinates of the unit.  Construction
validates associativity on all basis triples and the unit law, so anything
that survives the constructor really is an associative unital algebra.
"""

from fractions import Fraction

from .linalg import SparseMatrix, nullspace


class MixedAlgebras(Exception):
    """Operands belong to different algebra instances."""


class FiniteAlgebra:

    __slots__ = ("dim", "basis_labels", "unit", "_prod", "_center")

    def __init__(self, dim, basis_labels, structure, unit):
        if dim <= 0:
            raise ValueError("dim must be positive")
        if len(basis_labels) != dim:
            raise ValueError("basis_labels length mismatch")
        self.dim = dim
        self.basis_labels = tuple(str(s) for s in basis_labels)
        prod = {}
        items = structure.items() if hasattr(structure, "items") else ((t[:3], t[3]) for t in structure)
        for (i, j, k), v in items:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError(f"structure index ({i},{j},{k}) out of range")
            v = Fraction(v)
            if v == 0:
                continue
            row = prod.setdefault((i, j), {})
            if k in row:
                raise ValueError(f"duplicate structure constant at ({i},{j},{k})")
            row[k] = v
        self._prod = prod
        if len(unit) != dim:
            raise ValueError("unit length mismatch")
        self.unit = tuple(Fraction(u) for u in unit)
        self._center = None
        self._validate()

    def _mul_basis(self, i, j):
        return self._prod.get((i, j), {})

    def _validate(self):
        dim = self.dim
        # unit law on basis vectors
        for i in range(dim):
            left = {}
            right = {}
            for j, u in enumerate(self.unit):
                if u == 0:
                    continue
                for k, v in self._mul_basis(j, i).items():
                    left[k] = left.get(k, 0) + u * v
                for k, v in self._mul_basis(i, j).items():
                    right[k] = right.get(k, 0) + u * v
            want = {i: Fraction(1)}
            if {k: v for k, v in left.items() if v} != want:
                raise ValueError(f"unit fails on the left at basis {i}")
            if {k: v for k, v in right.items() if v} != want:
                raise ValueError(f"unit fails on the right at basis {i}")
        # associativity on all basis triples
        for i in range(dim):
            for j in range(dim):
                ij = self._mul_basis(i, j)
                for l in range(dim):
                    lhs = {}
                    for k, v in ij.items():
                        for m, w in self._mul_basis(k, l).items():
                            lhs[m] = lhs.get(m, 0) + v * w
                    rhs = {}
                    for k, v in self._mul_basis(j, l).items():
                        for m, w in self._mul_basis(i, k).items():
                            rhs[m] = rhs.get(m, 0) + v * w
                    if {m: v for m, v in lhs.items() if v} != {m: v for m, v in rhs.items() if v}:
                        raise ValueError(f"not associative at basis triple ({i},{j},{l})")

    def structure_items(self):
        """Structure constants as a sorted list of (i, j, k, value)."""
        out = []
        for (i, j), row in self._prod.items():
            for k, v in row.items():
                out.append((i, j, k, v))
        out.sort(key=lambda t: t[:3])
        return out

    def element(self, coords):
        return Element(self, coords)

    def basis_element(self, i):
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Element(self, coords)

    def zero(self):
        return Element(self, [Fraction(0)] * self.dim)

    def unit_element(self):
        return Element(self, self.unit)

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def __repr__(self):
        return f"FiniteAlgebra(dim={self.dim})"


class Element:
    """An algebra element as a coordinate vector over the basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        if len(coords) != algebra.dim:
            raise ValueError("coordinate length mismatch")
        self.algebra = algebra
        self.coords = tuple(Fraction(c) for c in coords)

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise MixedAlgebras("operands from different algebras")

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def scale(self, s):
        s = Fraction(s)
        return Element(self.algebra, [s * a for a in self.coords])

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        alg = self.algebra
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            parts.append(alg.basis_labels[i] if c == 1 else f"{c}*{alg.basis_labels[i]}")
        return " + ".join(parts) if parts else "0"


def multiply(x, y):
    """Product x·y via the structure tensor."""
    x._check(y)
    alg = x.algebra
    out = [Fraction(0)] * alg.dim
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            s = xi * yj
            for k, v in alg._mul_basis(i, j).items():
                out[k] += s * v
    return Element(alg, out)


def lie_bracket(x, y):
    """[x, y] = xy - yx."""
    return multiply(x, y) - multiply(y, x)


def center_basis(alg):
    """Canonical basis of {z : [z, b_i] = 0 for every basis element}.

    Assembles the stacked adjoint-action matrix (one row per basis element
    and output coordinate) and returns its nullspace as Elements.
    """
    if alg._center is not None:
        return list(alg._center)
    dim = alg.dim
    entries = []
    # row (i, k): sum_j z_j (b_j b_i - b_i b_j)_k = 0
    for i in range(dim):
        for j in range(dim):
            row = {}
            for k, v in alg._mul_basis(j, i).items():
                row[k] = row.get(k, 0) + v
            for k, v in alg._mul_basis(i, j).items():
                row[k] = row.get(k, 0) - v
            for k, v in row.items():
                if v:
                    entries.append((i * dim + k, j, v))
    mat = SparseMatrix(dim * dim, dim, entries)
    basis = [Element(alg, vec) for vec in nullspace(mat)]
    alg._center = tuple(basis)
    return basis


def is_commutative(alg):
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if alg._mul_basis(i, j) != alg._mul_basis(j, i):
                return False
    return True
