"""Exact sparse linear algebra over the rationals.

Everything downstream (center computation, constraint solving, the
decomposition) reduces to computing reduced row echelon forms, nullspace
bases, and canonical solutions of sparse linear systems with Fraction
entries.  The elimination engine keeps rows as gcd-normalized integer
dictionaries and maintains a fully inter-reduced pivot set, so adding a row
costs one elimination pass and the final form is the unique RREF.  No
floating point anywhere.
"""

from fractions import Fraction
from math import gcd


class Inconsistent(Exception):
    """Raised by solve() when the system has no solution.

    pivot_row is the index (in the reduced form) of the row whose only
    surviving entry sits in the augmented column.
    """

    def __init__(self, pivot_row):
        self.pivot_row = pivot_row
        super().__init__(f"inconsistent system: contradiction at reduced row {pivot_row}")


class SparseMatrix:
    """Immutable sparse matrix: entry list sorted by (row, col), no zeros."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        seen = set()
        norm = []
        for (r, c, v) in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) out of range")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r},{c})")
            seen.add((r, c))
            v = Fraction(v)
            if v != 0:
                norm.append((r, c, v))
        norm.sort(key=lambda e: (e[0], e[1]))
        self.rows = rows
        self.cols = cols
        self.entries = tuple(norm)

    @classmethod
    def from_dense(cls, rows_of_values):
        rows = len(rows_of_values)
        cols = len(rows_of_values[0]) if rows else 0
        entries = []
        for i, row in enumerate(rows_of_values):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v != 0:
                    entries.append((i, j, Fraction(v)))
        return cls(rows, cols, entries)

    def to_dense(self):
        m = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c, v) in self.entries:
            m[r][c] = v
        return m

    def row_dicts(self):
        """Rows as {col: Fraction} dicts, empty rows included."""
        out = [dict() for _ in range(self.rows)]
        for (r, c, v) in self.entries:
            out[r][c] = v
        return out

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [Fraction(0)] * self.rows
        for (r, c, v) in self.entries:
            if vec[c]:
                out[r] += v * vec[c]
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"


def _normalize(row):
    """gcd-normalize an integer row dict in place; pivot (min col) made positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v if v >= 0 else -v)
        if g == 1:
            break
    piv = row[min(row)]
    if g > 1:
        if piv < 0:
            g = -g
        for c in row:
            row[c] //= g
    elif piv < 0:
        for c in row:
            row[c] = -row[c]
    return row


class RowReducer:
    """Incremental RREF over integer rows.

    Pivot rows are kept fully inter-reduced: a pivot row's support contains
    its own pivot column and otherwise only non-pivot columns.  Hence an
    incoming row is reduced by a single pass over the pivot columns in its
    support, and installing a new pivot only touches rows listed in the
    column index.  Single-threaded and input-order driven, so results are
    reproducible by construction.
    """

    __slots__ = ("ncols", "pivrows", "pivcols", "_row_of_col", "_col_index")

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivrows = []          # list of {col: int}, gcd-normalized
        self.pivcols = []          # pivot column of each row
        self._row_of_col = {}      # pivot col -> row index
        self._col_index = {}       # col -> set of row indices with support there

    def _unindex(self, ri, cols):
        for c in cols:
            s = self._col_index.get(c)
            if s is not None:
                s.discard(ri)
                if not s:
                    del self._col_index[c]

    def _index(self, ri, cols):
        for c in cols:
            self._col_index.setdefault(c, set()).add(ri)

    def reduce_only(self, row):
        """Reduce an integer row dict against the pivot set without installing it."""
        # pivot rows hold no other pivot columns, so the initial hit list is
        # complete; eliminations only ever add non-pivot columns
        hits = [c for c in row if c in self._row_of_col]
        for n, c in enumerate(hits):
            rc = row.get(c)
            if not rc:
                continue
            pr = self.pivrows[self._row_of_col[c]]
            pc = pr[c]
            # row := pc*row - rc*pr; the whole row must scale, not only the
            # columns pr touches
            if pc != 1:
                for cc in row:
                    row[cc] *= pc
            for cc, vv in pr.items():
                nv = row.get(cc, 0) - vv * rc
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
            if n % 8 == 7:
                _normalize(row)  # keep integers small on long reduction chains
        return _normalize(row)

    def add_row(self, row):
        """Reduce and, if independent, install an integer row dict.

        Returns the new pivot column, or None when the row was dependent.
        The row dict is consumed.
        """
        row = self.reduce_only(row)
        if not row:
            return None
        piv = min(row)
        ri = len(self.pivrows)
        # eliminate the new pivot column from every older row that has it
        holders = self._col_index.get(piv)
        if holders:
            pv = row[piv]
            for rj in sorted(holders):
                old = self.pivrows[rj]
                oc = old[piv]
                before = set(old)
                # old := pv*old - oc*row, scaling all of old first
                if pv != 1:
                    for cc in old:
                        old[cc] *= pv
                for cc, vv in row.items():
                    nv = old.get(cc, 0) - vv * oc
                    if nv:
                        old[cc] = nv
                    else:
                        old.pop(cc, None)
                _normalize(old)
                self._unindex(rj, before - set(old))
                self._index(rj, set(old) - before)
            self._col_index.pop(piv, None)
        self.pivrows.append(row)
        self.pivcols.append(piv)
        self._row_of_col[piv] = ri
        self._index(ri, row)
        return piv

    def add_fraction_row(self, row):
        """add_row for a {col: Fraction} dict: clears denominators first."""
        den = 1
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
        return self.add_row({c: int(v * den) for c, v in row.items() if v})

    @property
    def rank(self):
        return len(self.pivrows)

    def echelon_rows(self):
        """Final RREF rows as {col: Fraction} with pivot 1, sorted by pivot col."""
        order = sorted(range(len(self.pivrows)), key=lambda i: self.pivcols[i])
        out = []
        for i in order:
            row = self.pivrows[i]
            pv = Fraction(row[self.pivcols[i]])
            out.append({c: Fraction(v) / pv for c, v in row.items()})
        return out

    def sorted_pivcols(self):
        return sorted(self.pivcols)


def _reduce_matrix(m):
    red = RowReducer(m.cols)
    for row in m.row_dicts():
        if row:
            red.add_fraction_row(row)
    return red


def rref(m):
    """Unique reduced row echelon form of m, with its pivot-column list.

    Zero rows are dropped; pivot columns come back strictly increasing.
    """
    red = _reduce_matrix(m)
    pivs = red.sorted_pivcols()
    entries = []
    for i, row in enumerate(red.echelon_rows()):
        for c, v in row.items():
            entries.append((i, c, v))
    return SparseMatrix(len(pivs), m.cols, entries), pivs


def nullspace(m):
    """Canonical basis of the kernel of m.

    One vector per free column, in ascending free-column order: the free
    variable is set to 1, the other free variables to 0, and the pivot
    variables back-solved.  Returns tuples of Fractions.
    """
    red = _reduce_matrix(m)
    return nullspace_from_reducer(red, m.cols)


def nullspace_from_reducer(red, ncols):
    pivset = set(red.pivcols)
    rows = red.echelon_rows()
    pivs = red.sorted_pivcols()
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, row in zip(pivs, rows):
            coef = row.get(f)
            if coef:
                v[p] = -coef
        basis.append(tuple(v))
    return basis


def solve(m, rhs):
    """Canonical solution of m·x = rhs with all free variables zero.

    Raises Inconsistent when no solution exists.  Works on the augmented
    system so the contradiction row is available for the error report.
    """
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    aug = m.cols  # augmented column index
    red = RowReducer(m.cols + 1)
    rows = m.row_dicts()
    for i, row in enumerate(rows):
        if rhs[i]:
            row[aug] = Fraction(rhs[i])
        if row:
            red.add_fraction_row(row)
    pivs = red.sorted_pivcols()
    rows_out = red.echelon_rows()
    x = [Fraction(0)] * m.cols
    for idx, (p, row) in enumerate(zip(pivs, rows_out)):
        if p == aug:
            raise Inconsistent(idx)
        x[p] = row.get(aug, Fraction(0))
    return tuple(x)


class SpanChecker:
    """Membership oracle for the span of a fixed list of vectors."""

    __slots__ = ("red", "ncols")

    def __init__(self, vectors, ncols):
        self.ncols = ncols
        self.red = RowReducer(ncols)
        for vec in vectors:
            self.red.add_fraction_row({c: Fraction(v) for c, v in enumerate(vec) if v})

    @property
    def rank(self):
        return self.red.rank

    def contains(self, vec):
        row = {}
        den = 1
        for c, v in enumerate(vec):
            if v:
                v = Fraction(v)
                row[c] = v
                den = den * v.denominator // gcd(den, v.denominator)
        return not self.red.reduce_only({c: int(v * den) for c, v in row.items()})


def canonical_basis(vectors, ncols):
    """Rewrite a spanning list of vectors as the canonical kernel-style basis.

    The output is the unique basis of span(vectors) in which each vector has
    trailing coordinate 1 at a distinct column, zeros at the other vectors'
    trailing columns, and the list is sorted by trailing column.  For the
    kernel of any matrix this is exactly what nullspace() returns, so a
    solver may produce a kernel basis by any route and canonicalize here.
    Implemented as RREF under reversed column order.
    """
    red = RowReducer(ncols)
    last = ncols - 1
    for vec in vectors:
        red.add_fraction_row({last - c: Fraction(v) for c, v in enumerate(vec) if v})
    out = []
    for row in red.echelon_rows():
        v = [Fraction(0)] * ncols
        for c, val in row.items():
            v[last - c] = val
        out.append(tuple(v))
    out.reverse()  # engine pivot ascending = trailing column descending
    return out
