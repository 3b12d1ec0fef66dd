"""Small exact linear-algebra kernel over the integers and rationals.

Vectors are plain tuples; integer vectors hold ``int`` entries and rational
ones hold :class:`fractions.Fraction`.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(gcd, v, 0)
    if g <= 1:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def integerize(v: Sequence) -> IntVec:
    """Scale a rational vector to a primitive integer vector with the same direction."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def _echelon(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    if _all_int(rows):
        return _echelon_int(rows, ncols)
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _echelon_int(rows, ncols: int):
    m, pivots = _echelon_int_raw(rows, ncols)
    return [[Fraction(x, row[c]) for x in row] for row, c in zip(m, pivots)], pivots


def _echelon_int_raw(rows, ncols: int):
    # fraction-free Gauss-Jordan: each pivot row keeps its own integer pivot
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = [p * a - f * b for a, b in zip(m[i], m[r])]
                g = reduce(gcd, row, 0)
                m[i] = [a // g for a in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _all_int(rows) -> bool:
    return all(type(x) is int for r in rows for x in r)


def _reduce_int(v: list[int], basis: list[list[int]], pivots: list[int]) -> list[int]:
    # fraction-free elimination against an integer echelon basis
    for b, p in zip(basis, pivots):
        if v[p]:
            f, g = b[p], v[p]
            v = [f * a - g * c for a, c in zip(v, b)]
            h = reduce(gcd, v, 0)
            if h > 1:
                v = [a // h for a in v]
    return v


def _independent_int(rows) -> list[int]:
    chosen: list[int] = []
    basis: list[list[int]] = []
    pivots: list[int] = []
    for idx, row in enumerate(rows):
        v = _reduce_int(list(row), basis, pivots)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            continue
        basis.append(v)
        pivots.append(p)
        chosen.append(idx)
    return chosen


def rank(rows: Sequence[Sequence]) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    if _all_int(rows):
        return len(_independent_int(rows))
    return len(_echelon(rows, len(rows[0]))[1])


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    if _all_int(rows):
        return _independent_int(rows)
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for b, p in zip(basis, pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * c for a, c in zip(v, b)]
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            continue
        inv = 1 / v[p]
        v = [x * inv for x in v]
        for j, b in enumerate(basis):
            if b[p] != 0:
                f = b[p]
                basis[j] = [a - f * c for a, c in zip(b, v)]
        basis.append(v)
        pivots.append(p)
        chosen.append(idx)
    return chosen


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[IntVec]:
    """Integer vectors spanning (over Q) the kernel of the matrix with the given rows."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    if _all_int(rows):
        return _nullspace_int(rows, ncols)
    red, pivots = _echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        out.append(integerize(v))
    return out


def _nullspace_int(rows, ncols: int) -> list[IntVec]:
    red, pivots = _echelon_int_raw(rows, ncols)
    out = []
    for f in (c for c in range(ncols) if c not in pivots):
        scale = reduce(lcm, (abs(row[p]) for row, p in zip(red, pivots) if row[f]), 1)
        v = [0] * ncols
        v[f] = scale
        for row, p in zip(red, pivots):
            v[p] = -row[f] * scale // row[p]
        out.append(primitive(v))
    return out


def solve(columns: Sequence[Sequence], target: Sequence) -> RatVec:
    """Solve ``sum_j y_j * columns[j] == target``; the columns must be independent
    and the system consistent (raises ``ValueError`` otherwise)."""
    k = len(columns)
    n = len(target)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, pivots = _echelon(aug, k + 1)
    if k in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) != k:
        raise ValueError("columns are dependent")
    y = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        y[p] = row[k]
    return tuple(y)


def det_int(mat: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    m = [list(r) for r in mat]
    n = len(m)
    sign, prev = 1, 1
    for c in range(n - 1):
        if m[c][c] == 0:
            piv = next((i for i in range(c + 1, n) if m[i][c]), None)
            if piv is None:
                return 0
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) // prev
        prev = m[c][c]
    return sign * m[n - 1][n - 1] if n else 1


def det(mat: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in mat]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    """A Z-basis of the lattice ``{x in Z^ncols : rows . x = 0}``.

    Unimodular column operations bring the matrix to column echelon form; the
    transformation columns beyond the rank span the kernel lattice.
    """
    a = [[int(x) for x in r] for r in rows]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]  # columns of u are tracked as u[.][j]

    def colop(j: int, k: int, p: int, q: int, r: int, s: int) -> None:
        # (col_j, col_k) <- (p*col_j + q*col_k, r*col_j + s*col_k)
        for mat in (a, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = p * x + q * y, r * x + s * y

    lead = 0
    for i in range(len(a)):
        if lead >= ncols:
            break
        for k in range(lead + 1, ncols):
            x, y = a[i][lead], a[i][k]
            if y == 0:
                continue
            g, s, t = _ext_gcd(x, y)
            # new lead column: s*x + t*y = g ; other: (-y/g)*x + (x/g)*y = 0
            colop(lead, k, s, t, -y // g, x // g)
        if a[i][lead] != 0:
            lead += 1
    return [tuple(u[r][j] for r in range(ncols)) for j in range(lead, ncols)]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_index(vectors: Sequence[Sequence[int]], d: int) -> int:
    """Index of the lattice spanned by ``vectors`` in ``Z^d`` (0 if not full rank)."""
    rows = [[int(x) for x in v] for v in vectors if any(v)]
    index = 1
    for c in range(d):
        rows = [r for r in rows if any(r)]
        # gcd-reduce column c across the remaining rows
        while True:
            nz = [r for r in rows if r[c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[c]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[c] // piv[c]
                for j in range(d):
                    r[j] -= q * piv[j]
        piv = next((r for r in rows if r[c] != 0), None)
        if piv is None:
            return 0
        index *= abs(piv[c])
        rows = [r for r in rows if r is not piv]
    return index
