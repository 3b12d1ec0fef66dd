"""Invariants of singularities computed from Newton polyhedra.

Every polyhedron here lives in a positive orthant ``R^n_+`` and has
recession cone ``R^n_+``.  Coordinate subsets ``J`` are 0-based.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .errors import DimensionError, PreconditionError, UnboundedError, UnsupportedError
from .linalg import solve
from .pairs import PolyhedronPair, mixed_volume_pairs, prism
from .polyhedron import (
    Polyhedron,
    convex_hull,
    direction_lattice,
    embed,
    faces,
    minkowski_sum_all,
    normal_cone_point,
    orthant,
    restrict_to_axes,
    simplex_complement,
    support_face,
    support_value,
)
from .resultants import resultantal_multiplicity as _resultantal_multiplicity
from .series import prod_x_over_one_plus_x


def _check_orthant(P: Polyhedron, n: int | None = None) -> None:
    if n is not None and P.dim != n:
        raise DimensionError(f"expected a polyhedron in R^{n}, got R^{P.dim}")
    if P.is_empty or P.rays != orthant(P.dim).rays:
        raise PreconditionError("polyhedron must have recession cone equal to the positive orthant")
    if any(x < 0 for v in P.vertices for x in v):
        raise PreconditionError("polyhedron must lie in the positive orthant")


def has_bounded_complement(P: Polyhedron) -> bool:
    """Whether ``R^n_+ - P`` is bounded, i.e. ``P`` meets every coordinate axis."""
    return meets_all_axes(P)


def meets_all_axes(P: Polyhedron) -> bool:
    return all(not restrict_to_axes(P, [i]).is_empty for i in range(P.dim))


def _require_bounded_complement(polys: Sequence[Polyhedron]) -> None:
    for P in polys:
        _check_orthant(P)
        if not has_bounded_complement(P):
            raise UnboundedError("complement in the positive orthant is unbounded")


def tilde(P: Polyhedron) -> PolyhedronPair:
    """The pair ``(R^n_+, P)``."""
    return PolyhedronPair(orthant(P.dim), P)


def standard_pair(n: int) -> PolyhedronPair:
    """``L = (R^n_+, R^n_+ minus the open standard simplex)``."""
    return PolyhedronPair(orthant(n), simplex_complement(n))


def mu(polys: Sequence[Polyhedron], method: str = "face_formula") -> Fraction:
    """``m! prod_i X_i/(1+X_i)`` evaluated at ``X_i = (R^m_+, N_i)``."""
    if not polys:
        raise DimensionError("mu needs at least one polyhedron")
    m = polys[0].dim
    _require_bounded_complement(polys)
    f = prod_x_over_one_plus_x(len(polys))
    return factorial(m) * f.evaluate([tilde(P) for P in polys], m, method)


def milnor_terms(polys: Sequence[Polyhedron], method: str = "face_formula") -> list[tuple[tuple[int, ...], Fraction]]:
    """``(J, mu_|J|(restrictions to R^J))`` for every nonempty coordinate set."""
    n = polys[0].dim
    out = []
    for size in range(1, n + 1):
        for J in combinations(range(n), size):
            restricted = [restrict_to_axes(P, J) for P in polys]
            if any(R.is_empty for R in restricted):
                out.append((J, Fraction(0)))
                continue
            out.append((J, mu(restricted, method)))
    return out


def milnor_number(polys: Sequence[Polyhedron], method: str = "face_formula") -> Fraction:
    """Milnor number of a generic complete intersection ``f_0 = .. = f_k = 0``
    with the given Newton polyhedra in ``R^n_+``."""
    if not polys:
        raise DimensionError("need at least one Newton polyhedron")
    n = polys[0].dim
    k = len(polys) - 1
    if any(P.dim != n for P in polys):
        raise DimensionError("Newton polyhedra live in different dimensions")
    if k + 1 > n:
        raise DimensionError("more equations than variables")
    _require_bounded_complement(polys)
    total = sum((v for _, v in milnor_terms(polys, method)), Fraction(0))
    return (-1) ** (n - k - 1) * total + (-1) ** (n - k)


def res_eg_pairs(ns: Sequence[Polyhedron], ms: Sequence[Polyhedron], variant: bool = False) -> list[PolyhedronPair]:
    """The ``k + m`` pairs in ``R^k + R^m`` entering ``res_eg``.

    The first ``k`` are ``({0} x R^m_+, {0} x N_i)``.  The last ``m`` are
    ``(M_j * N_1 * .. * N_k, M_j * N_1 * .. * N_k)``; with ``variant`` the
    first component becomes ``R^m_+ * N_1 * .. * N_k``.
    """
    k = len(ns)
    if not ms:
        raise DimensionError("res_eg needs at least one M polyhedron")
    m = ms[0].dim
    if any(P.dim != m for P in list(ns) + list(ms)):
        raise DimensionError("res_eg polyhedra must share the ambient dimension")
    total = k + m
    coords = list(range(k, total))
    out = []
    for N in ns:
        out.append(PolyhedronPair(embed(orthant(m), total, coords), embed(N, total, coords)))
    for M in ms:
        second = prism([M] + list(ns))
        first = prism([orthant(m)] + list(ns)) if variant else second
        out.append(PolyhedronPair(first, second))
    return out


def res_eg(ns: Sequence[Polyhedron], ms: Sequence[Polyhedron], variant: bool = False,
           method: str = "face_formula") -> Fraction:
    _require_bounded_complement(ns)
    return mixed_volume_pairs(res_eg_pairs(ns, ms, variant), method)


def one_form_polyhedra(w_polys: Sequence[Polyhedron]) -> list[Polyhedron]:
    """Newton polyhedra of ``x_i w_i`` from those of ``w_i``."""
    n = len(w_polys)
    return [W.translate(tuple(int(j == i) for j in range(n))) for i, W in enumerate(w_polys)]


def gz_index_terms(fs: Sequence[Polyhedron], xws: Sequence[Polyhedron], variant: bool = False,
                   method: str = "face_formula") -> list[tuple[tuple[int, ...], Fraction]]:
    n = len(xws)
    k = len(fs)
    out = []
    for size in range(1, n + 1):
        for J in combinations(range(n), size):
            rf = [restrict_to_axes(P, J) for P in fs]
            rw = [restrict_to_axes(xws[i], J) for i in J]
            if any(R.is_empty for R in rf + rw):
                raise PreconditionError("Newton polyhedra must intersect all coordinate axes")
            val = factorial(size + k) * mixed_volume_pairs(res_eg_pairs(rf, rw, variant), method)
            out.append((J, (-1) ** (n - size) * val))
    return out


def gz_index(fs: Sequence[Polyhedron], xws: Sequence[Polyhedron], variant: bool = False,
             method: str = "face_formula") -> Fraction:
    """Index of the 1-form ``sum w_i dx_i`` on the complete intersection
    ``f_1 = .. = f_k = 0``.  ``xws[i]`` is the Newton polyhedron of ``x_i w_i``
    (see :func:`one_form_polyhedra`)."""
    if not fs:
        raise UnsupportedError("the index formula needs at least one equation (k >= 1)")
    n = len(xws)
    if any(P.dim != n for P in list(fs) + list(xws)):
        raise DimensionError(f"need n = {n} one-form polyhedra in R^{n}")
    if len(fs) >= n:
        raise DimensionError("need k < n equations")
    for P in list(fs) + list(xws):
        _check_orthant(P, n)
    for P in fs:
        if not meets_all_axes(P):
            raise PreconditionError("Newton polyhedra must intersect all coordinate axes")
    return sum((v for _, v in gz_index_terms(fs, xws, variant, method)), Fraction(0))


def det_multiplicity_terms(n: int, I: int, k: int, deltas: Sequence[Polyhedron],
                           method: str = "face_formula") -> list[tuple[tuple[int, ...], Fraction]]:
    if I >= k:
        raise DimensionError("need I < k")
    copies = n - k + I - 1
    if copies < 0:
        raise DimensionError("negative expected dimension: need n >= k - I + 1")
    if len(deltas) != k:
        raise DimensionError(f"need k = {k} column polyhedra")
    _require_bounded_complement(deltas)
    if any(P.dim != n for P in deltas):
        raise DimensionError(f"column polyhedra must live in R^{n}")
    L = standard_pair(n)
    out = []
    for cols in combinations(range(k), k - I + 1):
        args = [tilde(deltas[j]) for j in cols] + [L] * copies
        out.append((cols, factorial(n) * mixed_volume_pairs(args, method)))
    return out


def det_multiplicity(n: int, I: int, k: int, deltas: Sequence[Polyhedron], method: str = "face_formula") -> Fraction:
    """Multiplicity of a generic ``I x k`` determinantal germ in ``C^n`` whose
    ``j``-th column entries have Newton polyhedron ``deltas[j]``."""
    return sum((v for _, v in det_multiplicity_terms(n, I, k, deltas, method)), Fraction(0))


def collection_pairs(blocks: Sequence[Sequence[Sequence[Polyhedron]]]) -> list[PolyhedronPair]:
    """Embedded prism pairs for a collection of matrices.

    ``blocks[j][i][c]`` is the Newton polyhedron of entry ``(i, c)`` of the
    ``j``-th matrix (``I_j`` rows, ``k_j`` columns).
    """
    if not blocks:
        raise DimensionError("empty collection")
    n = blocks[0][0][0].dim
    simplex_total = sum(len(b) - 1 for b in blocks)
    k_total = sum(len(b[0]) for b in blocks)
    if n != sum(1 + len(b[0]) - len(b) for b in blocks):
        raise DimensionError("need n = sum over blocks of (1 + k_j - I_j)")
    out = []
    offset = 0
    for b in blocks:
        rows = len(b)
        cols = len(b[0])
        if any(len(r) != cols for r in b):
            raise DimensionError("ragged matrix block")
        for c in range(cols):
            ops = [tilde(b[i][c]) for i in range(rows)]
            out.append(prism(ops, total_simplex_dim=simplex_total, offset=offset))
        offset += rows - 1
    assert len(out) == k_total == simplex_total + n
    return out


def collection_multiplicity(blocks: Sequence[Sequence[Sequence[Polyhedron]]], method: str = "face_formula") -> Fraction:
    """``(k_1 + .. + k_J)!`` times the mixed volume of the embedded prism pairs."""
    for b in blocks:
        for row in b:
            _require_bounded_complement(row)
    pairs = collection_pairs(blocks)
    return factorial(len(pairs)) * mixed_volume_pairs(pairs, method)


def determinant_encoding(matrix: Sequence[Sequence[Polyhedron]]):
    """Configurations and components encoding an ``I x k`` matrix as ``k``
    linear functions on ``Z^(I-1)``: row ``i < I-1`` goes to the point
    ``e_i`` and the last row to the origin."""
    I = len(matrix)
    k = len(matrix[0])
    pts = [tuple(int(j == i) for j in range(I - 1)) for i in range(I - 1)] + [(0,) * (I - 1)]
    sigmas = [pts] * k
    components = [[matrix[i][c] for i in range(I)] for c in range(k)]
    return sigmas, components


def resultantal_multiplicity(sigmas, components, method: str = "face_formula") -> Fraction:
    for comps in components:
        _require_bounded_complement(comps)
    return _resultantal_multiplicity(sigmas, components, method)


def chi_terms(deltas: Sequence[Polyhedron], ns: Sequence[Polyhedron],
              method: str = "face_formula") -> list[tuple[tuple[Polyhedron, ...], int, Fraction]]:
    """Contributions of the compatible unbounded face tuples."""
    k = len(deltas)
    if len(ns) != k or k == 0:
        raise DimensionError("need one Newton polyhedron per line-bundle polyhedron")
    n = deltas[0].dim
    if deltas[0] != orthant(n):
        raise PreconditionError("the first polyhedron must be the positive orthant")
    for D, N in zip(deltas, ns):
        if N.dim != n or D.dim != n:
            raise DimensionError("polyhedra live in different dimensions")
        if not all(v in D for v in N.vertices):
            raise PreconditionError("Newton polyhedron is not contained in its bundle polyhedron")
    P = minkowski_sum_all(deltas, n)
    seen = set()
    out = []
    for F in faces(P):
        if F.polyhedron.is_bounded:
            continue
        gamma = normal_cone_point(P, F)
        tup = tuple(support_face(D, gamma) for D in deltas)
        if tup in seen:
            continue
        seen.add(tup)
        q = F.polyhedron.affine_dim
        basis = direction_lattice(F.polyhedron)
        pairs = []
        for A, D, N in zip(tup, deltas, ns):
            level = support_value(D, gamma)
            if support_value(N, gamma) != level:
                raise PreconditionError("a compatible face misses the Newton polyhedron")
            AN = support_face(N, gamma)
            origin = A.vertices[0]
            pairs.append(PolyhedronPair(_chart(A, origin, basis, q), _chart(AN, origin, basis, q)))
        f = prod_x_over_one_plus_x(k)
        out.append((tup, q, factorial(q) * f.evaluate(pairs, q, method)))
    return out


def _chart(P: Polyhedron, origin, basis, q: int) -> Polyhedron:
    pts = [solve(basis, [a - b for a, b in zip(v, origin)]) for v in P.vertices]
    rays = [tuple(int(x) for x in solve(basis, r)) for r in P.rays]
    return convex_hull(pts, rays, q)


def chi_compatible_faces(deltas: Sequence[Polyhedron], ns: Sequence[Polyhedron],
                         method: str = "face_formula") -> Fraction:
    """Euler characteristic of the Milnor fiber of the first section on the
    zero set of the others, summed over compatible unbounded faces."""
    return sum((t[2] for t in chi_terms(deltas, ns, method)), Fraction(0))


def _binom(top: int, bottom: int) -> int:
    if top < 0 or bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def euler_char_terms(n: int, I: int, k: int, deltas: Sequence[Polyhedron], method: str = "face_formula"):
    """Nonzero summands ``(J, a_0, columns, a, value)`` of the Euler characteristic formula."""
    if I >= k:
        raise DimensionError("need I < k")
    if n > 2 * (k - I + 2):
        raise DimensionError("need n <= 2(k - I + 2)")
    if len(deltas) != k + 1:
        raise DimensionError(f"need k + 1 = {k + 1} polyhedra")
    for P in deltas:
        _check_orthant(P, n)
    if not meets_all_axes(deltas[0]):
        raise PreconditionError("the function's Newton polyhedron must intersect all coordinate axes")
    _require_bounded_complement(deltas[1:])
    out = []
    for size in range(1, n + 1):
        for J in combinations(range(n), size):
            restricted = [tilde(restrict_to_axes(P, J)) for P in deltas]
            for q in range(0, k + 1):
                for cols in combinations(range(1, k + 1), q):
                    for a0 in range(1, size + 1):
                        c = _binom(size + q - a0 - 2, q - k + I - 1)
                        if not c:
                            continue
                        rest = size - a0
                        inner = Fraction(0)
                        for a in _compositions(rest, q):
                            args = [restricted[0]] * a0
                            for j, aj in zip(cols, a):
                                args += [restricted[j]] * aj
                            inner += factorial(size) * mixed_volume_pairs(args, method)
                        if inner:
                            sign = (-1) ** (size + k - I)
                            out.append((J, a0, cols, sign * c * inner))
    return out


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def euler_char_det(n: int, I: int, k: int, deltas: Sequence[Polyhedron], method: str = "face_formula") -> Fraction:
    """Euler characteristic of a Milnor fiber of ``f`` restricted to a generic
    ``I x k`` determinantal germ in ``C^n`` (``deltas[0]`` is the Newton
    polyhedron of ``f``, ``deltas[1..k]`` those of the columns)."""
    return sum((t[3] for t in euler_char_terms(n, I, k, deltas, method)), Fraction(0))


def radial_index_det(n: int, I: int, k: int, deltas: Sequence[Polyhedron], method: str = "face_formula") -> Fraction:
    return 1 - euler_char_det(n, I, k, deltas, method)
