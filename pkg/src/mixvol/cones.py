"""Double description method for polyhedral cones in integer arithmetic.

``cone_generators(A, d)`` returns the extreme rays and a lineality basis of
``{y in R^d : A y >= 0}``.  The same routine serves both directions of the
V/H conversion (a generating set of one cone is the constraint matrix of its
dual).
"""

from __future__ import annotations

from typing import Sequence

from .linalg import IntVec, dot, independent_rows, nullspace, primitive


def cone_generators(rows: Sequence[Sequence[int]], d: int) -> tuple[list[IntVec], list[IntVec]]:
    """Extreme rays and lineality basis of ``{y : rows . y >= 0}``.

    Rays are primitive integer vectors lying in the row space of ``rows``
    (the orthogonal complement of the lineality space), so the pointed part
    is described canonically.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    rows = [r for r in rows if any(r)]
    lineality = nullspace(rows, d) if rows else nullspace([], d)
    if not rows:
        return [], lineality
    basis_idx = independent_rows(rows)
    basis = [rows[i] for i in basis_idx]
    r = len(basis)
    # y = sum_j z_j basis[j]; constraints become M z >= 0 with M = rows . basis^T
    m = [tuple(dot(row, b) for b in basis) for row in rows]
    rays_z = _dd_pointed(m, r)
    rays = []
    for z in rays_z:
        y = [sum(z[j] * basis[j][i] for j in range(r)) for i in range(d)]
        rays.append(primitive(y))
    return sorted(set(rays)), lineality


def _dd_pointed(m: list[IntVec], r: int) -> list[IntVec]:
    """Extreme rays of ``{z in R^r : m z >= 0}`` where ``m`` has rank ``r``."""
    start = independent_rows(m)
    assert len(start) == r
    sub = [m[i] for i in start]
    rays: list[IntVec] = []
    for j in range(r):
        # the edge of the simplicial cone where every start row but j vanishes
        z = nullspace([sub[i] for i in range(r) if i != j], r)[0]
        if dot(sub[j], z) < 0:
            z = tuple(-x for x in z)
        rays.append(z)
    processed = list(start)
    zero_sets: list[frozenset[int]] = []
    for z in rays:
        zero_sets.append(frozenset(i for i in processed if dot(m[i], z) == 0))

    for idx in range(len(m)):
        if idx in start:
            continue
        row = m[idx]
        vals = [dot(row, z) for z in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        if not neg:
            processed.append(idx)
            zero_sets = [zs | {idx} if vals[k] == 0 else zs for k, zs in enumerate(zero_sets)]
            continue
        new_rays: list[IntVec] = []
        new_zero: list[frozenset[int]] = []
        for k in pos + zer:
            new_rays.append(rays[k])
            new_zero.append(zero_sets[k] | {idx} if vals[k] == 0 else zero_sets[k])
        for p in pos:
            for q in neg:
                common = zero_sets[p] & zero_sets[q]
                if len(common) < r - 2:
                    continue
                if any(
                    k != p and k != q and common <= zero_sets[k]
                    for k in range(len(rays))
                ):
                    continue
                vp, vq = vals[p], -vals[q]
                z = primitive([vq * a + vp * b for a, b in zip(rays[p], rays[q])])
                new_rays.append(z)
                new_zero.append(common | {idx})
        rays, zero_sets = new_rays, new_zero
        processed.append(idx)
    return rays
