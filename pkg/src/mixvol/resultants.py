"""Point configurations, resultantal codimension and resultant support functions.

Indices of configurations are 0-based throughout.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence

from .errors import DimensionError, NotEssentialError, PreconditionError
from .linalg import IntVec, lattice_index, rank
from .pairs import PolyhedronPair, cayley_polyhedron, mixed_volume_pairs
from .polyhedron import Polyhedron, convex_hull, orthant

MAX_CONFIGURATIONS = 12


@dataclass(frozen=True)
class PointConfiguration:
    """A nonempty finite subset of ``Z^N`` (order of first appearance kept)."""

    points: tuple[IntVec, ...]

    def __init__(self, points: Sequence[Sequence[int]]):
        seen: list[IntVec] = []
        for p in points:
            t = tuple(int(x) for x in p)
            if t not in seen:
                seen.append(t)
        if not seen:
            raise PreconditionError("empty point configuration")
        if len({len(p) for p in seen}) != 1:
            raise DimensionError("configuration points have different lengths")
        object.__setattr__(self, "points", tuple(seen))

    @property
    def N(self) -> int:
        return len(self.points[0])

    def directions(self) -> list[IntVec]:
        a0 = self.points[0]
        return [tuple(x - y for x, y in zip(a, a0)) for a in self.points[1:]]

    def hull(self) -> Polyhedron:
        return convex_hull(self.points, (), self.N)


def _as_configs(sigmas) -> list[PointConfiguration]:
    out = [s if isinstance(s, PointConfiguration) else PointConfiguration(s) for s in sigmas]
    if len({s.N for s in out}) > 1:
        raise DimensionError("configurations live in lattices of different rank")
    return out


def dim_config(sigmas) -> int:
    """Dimension of the convex hull of the Minkowski sum."""
    sig = _as_configs(sigmas)
    dirs = [d for s in sig for d in s.directions()]
    return rank(dirs) if dirs else 0


def codim_config(sigmas) -> int:
    return len(sigmas) - dim_config(sigmas)


def _check_count(sig) -> None:
    if len(sig) > MAX_CONFIGURATIONS:
        raise PreconditionError(f"at most {MAX_CONFIGURATIONS} configurations are supported")
    if not sig:
        raise PreconditionError("empty collection of configurations")


def resultantal_codim(sigmas) -> int:
    """Maximum of the codimension over nonempty subcollections."""
    sig = _as_configs(sigmas)
    _check_count(sig)
    return max(
        codim_config([sig[i] for i in sub])
        for size in range(1, len(sig) + 1)
        for sub in combinations(range(len(sig)), size)
    )


def essential_subcollection(sigmas) -> tuple[int, ...]:
    """The inclusion-minimal index set achieving the resultantal codimension."""
    sig = _as_configs(sigmas)
    _check_count(sig)
    best = resultantal_codim(sig)
    achievers = [
        sub
        for size in range(1, len(sig) + 1)
        for sub in combinations(range(len(sig)), size)
        if codim_config([sig[i] for i in sub]) == best
    ]
    minimal = [a for a in achievers if not any(set(b) < set(a) for b in achievers)]
    if len(minimal) != 1:
        raise PreconditionError(f"no unique minimal subcollection: {minimal}")
    return minimal[0]


def is_essential(sigmas) -> bool:
    """Every proper nonempty subcollection has strictly smaller codimension."""
    sig = _as_configs(sigmas)
    _check_count(sig)
    full = codim_config(sig)
    return all(
        codim_config([sig[i] for i in sub]) < full
        for size in range(1, len(sig))
        for sub in combinations(range(len(sig)), size)
    )


def generates_lattice(sigmas) -> bool:
    """Whether ``(sum of the configurations) x {1}`` spans ``Z^N + Z``."""
    sig = _as_configs(sigmas)
    N = sig[0].N
    # the lattice spanned by the sum is spanned by one base point plus all differences
    base = tuple(sum(s.points[0][c] for s in sig) for c in range(N)) + (1,)
    vecs = [base] + [d + (0,) for s in sig for d in s.directions()]
    return lattice_index(vecs, N + 1) == 1


def _lifted(points: Sequence[IntVec], heights: Sequence, up: bool) -> Polyhedron:
    N = len(points[0])
    ray = (1 if up else -1,) + (0,) * N
    return convex_hull([(Fraction(h),) + tuple(a) for a, h in zip(points, heights)], [ray], N + 1)


def resultant_pairs(sigmas, gamma: Sequence[Sequence[int]], convention: str = "min") -> list[PolyhedronPair]:
    """Pairs in ``R + R^N`` whose mixed volume gives the resultant support value.

    ``gamma[i][j]`` is the weight of the ``j``-th point of configuration ``i``.
    With ``convention="min"`` the lifted hulls recede along the positive first
    axis and the value is ``min`` of ``gamma`` over the Newton polytope; with
    ``"max"`` they recede along the negative axis with the components swapped,
    giving the maximum.
    """
    sig = _as_configs(sigmas)
    if len(gamma) != len(sig) or any(len(g) != len(s.points) for g, s in zip(gamma, sig)):
        raise DimensionError("weights must be given for every point of every configuration")
    if convention not in ("min", "max"):
        raise ValueError(f"unknown convention {convention!r}")
    out = []
    for s, g in zip(sig, gamma):
        flat = _lifted(s.points, [0] * len(s.points), convention == "min")
        lifted = _lifted(s.points, g, convention == "min")
        out.append(PolyhedronPair(flat, lifted) if convention == "min" else PolyhedronPair(lifted, flat))
    return out


def resultant_support(sigmas, gamma: Sequence[Sequence[int]], convention: str = "min",
                      method: str = "face_formula") -> Fraction:
    """Support value of the Newton polytope of the sparse resultant at ``gamma``.

    ``convention="min"`` returns the minimum of ``gamma`` over the polytope,
    ``"max"`` the maximum.
    """
    sig = _as_configs(sigmas)
    N = sig[0].N
    if len(sig) != N + 1:
        raise DimensionError(f"need N+1 = {N + 1} configurations in Z^{N}, got {len(sig)}")
    if dim_config(sig) != N:
        raise DimensionError("the configurations do not span the ambient lattice")
    if not is_essential(sig):
        raise NotEssentialError("collection is not essential; reduce it with essential_subcollection")
    if not generates_lattice(sig):
        warnings.warn("configurations do not generate the full lattice", stacklevel=2)
    pairs = resultant_pairs(sig, gamma, convention)
    return factorial(N + 1) * mixed_volume_pairs(pairs, method)


def resultantal_pairs(sigmas, components: Sequence[Sequence[Polyhedron]]) -> list[PolyhedronPair]:
    """Pairs ``(conv(S_i) x R^n_+, conv(U_a {a} x D_(a,i)))`` in ``R^N + R^n``."""
    sig = _as_configs(sigmas)
    out = []
    for s, comps in zip(sig, components):
        if len(comps) != len(s.points):
            raise DimensionError("one component polyhedron per configuration point is required")
        n = comps[0].dim
        orth = [orthant(n)] * len(s.points)
        out.append(PolyhedronPair(cayley_polyhedron(s.points, orth), cayley_polyhedron(s.points, comps)))
    return out


def resultantal_multiplicity(sigmas, components: Sequence[Sequence[Polyhedron]],
                             method: str = "face_formula") -> Fraction:
    """``I!`` times the mixed volume of the Cayley pairs of a resultantal germ."""
    sig = _as_configs(sigmas)
    I = len(sig)
    N = sig[0].N
    n = components[0][0].dim
    if n != I - N:
        raise DimensionError(f"need n = I - N, got n={n}, I={I}, N={N}")
    if not is_essential(sig):
        raise NotEssentialError("collection is not essential; reduce it with essential_subcollection")
    if dim_config(sig) != N:
        raise DimensionError("the configurations do not span the ambient lattice")
    if not generates_lattice(sig):
        raise PreconditionError("the configurations do not generate the lattice")
    pairs = resultantal_pairs(sig, components)
    return factorial(I) * mixed_volume_pairs(pairs, method)
