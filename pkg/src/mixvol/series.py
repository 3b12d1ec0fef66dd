"""Rational functions of pairs of polyhedra.

A :class:`PairPolynomial` is a quotient ``P / Q`` of polynomials with
rational coefficients in ``m`` formal variables, with ``Q(0) = 1``.  Its
value on pairs ``X_1..X_m`` in ``R^n`` expands ``P / Q`` as a power series,
keeps the part of total degree ``n``, and replaces each monomial
``c X^a`` by ``c`` times the mixed volume with ``X_i`` repeated ``a_i`` times.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, PreconditionError
from .pairs import PolyhedronPair, mixed_volume_pairs

Exponent = tuple[int, ...]
Poly = dict[Exponent, Fraction]


def _clean(p: Mapping[Exponent, Fraction]) -> Poly:
    return {e: Fraction(c) for e, c in p.items() if c}


def _mul(p: Poly, q: Poly, max_degree: int | None = None) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            if max_degree is not None and sum(e) > max_degree:
                continue
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return _clean(out)


def _add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, Fraction(0)) + c
    return _clean(out)


@dataclass(frozen=True)
class PairPolynomial:
    """``numerator / denominator`` in ``nvars`` variables (sparse dicts)."""

    nvars: int
    numerator: Mapping[Exponent, Fraction]
    denominator: Mapping[Exponent, Fraction] | None = None

    def __post_init__(self):
        for poly in (self.numerator, self.denominator or {}):
            if any(len(e) != self.nvars or min(e, default=0) < 0 for e in poly):
                raise DimensionError("exponent vector does not match the variable count")
        if self.denominator is not None:
            zero = (0,) * self.nvars
            if Fraction(self.denominator.get(zero, 0)) != 1:
                raise PreconditionError("denominator must have constant term 1")

    @classmethod
    def constant(cls, c, nvars: int) -> "PairPolynomial":
        return cls(nvars, _clean({(0,) * nvars: Fraction(c)}))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "PairPolynomial":
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): Fraction(1)})

    def _den(self) -> Poly:
        return dict(self.denominator) if self.denominator is not None else {(0,) * self.nvars: Fraction(1)}

    def __add__(self, other: "PairPolynomial") -> "PairPolynomial":
        d1, d2 = self._den(), other._den()
        num = _add(_mul(_clean(self.numerator), d2), _mul(_clean(other.numerator), d1))
        return PairPolynomial(self.nvars, num, _mul(d1, d2))

    def __mul__(self, other: "PairPolynomial") -> "PairPolynomial":
        return PairPolynomial(
            self.nvars,
            _mul(_clean(self.numerator), _clean(other.numerator)),
            _mul(self._den(), other._den()),
        )

    def __truediv__(self, other: "PairPolynomial") -> "PairPolynomial":
        if other.denominator is not None:
            num = _mul(_clean(self.numerator), _clean(other.denominator))
        else:
            num = _clean(self.numerator)
        return PairPolynomial(self.nvars, num, _mul(self._den(), _clean(other.numerator)))

    def series(self, degree: int) -> Poly:
        """Power-series expansion truncated above total ``degree``."""
        num = {e: c for e, c in _clean(self.numerator).items() if sum(e) <= degree}
        if self.denominator is None:
            return num
        zero = (0,) * self.nvars
        # 1/Q = sum_j (1 - Q)^j, and 1 - Q has no constant term
        u = {e: -c for e, c in _clean(self.denominator).items() if e != zero and sum(e) <= degree}
        inv: Poly = {zero: Fraction(1)}
        power: Poly = {zero: Fraction(1)}
        for _ in range(degree):
            power = _mul(power, u, degree)
            if not power:
                break
            inv = _add(inv, power)
        return _mul(num, inv, degree)

    def degree_part(self, n: int) -> Poly:
        return {e: c for e, c in self.series(n).items() if sum(e) == n}

    def evaluation_terms(self, bindings: Sequence[PolyhedronPair], n: int,
                         method: str = "face_formula") -> list[tuple[Exponent, Fraction, Fraction]]:
        """``(exponent, coefficient, mixed volume)`` for each degree-``n`` monomial."""
        if len(bindings) != self.nvars:
            raise DimensionError(f"expected {self.nvars} bound pairs, got {len(bindings)}")
        if any(p.dim != n for p in bindings):
            raise DimensionError(f"bound pairs must live in R^{n}")
        out = []
        for e, c in sorted(self.degree_part(n).items()):
            args = [bindings[i] for i, a in enumerate(e) for _ in range(a)]
            out.append((e, c, mixed_volume_pairs(args, method)))
        return out

    def evaluate(self, bindings: Sequence[PolyhedronPair], n: int, method: str = "face_formula") -> Fraction:
        return sum((c * v for _, c, v in self.evaluation_terms(bindings, n, method)), Fraction(0))

    @classmethod
    def from_json(cls, obj: dict) -> "PairPolynomial":
        """``{"variables": k, "numerator": [{"coef": "p/q", "exp": [...]}, ...],
        "denominator": [...]}`` (denominator optional)."""
        k = int(obj["variables"])

        def read(terms):
            out: Poly = {}
            for t in terms:
                e = tuple(int(x) for x in t["exp"])
                out[e] = out.get(e, Fraction(0)) + Fraction(str(t.get("coef", 1)))
            return _clean(out)

        den = read(obj["denominator"]) if obj.get("denominator") is not None else None
        return cls(k, read(obj["numerator"]), den)


def prod_x_over_one_plus_x(nvars: int) -> PairPolynomial:
    """``prod_i X_i / (1 + X_i)``."""
    f = PairPolynomial.constant(1, nvars)
    one = PairPolynomial.constant(1, nvars)
    for i in range(nvars):
        x = PairPolynomial.variable(i, nvars)
        f = f * (x / (one + x))
    return f


def eval_pair_function(f: PairPolynomial, bindings: Sequence[PolyhedronPair], n: int,
                       method: str = "face_formula") -> Fraction:
    return f.evaluate(bindings, n, method)
