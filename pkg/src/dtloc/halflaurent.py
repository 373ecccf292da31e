"""Exact Laurent polynomials in y and truncated power series over them.

The refined invariants computed by this package are Laurent polynomials in a
single variable y with integer coefficients; y stands for the square root of
the Lefschetz class, so an index shift by k multiplies a contribution by y**k
with k a (possibly negative) whole integer.  Generating series are truncated
polynomials in a counting variable q whose coefficients are such Laurent
polynomials.

A ``HalfLaurent`` is stored as a map exponent -> coefficient with no zero
coefficients; arithmetic is exact over Python integers.  Values are immutable
after construction, hashable and safe to share between threads.

Canonical text rendering (used by the CLI and golden tests): terms sorted by
ascending exponent, each rendered as ``c*y^k`` with ``y^0`` elided, joined by
`` + ``.  The zero polynomial renders as ``0``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class HalfLaurent:
    """Laurent polynomial in y with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        data: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise TypeError(f"exponent must be an integer, got {exp!r}")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficient must be an integer, got {coeff!r}")
            if coeff != 0:
                data[exp] = data.get(exp, 0) + coeff
                if data[exp] == 0:
                    del data[exp]
        self._terms = data

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "HalfLaurent":
        """The single term coefficient * y**exponent."""
        return cls({exponent: coefficient})

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map (no zero entries)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            s = out.get(exp, 0) + coeff
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = out
        return res

    def __neg__(self) -> "HalfLaurent":
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = {exp: -c for exp, c in self._terms.items()}
        return res

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "HalfLaurent") -> "HalfLaurent":
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out: dict[int, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = out
        return res

    def specialize_y1(self) -> int:
        """Evaluate at y = 1: the sum of all coefficients (Euler shadow)."""
        return sum(self._terms.values())

    def invert_y(self) -> "HalfLaurent":
        """Apply y -> 1/y, negating every exponent (duality shadow)."""
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = {-exp: c for exp, c in self._terms.items()}
        return res

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def pairs(self) -> list[list[int]]:
        """[[exponent, coefficient], ...] sorted by exponent, for JSON output."""
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    def render(self) -> str:
        """Canonical text form: ascending exponents, ``c*y^k``, ``y^0`` elided."""
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms):
            coeff = self._terms[exp]
            if exp == 0:
                parts.append(str(coeff))
            else:
                parts.append(f"{coeff}*y^{exp}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({self.render()})"


def hl_add(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    """Coefficient-wise sum with zero terms pruned."""
    return a + b


def hl_mul(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    """Convolution product in exact integer arithmetic."""
    return a * b


def hl_specialize_y1(a: HalfLaurent) -> int:
    return a.specialize_y1()


def hl_invert_y(a: HalfLaurent) -> HalfLaurent:
    return a.invert_y()


class TruncatedSeries:
    """Polynomial in q up to an inclusive truncation order, HalfLaurent coefficients.

    Series are always truncated, never lazy; the order is fixed at
    construction and all arithmetic demands matching orders.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[HalfLaurent] | None = None):
        if order < 0:
            raise ValueError("series order must be non-negative")
        self._order = order
        if coeffs is None:
            self._coeffs = tuple(HalfLaurent.zero() for _ in range(order + 1))
        else:
            cs = tuple(coeffs)
            if len(cs) != order + 1:
                raise ValueError(
                    f"expected {order + 1} coefficients for order {order}, got {len(cs)}"
                )
            if not all(isinstance(c, HalfLaurent) for c in cs):
                raise TypeError("series coefficients must be HalfLaurent values")
            self._coeffs = cs

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        coeffs = [HalfLaurent.one()] + [HalfLaurent.zero()] * order
        return cls(order, coeffs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[HalfLaurent, ...]:
        return self._coeffs

    def coefficient(self, degree: int) -> HalfLaurent:
        return self._coeffs[degree]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self._order != other._order:
            raise ValueError("series order mismatch")
        return TruncatedSeries(
            self._order, [a + b for a, b in zip(self._coeffs, other._coeffs)]
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self._order != other._order:
            raise ValueError("series order mismatch")
        out = [HalfLaurent.zero() for _ in range(self._order + 1)]
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j in range(self._order + 1 - i):
                b = other._coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self._order, out)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self._order, [fn(c) for c in self._coeffs])

    def render(self) -> str:
        return "; ".join(f"q^{n}: {c.render()}" for n, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self._order}, {self.render()})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order; orders must match."""
    return a * b
