"""Exact coefficients: rationals and sparse polynomials in the parameter h.

Exponents are stored doubled (``exp2``) so that half-integer powers can be
assembled term by term and rejected explicitly by :func:`assert_integral`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import DivisibilityError, IntegralityError

Rat = Fraction
Number = Union[int, Fraction]


def _clean(terms: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {e: c for e, c in terms.items() if c}


class HPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Number] | None = None):
        self._terms = _clean({int(e): Fraction(c) for e, c in (terms or {}).items()})
        self._hash = None

    @classmethod
    def const(cls, c: Number) -> HPoly:
        return cls({0: c})

    @classmethod
    def h(cls, power: Number = 1) -> HPoly:
        exp2 = Fraction(power) * 2
        if exp2.denominator != 1:
            raise ValueError("exponents must be multiples of 1/2")
        return cls({int(exp2): 1})

    @classmethod
    def monomial(cls, coeff: Number, exp2: int) -> HPoly:
        return cls({exp2: coeff})

    @staticmethod
    def coerce(x: HPoly | Number) -> HPoly:
        return x if isinstance(x, HPoly) else HPoly.const(x)

    # mapping-ish access
    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    def __iter__(self):
        return iter(sorted(self._terms))

    def coeff(self, exp2: int) -> Fraction:
        return self._terms.get(exp2, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    @property
    def min_exp2(self) -> int | None:
        return min(self._terms) if self._terms else None

    # arithmetic
    def __add__(self, other: HPoly | Number) -> HPoly:
        other = HPoly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return HPoly(out)

    __radd__ = __add__

    def __neg__(self) -> HPoly:
        return HPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: HPoly | Number) -> HPoly:
        return self + (-HPoly.coerce(other))

    def __rsub__(self, other: Number) -> HPoly:
        return HPoly.coerce(other) - self

    def __mul__(self, other: HPoly | Number) -> HPoly:
        if not isinstance(other, HPoly):
            c = Fraction(other)
            return HPoly({e: v * c for e, v in self._terms.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return HPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> HPoly:
        out = HPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exp2: int) -> HPoly:
        """Multiply by h^(exp2/2)."""
        return HPoly({e + exp2: c for e, c in self._terms.items()})

    def mod_h(self) -> HPoly:
        """Drop every term of h-degree >= 1 (the reduction modulo h)."""
        return HPoly({e: c for e, c in self._terms.items() if e < 2})

    def evaluate(self, h: Number) -> Fraction:
        h = Fraction(h)
        total = Fraction(0)
        for e, c in self._terms.items():
            if e % 2:
                if h != 1:
                    raise IntegralityError("cannot evaluate a half-integer power", (e, c))
                total += c
            else:
                total += c * h ** (e // 2)
        return total

    # comparison
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = HPoly.const(other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # rendering
    def __repr__(self) -> str:
        return f"HPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            hp = _h_power(e)
            if not hp:
                body = str(mag)
            elif mag == 1:
                body = hp
            else:
                body = f"{mag}*{hp}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[dict[str, int]]:
        return [
            {"num": c.numerator, "den": c.denominator, "exp2": e} for e, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict[str, int]]) -> HPoly:
        return cls({d["exp2"]: Fraction(d["num"], d["den"]) for d in data})


def _h_power(exp2: int) -> str:
    if exp2 == 0:
        return ""
    if exp2 == 2:
        return "h"
    if exp2 % 2 == 0 and exp2 > 0:
        return f"h^{exp2 // 2}"
    return f"h^({Fraction(exp2, 2)})"


def hpoly_arith(op: str, p: HPoly, q: HPoly | Number) -> HPoly:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        if isinstance(q, HPoly):
            raise TypeError("scale takes a rational factor")
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def div_h(p: HPoly) -> HPoly:
    """Divide by h; every exponent must be at least 1."""
    for e, c in p.items():
        if e < 2:
            raise DivisibilityError(f"term {c}*h^({Fraction(e, 2)}) is not divisible by h")
    return p.shift(-2)


def assert_integral(p: HPoly) -> HPoly:
    for e, c in p.items():
        if e < 0 or e % 2:
            raise IntegralityError(
                f"exponent {Fraction(e, 2)} of term with coefficient {c} is not a nonnegative integer",
                (e, c),
            )
    return p
