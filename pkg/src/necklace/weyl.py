"""Normal-ordered differential operators in the matrix-entry coordinates of Rep_d(Q).

A coordinate ``x[e,k,m]`` is the (k, m) entry of the matrix of edge ``e``,
with ``k`` indexing the source space and ``m`` the target space.  ``d[e,k,m]``
is the partial derivative with respect to it.  Monomials keep every
coordinate to the left of every derivative.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .errors import DimensionError, DomainError
from .quiver import Quiver

# variable: (edge position, edge name, source index, target index)
Var = tuple[int, str, int, int]
# monomial: (coordinate part, derivative part), each a sorted tuple of (Var, power)
Mono = tuple[tuple[tuple[Var, int], ...], tuple[tuple[Var, int], ...]]

ONE: Mono = ((), ())


class DimVector:
    """A dimension for every vertex of a quiver."""

    __slots__ = ("dims",)

    def __init__(self, quiver: Quiver, dims: Mapping[str, int]):
        for v in dims:
            quiver.check_vertex(v)
        missing = [v for v in quiver.vertices if v not in dims]
        if missing:
            raise DimensionError(f"no dimension given for vertex {missing[0]!r}")
        for v, n in dims.items():
            if int(n) != n or n < 0:
                raise DimensionError(f"dimension of {v} must be a nonnegative integer")
        self.dims = tuple((v, int(dims[v])) for v in quiver.vertices)

    def __getitem__(self, v: str) -> int:
        for name, n in self.dims:
            if name == v:
                return n
        raise DomainError(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DimVector) and self.dims == other.dims

    def __hash__(self) -> int:
        return hash(self.dims)

    def __str__(self) -> str:
        return ",".join(f"{v}={n}" for v, n in self.dims)

    @classmethod
    def parse(cls, quiver: Quiver, text: str) -> DimVector:
        """``v=2,u=1``; vertices left out default to 1."""
        dims = {v: 1 for v in quiver.vertices}
        for part in filter(None, (p.strip() for p in text.split(","))):
            if "=" not in part:
                raise DimensionError(f"bad dimension entry {part!r}")
            v, n = (s.strip() for s in part.split("=", 1))
            quiver.check_vertex(v)
            try:
                dims[v] = int(n)
            except ValueError:
                raise DimensionError(f"bad dimension {n!r} for vertex {v}") from None
        return cls(quiver, dims)


def _merge(a: Iterable[tuple[Var, int]], b: Iterable[tuple[Var, int]]) -> tuple[tuple[Var, int], ...]:
    acc: dict[Var, int] = dict(a)
    for v, n in b:
        acc[v] = acc.get(v, 0) + n
    return tuple(sorted((v, n) for v, n in acc.items() if n))


class WeylElement:
    """Map from normal-ordered monomials to rationals, tied to one dimension vector."""

    __slots__ = ("terms", "dims")

    def __init__(self, terms: Mapping[Mono, Fraction | int] | None = None, dims: DimVector | None = None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}
        self.dims = dims

    @classmethod
    def const(cls, c: Fraction | int, dims: DimVector | None = None) -> WeylElement:
        return cls({ONE: c}, dims)

    @classmethod
    def coordinate(cls, var: Var, dims: DimVector | None = None) -> WeylElement:
        return cls({(((var, 1),), ()): 1}, dims)

    @classmethod
    def derivative(cls, var: Var, dims: DimVector | None = None) -> WeylElement:
        return cls({((), ((var, 1),)): 1}, dims)

    def _dims_with(self, other: WeylElement) -> DimVector | None:
        if self.dims is not None and other.dims is not None and self.dims != other.dims:
            raise DimensionError(f"dimension vectors differ: {self.dims} vs {other.dims}")
        return self.dims if self.dims is not None else other.dims

    def __add__(self, other: WeylElement) -> WeylElement:
        dims = self._dims_with(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return WeylElement(out, dims)

    def __neg__(self) -> WeylElement:
        return WeylElement({k: -c for k, c in self.terms.items()}, self.dims)

    def __sub__(self, other: WeylElement) -> WeylElement:
        return self + (-other)

    def scale(self, c: Fraction | int) -> WeylElement:
        return WeylElement({k: v * c for k, v in self.terms.items()}, self.dims)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return weyl_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylElement.const(other)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(not ds for _, ds in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (mono, c) in enumerate(sorted(self.terms.items(), key=lambda kv: _mono_order(kv[0]))):
            body = _mono_str(mono)
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag} * {body}"
            if i == 0:
                out = ("-" if c < 0 else "") + piece
            else:
                out += (" - " if c < 0 else " + ") + piece
        return out

    def __repr__(self) -> str:
        return f"WeylElement({self})"

    def to_json(self) -> list[dict]:
        def side(part):
            return [{"edge": v[1], "row": v[2], "col": v[3], "power": n} for v, n in part]

        return [
            {"coords": side(xs), "derivs": side(ds), "num": c.numerator, "den": c.denominator}
            for (xs, ds), c in sorted(self.terms.items(), key=lambda kv: _mono_order(kv[0]))
        ]


def _mono_order(m: Mono) -> tuple:
    xs, ds = m
    deg = sum(n for _, n in xs) + sum(n for _, n in ds)
    return (-deg, xs, ds)


def _var_str(kind: str, v: Var, n: int) -> str:
    s = f"{kind}[{v[1]},{v[2]},{v[3]}]"
    return s if n == 1 else f"{s}^{n}"


def _mono_str(m: Mono) -> str:
    xs, ds = m
    return " ".join([_var_str("x", v, n) for v, n in xs] + [_var_str("d", v, n) for v, n in ds])


def _reorder(ds: tuple[tuple[Var, int], ...], xs: tuple[tuple[Var, int], ...]) -> dict[Mono, int]:
    """Normal-order d^b x^c = sum_k k! C(b,k) C(c,k) x^(c-k) d^(b-k), variable by variable."""
    dmap, xmap = dict(ds), dict(xs)
    shared = [v for v in dmap if v in xmap]
    out: dict[Mono, int] = {(xs, ds): 1}
    for v in shared:
        b, c = dmap[v], xmap[v]
        nxt: dict[Mono, int] = {}
        for (mx, md), coeff in out.items():
            mxd, mdd = dict(mx), dict(md)
            for k in range(min(b, c) + 1):
                w = factorial(k) * comb(b, k) * comb(c, k)
                nx = dict(mxd)
                nx[v] = c - k
                nd = dict(mdd)
                nd[v] = b - k
                key = (
                    tuple(sorted((u, n) for u, n in nx.items() if n)),
                    tuple(sorted((u, n) for u, n in nd.items() if n)),
                )
                nxt[key] = nxt.get(key, 0) + coeff * w
        out = nxt
    return out


def weyl_mul(p: WeylElement, q: WeylElement) -> WeylElement:
    dims = p._dims_with(q)
    out: dict[Mono, Fraction] = {}
    for (x1, d1), c1 in p.terms.items():
        for (x2, d2), c2 in q.terms.items():
            for (mx, md), w in _reorder(d1, x2).items():
                key = (_merge(x1, mx), _merge(md, d2))
                out[key] = out.get(key, 0) + c1 * c2 * w
    return WeylElement(out, dims)


def apply(p: WeylElement, f: WeylElement) -> WeylElement:
    """Act on a polynomial: differentiate by the derivative part, then multiply."""
    if not f.is_polynomial():
        raise DomainError("apply expects a polynomial (no derivative factors)")
    dims = p._dims_with(f)
    out: dict[Mono, Fraction] = {}
    for (xs, ds), c in p.terms.items():
        for (fx, _), cf in f.terms.items():
            powers = dict(fx)
            coeff = c * cf
            for v, n in ds:
                have = powers.get(v, 0)
                if have < n:
                    coeff = 0
                    break
                coeff *= factorial(have) // factorial(have - n)
                powers[v] = have - n
            if not coeff:
                continue
            key = (_merge(powers.items(), xs), ())
            out[key] = out.get(key, 0) + coeff
    return WeylElement(out, dims)


def variables(quiver: Quiver, dims: DimVector) -> list[Var]:
    out = []
    for pos, (name, src, tgt) in enumerate(quiver.edges):
        for k in range(1, dims[src] + 1):
            for m in range(1, dims[tgt] + 1):
                out.append((pos, name, k, m))
    return out
