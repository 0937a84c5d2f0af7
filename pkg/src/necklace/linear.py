"""Sparse linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, TypeVar

V = TypeVar("V", bound="LinComb")


class LinComb:
    """Immutable map ``key -> Fraction`` with no zero entries.

    Subclasses only fix how keys are ordered and printed.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] = ()):
        acc: dict[Hashable, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            acc[k] = acc.get(k, 0) + c
        self.terms = {k: Fraction(c) for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls: type[V], terms: dict[Hashable, Fraction]) -> V:
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: type[V]) -> V:
        return cls._raw({})

    @classmethod
    def single(cls: type[V], key: Hashable, coeff: Any = 1) -> V:
        return cls({key: coeff})

    def __iter__(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: self.key_order(kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: Hashable) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def _check(self, other: Any) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self: V, other: V) -> V:
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self: V) -> V:
        return self._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self: V, other: V) -> V:
        return self + (-other)

    def scale(self: V, c: Any) -> V:
        c = Fraction(c)
        if not c:
            return self.zero()
        return self._raw({k: v * c for k, v in self.terms.items()})

    def __rmul__(self: V, c: Any) -> V:
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def map_keys(self: V, fn: Callable[[Hashable], Iterable[tuple[Hashable, Any]]]) -> V:
        """Linear extension of ``fn`` where ``fn(key)`` yields ``(key', coeff)`` pairs."""
        out: dict[Hashable, Fraction] = {}
        for k, c in self.terms.items():
            for k2, c2 in fn(k):
                out[k2] = out.get(k2, 0) + c * c2
        return self._raw({k: c for k, c in out.items() if c})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # subclass hooks
    @staticmethod
    def key_order(key: Hashable) -> Any:
        return key

    @staticmethod
    def key_str(key: Hashable) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (k, c) in enumerate(self):
            body = self.key_str(k)
            mag = abs(c)
            piece = body if mag == 1 else f"{mag}*{body}"
            if i == 0:
                out = ("-" if c < 0 else "") + piece
            else:
                out += (" - " if c < 0 else " + ") + piece
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"
