"""Heighted links and the algebra/tensor element containers built on them."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import ComposabilityError, DomainError
from ..lie import Idem, LieElement, LieMonomial
from ..linear import LinComb
from ..quiver import Arrow, CyclicWord, minimal_rotation
from ..scalars import HPoly

Cycle = tuple[tuple[Arrow, int], ...]


def _cycle_key(cycle: Cycle) -> tuple:
    word = minimal_rotation(tuple(a.index for a, _ in cycle))
    return (len(cycle), word, cycle[0][1])


class Link:
    """A symmetric product of heighted cycles and vertex idempotents.

    Instances are always canonical: heights are ``1..N``, each cycle starts at
    its lowest arrow, cycles are sorted by (length, cyclic word, lowest
    height) and idempotents by name.  Equality is equality of that form.
    """

    __slots__ = ("cycles", "idems", "_hash", "n_arrows")

    def __init__(self, cycles: tuple[Cycle, ...], idems: tuple[str, ...]):
        # trusted constructor; use Link.make for arbitrary input
        self.cycles = cycles
        self.idems = idems
        self.n_arrows = sum(len(c) for c in cycles)
        self._hash = hash((cycles, idems))

    @classmethod
    def make(
        cls,
        cycles: Iterable[Sequence[tuple[Arrow, int]]],
        idems: Iterable[str] = (),
        check: bool = False,
    ) -> Link:
        cycles = [tuple(c) for c in cycles]
        heights = sorted(h for c in cycles for _, h in c)
        if check:
            if len(set(heights)) != len(heights):
                raise DomainError("heights in a link must be distinct")
            for c in cycles:
                if not c:
                    raise ComposabilityError("empty cycle in link", 0)
                for i, (a, _) in enumerate(c):
                    b = c[(i + 1) % len(c)][0]
                    if a.target != b.source:
                        raise ComposabilityError(f"{a.name} cannot be followed by {b.name}", i)
        rank = {h: i + 1 for i, h in enumerate(heights)}
        canon = []
        for c in cycles:
            low = min(range(len(c)), key=lambda i: c[i][1])
            rot = c[low:] + c[:low]
            canon.append(tuple((a, rank[h]) for a, h in rot))
        canon.sort(key=_cycle_key)
        return cls(tuple(canon), tuple(sorted(idems)))

    @classmethod
    def unit(cls) -> Link:
        return _UNIT

    # structure
    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Link)
            and self._hash == other._hash
            and self.cycles == other.cycles
            and self.idems == other.idems
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Link) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (
            self.n_arrows,
            len(self.cycles) + len(self.idems),
            tuple(_cycle_key(c)[:2] for c in self.cycles),
            self.idems,
            tuple(tuple(h for _, h in c) for c in self.cycles),
        )

    @property
    def is_unit(self) -> bool:
        return not self.cycles and not self.idems

    @property
    def n_components(self) -> int:
        """Cycles plus idempotents."""
        return len(self.cycles) + len(self.idems)

    def words(self) -> list[CyclicWord]:
        return [CyclicWord(minimal_rotation(tuple(a for a, _ in c))) for c in self.cycles]

    def reversed(self) -> Link:
        """Invert the order of the heights."""
        n = self.n_arrows
        return Link.make([[(a, n + 1 - h) for a, h in c] for c in self.cycles], self.idems)

    def shifted(self, offset: int) -> tuple[Cycle, ...]:
        return tuple(tuple((a, h + offset) for a, h in c) for c in self.cycles)

    # rendering
    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        if not self.cycles and len(self.idems) == 1:
            return f"idem({self.idems[0]})"
        parts = ["[" + " ".join(f"{a.name}@{h}" for a, h in c) + "]" for c in self.cycles]
        parts += [f"idem({v})" for v in self.idems]
        return "link(" + "; ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"Link({self})"

    def to_json(self) -> dict:
        return {
            "cycles": [[{"arrow": a.name, "height": h} for a, h in c] for c in self.cycles],
            "idems": list(self.idems),
        }


_UNIT = Link((), ())


def stack(x: Link, y: Link) -> Link:
    """Product of links: ``y`` placed above ``x``."""
    if x.is_unit:
        return y
    if y.is_unit:
        return x
    return Link.make(x.cycles + y.shifted(x.n_arrows), x.idems + y.idems)


def lift(m: LieMonomial) -> Link:
    """Heights 1..n along the canonical rotation of the word."""
    if isinstance(m, Idem):
        return Link((), (m.vertex,))
    return Link.make([[(a, i + 1) for i, a in enumerate(m.arrows)]])


def link_key_str(key: tuple[Link, int]) -> str:
    link, exp2 = key
    hp = str(HPoly.monomial(1, exp2)) if exp2 else ""
    if not hp:
        return str(link)
    return hp if link.is_unit else f"{hp}*{link}"


def _coeff_groups(terms: dict, ordering) -> list:
    """Group terms by basis object; lowest h-power first, then largest object first."""
    groups: dict = {}
    for (obj, exp2), c in terms.items():
        groups.setdefault(obj, {})[exp2] = c
    out = sorted(((obj, HPoly(g)) for obj, g in groups.items()), key=lambda kv: ordering(kv[0]), reverse=True)
    out.sort(key=lambda kv: kv[1].min_exp2)
    return out


def _render(groups: list, obj_str) -> str:
    if not groups:
        return "0"
    out = ""
    for i, (obj, poly) in enumerate(groups):
        body = obj_str(obj)
        items = list(poly.items())
        neg = False
        if len(items) == 1:
            e, c = items[0]
            mono = HPoly.monomial(abs(c), e)
            coeff = str(mono)
            neg = c < 0
            if coeff == "1":
                piece = body
            elif body == "1":
                piece = coeff
            else:
                piece = f"{coeff}*{body}"
        else:
            piece = f"({poly})" if body == "1" else f"({poly})*{body}"
        if i == 0:
            out = ("-" if neg else "") + piece
        else:
            out += (" - " if neg else " + ") + piece
    return out


class AlgebraElement(LinComb):
    """Element of A: terms keyed by ``(Link, exp2)`` meaning ``h^(exp2/2) * Link``."""

    @staticmethod
    def key_order(key: tuple[Link, int]) -> tuple:
        return (key[0].sort_key(), key[1])

    @classmethod
    def from_link(cls, link: Link, coeff: HPoly | Fraction | int = 1) -> AlgebraElement:
        if isinstance(coeff, HPoly):
            return cls._raw({(link, e): c for e, c in coeff.items()})
        return cls.single((link, 0), coeff)

    @classmethod
    def one(cls) -> AlgebraElement:
        return cls.from_link(Link.unit())

    def coefficients(self) -> dict[Link, HPoly]:
        return dict(_coeff_groups(self.terms, Link.sort_key))

    def links(self) -> list[Link]:
        return [link for link, _ in _coeff_groups(self.terms, Link.sort_key)]

    def times(self, p: HPoly | Fraction | int) -> AlgebraElement:
        if not isinstance(p, HPoly):
            return self.scale(p)
        out: dict = {}
        for (link, e), c in self.terms.items():
            for e2, c2 in p.items():
                key = (link, e + e2)
                out[key] = out.get(key, 0) + c * c2
        return AlgebraElement(out)

    def shift(self, exp2: int) -> AlgebraElement:
        return AlgebraElement._raw({(l, e + exp2): c for (l, e), c in self.terms.items()})

    def mod_h(self) -> AlgebraElement:
        return AlgebraElement._raw({k: c for k, c in self.terms.items() if k[1] < 2})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, HPoly):
            return self.times(other)
        return multiply(self, other)

    def __str__(self) -> str:
        return _render(_coeff_groups(self.terms, Link.sort_key), str)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"links": [link.to_json()], "coeff": poly.to_json()}
                for link, poly in _coeff_groups(self.terms, Link.sort_key)
            ]
        }


def tensor_order(links: tuple[Link, ...]) -> tuple:
    return tuple(l.sort_key() for l in links)


def tensor_str(links: tuple[Link, ...]) -> str:
    return "(" + " ⊗ ".join(str(l) for l in links) + ")"


class TensorElement(LinComb):
    """Element of A^(x)n: terms keyed by ``(tuple of Links, exp2)``."""

    @staticmethod
    def key_order(key: tuple[tuple[Link, ...], int]) -> tuple:
        return (tensor_order(key[0]), key[1])

    @property
    def arity(self) -> int | None:
        for (links, _) in self.terms:
            return len(links)
        return None

    def coefficients(self) -> dict[tuple[Link, ...], HPoly]:
        return dict(_coeff_groups(self.terms, tensor_order))

    def shift(self, exp2: int) -> TensorElement:
        return TensorElement._raw({(l, e + exp2): c for (l, e), c in self.terms.items()})

    def mod_h(self) -> TensorElement:
        return TensorElement._raw({k: c for k, c in self.terms.items() if k[1] < 2})

    def __str__(self) -> str:
        groups = _coeff_groups(self.terms, tensor_order)

        def body(links: tuple[Link, ...]) -> str:
            inner = "⊗".join(str(l) for l in links)
            return inner

        if not groups:
            return "0"
        out = ""
        for i, (links, poly) in enumerate(groups):
            items = list(poly.items())
            inner = body(links)
            neg = False
            if len(items) == 1:
                e, c = items[0]
                neg = c < 0
                coeff = str(HPoly.monomial(abs(c), e))
                piece = inner if coeff == "1" else f"{coeff}*({inner})"
            else:
                piece = f"({poly})*({inner})"
            if i == 0:
                out = ("-" if neg else "") + piece
            else:
                out += (" - " if neg else " + ") + piece
        return out

    def to_json(self) -> dict:
        return {
            "terms": [
                {"links": [l.to_json() for l in links], "coeff": poly.to_json()}
                for links, poly in _coeff_groups(self.terms, tensor_order)
            ]
        }


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    out: dict = {}
    for (lx, ex), cx in x.terms.items():
        for (ly, ey), cy in y.terms.items():
            key = (stack(lx, ly), ex + ey)
            out[key] = out.get(key, 0) + cx * cy
    return AlgebraElement(out)


def lift_element(x: LieElement) -> AlgebraElement:
    return AlgebraElement({(lift(m), 0): c for m, c in x.terms.items()})


def counit(x: AlgebraElement) -> HPoly:
    """Coefficient of the empty link."""
    return HPoly({e: c for (link, e), c in x.terms.items() if link.is_unit})


def tensor_product(*elements: AlgebraElement) -> TensorElement:
    acc: dict = {((), 0): Fraction(1)}
    for el in elements:
        nxt: dict = {}
        for (links, e), c in acc.items():
            for (link, e2), c2 in el.terms.items():
                key = (links + (link,), e + e2)
                nxt[key] = nxt.get(key, 0) + c * c2
        acc = nxt
    return TensorElement(acc)


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    """Factorwise product in A^(x)n."""
    out: dict = {}
    for (ls, es), cs in s.terms.items():
        for (lt, et), ct in t.terms.items():
            if len(ls) != len(lt):
                raise ValueError("tensor arities differ")
            key = (tuple(stack(a, b) for a, b in zip(ls, lt)), es + et)
            out[key] = out.get(key, 0) + cs * ct
    return TensorElement(out)


def swap(t: TensorElement) -> TensorElement:
    """The flip sigma on A (x) A."""
    return TensorElement._raw({((l[1], l[0]), e): c for (l, e), c in t.terms.items()})


def collapse(t: TensorElement) -> AlgebraElement:
    """Multiply the factors of every term in order (a^1 a^2 ... a^n)."""
    out: dict = {}
    for (links, e), c in t.terms.items():
        prod = Link.unit()
        for l in links:
            prod = stack(prod, l)
        key = (prod, e)
        out[key] = out.get(key, 0) + c
    return AlgebraElement(out)
