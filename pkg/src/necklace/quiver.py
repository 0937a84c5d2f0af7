"""Quivers, their doubles, open paths and canonical cyclic words."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import ComposabilityError, DomainError, QuiverParseError


class Arrow(NamedTuple):
    """An arrow of the double quiver.

    ``index`` is ``2 * (edge position) + starred``; tuples compare on it first,
    so the natural ordering is declaration order with every ``e`` right before
    ``e*``.  Source and target are carried along so that words and links can be
    manipulated without going back to the quiver.
    """

    index: int
    edge: str
    starred: bool
    source: str
    target: str

    @property
    def name(self) -> str:
        return self.edge + "*" if self.starred else self.edge

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Arrow({self.name})"


def involute(a: Arrow) -> Arrow:
    """e -> e*, e* -> e."""
    return Arrow(a.index ^ 1, a.edge, not a.starred, a.target, a.source)


def pairing(a: Arrow, b: Arrow) -> int:
    """The bracket on single arrows: [e, e*] = 1, [e*, e] = -1, otherwise 0."""
    if a.index ^ 1 != b.index:
        return 0
    return -1 if a.starred else 1


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    _arrows: dict[str, Arrow] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("duplicate vertex name")
        names = [e[0] for e in self.edges]
        if len(set(names)) != len(names) or set(names) & set(self.vertices):
            raise DomainError("duplicate edge name")
        table: dict[str, Arrow] = {}
        for pos, (name, src, tgt) in enumerate(self.edges):
            if not name or name.endswith("*"):
                raise DomainError(f"bad edge name {name!r}")
            for v in (src, tgt):
                if v not in self.vertices:
                    raise DomainError(f"edge {name}: unknown vertex {v!r}")
            a = Arrow(2 * pos, name, False, src, tgt)
            table[name] = a
            table[name + "*"] = involute(a)
        object.__setattr__(self, "_arrows", table)

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        """All arrows of the double quiver, in their total order."""
        return tuple(sorted(set(self._arrows.values())))

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows[name]
        except KeyError:
            raise DomainError(f"unknown arrow {name!r}") from None

    def owns(self, a: Arrow) -> bool:
        return self._arrows.get(a.name) == a

    def check_vertex(self, v: str) -> str:
        if v not in self.vertices:
            raise DomainError(f"unknown vertex {v!r}")
        return v


def parse_quiver(text: str) -> Quiver:
    """Parse the line format ``vertex <name>`` / ``edge <name> <src> <tgt>``."""
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex" and len(parts) == 2:
            name = parts[1]
            if name in names:
                raise QuiverParseError(f"duplicate name {name!r}", lineno)
            names.add(name)
            vertices.append(name)
        elif parts[0] == "edge" and len(parts) == 4:
            name, src, tgt = parts[1:]
            if name in names:
                raise QuiverParseError(f"duplicate name {name!r}", lineno)
            if name.endswith("*") or any(ch in name for ch in "(),@;&[]"):
                raise QuiverParseError(f"illegal edge name {name!r}", lineno)
            for v in (src, tgt):
                if v not in vertices:
                    raise QuiverParseError(f"unknown vertex {v!r}", lineno)
            names.add(name)
            edges.append((name, src, tgt))
        else:
            raise QuiverParseError(f"cannot parse {raw.strip()!r}", lineno)
    if not vertices:
        raise QuiverParseError("empty quiver file", 1)
    return Quiver(tuple(vertices), tuple(edges))


def load_quiver(path: str | Path) -> Quiver:
    return parse_quiver(Path(path).read_text(encoding="utf-8"))


def _check_chain(arrows: Sequence[Arrow], cyclic: bool) -> None:
    n = len(arrows)
    stop = n if cyclic else n - 1
    for i in range(stop):
        a, b = arrows[i], arrows[(i + 1) % n]
        if a.target != b.source:
            raise ComposabilityError(
                f"target {a.target} of {a.name} is not the source {b.source} of {b.name}", i
            )


def minimal_rotation(seq: Sequence) -> tuple:
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True, order=True)
class CyclicWord:
    """A closed path up to rotation, stored as its minimal rotation."""

    arrows: tuple[Arrow, ...]

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def vertex(self) -> str:
        return self.arrows[0].source

    def sort_key(self) -> tuple:
        return (len(self.arrows), tuple(a.index for a in self.arrows))

    @property
    def period(self) -> int:
        n = len(self.arrows)
        for p in range(1, n + 1):
            if n % p == 0 and self.arrows[p:] + self.arrows[:p] == self.arrows:
                return p
        return n

    def __str__(self) -> str:
        return "cyc(" + ",".join(a.name for a in self.arrows) + ")"


def canonical_cycle(arrows: Iterable[Arrow]) -> CyclicWord:
    arrows = tuple(arrows)
    if not arrows:
        raise ComposabilityError("a cyclic word needs at least one arrow", 0)
    _check_chain(arrows, cyclic=True)
    return CyclicWord(minimal_rotation(arrows))


@dataclass(frozen=True, order=True)
class PathWord:
    """An open path; with no arrows it is the idempotent of ``start``."""

    start: str
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        if self.arrows:
            if self.arrows[0].source != self.start:
                raise ComposabilityError("path does not leave its start vertex", 0)
            _check_chain(self.arrows, cyclic=False)

    @property
    def end(self) -> str:
        return self.arrows[-1].target if self.arrows else self.start

    def compose(self, other: PathWord) -> PathWord | None:
        """Concatenation; ``None`` is the zero path (mismatched endpoints)."""
        if self.end != other.start:
            return None
        return PathWord(self.start, self.arrows + other.arrows)

    def close(self) -> CyclicWord | str | None:
        """Image in the commutator quotient: a cyclic word, a vertex, or zero."""
        if self.start != self.end:
            return None
        if not self.arrows:
            return self.start
        return CyclicWord(minimal_rotation(self.arrows))

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"idem({self.start})"
        return "path(" + ",".join(a.name for a in self.arrows) + ")"


def idempotent_action(v: str, p: PathWord, side: str = "left") -> PathWord | None:
    """Multiply the path by the vertex idempotent ``v`` on the given side."""
    e = PathWord(v)
    return e.compose(p) if side == "left" else p.compose(e)
