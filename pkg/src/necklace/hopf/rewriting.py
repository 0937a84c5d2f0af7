"""Height-exchange relations and the PBW normal form.

Exchanging two arrows with adjacent heights ``h`` and ``h + 1`` costs a
correction term: a merged component when the arrows lie on different cycles,
an ``h``-weighted split when they lie on the same cycle.  Repeatedly sorting
heights into PBW order with these exchanges gives the normal form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..quiver import Arrow, minimal_rotation, pairing
from .links import AlgebraElement, Link, TensorElement

# A position inside a link: (cycle index, offset within the cycle).
Position = tuple[int, int]


@dataclass(frozen=True)
class RelationGenerator:
    link: Link
    lower: Position
    upper: Position
    same_component: bool
    swapped: Link
    correction: AlgebraElement  # bracket coefficient times X'', without the h power

    @property
    def epsilon(self) -> int:
        return 1 if self.same_component else 0

    @property
    def kind(self) -> str:
        return "same-component" if self.same_component else "cross-component"

    @property
    def expansion(self) -> AlgebraElement:
        """X - X' - h^eps X''."""
        x = AlgebraElement.from_link(self.link)
        xp = AlgebraElement.from_link(self.swapped)
        return x - xp - self.correction.shift(2 * self.epsilon)


def _correction(
    cycles: list[list[tuple[Arrow, int]]],
    idems: tuple[str, ...],
    p: Position,
    q: Position,
) -> tuple[int, Link | None]:
    """Bracket coefficient and X'' for exchanging the heights at ``p`` < ``q``."""
    (ci, i), (cj, j) = p, q
    ap, aq = cycles[ci][i][0], cycles[cj][j][0]
    coeff = pairing(ap, aq)
    if not coeff:
        return 0, None
    if ci != cj:
        cp, cq = cycles[ci], cycles[cj]
        merged = cp[i + 1 :] + cp[:i] + cq[j + 1 :] + cq[:j]
        rest = [c for k, c in enumerate(cycles) if k not in (ci, cj)]
        new_idems = list(idems)
        if merged:
            rest.append(merged)
        else:
            new_idems.append(ap.target)
        return coeff, Link.make(rest, new_idems)
    c = cycles[ci]
    n = len(c)
    # pieces read cyclically: after q up to p, and after p up to q
    part_q = [c[(j + 1 + k) % n] for k in range((i - j - 1) % n)]
    part_p = [c[(i + 1 + k) % n] for k in range((j - i - 1) % n)]
    rest = [cc for k, cc in enumerate(cycles) if k != ci]
    new_idems = list(idems)
    for part, vertex in ((part_q, aq.target), (part_p, ap.target)):
        if part:
            rest.append(part)
        else:
            new_idems.append(vertex)
    return coeff, Link.make(rest, new_idems)


def _positions_by_height(link: Link) -> dict[int, Position]:
    return {h: (ci, j) for ci, c in enumerate(link.cycles) for j, (_, h) in enumerate(c)}


def relation_generator(link: Link, height: int) -> RelationGenerator:
    """The generator exchanging heights ``height`` and ``height + 1`` of ``link``."""
    pos = _positions_by_height(link)
    p, q = pos[height], pos[height + 1]
    cycles = [list(c) for c in link.cycles]
    coeff, xpp = _correction(cycles, link.idems, p, q)
    swapped = [list(c) for c in link.cycles]
    swapped[p[0]][p[1]] = (swapped[p[0]][p[1]][0], height + 1)
    swapped[q[0]][q[1]] = (swapped[q[0]][q[1]][0], height)
    correction = AlgebraElement.zero() if xpp is None else AlgebraElement.from_link(xpp, coeff)
    return RelationGenerator(
        link=link,
        lower=p,
        upper=q,
        same_component=p[0] == q[0],
        swapped=Link.make(swapped, link.idems),
        correction=correction,
    )


def relation_generators(link: Link) -> list[RelationGenerator]:
    return [relation_generator(link, h) for h in range(1, link.n_arrows)]


# ------------------------------------------------------------ normal form


def _canonical_starts(cycle) -> list[int]:
    word = tuple(a.index for a, _ in cycle)
    best = minimal_rotation(word)
    return [r for r in range(len(word)) if word[r:] + word[:r] == best]


def _word_key(cycle) -> tuple:
    return (len(cycle), minimal_rotation(tuple(a.index for a, _ in cycle)))


class Reducer:
    """PBW reduction engine.

    Without an ``rng`` the strategy is deterministic: the target labelling
    breaks ties by lowest height and the lowest out-of-order pair is rewritten
    first.  With an ``rng`` both choices are randomised, which gives an
    independent rewriting path for confluence checks.  Each instance memoises
    its own results.
    """

    def __init__(self, rng: random.Random | None = None, trace: bool = False):
        self.rng = rng
        self.trace = trace
        self._cache: dict[Link, dict] = {}
        self._traces: dict[Link, list] = {}

    # target order of positions
    def _labelling(self, link: Link) -> dict[Position, int]:
        groups: dict[tuple, list[int]] = {}
        for ci, c in enumerate(link.cycles):
            groups.setdefault(_word_key(c), []).append(ci)
        order: list[int] = []
        for key in sorted(groups):
            members = groups[key]  # already sorted by lowest height
            if self.rng is not None:
                members = members[:]
                self.rng.shuffle(members)
            order.extend(members)
        rank: dict[Position, int] = {}
        r = 0
        for ci in order:
            c = link.cycles[ci]
            starts = _canonical_starts(c)
            if self.rng is not None:
                s = self.rng.choice(starts)
            else:
                s = min(starts, key=lambda k: c[k][1])
            n = len(c)
            for k in range(n):
                rank[(ci, (s + k) % n)] = r
                r += 1
        return rank

    def is_normal(self, link: Link) -> bool:
        rank = Reducer()._labelling(link)
        return all(rank[p] == h - 1 for h, p in _positions_by_height(link).items())

    def reduce_link(self, link: Link) -> dict[tuple[Link, int], Fraction]:
        hit = self._cache.get(link)
        if hit is not None:
            return hit
        result: dict[tuple[Link, int], Fraction] = {}
        steps: list = []
        if link.n_arrows < 2:
            result[(link, 0)] = Fraction(1)
        else:
            rank = self._labelling(link)
            cycles = [list(c) for c in link.cycles]
            at = _positions_by_height(link)
            n = link.n_arrows
            while True:
                bad = [h for h in range(1, n) if rank[at[h]] > rank[at[h + 1]]]
                if not bad:
                    break
                h = bad[0] if self.rng is None else self.rng.choice(bad)
                p, q = at[h], at[h + 1]
                if self.trace:
                    current = Link.make(cycles, link.idems)
                    steps.append((Fraction(1), 0, relation_generator(current, h)))
                coeff, xpp = _correction(cycles, link.idems, p, q)
                if xpp is not None:
                    eps = 2 if p[0] == q[0] else 0
                    for (l2, e2), c2 in self.reduce_link(xpp).items():
                        key = (l2, e2 + eps)
                        result[key] = result.get(key, 0) + coeff * c2
                    if self.trace:
                        for c3, e3, g in self._traces[xpp]:
                            steps.append((coeff * c3, e3 + eps, g))
                cycles[p[0]][p[1]] = (cycles[p[0]][p[1]][0], h + 1)
                cycles[q[0]][q[1]] = (cycles[q[0]][q[1]][0], h)
                at[h], at[h + 1] = q, p
            final = (Link.make(cycles, link.idems), 0)
            result[final] = result.get(final, 0) + 1
        result = {k: c for k, c in result.items() if c}
        self._cache[link] = result
        if self.trace:
            self._traces[link] = steps
        return result

    def reduce(self, x: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for (link, e), c in x.terms.items():
            for (l2, e2), c2 in self.reduce_link(link).items():
                key = (l2, e + e2)
                out[key] = out.get(key, 0) + c * c2
        return AlgebraElement(out)

    def trace_of(self, link: Link) -> list[tuple[Fraction, int, RelationGenerator]]:
        """Scaled generators whose sum is ``link - reduce(link)``.

        Each entry is ``(coefficient, exp2, generator)``; requires ``trace=True``.
        """
        if not self.trace:
            raise ValueError("reducer was created without tracing")
        self.reduce_link(link)
        return self._traces[link]


_DEFAULT = Reducer()


def reduce(x: AlgebraElement, reducer: Reducer | None = None) -> AlgebraElement:
    return (reducer or _DEFAULT).reduce(x)


def is_normal(link: Link) -> bool:
    return _DEFAULT.is_normal(link)


def reduce_tensor(t: TensorElement, reducer: Reducer | None = None) -> TensorElement:
    """Reduce every tensor factor to normal form."""
    r = reducer or _DEFAULT
    out: dict = {}
    for (links, e), c in t.terms.items():
        acc: dict = {((), e): c}
        for link in links:
            nxt: dict = {}
            image = r.reduce_link(link)
            for (prefix, e1), c1 in acc.items():
                for (l2, e2), c2 in image.items():
                    key = (prefix + (l2,), e1 + e2)
                    nxt[key] = nxt.get(key, 0) + c1 * c2
            acc = nxt
        for k, v in acc.items():
            out[k] = out.get(k, 0) + v
    return TensorElement(out)
