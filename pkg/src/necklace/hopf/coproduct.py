"""Colorings of links and the coproduct built from them.

An n-coloring chooses cutting pairs (an arrow and a copy of its dual), a
fixed-point-free pairing of them, and a color for every position and every
idempotent.  Cutting reroutes the successor map, the orbits of the new map
become the output components, and each color collects its components into
one tensor factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..scalars import HPoly, assert_integral
from .links import AlgebraElement, Link, TensorElement

EXPONENT_POLICIES = ("literal", "alt")


@dataclass(frozen=True)
class CoproductConfig:
    """How the sign and the h-power of a coloring are computed.

    ``exponent_policy``:
      * ``"alt"``: N' is (number of output components, vertex ones included)
        minus (number of cycles of the input).
      * ``"literal"``: N' is (number of cycles of the input) minus (number of
        output components that still carry arrows).  This reading is not
        always integral and does not respect the relations; it is kept so
        that the quantization diagnostic can show where it differs.
    ``flip_sign`` inverts the per-pair sign rule; it exists only to show that
    the verification suites notice a wrong sign convention.
    """

    exponent_policy: str = "alt"
    flip_sign: bool = False

    def __post_init__(self) -> None:
        if self.exponent_policy not in EXPONENT_POLICIES:
            raise ValueError(f"unknown exponent policy {self.exponent_policy!r}")


DEFAULT_CONFIG = CoproductConfig()


@dataclass(frozen=True)
class Coloring:
    cuts: tuple[tuple[int, int], ...]  # flat position pairs (p, q), p < q
    colors: tuple[int, ...]  # per flat position
    idem_colors: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]
    sign: int
    n_cut: int
    n_cycles: int
    n_orbits: int
    n_arrow_orbits: int
    outputs: tuple[Link, ...]
    exp2: int = field(default=0)

    def exponent_exp2(self, policy: str) -> int:
        """Twice the h-exponent under ``policy`` (not checked for integrality)."""
        if policy == "alt":
            n_prime = self.n_orbits - self.n_cycles
        else:
            n_prime = self.n_cycles - self.n_arrow_orbits
        # exponent #(I)/4 + N'/2, doubled
        return self.n_cut // 2 + n_prime

    def ledger_entry(self) -> dict:
        return {
            "cuts": [list(c) for c in self.cuts],
            "colors": list(self.colors),
            "idem_colors": list(self.idem_colors),
            "sign": self.sign,
            "exponent": str(Fraction(self.exp2, 2)),
            "exponent_literal": str(Fraction(self.exponent_exp2("literal"), 2)),
            "exponent_alt": str(Fraction(self.exponent_exp2("alt"), 2)),
            "outputs": [str(o) for o in self.outputs],
        }


class _Flat:
    """Positions of a link flattened to 0..N-1 with their successor map."""

    def __init__(self, link: Link):
        self.arrows = []
        self.heights = []
        self.succ = []
        self.factor = []
        for c in link.cycles:
            base = len(self.arrows)
            n = len(c)
            for j, (a, h) in enumerate(c):
                self.arrows.append(a)
                self.heights.append(h)
                self.succ.append(base + (j + 1) % n)


def _matchings(flat: _Flat):
    """All partial matchings pairing positions carrying e with positions carrying e*."""
    n = len(flat.arrows)

    def rec(i: int, used: frozenset, acc: list):
        while i < n and i in used:
            i += 1
        if i >= n:
            yield tuple(acc)
            return
        yield from rec(i + 1, used | {i}, acc)
        target = flat.arrows[i].index ^ 1
        for j in range(i + 1, n):
            if j not in used and flat.arrows[j].index == target:
                acc.append((i, j))
                yield from rec(i + 1, used | {i, j}, acc)
                acc.pop()

    yield from rec(0, frozenset(), [])


def _orbits(flat: _Flat, phi: dict[int, int]) -> tuple[list[tuple[int, ...]], list[int]]:
    n = len(flat.arrows)
    f = [flat.succ[phi[p]] if p in phi else flat.succ[p] for p in range(n)]
    orbit_of = [-1] * n
    orbits: list[tuple[int, ...]] = []
    for start in range(n):
        if orbit_of[start] >= 0:
            continue
        cur, members = start, []
        while orbit_of[cur] < 0:
            orbit_of[cur] = len(orbits)
            members.append(cur)
            cur = f[cur]
        orbits.append(tuple(members))
    return orbits, orbit_of


def _color_orbits(n_orbits: int, less: list[tuple[int, int]], n: int):
    """Color assignments of orbits with color[u] < color[w] for each (u, w)."""
    lower: dict[int, list[int]] = {}
    for u, w in less:
        lower.setdefault(w, []).append(u)
        lower.setdefault(u, [])
    upper: dict[int, list[int]] = {}
    for u, w in less:
        upper.setdefault(u, []).append(w)
    colors = [0] * n_orbits

    def rec(k: int):
        if k == n_orbits:
            yield tuple(colors)
            return
        lo = 1
        hi = n
        for u in lower.get(k, ()):
            if u < k:
                lo = max(lo, colors[u] + 1)
        for w in upper.get(k, ()):
            if w < k:
                hi = min(hi, colors[w] - 1)
        for c in range(lo, hi + 1):
            colors[k] = c
            yield from rec(k + 1)

    yield from rec(0)


def _output_components(flat: _Flat, orbit: tuple[int, ...], cut: set[int]):
    """Heighted arrows of an orbit, or the source vertex if everything was cut."""
    arrows = [(flat.arrows[p], flat.heights[p]) for p in orbit if p not in cut]
    if arrows:
        return arrows, None
    return None, flat.arrows[orbit[0]].source


def enumerate_colorings(
    link: Link, n: int, config: CoproductConfig = DEFAULT_CONFIG, check: bool = True
) -> list[Coloring]:
    """Every n-coloring of ``link`` with its sign, exponent and output links.

    With ``check`` the exponent is passed through the integrality guard, so
    an IntegralityError signals a coloring whose h-power is not a
    nonnegative integer.
    """
    return list(_enumerate_cached(link, n, config, check))


@lru_cache(maxsize=50_000)
def _enumerate_cached(link: Link, n: int, config: CoproductConfig, check: bool) -> tuple[Coloring, ...]:
    if n < 1:
        raise ValueError("need at least one color")
    flat = _Flat(link)
    out: list[Coloring] = []
    n_idem = len(link.idems)
    idem_choices = list(itertools.product(range(1, n + 1), repeat=n_idem))
    for match in _matchings(flat):
        if match and n < 2:
            continue
        phi: dict[int, int] = {}
        for p, q in match:
            phi[p] = q
            phi[q] = p
        orbits, orbit_of = _orbits(flat, phi)
        less: list[tuple[int, int]] = []
        ok = True
        for p, q in match:
            op, oq = orbit_of[p], orbit_of[q]
            if op == oq:
                ok = False
                break
            # the orbit of the higher arrow gets the larger color
            if flat.heights[p] < flat.heights[q]:
                less.append((op, oq))
            else:
                less.append((oq, op))
        if not ok:
            continue
        sign = 1
        for p, q in match:
            unstarred, dual = (p, q) if not flat.arrows[p].starred else (q, p)
            s = 1 if flat.heights[unstarred] < flat.heights[dual] else -1
            sign *= -s if config.flip_sign else s
        cut = set(phi)
        pieces = [_output_components(flat, o, cut) for o in orbits]
        n_arrow_orbits = sum(1 for arrows, _ in pieces if arrows is not None)
        for colors in _color_orbits(len(orbits), less, n):
            for ic in idem_choices:
                cycles: list[list] = [[] for _ in range(n)]
                idems: list[list[str]] = [[] for _ in range(n)]
                for o, (arrows, vertex) in enumerate(pieces):
                    t = colors[o] - 1
                    if arrows is not None:
                        cycles[t].append(arrows)
                    else:
                        idems[t].append(vertex)
                for k, v in enumerate(link.idems):
                    idems[ic[k] - 1].append(v)
                outputs = tuple(Link.make(cycles[t], idems[t]) for t in range(n))
                col = Coloring(
                    cuts=tuple(match),
                    colors=tuple(colors[orbit_of[p]] for p in range(len(flat.arrows))),
                    idem_colors=ic,
                    orbits=tuple(orbits),
                    sign=sign,
                    n_cut=2 * len(match),
                    n_cycles=len(link.cycles),
                    n_orbits=len(orbits),
                    n_arrow_orbits=n_arrow_orbits,
                    outputs=outputs,
                )
                exp2 = col.exponent_exp2(config.exponent_policy)
                if check:
                    assert_integral(HPoly.monomial(sign, exp2))
                object.__setattr__(col, "exp2", exp2)
                out.append(col)
    return tuple(out)


def brute_force_colorings(link: Link, n: int) -> set[tuple]:
    """Direct search over all (I, phi, c) checking the coloring conditions.

    Independent of :func:`enumerate_colorings`: no orbits, only the two
    defining conditions on the color map.  Returns ``(cuts, colors,
    idem_colors)`` triples.
    """
    flat = _Flat(link)
    size = len(flat.arrows)
    found = set()
    for match in _matchings(flat):
        phi: dict[int, int] = {}
        for p, q in match:
            phi[p] = q
            phi[q] = p
        for colors in itertools.product(range(1, n + 1), repeat=size):
            good = True
            for p in range(size):
                nxt = flat.succ[p]
                if p not in phi:
                    if colors[p] != colors[nxt]:
                        good = False
                        break
                    continue
                q = phi[p]
                if not (colors[p] == colors[flat.succ[q]] != colors[nxt] == colors[q]):
                    good = False
                    break
                if (colors[p] > colors[q]) != (flat.heights[p] > flat.heights[q]):
                    good = False
                    break
            if good:
                for ic in itertools.product(range(1, n + 1), repeat=len(link.idems)):
                    found.add((tuple(match), colors, ic))
    return found


def coproduct_link(link: Link, n: int = 2, config: CoproductConfig = DEFAULT_CONFIG) -> TensorElement:
    out: dict = {}
    for col in enumerate_colorings(link, n, config):
        key = (col.outputs, col.exp2)
        out[key] = out.get(key, 0) + col.sign
    return TensorElement(out)


def coproduct(
    x: AlgebraElement, n: int = 2, config: CoproductConfig = DEFAULT_CONFIG
) -> TensorElement:
    """The (n-1)-fold coproduct, summed over n-colorings of every link."""
    if n < 1:
        raise ValueError("need at least one tensor factor")
    out: dict = {}
    for (link, e), c in x.terms.items():
        for (links, e2), c2 in coproduct_link(link, n, config).terms.items():
            key = (links, e + e2)
            out[key] = out.get(key, 0) + c * c2
    return TensorElement(out)


def reduced_coproduct_link(link: Link, config: CoproductConfig = DEFAULT_CONFIG) -> TensorElement:
    """(Id - eta eps) (x) (Id - eta eps) applied to the coproduct: drop terms with a unit factor."""
    out: dict = {}
    for col in enumerate_colorings(link, 2, config):
        if col.outputs[0].is_unit or col.outputs[1].is_unit:
            continue
        key = (col.outputs, col.exp2)
        out[key] = out.get(key, 0) + col.sign
    return TensorElement(out)


def cut_crosses(coloring: Coloring, boundary: int, link: Link) -> bool:
    """Whether a cutting pair joins an arrow at height <= boundary with one above it."""
    flat = _Flat(link)
    return any(
        (flat.heights[p] <= boundary) != (flat.heights[q] <= boundary) for p, q in coloring.cuts
    )
