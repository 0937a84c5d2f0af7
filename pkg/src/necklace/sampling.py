"""Seeded generators of random words, elements and links, plus exhaustive link lists."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .hopf.links import Link
from .lie import LieElement
from .quiver import Arrow, CyclicWord, Quiver, minimal_rotation

COEFFS = [c for c in range(-3, 4) if c]


def random_closed_word(quiver: Quiver, rng: random.Random, length: int, tries: int = 10_000) -> tuple[Arrow, ...]:
    """Uniform arrows drawn one at a time; rejected until the sequence closes up."""
    arrows = quiver.arrows
    for _ in range(tries):
        word = [rng.choice(arrows)]
        while len(word) < length:
            a = rng.choice(arrows)
            if a.source == word[-1].target:
                word.append(a)
        if word[-1].target == word[0].source:
            return tuple(word)
    raise ValueError(f"no closed word of length {length} found")


def random_word(quiver: Quiver, rng: random.Random, max_len: int, min_len: int = 1) -> CyclicWord:
    options = [n for n in closed_lengths(quiver, max_len) if n >= min_len]
    if not options:
        raise ValueError(f"the quiver has no closed path with length in [{min_len}, {max_len}]")
    length = rng.choice(options)
    return CyclicWord(minimal_rotation(random_closed_word(quiver, rng, length)))


def random_element(
    quiver: Quiver, rng: random.Random, max_len: int, max_terms: int = 3, min_len: int = 1
) -> LieElement:
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_word(quiver, rng, max_len, min_len)
        terms[w] = terms.get(w, 0) + rng.choice(COEFFS)
    return LieElement(terms)


def closed_lengths(quiver: Quiver, max_len: int) -> list[int]:
    """Lengths in 1..max_len for which the double quiver has a closed path."""
    reach = {v: {v} for v in quiver.vertices}
    out = []
    for n in range(1, max_len + 1):
        reach = {v: {a.target for a in quiver.arrows if a.source in reach[v]} for v in quiver.vertices}
        if any(v in reach[v] for v in quiver.vertices):
            out.append(n)
    return out


def random_link(
    quiver: Quiver,
    rng: random.Random,
    max_arrows: int,
    min_arrows: int = 1,
    idem_prob: float = 0.2,
) -> Link:
    """Random components of random lengths, heights a uniform random permutation."""
    feasible = closed_lengths(quiver, max_arrows)
    if not feasible:
        raise ValueError(f"the quiver has no closed path of length <= {max_arrows}")
    while True:
        total = rng.randint(max(min_arrows, feasible[0]), max_arrows)
        lengths, left = [], total
        while left:
            options = [n for n in feasible if n <= left]
            if not options:
                break
            n = rng.choice(options)
            lengths.append(n)
            left -= n
        if not left:
            break
    words = [random_closed_word(quiver, rng, n) for n in lengths]
    heights = list(range(1, total + 1))
    rng.shuffle(heights)
    cycles, k = [], 0
    for w in words:
        cycles.append([(a, heights[k + i]) for i, a in enumerate(w)])
        k += len(w)
    idems = []
    while rng.random() < idem_prob and len(idems) < 2:
        idems.append(rng.choice(quiver.vertices))
    return Link.make(cycles, idems)


def all_links(quiver: Quiver, n_arrows: int, idems: tuple[str, ...] = ()) -> list[Link]:
    """Every link with exactly ``n_arrows`` arrows (plus the given idempotents).

    A link is a permutation of the heights (its cycles are the components)
    together with an arrow at each height that composes with the arrow at the
    permuted height.
    """
    if n_arrows == 0:
        return [Link.make([], idems)]
    arrows = quiver.arrows
    seen: set[Link] = set()
    for perm in itertools.permutations(range(n_arrows)):
        cycles_idx = []
        done = [False] * n_arrows
        for s in range(n_arrows):
            if done[s]:
                continue
            cyc, cur = [], s
            while not done[cur]:
                done[cur] = True
                cyc.append(cur)
                cur = perm[cur]
            cycles_idx.append(cyc)
        for labels in itertools.product(arrows, repeat=n_arrows):
            if any(labels[p].target != labels[perm[p]].source for p in range(n_arrows)):
                continue
            cycles = [[(labels[p], p + 1) for p in cyc] for cyc in cycles_idx]
            seen.add(Link.make(cycles, idems))
    return sorted(seen, key=Link.sort_key)


def count_word_multisets(quiver: Quiver, total: int) -> int:
    """Number of multisets of cyclic words with lengths summing to ``total``."""
    by_len = [0] * (total + 1)
    for n in range(1, total + 1):
        by_len[n] = len(cyclic_words(quiver, n))
    # generating function prod_n (1 - t^n)^(-by_len[n])
    poly = [Fraction(0)] * (total + 1)
    poly[0] = Fraction(1)
    for n in range(1, total + 1):
        for _ in range(by_len[n]):
            for d in range(n, total + 1):
                poly[d] += poly[d - n]
    return int(poly[total])


def cyclic_words(quiver: Quiver, length: int) -> list[CyclicWord]:
    """All cyclic words of the double quiver with the given length."""
    out: set[CyclicWord] = set()
    for seq in itertools.product(quiver.arrows, repeat=length):
        if all(seq[i].target == seq[(i + 1) % length].source for i in range(length)):
            out.add(CyclicWord(minimal_rotation(seq)))
    return sorted(out, key=CyclicWord.sort_key)
