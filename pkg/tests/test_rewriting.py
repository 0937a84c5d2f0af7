import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from necklace.hopf.links import AlgebraElement, Link
from necklace.hopf.rewriting import Reducer, is_normal, reduce, relation_generators
from necklace.sampling import all_links, count_word_multisets, random_link
from necklace.scalars import HPoly


def L(q, *cycles, idems=()):
    return Link.make([[(q.arrow(n), h) for n, h in c] for c in cycles], idems, check=True)


def E(link, c=1):
    return AlgebraElement.from_link(link, c)


def test_cross_component_generator(loop):
    x = L(loop, [("a", 2)], [("a*", 1)])
    (g,) = relation_generators(x)
    assert not g.same_component and g.epsilon == 0
    assert g.swapped == L(loop, [("a", 1)], [("a*", 2)])
    assert g.correction == -E(Link.make([], ["v"]))


def test_same_component_generator(loop):
    x = L(loop, [("a", 1), ("a*", 2)])
    (g,) = relation_generators(x)
    assert g.same_component and g.epsilon == 1
    assert g.swapped == L(loop, [("a", 2), ("a*", 1)])
    assert g.correction == E(Link.make([], ["v", "v"]))


def test_reduce_examples(loop):
    v = Link.make([], ["v"])
    vv = Link.make([], ["v", "v"])
    assert reduce(E(L(loop, [("a", 2)], [("a*", 1)]))) == E(L(loop, [("a", 1)], [("a*", 2)])) - E(v)
    normal = L(loop, [("a", 1)], [("a*", 2)])
    assert reduce(E(normal)) == E(normal)
    assert reduce(E(L(loop, [("a", 2), ("a*", 1)]))) == E(L(loop, [("a", 1), ("a*", 2)])) - E(vv, HPoly.h())


def test_expansions_vanish_after_reduction(two_loop):
    rng = random.Random(11)
    for _ in range(30):
        for g in relation_generators(random_link(two_loop, rng, 5)):
            assert reduce(g.expansion).is_zero()


seeds = st.integers(0, 10**6)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_reduce_is_idempotent_and_normal(two_loop, seed):
    x = E(random_link(two_loop, random.Random(seed), 5))
    r = reduce(x)
    assert reduce(r) == r
    assert all(is_normal(link) for link in r.links())


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_random_strategies_agree(loop, seed):
    rng = random.Random(seed)
    x = E(random_link(loop, rng, 6))
    assert Reducer(random.Random(seed + 1)).reduce(x) == reduce(x)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_trace_sums_to_the_difference(uv, seed):
    link = random_link(uv, random.Random(seed), 6)
    r = Reducer(trace=True)
    total = AlgebraElement.zero()
    for c, e, g in r.trace_of(link):
        total = total + g.expansion.times(HPoly.monomial(c, e))
    assert total == E(link) - r.reduce(E(link))


def test_trace_requires_flag(loop):
    with pytest.raises(ValueError):
        Reducer().trace_of(L(loop, [("a", 1)]))


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4])
def test_pbw_count_one_loop(loop, d):
    normal = [x for x in all_links(loop, d) if is_normal(x)]
    assert len(normal) == count_word_multisets(loop, d)


def _multisets_by_enumeration(quiver, total):
    # independent oracle: closed arrow sequences up to rotation, then multisets
    from itertools import combinations_with_replacement, product

    from necklace.quiver import canonical_cycle
    from necklace.errors import ComposabilityError

    words = {}
    for n in range(1, total + 1):
        seen = set()
        for seq in product(quiver.arrows, repeat=n):
            try:
                seen.add(canonical_cycle(seq))
            except ComposabilityError:
                pass
        words[n] = sorted(seen)
    count = 0

    def parts(left, smallest):
        if left == 0:
            yield []
            return
        for n in range(smallest, left + 1):
            for rest in parts(left - n, n):
                yield [n] + rest

    for lengths in parts(total, 1):
        ways = 1
        for n in set(lengths):
            k = lengths.count(n)
            ways *= sum(1 for _ in combinations_with_replacement(words[n], k))
        count += ways
    return count


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_multiset_count_matches_enumeration(loop, two_loop, uv, d):
    for q in (loop, two_loop, uv):
        assert count_word_multisets(q, d) == _multisets_by_enumeration(q, d)


def test_pbw_count_two_vertex(uv):
    for d in range(5):
        normal = [x for x in all_links(uv, d) if is_normal(x)]
        assert len(normal) == count_word_multisets(uv, d)
