import random

import pytest
from hypothesis import given, settings, strategies as st

from necklace.errors import IntegralityError
from necklace.hopf.coproduct import (
    CoproductConfig,
    brute_force_colorings,
    coproduct,
    enumerate_colorings,
)
from necklace.hopf.links import AlgebraElement, Link, TensorElement, tensor_product
from necklace.hopf.rewriting import reduce_tensor, relation_generators
from necklace.hopf.verify import verify_hopf
from necklace.sampling import all_links, random_link
from necklace.scalars import HPoly

LITERAL = CoproductConfig("literal")


def L(q, *cycles, idems=()):
    return Link.make([[(q.arrow(n), h) for n, h in c] for c in cycles], idems, check=True)


def E(link, c=1):
    return AlgebraElement.from_link(link, c)


def test_single_arrow_colorings(loop):
    cols = enumerate_colorings(L(loop, [("a", 1)]), 2)
    assert len(cols) == 2
    assert all(not c.cuts for c in cols)
    assert sorted(c.colors for c in cols) == [(1,), (2,)]


@pytest.mark.parametrize("config", [CoproductConfig("alt"), LITERAL])
def test_two_arrow_cycle_colorings(loop, config):
    cols = enumerate_colorings(L(loop, [("a", 1), ("a*", 2)]), 2, config)
    assert len(cols) == 3
    (cut,) = [c for c in cols if c.cuts]
    assert cut.colors == (1, 2)
    assert cut.sign == 1
    assert cut.exp2 == 2
    assert [str(o) for o in cut.outputs] == ["idem(v)", "idem(v)"]


def test_one_color(two_loop):
    rng = random.Random(2)
    for _ in range(10):
        cols = enumerate_colorings(random_link(two_loop, rng, 5), 1)
        assert len(cols) == 1 and not cols[0].cuts


def test_coproduct_examples(loop):
    one = AlgebraElement.one()
    assert coproduct(one) == tensor_product(one, one)
    a = E(L(loop, [("a", 1)]))
    assert coproduct(a) == tensor_product(a, one) + tensor_product(one, a)
    x = E(L(loop, [("a", 1), ("a*", 2)]))
    v = E(Link.make([], ["v"]))
    expected = tensor_product(x, one) + tensor_product(one, x) + tensor_product(v, v).shift(2)
    assert coproduct(x) == expected
    assert str(reduce_tensor(coproduct(x))) == "link([a@1 a*@2])⊗1 + 1⊗link([a@1 a*@2]) + h*(idem(v)⊗idem(v))"


seeds = st.integers(0, 10**6)


def _triples(link, n):
    return {(c.cuts, c.colors, c.idem_colors) for c in enumerate_colorings(link, n, check=False)}


@settings(max_examples=80, deadline=None)
@given(seeds, st.sampled_from([2, 3]))
def test_colorings_match_brute_force(two_loop, seed, n):
    link = random_link(two_loop, random.Random(seed), 4 if n == 3 else 5)
    assert _triples(link, n) == brute_force_colorings(link, n)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_colorings_match_brute_force_two_vertex(uv, seed):
    link = random_link(uv, random.Random(seed), 5)
    assert _triples(link, 2) == brute_force_colorings(link, 2)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_sign_depends_only_on_the_cuts(two_loop, seed):
    link = random_link(two_loop, random.Random(seed), 5)
    signs = {}
    for c in enumerate_colorings(link, 3):
        assert signs.setdefault(c.cuts, c.sign) == c.sign


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_exponents_are_nonnegative_integers(loop, seed):
    link = random_link(loop, random.Random(seed), 6)
    for c in enumerate_colorings(link, 2):
        assert c.exp2 >= 0 and c.exp2 % 2 == 0


def test_literal_exponent_rule_is_not_integral(loop):
    # a three-arrow cycle with one cut pair leaves an arrow-carrying piece
    link = L(loop, [("a", 1), ("a*", 2), ("a", 3)])
    with pytest.raises(IntegralityError):
        enumerate_colorings(link, 2, LITERAL)
    assert all(c.exp2 % 2 == 0 for c in enumerate_colorings(link, 2))


def _relation_failures(quiver, config, n_arrows):
    bad = 0
    for link in all_links(quiver, n_arrows):
        for g in relation_generators(link):
            try:
                d = reduce_tensor(coproduct(g.expansion, 2, config))
            except IntegralityError:
                continue
            bad += not d.is_zero()
    return bad


def test_default_policy_respects_relations(loop):
    assert _relation_failures(loop, CoproductConfig(), 3) == 0


def test_flipped_sign_breaks_relations(loop):
    assert _relation_failures(loop, CoproductConfig("alt", True), 3) > 0


def test_literal_policy_breaks_relations(loop):
    assert _relation_failures(loop, LITERAL, 4) > 0


def test_mutation_is_reported_with_witness(loop):
    report = verify_hopf(loop, samples=10, max_arrows=4, seed=1, config=CoproductConfig("alt", True))
    assert not report.passed
    failing = [r for r in report.results if not r.passed]
    assert failing and all(r.failures for r in failing)


def test_verify_hopf_vacuous(two_loop):
    assert verify_hopf(two_loop, samples=0).passed


def test_verify_hopf_small(loop):
    report = verify_hopf(loop, samples=15, max_arrows=4, seed=1)
    assert report.passed, report.render()


def test_config_rejects_unknown_policy():
    with pytest.raises(ValueError):
        CoproductConfig("other")
