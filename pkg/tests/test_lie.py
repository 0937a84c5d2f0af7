from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from necklace.errors import DomainError
from necklace.lie import (
    Idem,
    LieElement,
    LieTensor,
    bracket,
    bracket_via_partials,
    cobracket,
    cobracket_via_partials,
    cyc,
    double_derivation,
    idem,
    partial,
    wedge,
)
from necklace.lie_verify import verify_lie
from necklace.quiver import PathWord, canonical_cycle
from necklace.sampling import random_element
import random


def w(q, *names):
    return canonical_cycle(q.arrow(n) for n in names)


def test_bracket_examples(loop):
    assert bracket(cyc(loop, "a"), cyc(loop, "a*")) == idem(loop, "v")
    assert bracket(cyc(loop, "a", "a"), cyc(loop, "a*")) == cyc(loop, "a").scale(2)
    x = cyc(loop, "a", "a*") + cyc(loop, "a").scale(3)
    assert bracket(x, x).is_zero()


def test_bracket_rejects_foreign_arrows(loop, two_loop):
    with pytest.raises(DomainError):
        bracket(cyc(two_loop, "b"), cyc(two_loop, "a"), loop)


def test_partial_examples(loop, two_loop):
    a, s = loop.arrow("a"), loop.arrow("a*")
    assert partial(w(loop, "a", "a*"), a).terms == {PathWord("v", (s,)): 1}
    assert partial(w(two_loop, "a"), two_loop.arrow("b")).is_zero()
    assert partial(w(loop, "a", "a"), a).terms == {PathWord("v", (a,)): 2}


def test_double_derivation_examples(two_loop):
    a, b = two_loop.arrow("a"), two_loop.arrow("b")
    v = PathWord("v")
    assert double_derivation(w(two_loop, "a"), a).terms == {(v, v): 1}
    assert double_derivation(w(two_loop, "a"), b).is_zero()
    assert double_derivation(w(two_loop, "a", "b"), a).terms == {(v, PathWord("v", (b,))): 1}


def test_bracket_via_partials_examples(loop, two_loop):
    assert bracket_via_partials(cyc(loop, "a"), cyc(loop, "a*")) == idem(loop, "v")
    assert bracket_via_partials(cyc(loop, "a", "a"), cyc(loop, "a*")) == cyc(loop, "a").scale(2)
    assert bracket_via_partials(cyc(two_loop, "a"), cyc(two_loop, "b")).is_zero()


def test_cobracket_examples(loop, two_loop):
    assert cobracket(cyc(loop, "a")).is_zero()
    assert cobracket(cyc(loop, "a", "a*")).is_zero()
    assert cobracket(idem(loop, "v")).is_zero()
    x = cyc(two_loop, "a", "b", "a*", "b*")
    expected = LieTensor(
        dict(wedge(w(two_loop, "b*"), w(two_loop, "b")) + wedge(w(two_loop, "a"), w(two_loop, "a*")))
    )
    assert cobracket(x) == expected
    assert cobracket_via_partials(x) == expected
    assert cobracket_via_partials(cyc(loop, "a")).is_zero()


def test_idempotents_are_central(two_loop):
    v = idem(two_loop, "v")
    x = cyc(two_loop, "a", "b*", "a*")
    assert bracket(v, x).is_zero()
    assert bracket(x, v).is_zero()


def test_wedge():
    assert dict(wedge(Idem("v"), Idem("u"))) == {(Idem("v"), Idem("u")): 1, (Idem("u"), Idem("v")): -1}


names = st.lists(st.sampled_from(["a", "a*", "b", "b*"]), min_size=1, max_size=6)


@given(names, names, st.integers(0, 5))
def test_bracket_forms_agree_and_are_rotation_invariant(two_loop, u, v, k):
    k %= len(u)
    x = LieElement.single(w(two_loop, *u))
    xr = LieElement.single(w(two_loop, *(u[k:] + u[:k])))
    y = LieElement.single(w(two_loop, *v))
    assert bracket(x, y) == bracket_via_partials(x, y) == bracket(xr, y)
    assert bracket(x, y) == -bracket(y, x)


@given(names)
def test_cobracket_forms_agree(two_loop, u):
    x = LieElement.single(w(two_loop, *u))
    d = cobracket(x)
    assert d == cobracket_via_partials(x)
    # the cobracket lands in the antisymmetric tensors
    flipped = LieTensor({(q, p): c for (p, q), c in d.terms.items()})
    assert (d + flipped).is_zero()


def test_verify_lie_vacuous(two_loop):
    report = verify_lie(two_loop, samples=0)
    assert report.passed
    assert all(r.cases == 0 for r in report.results)


def test_verify_lie_passes_and_is_deterministic(two_loop):
    a = verify_lie(two_loop, samples=30, max_len=5, seed=7)
    b = verify_lie(two_loop, samples=30, max_len=5, seed=7)
    assert a.passed
    assert a.dumps() == b.dumps()


def test_verify_lie_rejects_short_words(loop):
    with pytest.raises(ValueError):
        verify_lie(loop, samples=1, max_len=1)


def test_random_elements_use_small_coefficients(two_loop):
    rng = random.Random(3)
    for _ in range(20):
        x = random_element(two_loop, rng, 6)
        assert all(-3 <= c <= 3 and c for _, c in x)
        assert all(len(m) <= 6 for m, _ in x)
