import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from necklace.errors import ExpressionError
from necklace.expr import parse_algebra, parse_expression, parse_lie, parse_weyl
from necklace.hopf.coproduct import coproduct
from necklace.hopf.links import AlgebraElement
from necklace.hopf.rewriting import reduce, reduce_tensor
from necklace.lie import cobracket, cyc, idem
from necklace.rep import random_operator
from necklace.sampling import random_element, random_link
from necklace.scalars import HPoly
from necklace.weyl import DimVector


def test_lie_expressions(loop):
    assert parse_lie(loop, "cyc(a)") == cyc(loop, "a")
    expected = cyc(loop, "a", "a*").scale(2) - idem(loop, "v").scale(Fraction(1, 2))
    assert parse_lie(loop, "2*cyc(a*, a) - 1/2*idem(v)") == expected


def test_algebra_expressions(loop):
    x = parse_algebra(loop, "link([a@2]; [a*@1])")
    assert reduce(x) == parse_algebra(loop, "link([a@1] & [a*@2]) - idem(v)")
    assert parse_algebra(loop, "cyc(a) * cyc(a*)") == parse_algebra(loop, "link([a@1]; [a*@2])")
    assert parse_algebra(loop, "2*h^(1/2)") == AlgebraElement.one().times(2 * HPoly.h(Fraction(1, 2)))
    assert reduce(parse_algebra(loop, "cyc(a)*cyc(a*) - cyc(a*)*cyc(a)")) == parse_algebra(loop, "idem(v)")


@pytest.mark.parametrize(
    "text, pos",
    [
        ("cyc(a", 5),
        ("cyc(q)", 4),
        ("link([a@1 a@1])", 0),
        ("2 +", 3),
        ("idem(w)", 5),
        ("cyc(a) ) ", 7),
        ("1/0", 0),
    ],
)
def test_errors_have_positions(loop, text, pos):
    with pytest.raises(ExpressionError) as err:
        parse_algebra(loop, text)
    assert err.value.position == pos


def test_composability_is_checked(uv):
    with pytest.raises(ExpressionError):
        parse_lie(uv, "cyc(c)")
    with pytest.raises(ExpressionError):
        parse_algebra(uv, "link([c@1 c@2])")


def test_links_need_algebra_mode(loop):
    with pytest.raises(ExpressionError):
        parse_lie(loop, "link([a@1])")


seeds = st.integers(0, 10**6)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_round_trip_algebra(two_loop, seed):
    rng = random.Random(seed)
    x = AlgebraElement.from_link(random_link(two_loop, rng, 4), rng.randint(-3, 3) or 1)
    x = x + AlgebraElement.from_link(random_link(two_loop, rng, 4), HPoly.h(rng.randint(0, 2)))
    x = reduce(x)
    assert parse_algebra(two_loop, str(x)) == x


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_round_trip_tensor(loop, seed):
    x = AlgebraElement.from_link(random_link(loop, random.Random(seed), 3))
    t = reduce_tensor(coproduct(x))
    assert parse_expression(loop, str(t)) == t


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_round_trip_lie(two_loop, seed):
    x = random_element(two_loop, random.Random(seed), 6)
    assert parse_lie(two_loop, str(x)) == x
    d = cobracket(x)
    if d:
        assert parse_expression(two_loop, str(d), "lie") == d


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_round_trip_weyl(uv, seed):
    dims = DimVector(uv, {"u": 2, "v": 1})
    p = random_operator(uv, dims, random.Random(seed))
    assert parse_weyl(uv, str(p), dims) == p


def test_round_trip_scalar(loop):
    p = Fraction(3, 2) * HPoly.h(2) + HPoly.h() - 1
    assert parse_expression(loop, str(p)) == p
