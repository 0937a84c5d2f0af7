import random

import pytest
from hypothesis import given, settings, strategies as st

from necklace.errors import DimensionError, DomainError
from necklace.rep import random_operator, random_polynomial
from necklace.weyl import DimVector, WeylElement, apply, weyl_mul


@pytest.fixture(scope="module")
def d1(loop):
    return DimVector(loop, {"v": 1})


def xv(dims, e="a", pos=0, k=1, m=1):
    return WeylElement.coordinate((pos, e, k, m), dims)


def dv(dims, e="a", pos=0, k=1, m=1):
    return WeylElement.derivative((pos, e, k, m), dims)


def test_commutation(d1):
    x, d = xv(d1), dv(d1)
    assert d * x == x * d + WeylElement.const(1, d1)
    assert str(d * x) == "x[a,1,1] d[a,1,1] + 1"


def test_coordinates_commute(two_loop):
    dims = DimVector(two_loop, {"v": 1})
    xa, xb = xv(dims), xv(dims, "b", 1)
    assert xa * xb == xb * xa


def test_square_of_euler_operator(d1):
    x, d = xv(d1), dv(d1)
    e = x * d
    assert e * e == x * x * d * d + e


def test_apply_examples(d1):
    x, d = xv(d1), dv(d1)
    assert apply(d, x * x) == x.scale(2)
    assert apply(x * d, x) == x
    assert apply((x * d) * (x * d), x * x) == (x * x).scale(4)
    with pytest.raises(DomainError):
        apply(x, d)


def test_mixed_dimensions(loop, d1):
    d2 = DimVector(loop, {"v": 2})
    with pytest.raises(DimensionError):
        xv(d1) * xv(d2)


def test_dim_vector_parse(uv):
    d = DimVector.parse(uv, "u=2")
    assert (d["u"], d["v"]) == (2, 1)
    for bad in ("u", "u=x", "w=1", "u=-1"):
        with pytest.raises((DimensionError, DomainError)):
            DimVector.parse(uv, bad)


seeds = st.integers(0, 10**6)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_product_matches_composition(uv, seed):
    rng = random.Random(seed)
    dims = DimVector(uv, {"u": 2, "v": 1})
    p, q = random_operator(uv, dims, rng), random_operator(uv, dims, rng)
    f = random_polynomial(uv, dims, rng)
    assert apply(weyl_mul(p, q), f) == apply(p, apply(q, f))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_associativity(loop, seed):
    rng = random.Random(seed)
    dims = DimVector(loop, {"v": 2})
    p, q, r = (random_operator(loop, dims, rng) for _ in range(3))
    assert (p * q) * r == p * (q * r)
