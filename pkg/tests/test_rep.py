import random

import pytest
from hypothesis import given, settings, strategies as st

from necklace.hopf.links import AlgebraElement, Link
from necklace.hopf.rewriting import relation_generators
from necklace.rep import rho, rho_cycles, rho_link, verify_rep
from necklace.sampling import random_link
from necklace.weyl import DimVector, WeylElement


def L(q, *cycles, idems=()):
    return Link.make([[(q.arrow(n), h) for n, h in c] for c in cycles], idems, check=True)


def test_idempotent_is_the_dimension(loop):
    d = DimVector(loop, {"v": 3})
    assert rho(loop, AlgebraElement.from_link(Link.make([], ["v"])), d) == WeylElement.const(3, d)


def test_single_arrow(loop):
    d = DimVector(loop, {"v": 1})
    assert str(rho_link(loop, L(loop, [("a", 1)]), d)) == "x[a,1,1]"


def test_two_arrow_cycles(loop):
    # the dual arrow acts as minus the derivative
    d = DimVector(loop, {"v": 1})
    assert str(rho_link(loop, L(loop, [("a", 1), ("a*", 2)]), d)) == "-x[a,1,1] d[a,1,1]"
    assert str(rho_link(loop, L(loop, [("a", 2), ("a*", 1)]), d)) == "-x[a,1,1] d[a,1,1] - 1"


def test_zero_dimension_gives_zero(uv):
    d = DimVector(uv, {"u": 0, "v": 2})
    link = L(uv, [("c", 1), ("c*", 2)])
    assert rho_link(uv, link, d).is_zero()


def test_positive_dual_sign_breaks_the_relations(loop):
    d = DimVector(loop, {"v": 1})
    (g,) = relation_generators(L(loop, [("a", 2)], [("a*", 1)]))
    assert rho(loop, g.expansion, d).is_zero()
    assert not rho(loop, g.expansion, d, dual_sign=1).is_zero()


seeds = st.integers(0, 10**6)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 10))
def test_invariant_under_presentation(two_loop, seed, shift):
    # rotate every cycle and reverse the component order before evaluating
    rng = random.Random(seed)
    d = DimVector(two_loop, {"v": 2})
    link = random_link(two_loop, rng, 4)
    cycles = [list(c[shift % len(c):] + c[: shift % len(c)]) for c in reversed(link.cycles)]
    assert rho_cycles(two_loop, cycles, list(reversed(link.idems)), d) == rho_link(two_loop, link, d)


def test_verify_rep_vacuous(loop):
    assert verify_rep(loop, DimVector(loop, {"v": 1}), samples=0).passed


def test_verify_rep_small(uv):
    report = verify_rep(uv, DimVector(uv, {"u": 2, "v": 1}), samples=20, seed=5)
    assert report.passed, report.render()
