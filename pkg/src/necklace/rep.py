"""The representation of A (at h = 1) by differential operators on Rep_d(Q)."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .hopf.links import AlgebraElement, Link, stack
from .hopf.rewriting import Reducer, relation_generators
from .quiver import Arrow, Quiver
from .report import Report
from .sampling import random_link
from .weyl import DimVector, WeylElement, apply, variables, weyl_mul


def _generator(
    quiver: Quiver, a: Arrow, k: int, m: int, dims: DimVector, dual_sign: int = -1
) -> WeylElement:
    """[e]_{k,m} is the coordinate x[e,k,m]; [e*]_{k,m} is -d/dx[e,m,k].

    The minus sign on the dual arrows is what makes the exchange relations
    hold: with it, d x - x d = 1 matches the correction term of both kinds
    of relation.  ``dual_sign=+1`` is accepted so that the failure of the
    other sign can be demonstrated.
    """
    if not quiver.owns(a):
        raise DomainError(f"arrow {a.name} is not in the double quiver")
    pos = a.index // 2
    if a.starred:
        return WeylElement.derivative((pos, a.edge, m, k), dims).scale(dual_sign)
    return WeylElement.coordinate((pos, a.edge, k, m), dims)


def rho_cycles(
    quiver: Quiver,
    cycles: Sequence[Sequence[tuple[Arrow, int]]],
    idems: Sequence[str],
    dims: DimVector,
    dual_sign: int = -1,
) -> WeylElement:
    """The operator of a heighted link given in any (not necessarily canonical) form."""
    prefactor = 1
    for v in idems:
        prefactor *= dims[quiver.check_vertex(v)]
    if not prefactor:
        return WeylElement({}, dims)
    positions = []  # (arrow, height, cycle, offset)
    for ci, c in enumerate(cycles):
        for j, (a, h) in enumerate(c):
            positions.append((a, h, ci, j))
    flat_index = {(ci, j): n for n, (_, _, ci, j) in enumerate(positions)}
    succ = [flat_index[(ci, (j + 1) % len(cycles[ci]))] for _, _, ci, j in positions]
    order = sorted(range(len(positions)), key=lambda n: positions[n][1])
    ranges = [range(1, dims[positions[n][0].source] + 1) for n in range(len(positions))]
    total = WeylElement({}, dims)
    for ks in itertools.product(*ranges):
        term = WeylElement.const(prefactor, dims)
        for n in order:
            a = positions[n][0]
            term = weyl_mul(term, _generator(quiver, a, ks[n], ks[succ[n]], dims, dual_sign))
            if term.is_zero():
                break
        total = total + term
    return total


def rho_link(quiver: Quiver, link: Link, dims: DimVector, dual_sign: int = -1) -> WeylElement:
    return rho_cycles(quiver, link.cycles, link.idems, dims, dual_sign)


def rho(quiver: Quiver, x: AlgebraElement, dims: DimVector, dual_sign: int = -1) -> WeylElement:
    """Specialise h to 1 and send every link to its operator."""
    coeffs: dict[Link, Fraction] = {}
    for link, poly in x.coefficients().items():
        c = poly.evaluate(1)
        if c:
            coeffs[link] = c
    total = WeylElement({}, dims)
    for link in sorted(coeffs, key=Link.sort_key):
        total = total + rho_link(quiver, link, dims, dual_sign).scale(coeffs[link])
    return total


def random_operator(quiver: Quiver, dims: DimVector, rng: random.Random, max_terms: int = 3) -> WeylElement:
    vs = variables(quiver, dims)
    out = WeylElement({}, dims)
    for _ in range(rng.randint(1, max_terms)):
        term = WeylElement.const(rng.choice([-2, -1, 1, 2, 3]), dims)
        for _ in range(rng.randint(0, 3)):
            v = rng.choice(vs)
            g = WeylElement.coordinate(v, dims) if rng.random() < 0.5 else WeylElement.derivative(v, dims)
            term = weyl_mul(term, g)
        out = out + term
    return out


def random_polynomial(quiver: Quiver, dims: DimVector, rng: random.Random, max_degree: int = 3) -> WeylElement:
    vs = variables(quiver, dims)
    out = WeylElement({}, dims)
    for _ in range(rng.randint(1, 4)):
        powers: dict = {}
        for _ in range(rng.randint(0, max_degree)):
            v = rng.choice(vs)
            powers[v] = powers.get(v, 0) + 1
        out = out + WeylElement({(tuple(sorted(powers.items())), ()): rng.choice([-3, -1, 1, 2])}, dims)
    return out


def verify_rep(
    quiver: Quiver,
    dims: DimVector,
    samples: int = 100,
    seed: int = 0,
    max_arrows: int = 4,
    oracle_samples: int | None = None,
) -> Report:
    """Homomorphism, relations, reduction and the apply oracle on seeded samples."""
    rng = random.Random(seed)
    oracle_samples = samples if oracle_samples is None else oracle_samples
    report = Report(
        "rep",
        {"samples": samples, "seed": seed, "dims": str(dims), "max_arrows": max_arrows, "oracle_samples": oracle_samples},
    )
    hom = report.identity("homomorphism")
    rel = report.identity("relations-annihilated")
    red = report.identity("reduce-invariance")
    orc = report.identity("product-matches-apply")
    reducer = Reducer()
    if samples and not variables(quiver, dims):
        report.results[0].notes.append("every coordinate space is zero-dimensional")
    for i in range(samples):
        x = random_link(quiver, rng, max_arrows)
        y = random_link(quiver, rng, max_arrows)
        rx, ry = rho_link(quiver, x, dims), rho_link(quiver, y, dims)
        d = rho_link(quiver, stack(x, y), dims) - weyl_mul(rx, ry)
        hom.record(d.is_zero(), {"sample": i, "x": str(x), "y": str(y), "residual": str(d)})
        for g in relation_generators(x):
            r = rho(quiver, g.expansion, dims)
            rel.record(r.is_zero(), {"sample": i, "link": str(x), "generator": f"{g.lower}->{g.upper}", "residual": str(r)})
        r = rho(quiver, reducer.reduce(AlgebraElement.from_link(x)), dims) - rx
        red.record(r.is_zero(), {"sample": i, "link": str(x), "residual": str(r)})
    if variables(quiver, dims):
        for i in range(oracle_samples):
            p = random_operator(quiver, dims, rng)
            q = random_operator(quiver, dims, rng)
            f = random_polynomial(quiver, dims, rng)
            d = apply(weyl_mul(p, q), f) - apply(p, apply(q, f))
            orc.record(d.is_zero(), {"sample": i, "p": str(p), "q": str(q), "f": str(f), "residual": str(d)})
    return report
