"""Seeded verification of the Lie bialgebra identities."""

from __future__ import annotations

import random

from .lie import (
    bracket,
    bracket_of_tensor,
    bracket_via_partials,
    co_jacobi,
    cobracket,
    cobracket_via_partials,
    cocycle_defect,
    jacobi_defect,
)
from .quiver import Quiver
from .report import Report
from .sampling import random_element

IDENTITIES = (
    "antisymmetry",
    "jacobi",
    "co-jacobi",
    "cocycle",
    "bracket-of-cobracket",
    "bracket-partials",
    "cobracket-partials",
)


def verify_lie(quiver: Quiver, samples: int = 100, max_len: int = 6, seed: int = 0) -> Report:
    """Each sample draws three random elements and checks every identity on them."""
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    rng = random.Random(seed)
    report = Report("lie", {"samples": samples, "max_len": max_len, "seed": seed})
    res = {name: report.identity(name) for name in IDENTITIES}
    for i in range(samples):
        x, y, z = (random_element(quiver, rng, max_len) for _ in range(3))

        def w(**kw):
            return {"sample": i, **{k: str(v) for k, v in kw.items()}}

        s = bracket(x, y) + bracket(y, x)
        res["antisymmetry"].record(s.is_zero(), w(x=x, y=y, residual=s))
        j = jacobi_defect(x, y, z)
        res["jacobi"].record(j.is_zero(), w(x=x, y=y, z=z, residual=j))
        cj = co_jacobi(x)
        res["co-jacobi"].record(cj.is_zero(), w(x=x, residual=cj))
        cd = cocycle_defect(x, y)
        res["cocycle"].record(cd.is_zero(), w(x=x, y=y, residual=cd))
        bd = bracket_of_tensor(cobracket(x))
        res["bracket-of-cobracket"].record(bd.is_zero(), w(x=x, residual=bd))
        bp = bracket(x, y) - bracket_via_partials(x, y)
        res["bracket-partials"].record(bp.is_zero(), w(x=x, y=y, residual=bp))
        cp = cobracket(x) - cobracket_via_partials(x)
        res["cobracket-partials"].record(cp.is_zero(), w(x=x, residual=cp))
    return report

