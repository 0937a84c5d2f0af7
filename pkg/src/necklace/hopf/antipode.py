"""The antipode, by height reversal and by the reduced-coproduct series."""

from __future__ import annotations

from .coproduct import DEFAULT_CONFIG, CoproductConfig, reduced_coproduct_link
from .links import AlgebraElement, Link, TensorElement, collapse
from .rewriting import Reducer, reduce

SIGN_POLICIES = ("components", "arrows")


def antipode_sign(link: Link, policy: str = "components") -> int:
    """(-1) to the number of components (cycles plus idempotents), or to the
    number of arrows plus idempotents under ``policy="arrows"``."""
    if policy == "components":
        count = link.n_components
    elif policy == "arrows":
        count = link.n_arrows + len(link.idems)
    else:
        raise ValueError(f"unknown sign policy {policy!r}")
    return -1 if count % 2 else 1


def antipode_direct(x: AlgebraElement, sign_policy: str = "components") -> AlgebraElement:
    out: dict = {}
    for (link, e), c in x.terms.items():
        key = (link.reversed(), e)
        out[key] = out.get(key, 0) + antipode_sign(link, sign_policy) * c
    return AlgebraElement(out)


def _delta_prime_last(t: TensorElement, config: CoproductConfig) -> TensorElement:
    """Apply the reduced coproduct to the last factor of every term."""
    out: dict = {}
    for (links, e), c in t.terms.items():
        for (pair, e2), c2 in reduced_coproduct_link(links[-1], config).terms.items():
            key = (links[:-1] + pair, e + e2)
            out[key] = out.get(key, 0) + c * c2
    return TensorElement(out)


def antipode_series_link(link: Link, config: CoproductConfig = DEFAULT_CONFIG) -> AlgebraElement:
    """S(X) = sum_i (-1)^(i+1) m^i (Delta')^i (X) for X without unit part; S(1) = 1."""
    if link.is_unit:
        return AlgebraElement.one()
    total = AlgebraElement.zero()
    power = TensorElement.single(((link,), 0))
    sign = -1
    while power:
        total = total + collapse(power).scale(sign)
        power = _delta_prime_last(power, config)
        sign = -sign
    return total


def antipode(
    x: AlgebraElement,
    method: str = "direct",
    sign_policy: str = "components",
    config: CoproductConfig = DEFAULT_CONFIG,
    reducer: Reducer | None = None,
) -> AlgebraElement:
    """Antipode in normal form."""
    if method == "direct":
        raw = antipode_direct(x, sign_policy)
    elif method == "series":
        raw = AlgebraElement.zero()
        for (link, e), c in x.terms.items():
            raw = raw + antipode_series_link(link, config).shift(e).scale(c)
    else:
        raise ValueError(f"unknown antipode method {method!r}")
    return reduce(raw, reducer)
