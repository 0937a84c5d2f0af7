"""The quantized algebra: heighted links, products, coproduct, counit and antipode."""

from .antipode import antipode
from .coproduct import CoproductConfig, coproduct, enumerate_colorings
from .links import AlgebraElement, Link, TensorElement, counit, lift, multiply, stack
from .rewriting import Reducer, reduce, reduce_tensor

__all__ = [
    "AlgebraElement",
    "CoproductConfig",
    "Link",
    "Reducer",
    "TensorElement",
    "antipode",
    "coproduct",
    "counit",
    "enumerate_colorings",
    "lift",
    "multiply",
    "reduce",
    "reduce_tensor",
    "stack",
]
