"""Does the coproduct quantize the cobracket, and the product the bracket?

For a cyclic word w with lift X, the antisymmetrised coproduct
D = Delta(X) - sigma Delta(X) should be divisible by h with
D / h = (lift (x) lift)(delta w) modulo h.  The diagnostic computes both sides,
records every coloring that contributes, and reports rather than asserts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from ..errors import DivisibilityError, IntegralityError
from ..lie import LieElement, bracket, cobracket
from ..quiver import CyclicWord, Quiver
from ..report import Report
from ..sampling import cyclic_words, random_word
from .coproduct import DEFAULT_CONFIG, CoproductConfig, coproduct_link, enumerate_colorings
from .links import AlgebraElement, Link, TensorElement, lift, lift_element, swap
from .rewriting import Reducer, reduce_tensor


def div_h_tensor(t: TensorElement) -> TensorElement:
    for (links, e), c in t.terms.items():
        if e < 2:
            raise DivisibilityError(f"term {c}*{links} has h-degree below 1")
    return t.shift(-2)


def lift_tensor(t) -> TensorElement:
    """lift (x) lift on a LieTensor."""
    return TensorElement({(tuple(lift(m) for m in key), 0): c for key, c in t.terms.items()})


def enveloping_defect(x: LieElement, y: LieElement, reducer: Reducer | None = None) -> AlgebraElement:
    """reduce(xy - yx) - lift({x, y}), taken modulo h."""
    r = reducer or Reducer()
    lx, ly = lift_element(x), lift_element(y)
    comm = r.reduce(lx * ly - ly * lx)
    return (comm - r.reduce(lift_element(bracket(x, y)))).mod_h()


@dataclass
class WordDiagnostic:
    word: CyclicWord
    ledger: list[dict[str, Any]] = field(default_factory=list)
    divisible: bool = True
    identity_holds: bool = False
    collapsing: bool = True
    literal_exponent_disagrees: bool = False
    literal_integral: bool = True
    literal_identity_holds: bool | None = None
    difference: str = "0"
    cobracket: str = "0"
    error: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "word": str(self.word),
            "divisible": self.divisible,
            "identity_holds": self.identity_holds,
            "cut_orbits_collapse": self.collapsing,
            "literal_exponent_disagrees": self.literal_exponent_disagrees,
            "literal_exponent_integral": self.literal_integral,
            "literal_identity_holds": self.literal_identity_holds,
            "difference": self.difference,
            "cobracket": self.cobracket,
            "error": self.error,
            "ledger": self.ledger,
        }


def _identity_under(link: Link, target: TensorElement, config: CoproductConfig, reducer: Reducer):
    """(divisible, holds, D) for one exponent policy."""
    d = coproduct_link(link, 2, config)
    diff = reduce_tensor(d - swap(d), reducer)
    try:
        q = div_h_tensor(diff)
    except DivisibilityError:
        return False, False, diff
    return True, (reduce_tensor(q, reducer) - target).mod_h().is_zero(), diff


def diagnose_word(
    word: CyclicWord, config: CoproductConfig = DEFAULT_CONFIG, reducer: Reducer | None = None
) -> WordDiagnostic:
    r = reducer or Reducer()
    link = lift(word)
    diag = WordDiagnostic(word)
    delta = cobracket(LieElement.single(word))
    diag.cobracket = str(delta)
    target = reduce_tensor(lift_tensor(delta), r).mod_h()
    for col in enumerate_colorings(link, 2, config, check=False):
        if not col.cuts:
            continue
        entry = col.ledger_entry()
        entry["term"] = " ⊗ ".join(entry.pop("outputs"))
        diag.ledger.append(entry)
        if col.n_arrow_orbits:
            diag.collapsing = False
        literal = col.exponent_exp2("literal")
        if literal != col.exp2:
            diag.literal_exponent_disagrees = True
        if literal < 0 or literal % 2:
            diag.literal_integral = False
    try:
        divisible, holds, diff = _identity_under(link, target, config, r)
    except IntegralityError as err:
        diag.error = str(err)
        diag.divisible = False
        return diag
    diag.divisible, diag.identity_holds = divisible, holds
    diag.difference = str(diff)
    if config.exponent_policy != "literal" and diag.literal_integral:
        literal = CoproductConfig("literal", config.flip_sign)
        diag.literal_identity_holds = _identity_under(link, target, literal, r)[1]
    elif config.exponent_policy == "literal":
        diag.literal_identity_holds = holds
    return diag


def quantization_diagnostic(
    quiver: Quiver,
    words: list[CyclicWord],
    config: CoproductConfig = DEFAULT_CONFIG,
    partners: int = 3,
    seed: int = 0,
) -> Report:
    """Run the cobracket and bracket quantization checks on each word.

    The bracket check pairs every word with ``partners`` seeded random words.
    Witnesses are attached for every word where the literal exponent rule
    disagrees with the configured one.
    """
    rng = random.Random(seed)
    reducer = Reducer()
    report = Report(
        "quantize",
        {"words": len(words), "exponent_policy": config.exponent_policy, "partners": partners, "seed": seed},
    )
    cob = report.identity("cobracket-quantization")
    collapsing = report.identity("cobracket-quantization-collapsing-words")
    env = report.identity("bracket-quantization")
    disagreements = 0
    for w in words:
        diag = diagnose_word(w, config, reducer)
        row = diag.to_json()
        report.records.append(row)
        ok = diag.identity_holds
        cob.record(ok, row)
        if diag.collapsing:
            collapsing.record(ok, row)
        if diag.literal_exponent_disagrees or not diag.literal_integral:
            disagreements += 1
            report.findings.append({"kind": "literal-exponent-witness", **row})
        if not diag.ledger:
            summary = f"no cutting pairs; D = {diag.difference}; delta = {diag.cobracket}"
            summary += "; identity holds" if ok else "; identity fails"
            report.findings.append({"kind": "no-cutting-pairs", "word": str(w), "summary": summary})
        x = LieElement.single(w)
        for _ in range(partners):
            y = LieElement.single(random_word(quiver, rng, max(2, len(w))))
            d = enveloping_defect(x, y, reducer)
            env.record(d.is_zero(), {"x": str(x), "y": str(y), "residual": str(d)})
    cob.notes.append(f"{disagreements} word(s) where the literal exponent rule disagrees")
    return report


def words_up_to(quiver: Quiver, max_len: int, min_len: int = 2) -> list[CyclicWord]:
    out: list[CyclicWord] = []
    for n in range(min_len, max_len + 1):
        out.extend(cyclic_words(quiver, n))
    return out
