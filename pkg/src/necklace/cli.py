"""``neck``: command-line front end."""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Any, Sequence

from .errors import NecklaceError
from .expr import parse_algebra, parse_lie
from .hopf.antipode import SIGN_POLICIES, antipode
from .hopf.coproduct import EXPONENT_POLICIES, CoproductConfig, coproduct
from .hopf.links import counit
from .hopf.quantize import quantization_diagnostic, words_up_to
from .hopf.rewriting import Reducer, reduce_tensor
from .hopf.verify import verify_hopf
from .lie import LieElement, LieTensor, bracket, check_element, cobracket
from .lie_verify import verify_lie
from .quiver import CyclicWord, load_quiver
from .rep import rho, verify_rep
from .report import Report
from .scalars import HPoly
from .weyl import DimVector, WeylElement

DEFAULT_SEED = 0
VERBS = ("bracket", "cobracket", "reduce", "coproduct", "antipode", "counit", "rep", "verify", "quantize")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="neck", description="Necklace Lie bialgebras and their quantization.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("exprs", nargs="*", help="expressions (see the README for the grammar)")
    p.add_argument("-q", "--quiver", required=True, help="quiver file")
    p.add_argument("-n", type=int, default=2, help="number of tensor factors of the coproduct")
    p.add_argument("--method", choices=("direct", "series"), default="direct")
    p.add_argument("-d", "--dims", default="", help="dimension vector, e.g. v=2,u=1 (default 1 everywhere)")
    p.add_argument("--suite", choices=("lie", "hopf", "rep"))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--max-arrows", type=int, default=5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--all", action="store_true", help="quantize: every cyclic word up to --max-len")
    p.add_argument("--trace", action="store_true", help="reduce: list the rewrites applied")
    p.add_argument("--json", action="store_true")
    p.add_argument("--exponent-policy", choices=EXPONENT_POLICIES, default="alt")
    p.add_argument("--sign-policy", choices=SIGN_POLICIES, default="components")
    p.add_argument(
        "--flip-sign", action="store_true", help="invert the coloring sign rule (to exercise the checks)"
    )
    return p


def _lie_json(x: LieElement | LieTensor) -> list[dict[str, Any]]:
    out = []
    for key, c in x:
        keys = key if isinstance(key, tuple) else (key,)
        out.append({"monomials": [str(m) for m in keys], "num": c.numerator, "den": c.denominator})
    return out


def _to_json(value: Any) -> Any:
    if isinstance(value, (LieElement, LieTensor)):
        return {"text": str(value), "terms": _lie_json(value)}
    if isinstance(value, HPoly):
        return {"text": str(value), "poly": value.to_json()}
    if isinstance(value, WeylElement):
        return {"text": str(value), "terms": value.to_json()}
    if hasattr(value, "to_json"):
        return {"text": str(value), **value.to_json()}
    return value


def _need(exprs: list[str], n: int, verb: str) -> list[str]:
    if len(exprs) != n:
        raise UsageError(f"{verb} takes {n} expression(s), got {len(exprs)}")
    return exprs


def _run(args: argparse.Namespace) -> tuple[Any, dict, list, int]:
    quiver = load_quiver(args.quiver)
    config = CoproductConfig(args.exponent_policy, args.flip_sign)
    inputs: dict[str, Any] = {"quiver": args.quiver, "exprs": args.exprs}
    findings: list = []
    verb = args.verb
    if verb == "bracket":
        x, y = (parse_lie(quiver, e) for e in _need(args.exprs, 2, verb))
        return bracket(x, y, quiver), inputs, findings, 0
    if verb == "cobracket":
        x = parse_lie(quiver, _need(args.exprs, 1, verb)[0])
        check_element(quiver, x)
        return cobracket(x), inputs, findings, 0
    if verb == "reduce":
        x = parse_algebra(quiver, _need(args.exprs, 1, verb)[0])
        r = Reducer(trace=args.trace)
        result = r.reduce(x)
        if args.trace:
            for link, _ in x.coefficients().items():
                for c, e, g in r.trace_of(link):
                    coeff = HPoly.monomial(c, e)
                    findings.append(
                        {"kind": "rewrite", "coefficient": str(coeff), "link": str(g.link), "swap": str(g.swapped),
                         "correction": str(g.correction), "epsilon": g.epsilon}
                    )
        return result, inputs, findings, 0
    if verb == "coproduct":
        if args.n < 1:
            raise UsageError("-n must be at least 1")
        x = parse_algebra(quiver, _need(args.exprs, 1, verb)[0])
        inputs.update(n=args.n, exponent_policy=args.exponent_policy)
        return reduce_tensor(coproduct(x, args.n, config)), inputs, findings, 0
    if verb == "antipode":
        x = parse_algebra(quiver, _need(args.exprs, 1, verb)[0])
        inputs.update(method=args.method, sign_policy=args.sign_policy)
        return antipode(x, args.method, args.sign_policy, config), inputs, findings, 0
    if verb == "counit":
        x = parse_algebra(quiver, _need(args.exprs, 1, verb)[0])
        return counit(x), inputs, findings, 0
    if verb == "rep":
        x = parse_algebra(quiver, _need(args.exprs, 1, verb)[0])
        dims = DimVector.parse(quiver, args.dims)
        inputs["dims"] = str(dims)
        return rho(quiver, x, dims), inputs, findings, 0
    if verb == "verify":
        if args.suite is None:
            raise UsageError("verify needs --suite lie|hopf|rep")
        if args.exprs:
            raise UsageError("verify takes no expressions")
        inputs.update(suite=args.suite, samples=args.samples, seed=args.seed)
        if args.suite == "lie":
            if args.max_len < 2:
                raise UsageError("--max-len must be at least 2")
            report = verify_lie(quiver, args.samples, args.max_len, args.seed)
        elif args.suite == "hopf":
            report = verify_hopf(quiver, args.samples, args.max_arrows, args.seed, config, args.sign_policy)
        else:
            dims = DimVector.parse(quiver, args.dims)
            report = verify_rep(quiver, dims, args.samples, args.seed)
        return report, inputs, report.findings, 0 if report.passed else 1
    # quantize
    if args.all:
        if args.exprs:
            raise UsageError("quantize --all takes no expressions")
        words = words_up_to(quiver, args.max_len, 1)
    else:
        words = []
        for e in _need(args.exprs, 1, verb):
            x = parse_lie(quiver, e)
            keys = list(x.terms)
            if len(keys) != 1 or not isinstance(keys[0], CyclicWord) or x.terms[keys[0]] != 1:
                raise UsageError("quantize expects a single cyclic word")
            words.append(keys[0])
    inputs.update(max_len=args.max_len, exponent_policy=args.exponent_policy, seed=args.seed)
    report = quantization_diagnostic(quiver, words, config, seed=args.seed)
    # findings are data: the diagnostic itself always succeeds
    return report, inputs, report.findings, 0


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, inputs, findings, status = _run(args)
    except (UsageError, NecklaceError, ValueError) as exc:
        print(f"neck: error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"neck: error: {exc.strerror or exc}: {exc.filename}", file=err)
        return 2
    if args.json:
        if isinstance(result, Report):
            payload_result = result.to_json()
            payload_findings = payload_result.pop("findings")
        else:
            payload_result = _to_json(result)
            payload_findings = findings
        doc = {"command": args.verb, "inputs": inputs, "result": payload_result, "findings": payload_findings}
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False), file=out)
    elif isinstance(result, Report):
        print(result.render(), file=out)
    else:
        print(str(result), file=out)
        for f in findings:
            print(json.dumps(f, sort_keys=True, ensure_ascii=False), file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
