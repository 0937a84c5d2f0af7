"""Parser for the expression language used on the command line.

Grammar, loosest binding first::

    expr    := tensor (("+" | "-") tensor)*
    tensor  := product ("⊗" product)*
    product := unary ("*" unary)*
    unary   := "-" unary | atom
    atom    := INT ["/" INT] | "h" ["^" (INT | "(" INT "/" INT ")")]
             | "cyc(" arrow ("," arrow)* ")" | "idem(" NAME ")"
             | "link(" part (";" | "&") part ... ")" | "(" expr ")"
    part    := "[" arrow "@" INT ... "]" | "idem(" NAME ")"

In ``lie`` mode values are Lie elements and ``cyc`` is a cyclic word; in
``alg`` mode ``cyc`` denotes its lift and everything lives in A or A^(x)n.
Weyl operators have their own small reader, :func:`parse_weyl`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .errors import ComposabilityError, DomainError, ExpressionError
from .hopf.links import AlgebraElement, Link, TensorElement, lift, multiply, tensor_product
from .lie import Idem, LieElement, LieTensor
from .quiver import Quiver, canonical_cycle
from .scalars import HPoly
from .weyl import DimVector, WeylElement

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


class _Parser:
    def __init__(self, quiver: Quiver, text: str, mode: str):
        if mode not in ("lie", "alg"):
            raise ValueError(f"unknown parse mode {mode!r}")
        self.q = quiver
        self.s = text
        self.i = 0
        self.mode = mode

    # lexing helpers
    def ws(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def take(self, tok: str) -> bool:
        if self.peek(tok):
            self.i += len(tok)
            return True
        return False

    def expect(self, tok: str) -> None:
        if not self.take(tok):
            raise ExpressionError(f"expected {tok!r}", self.i)

    def match(self, pattern: re.Pattern) -> str | None:
        self.ws()
        m = pattern.match(self.s, self.i)
        if not m:
            return None
        self.i = m.end()
        return m.group(0)

    def integer(self) -> int:
        tok = self.match(_INT)
        if tok is None:
            raise ExpressionError("expected an integer", self.i)
        return int(tok)

    def name(self) -> str:
        tok = self.match(_NAME)
        if tok is None:
            raise ExpressionError("expected a name", self.i)
        return tok

    def arrow(self):
        at = self.i
        name = self.name()
        if self.s.startswith("*", self.i):
            self.i += 1
            name += "*"
        try:
            return self.q.arrow(name)
        except DomainError as err:
            raise ExpressionError(str(err), at) from None

    # grammar
    def parse(self) -> Any:
        value = self.expr()
        self.ws()
        if self.i != len(self.s):
            raise ExpressionError(f"unexpected {self.s[self.i]!r}", self.i)
        return value

    def expr(self) -> Any:
        value = self.tensor()
        while True:
            at = self.i
            if self.take("+"):
                value = self.add(value, self.tensor(), at)
            elif self.take("-"):
                value = self.add(value, self.neg(self.tensor()), at)
            else:
                return value

    def tensor(self) -> Any:
        factors = [self.product()]
        at = self.i
        while self.take("⊗"):
            factors.append(self.product())
        if len(factors) == 1:
            return factors[0]
        return self.tensor_of(factors, at)

    def product(self) -> Any:
        value = self.unary()
        while True:
            at = self.i
            if not self.take("*"):
                return value
            value = self.mul(value, self.unary(), at)

    def unary(self) -> Any:
        if self.take("-"):
            return self.neg(self.unary())
        return self.atom()

    def atom(self) -> Any:
        self.ws()
        at = self.i
        if self.take("("):
            value = self.expr()
            self.expect(")")
            return value
        if self.peek("cyc(") or self.peek("idem(") or self.peek("link("):
            return self.structure()
        tok = self.match(_INT)
        if tok is not None:
            num = Fraction(int(tok))
            if self.peek("/"):
                self.take("/")
                den = self.integer()
                if den == 0:
                    raise ExpressionError("division by zero", at)
                num /= den
            return HPoly.const(num)
        if self._h_alone():
            self.i += 1
            power = Fraction(1)
            if self.take("^"):
                if self.take("("):
                    n = self.integer()
                    d = 1
                    if self.take("/"):
                        d = self.integer()
                    self.expect(")")
                    power = Fraction(n, d)
                else:
                    power = Fraction(self.integer())
            try:
                return HPoly.h(power)
            except ValueError as err:
                raise ExpressionError(str(err), at) from None
        raise ExpressionError("expected a term", at)

    def _h_alone(self) -> bool:
        self.ws()
        if not self.s.startswith("h", self.i):
            return False
        nxt = self.s[self.i + 1 : self.i + 2]
        return not (nxt.isalnum() or nxt == "_")

    def structure(self) -> Any:
        at = self.i
        if self.take("cyc("):
            arrows = [self.arrow()]
            while self.take(","):
                arrows.append(self.arrow())
            self.expect(")")
            try:
                w = canonical_cycle(arrows)
            except ComposabilityError as err:
                raise ExpressionError(str(err), at) from None
            if self.mode == "lie":
                return LieElement.single(w)
            return AlgebraElement.from_link(lift(w))
        if self.take("idem("):
            v = self.vertex()
            self.expect(")")
            if self.mode == "lie":
                return LieElement.single(Idem(v))
            return AlgebraElement.from_link(Link((), (v,)))
        self.expect("link(")
        if self.mode == "lie":
            raise ExpressionError("links are only available in algebra mode", at)
        cycles, idems = [], []
        if not self.peek(")"):
            while True:
                if self.take("idem("):
                    idems.append(self.vertex())
                    self.expect(")")
                else:
                    self.expect("[")
                    cyc = []
                    while not self.take("]"):
                        a = self.arrow()
                        self.expect("@")
                        cyc.append((a, self.integer()))
                    if not cyc:
                        raise ExpressionError("empty component", self.i)
                    cycles.append(cyc)
                if not (self.take(";") or self.take("&")):
                    break
        self.expect(")")
        try:
            link = Link.make(cycles, idems, check=True)
        except (ComposabilityError, DomainError) as err:
            raise ExpressionError(str(err), at) from None
        return AlgebraElement.from_link(link)

    def vertex(self) -> str:
        at = self.i
        v = self.name()
        try:
            return self.q.check_vertex(v)
        except DomainError as err:
            raise ExpressionError(str(err), at) from None

    # arithmetic on parsed values
    def lift_scalar(self, v: Any, at: int) -> Any:
        if isinstance(v, HPoly):
            if self.mode == "lie":
                if v.is_zero():
                    return LieElement.zero()
                raise ExpressionError("a bare scalar is not a Lie element", at)
            return AlgebraElement.one().times(v)
        return v

    def add(self, x: Any, y: Any, at: int) -> Any:
        if isinstance(x, HPoly) and isinstance(y, HPoly):
            return x + y
        x, y = self.lift_scalar(x, at), self.lift_scalar(y, at)
        if type(x) is not type(y):
            raise ExpressionError("cannot add values of different kinds", at)
        if isinstance(x, (TensorElement, LieTensor)) and x and y and x.arity != y.arity:
            raise ExpressionError("cannot add tensors of different arity", at)
        return x + y

    def neg(self, x: Any) -> Any:
        return -x

    def mul(self, x: Any, y: Any, at: int) -> Any:
        if isinstance(x, HPoly) and isinstance(y, HPoly):
            return x * y
        if isinstance(x, HPoly) or isinstance(y, HPoly):
            scalar, other = (x, y) if isinstance(x, HPoly) else (y, x)
            if isinstance(other, (LieElement, LieTensor)):
                if not scalar.is_constant():
                    raise ExpressionError("Lie elements take rational coefficients only", at)
                return other.scale(scalar.coeff(0))
            return _times(other, scalar)
        if isinstance(x, AlgebraElement) and isinstance(y, AlgebraElement):
            return multiply(x, y)
        raise ExpressionError("this product is not defined", at)

    def tensor_of(self, factors: list, at: int) -> Any:
        if self.mode == "lie":
            out: dict = {(): Fraction(1)}
            for f in factors:
                if isinstance(f, HPoly):
                    raise ExpressionError("scalars cannot be tensor factors of Lie elements", at)
                if not isinstance(f, LieElement):
                    raise ExpressionError("tensor factors must be Lie elements", at)
                out = {k + (m,): c * c2 for k, c in out.items() for m, c2 in f.terms.items()}
            return LieTensor(out)
        elements = []
        for f in factors:
            f = self.lift_scalar(f, at)
            if not isinstance(f, AlgebraElement):
                raise ExpressionError("tensor factors must be algebra elements", at)
            elements.append(f)
        return tensor_product(*elements)


def _times(x: AlgebraElement | TensorElement, p: HPoly) -> AlgebraElement | TensorElement:
    if isinstance(x, AlgebraElement):
        return x.times(p)
    out: dict = {}
    for (links, e), c in x.terms.items():
        for e2, c2 in p.items():
            key = (links, e + e2)
            out[key] = out.get(key, 0) + c * c2
    return TensorElement(out)


def parse_expression(quiver: Quiver, text: str, mode: str = "alg") -> Any:
    """Parse into an HPoly, LieElement, LieTensor, AlgebraElement or TensorElement."""
    return _Parser(quiver, text, mode).parse()


def parse_lie(quiver: Quiver, text: str) -> LieElement:
    v = parse_expression(quiver, text, "lie")
    if not isinstance(v, LieElement):
        raise ExpressionError("expected a Lie element", 0)
    return v


def parse_algebra(quiver: Quiver, text: str) -> AlgebraElement:
    v = parse_expression(quiver, text, "alg")
    if isinstance(v, HPoly):
        return AlgebraElement.one().times(v)
    if not isinstance(v, AlgebraElement):
        raise ExpressionError("expected an element of the algebra", 0)
    return v


_WEYL_VAR = re.compile(r"([xd])\[([A-Za-z_][A-Za-z0-9_]*),([0-9]+),([0-9]+)\](?:\^([0-9]+))?")


def parse_weyl(quiver: Quiver, text: str, dims: DimVector | None = None) -> WeylElement:
    """Read back the rendering of a WeylElement, e.g. ``3 * x[a,1,2] d[a,2,1] - 1``."""
    positions = {name: pos for pos, (name, _, _) in enumerate(quiver.edges)}
    s = text.strip()
    if s == "0":
        return WeylElement({}, dims)
    terms: dict = {}
    i = 0
    sign = 1
    if s.startswith("-"):
        sign, i = -1, 1
    while True:
        j = i
        while j < len(s) and not (s.startswith(" + ", j) or s.startswith(" - ", j)):
            j += 1
        chunk = s[i:j].strip()
        coeff = Fraction(1)
        m = re.match(r"^([0-9]+(?:/[0-9]+)?)(?: \* |$)", chunk)
        if m:
            coeff = Fraction(m.group(1))
            chunk = chunk[m.end() :].strip()
        xs: dict = {}
        ds: dict = {}
        pos = 0
        while pos < len(chunk):
            if chunk[pos] == " ":
                pos += 1
                continue
            vm = _WEYL_VAR.match(chunk, pos)
            if not vm:
                raise ExpressionError("bad operator monomial", i + pos)
            kind, edge, k, mm, power = vm.groups()
            if edge not in positions:
                raise ExpressionError(f"unknown edge {edge!r}", i + pos)
            var = (positions[edge], edge, int(k), int(mm))
            target = xs if kind == "x" else ds
            target[var] = target.get(var, 0) + int(power or 1)
            pos = vm.end()
        key = (tuple(sorted(xs.items())), tuple(sorted(ds.items())))
        terms[key] = terms.get(key, 0) + sign * coeff
        if j >= len(s):
            break
        sign = 1 if s[j + 1] == "+" else -1
        i = j + 3
    return WeylElement(terms, dims)
