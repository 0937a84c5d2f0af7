"""The necklace Lie bialgebra of a quiver: bracket and cobracket.

Elements are rational combinations of canonical cyclic words and vertex
idempotents.  Both operations come in two independent forms, the direct
splice/cut formulas and the partial-derivative formulas, so that each can be
used to check the other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .errors import DomainError
from .linear import LinComb
from .quiver import Arrow, CyclicWord, PathWord, Quiver, involute, minimal_rotation, pairing


class Idem(NamedTuple):
    vertex: str

    def __str__(self) -> str:
        return f"idem({self.vertex})"


LieMonomial = Union[CyclicWord, Idem]


def monomial_order(m: LieMonomial) -> tuple:
    if isinstance(m, Idem):
        return (0, 0, m.vertex)
    return (1,) + m.sort_key()


def close_path(start: str, arrows: tuple[Arrow, ...]) -> LieMonomial:
    """The class of a closed path: its cyclic word, or the idempotent if empty."""
    if not arrows:
        return Idem(start)
    return CyclicWord(minimal_rotation(arrows))


class LieElement(LinComb):
    key_order = staticmethod(monomial_order)
    key_str = staticmethod(str)


class LieTensor(LinComb):
    """Combination of n-tuples of Lie monomials (an element of L^{(x) n})."""

    @staticmethod
    def key_order(key: tuple) -> tuple:
        return tuple(monomial_order(m) for m in key)

    @staticmethod
    def key_str(key: tuple) -> str:
        return "(" + " ⊗ ".join(str(m) for m in key) + ")"

    @property
    def arity(self) -> int | None:
        for k in self.terms:
            return len(k)
        return None


class PathElement(LinComb):
    @staticmethod
    def key_order(p: PathWord) -> tuple:
        return (p.start, len(p.arrows), tuple(a.index for a in p.arrows))


class PathTensor(LinComb):
    @staticmethod
    def key_order(key: tuple[PathWord, PathWord]) -> tuple:
        return tuple(PathElement.key_order(p) for p in key)

    @staticmethod
    def key_str(key: tuple[PathWord, PathWord]) -> str:
        return f"({key[0]} ⊗ {key[1]})"


def cyc(quiver: Quiver, *names: str) -> LieElement:
    from .quiver import canonical_cycle

    return LieElement.single(canonical_cycle(quiver.arrow(n) for n in names))


def idem(quiver: Quiver, v: str) -> LieElement:
    return LieElement.single(Idem(quiver.check_vertex(v)))


def check_element(quiver: Quiver, x: LieElement) -> None:
    for m in x.terms:
        if isinstance(m, Idem):
            quiver.check_vertex(m.vertex)
        elif not all(quiver.owns(a) for a in m.arrows):
            raise DomainError(f"{m} uses arrows outside the double of the quiver")


def wedge(p: LieMonomial, q: LieMonomial, coeff: Fraction | int = 1) -> list[tuple[tuple, Fraction]]:
    if p == q:
        return []
    return [((p, q), Fraction(coeff)), ((q, p), -Fraction(coeff))]


# ---------------------------------------------------------------- bracket


@lru_cache(maxsize=200_000)
def _bracket_words(u: CyclicWord, w: CyclicWord) -> tuple[tuple[LieMonomial, Fraction], ...]:
    out: dict[LieMonomial, Fraction] = {}
    a, b = u.arrows, w.arrows
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            s = pairing(ai, bj)
            if not s:
                continue
            rest = a[i + 1 :] + a[:i] + b[j + 1 :] + b[:j]
            m = close_path(ai.target, rest)
            out[m] = out.get(m, 0) + s
    return tuple((m, Fraction(c)) for m, c in out.items() if c)


def bracket_monomials(u: LieMonomial, w: LieMonomial) -> tuple[tuple[LieMonomial, Fraction], ...]:
    if isinstance(u, Idem) or isinstance(w, Idem):
        return ()
    return _bracket_words(u, w)


def bracket(x: LieElement, y: LieElement, quiver: Quiver | None = None) -> LieElement:
    """Bilinear splice bracket: remove an (e, e*) pair, one arrow from each word."""
    if quiver is not None:
        check_element(quiver, x)
        check_element(quiver, y)
    out: dict[LieMonomial, Fraction] = {}
    for u, cu in x.terms.items():
        for w, cw in y.terms.items():
            for m, c in bracket_monomials(u, w):
                out[m] = out.get(m, 0) + cu * cw * c
    return LieElement(out)


# ------------------------------------------------------------- partials


def _linear_word(w: CyclicWord | PathWord) -> tuple[str, tuple[Arrow, ...]]:
    if isinstance(w, PathWord):
        return w.start, w.arrows
    return w.arrows[0].source, w.arrows


def partial(w: CyclicWord, e: Arrow) -> PathElement:
    """Sum over occurrences of ``e`` of the path read after that occurrence."""
    arrows = w.arrows
    out: dict[PathWord, int] = {}
    for i, a in enumerate(arrows):
        if a == e:
            p = PathWord(a.target, arrows[i + 1 :] + arrows[:i])
            out[p] = out.get(p, 0) + 1
    return PathElement(out)


def partial_element(x: LieElement | PathElement, e: Arrow) -> PathElement:
    if isinstance(x, LieElement):
        out = PathElement.zero()
        for m, c in x.terms.items():
            if isinstance(m, CyclicWord):
                out = out + partial(m, e).scale(c)
        return out
    # paths: only closed ones have a meaningful cyclic derivative
    out = PathElement.zero()
    for p, c in x.terms.items():
        if p.arrows and p.start == p.end:
            out = out + partial(CyclicWord(p.arrows), e).scale(c)
    return out


def double_derivation(w: CyclicWord | PathWord, e: Arrow) -> PathTensor:
    """D_e(a_1...a_n) = sum over a_i = e of a_1..a_{i-1} (x) a_{i+1}..a_n.

    A cyclic word is read as its stored linear representative.
    """
    start, arrows = _linear_word(w)
    out: dict[tuple[PathWord, PathWord], int] = {}
    for i, a in enumerate(arrows):
        if a == e:
            left = PathWord(start, arrows[:i])
            right = PathWord(a.target, arrows[i + 1 :])
            out[(left, right)] = out.get((left, right), 0) + 1
    return PathTensor(out)


def _path_product(x: PathElement, y: PathElement) -> PathElement:
    out: dict[PathWord, Fraction] = {}
    for p, cp in x.terms.items():
        for q, cq in y.terms.items():
            r = p.compose(q)
            if r is not None:
                out[r] = out.get(r, 0) + cp * cq
    return PathElement(out)


def project_cyclic(x: PathElement) -> LieElement:
    """Image in A/[A, A]: open paths vanish, closed ones become cyclic words."""
    out: dict[LieMonomial, Fraction] = {}
    for p, c in x.terms.items():
        m = p.close()
        if m is None:
            continue
        key = Idem(m) if isinstance(m, str) else m
        out[key] = out.get(key, 0) + c
    return LieElement(out)


def _quiver_edges_in(*elements: LieElement) -> list[Arrow]:
    seen: set[Arrow] = set()
    for x in elements:
        for m in x.terms:
            if isinstance(m, CyclicWord):
                for a in m.arrows:
                    seen.add(involute(a) if a.starred else a)
    return sorted(seen)


def bracket_via_partials(x: LieElement, y: LieElement) -> LieElement:
    total = PathElement.zero()
    for e in _quiver_edges_in(x, y):
        es = involute(e)
        total = total + _path_product(partial_element(x, e), partial_element(y, es))
        total = total - _path_product(partial_element(x, es), partial_element(y, e))
    return project_cyclic(total)


# ------------------------------------------------------------ cobracket


@lru_cache(maxsize=200_000)
def _cobracket_word(w: CyclicWord) -> tuple[tuple[tuple, Fraction], ...]:
    a = w.arrows
    n = len(a)
    out: dict[tuple, Fraction] = {}
    if n < 2:
        return ()
    for i in range(n):
        for j in range(i + 1, n):
            s = pairing(a[i], a[j])
            if not s:
                continue
            left = close_path(a[j].target, a[j + 1 :] + a[:i])
            right = close_path(a[i].target, a[i + 1 : j])
            for key, c in wedge(left, right, s):
                out[key] = out.get(key, 0) + c
    return tuple((k, c) for k, c in out.items() if c)


def cobracket(x: LieElement) -> LieTensor:
    """Cut a word at an (e, e*) pair into the wedge of the two closed pieces."""
    out: dict[tuple, Fraction] = {}
    for m, c in x.terms.items():
        if isinstance(m, Idem):
            continue
        for key, v in _cobracket_word(m):
            out[key] = out.get(key, 0) + c * v
    return LieTensor(out)


def cobracket_via_partials(x: LieElement) -> LieTensor:
    out: dict[tuple, Fraction] = {}

    def accumulate(d: PathTensor, sign: Fraction) -> None:
        for (p, q), c in d.terms.items():
            mp, mq = p.close(), q.close()
            if mp is None or mq is None:
                continue
            key = tuple(Idem(m) if isinstance(m, str) else m for m in (mp, mq))
            out[key] = out.get(key, 0) + sign * c

    for m, c in x.terms.items():
        if isinstance(m, Idem):
            continue
        for e in _quiver_edges_in(LieElement.single(m)):
            es = involute(e)
            for p, cp in partial(m, es).terms.items():
                accumulate(double_derivation(p, e), c * cp)
            for p, cp in partial(m, e).terms.items():
                accumulate(double_derivation(p, es), -c * cp)
    return LieTensor(out)


# ------------------------------------------------------ tensor helpers


def tensor_map(t: LieTensor, slot: int, fn) -> LieTensor:
    """Apply a linear map ``LieMonomial -> LieElement | LieTensor`` in one slot."""
    out: dict[tuple, Fraction] = {}
    for key, c in t.terms.items():
        image = fn(key[slot])
        nested = isinstance(image, LieTensor)
        for sub, v in image.terms.items():
            sub = sub if nested else (sub,)
            new = key[:slot] + sub + key[slot + 1 :]
            out[new] = out.get(new, 0) + c * v
    return LieTensor(out)


def alt3(t: LieTensor) -> LieTensor:
    """Alt(e (x) f (x) g) = efg + fge + gef."""
    out: dict[tuple, Fraction] = {}
    for (e, f, g), c in t.terms.items():
        for key in ((e, f, g), (f, g, e), (g, e, f)):
            out[key] = out.get(key, 0) + c
    return LieTensor(out)


def co_jacobi(x: LieElement) -> LieTensor:
    return alt3(tensor_map(cobracket(x), 0, lambda m: cobracket(LieElement.single(m))))


def _adjoint(t: LieTensor, f: LieElement, left: bool) -> LieTensor:
    def br(m: LieMonomial) -> LieElement:
        mono = LieElement.single(m)
        return bracket(f, mono) if left else bracket(mono, f)

    return tensor_map(t, 0, br) + tensor_map(t, 1, br)


def cocycle_defect(e: LieElement, f: LieElement) -> LieTensor:
    """delta{e,f} - {delta(e), 1(x)f + f(x)1} - {1(x)e + e(x)1, delta(f)}."""
    lhs = cobracket(bracket(e, f))
    rhs = _adjoint(cobracket(e), f, left=False) + _adjoint(cobracket(f), e, left=True)
    return lhs - rhs


def bracket_of_tensor(t: LieTensor) -> LieElement:
    out = LieElement.zero()
    for (p, q), c in t.terms.items():
        out = out + bracket(LieElement.single(p), LieElement.single(q)).scale(c)
    return out


def jacobi_defect(x: LieElement, y: LieElement, z: LieElement) -> LieElement:
    return (
        bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    )


def monomials(x: LieElement) -> Iterable[LieMonomial]:
    return (m for m, _ in x)
