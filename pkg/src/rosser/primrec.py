"""Primitive recursive function expressions, their evaluator, and the
number-theoretic helpers (Chinese remainder theorem, Gödel's beta function)
used to arithmetize them.

An expression is syntax, not a function; ``eval_primrec`` interprets it.
Conventions fixed here because the usual presentations leave them open:

* ``Proj(n, m)`` selects the zero-based m-th argument from the left.
* ``PrimRec(n, g, h)`` has arity n+1 with the recursion argument first:
  f(0, ys) = g(ys) and f(k+1, ys) = h(k, f(k, ys), ys).

Evaluation cost is the honest unary one: a primitive recursion iterates as
many times as its first argument's value.  The combinator library below
therefore arranges loops so the small quantity is the one iterated on
(e.g. ``add`` recurses on its first argument and ``mul`` feeds it the
multiplicand, not the running product).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union


class ArityMismatch(ValueError):
    pass


class NotCoprime(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SuccF:
    pass


@dataclass(frozen=True)
class ZeroF:
    pass


@dataclass(frozen=True)
class Proj:
    n: int
    m: int

    def __post_init__(self):
        if not 0 <= self.m < self.n:
            raise ArityMismatch(f"projection {self.m} out of range for arity {self.n}")


@dataclass(frozen=True)
class Compose:
    n: int
    gs: tuple["PrimRecExpr", ...]
    h: "PrimRecExpr"

    def __post_init__(self):
        if arity(self.h) != len(self.gs):
            raise ArityMismatch(
                f"composition head has arity {arity(self.h)}, got {len(self.gs)} parts"
            )
        for g in self.gs:
            if arity(g) != self.n:
                raise ArityMismatch(
                    f"composition part has arity {arity(g)}, expected {self.n}"
                )


@dataclass(frozen=True)
class PrimRec:
    n: int
    g: "PrimRecExpr"
    h: "PrimRecExpr"

    def __post_init__(self):
        if arity(self.g) != self.n:
            raise ArityMismatch(f"base case has arity {arity(self.g)}, expected {self.n}")
        if arity(self.h) != self.n + 2:
            raise ArityMismatch(
                f"step case has arity {arity(self.h)}, expected {self.n + 2}"
            )


PrimRecExpr = Union[SuccF, ZeroF, Proj, Compose, PrimRec]


def arity(e: PrimRecExpr) -> int:
    match e:
        case SuccF():
            return 1
        case ZeroF():
            return 0
        case Proj(n=n):
            return n
        case Compose(n=n):
            return n
        case PrimRec(n=n):
            return n + 1
    raise TypeError(f"not a primitive recursive expression: {e!r}")


# Compiled closures, keyed by expression identity.  Expressions are frozen,
# so a compiled form never goes stale; keeping the expression in the value
# pins its id.
_COMPILED: dict = {}


def _compile(e: PrimRecExpr):
    hit = _COMPILED.get(id(e))
    if hit is not None:
        return hit[1]
    match e:
        case SuccF():
            fn = lambda a: a[0] + 1
        case ZeroF():
            fn = lambda a: 0
        case Proj(m=m):
            fn = lambda a, m=m: a[m]
        case Compose(gs=gs, h=h):
            gfs = tuple(_compile(g) for g in gs)
            hf = _compile(h)
            fn = lambda a, gfs=gfs, hf=hf: hf(tuple(gf(a) for gf in gfs))
        case PrimRec(g=g, h=h):
            gf = _compile(g)
            hf = _compile(h)

            def fn(a, gf=gf, hf=hf):
                ys = a[1:]
                acc = gf(ys)
                for k in range(a[0]):
                    acc = hf((k, acc) + ys)
                return acc

        case _:
            raise TypeError(f"not a primitive recursive expression: {e!r}")
    _COMPILED[id(e)] = (e, fn)
    return fn


def eval_primrec(e: PrimRecExpr, args: Sequence[int]) -> int:
    if len(args) != arity(e):
        raise ArityMismatch(
            f"expression of arity {arity(e)} applied to {len(args)} argument(s)"
        )
    if any(a < 0 for a in args):
        raise ValueError("arguments must be naturals")
    return _compile(e)(tuple(args))


# --- combinator library -----------------------------------------------------

def const_nat(n: int) -> PrimRecExpr:
    """Nullary expression evaluating to n."""
    e: PrimRecExpr = ZeroF()
    for _ in range(n):
        e = Compose(0, (e,), SuccF())
    return e


def _const_at(n: int, k: int) -> PrimRecExpr:
    """n as a k-ary constant."""
    if k == 0:
        return const_nat(n)
    return Compose(k, (), const_nat(n))


def identity() -> PrimRecExpr:
    return Proj(1, 0)


def compose_unary(outer: PrimRecExpr, inner: PrimRecExpr) -> PrimRecExpr:
    if arity(outer) != 1 or arity(inner) != 1:
        raise ArityMismatch("compose_unary wants two unary expressions")
    return Compose(1, (inner,), outer)


def _call(h: PrimRecExpr, parts: Sequence[PrimRecExpr], n: int) -> PrimRecExpr:
    """Apply h to intermediate expressions, all of arity n."""
    return Compose(n, tuple(parts), h)


@lru_cache(maxsize=None)
def add_expr() -> PrimRecExpr:
    # add(a, b) recurses on a: add(0,b)=b, add(k+1,b)=S(add(k,b)).
    return PrimRec(1, Proj(1, 0), Compose(3, (Proj(3, 1),), SuccF()))


@lru_cache(maxsize=None)
def mul_expr() -> PrimRecExpr:
    # mul(a, b) recurses on a, adding b each step; the add iterates on b so
    # cost stays a*b rather than quadratic in the product.
    step = _call(add_expr(), (Proj(3, 2), Proj(3, 1)), 3)
    return PrimRec(1, _const_at(0, 1), step)


@lru_cache(maxsize=None)
def pred_expr() -> PrimRecExpr:
    return PrimRec(0, ZeroF(), Proj(2, 0))


@lru_cache(maxsize=None)
def _monus_flipped() -> PrimRecExpr:
    # (b, a) -> a - b, clipped at zero; recursion on b.
    return PrimRec(1, Proj(1, 0), Compose(3, (Proj(3, 1),), pred_expr()))


@lru_cache(maxsize=None)
def truncated_sub_expr() -> PrimRecExpr:
    """tsub(a, b) = max(a - b, 0); the recursion runs b times."""
    return _call(_monus_flipped(), (Proj(2, 1), Proj(2, 0)), 2)


@lru_cache(maxsize=None)
def sign_expr() -> PrimRecExpr:
    return PrimRec(0, ZeroF(), _const_at(1, 2))


@lru_cache(maxsize=None)
def not_sign_expr() -> PrimRecExpr:
    # 1 - sg(x)
    return _call(truncated_sub_expr(), (_const_at(1, 1), sign_expr()), 1)


@lru_cache(maxsize=None)
def triangular_expr() -> PrimRecExpr:
    # T(0)=0, T(k+1)=T(k)+(k+1); the add iterates on k+1.
    succ_k = Compose(2, (Proj(2, 0),), SuccF())
    return PrimRec(0, ZeroF(), _call(add_expr(), (succ_k, Proj(2, 1)), 2))


@lru_cache(maxsize=None)
def cpair_expr() -> PrimRecExpr:
    """The Cantor pairing function as a primitive recursive expression."""
    total = _call(add_expr(), (Proj(2, 0), Proj(2, 1)), 2)
    tri = Compose(2, (total,), triangular_expr())
    return _call(add_expr(), (Proj(2, 0), tri), 2)


def bounded_search(p: PrimRecExpr) -> PrimRecExpr:
    """Search combinator.

    For p of arity n+1, the result F has arity n+1 and F(b, ys) is the least
    k <= b with p(k, ys) != 0, and exactly b+1 when there is none.  Built by
    primitive recursion on b: the step keeps an already-found answer (it is
    <= the old bound) and otherwise tests the new candidate.
    """
    np1 = arity(p)
    if np1 < 1:
        raise ArityMismatch("predicate must take the search argument")
    n = np1 - 1

    # base: 0 if p(0, ys) else 1
    p_at_zero = Compose(n, (_const_at(0, n),) + tuple(Proj(n, i) for i in range(n)), p)
    base = Compose(n, (p_at_zero,), not_sign_expr())

    # step on (k, r, ys): r if r <= k else (k+1) + (0 if p(k+1, ys) else 1)
    m = n + 2
    kexp, rexp = Proj(m, 0), Proj(m, 1)
    ys = tuple(Proj(m, i + 2) for i in range(n))
    succ_k = Compose(m, (kexp,), SuccF())
    p_next = Compose(m, (succ_k,) + ys, p)
    miss = _call(add_expr(), (succ_k, Compose(m, (p_next,), not_sign_expr())), m)
    # r <= k means a hit was already recorded (the running sentinel is b+1).
    still_searching = Compose(
        m, (_call(truncated_sub_expr(), (rexp, kexp), m),), sign_expr()
    )
    found_flag = Compose(m, (still_searching,), not_sign_expr())
    keep = _call(mul_expr(), (found_flag, rexp), m)
    advance = _call(mul_expr(), (still_searching, miss), m)
    step = _call(add_expr(), (keep, advance), m)
    return PrimRec(n, base, step)


def course_of_values(h: PrimRecExpr) -> PrimRecExpr:
    """Recursion with access to the whole history of earlier values.

    For h of arity n+2 the result f has arity n+1 and satisfies
    f(k, ys) = h(k, hist(k, ys), ys), where the history is the pairing-coded
    list of prior values, newest first:

        hist(0, ys) = 0,   hist(k+1, ys) = cpair(f(k, ys), hist(k, ys)).
    """
    np2 = arity(h)
    if np2 < 2:
        raise ArityMismatch("step function must take the index and the history")
    n = np2 - 2
    m = n + 2
    cons = _call(cpair_expr(), (h, Proj(m, 1)), m)
    hist = PrimRec(n, _const_at(0, n), cons)
    parts = (Proj(n + 1, 0), hist) + tuple(Proj(n + 1, i + 1) for i in range(n))
    return Compose(n + 1, parts, h)


@lru_cache(maxsize=None)
def _pair_root_expr() -> PrimRecExpr:
    # troot(m): least w with T(w+1) > m, searched up to m itself.  The
    # predicate is notsg((m+1) - T(w+1)) so the monus iterates on T(w+1).
    m2 = 2
    t_next = Compose(m2, (Compose(m2, (Proj(m2, 0),), SuccF()),), triangular_expr())
    m_plus_1 = Compose(m2, (Proj(m2, 1),), SuccF())
    below = _call(truncated_sub_expr(), (m_plus_1, t_next), m2)
    pred = Compose(m2, (below,), not_sign_expr())
    search = bounded_search(pred)
    return Compose(1, (Proj(1, 0), Proj(1, 0)), search)


@lru_cache(maxsize=None)
def pairing_first_expr() -> PrimRecExpr:
    """First component of a Cantor pair: m - T(troot(m))."""
    t_of_root = compose_unary(triangular_expr(), _pair_root_expr())
    return _call(truncated_sub_expr(), (Proj(1, 0), t_of_root), 1)


@lru_cache(maxsize=None)
def pairing_second_expr() -> PrimRecExpr:
    """Second component of a Cantor pair: troot(m) - first(m)."""
    return _call(
        truncated_sub_expr(), (_pair_root_expr(), pairing_first_expr()), 1
    )


@lru_cache(maxsize=None)
def fibonacci_expr() -> PrimRecExpr:
    """Fibonacci through course-of-values recursion.

    The step reads the two newest history entries back through the pairing
    inverse, so this demonstrates the history packaging end to end.  Honest
    unary evaluation makes history reads cost about the cube of the history
    code; that stays comfortable for k <= 4 and is measured out of reach at
    k = 6 (the history code alone is ~8e5 there).
    """
    m = 2  # step arity: (k, hist)
    k, hist = Proj(m, 0), Proj(m, 1)
    newest = Compose(m, (hist,), pairing_first_expr())
    tail = Compose(m, (hist,), pairing_second_expr())
    second = Compose(m, (tail,), pairing_first_expr())
    body = _call(add_expr(), (newest, second), m)

    pred_k = Compose(m, (k,), pred_expr())
    is_one = _call(
        mul_expr(),
        (Compose(m, (k,), sign_expr()), Compose(m, (pred_k,), not_sign_expr())),
        m,
    )
    at_least_two = Compose(m, (pred_k,), sign_expr())
    step = _call(add_expr(), (is_one, _call(mul_expr(), (at_least_two, body), m)), m)
    return course_of_values(step)


# --- Chinese remainder theorem and the beta function ------------------------

def crt(moduli: Sequence[int], residues: Sequence[int]) -> int:
    """The unique x below the product with x = residues[i] mod moduli[i].

    Moduli must be pairwise coprime and at least 1.
    """
    if len(moduli) != len(residues):
        raise LengthMismatch(f"{len(moduli)} moduli vs {len(residues)} residues")
    if any(m < 1 for m in moduli):
        raise ValueError("moduli must be >= 1")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if math.gcd(moduli[i], moduli[j]) != 1:
                raise NotCoprime(f"gcd({moduli[i]}, {moduli[j]}) != 1")
    product = math.prod(moduli)
    x = 0
    for m, r in zip(moduli, residues):
        others = product // m
        x += r * others * pow(others, -1, m)
    return x % product


def beta(x: int, y: int, i: int) -> int:
    """Array indexing by arithmetic: x mod (1 + (i+1)*y)."""
    return x % (1 + (i + 1) * y)


def beta_encode(values: Sequence[int]) -> tuple[int, int]:
    """A pair (x, y) with beta(x, y, i) = values[i] for every index.

    y is drawn from the multiples of lcm(1..s) with s = max(len(values),
    max(values)) + 1, which makes the moduli 1 + (i+1)*y pairwise coprime
    and larger than every stored value; x then comes from the Chinese
    remainder theorem.  Minimality of y is not promised, only correctness.
    """
    if not values:
        raise ValueError("cannot encode an empty sequence")
    s = max(len(values), max(values)) + 1
    base = math.lcm(*range(1, s + 1))
    for k in range(1, 64):
        y = k * base
        moduli = [1 + (i + 1) * y for i in range(len(values))]
        if y <= max(values):
            continue
        try:
            x = crt(moduli, list(values))
        except NotCoprime:
            continue
        return x, y
    raise AssertionError("no usable modulus family found; unreachable for lcm multiples")
