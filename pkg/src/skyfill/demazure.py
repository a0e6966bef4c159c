"""Divided differences, Demazure operators and key polynomials."""

from __future__ import annotations

from functools import lru_cache

from .core import Composition, Filling, enumerate_ssf, weight
from .polynomial import Polynomial


def _check_index(f: Polynomial, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i < f.nvars:
        raise ValueError(f"index {i!r} needs 1 <= i < {f.nvars}")


def swap_vars(f: Polynomial, i: int) -> Polynomial:
    """Interchange ``x_i`` and ``x_{i+1}``."""
    _check_index(f, i)
    out = {}
    for e, c in f.terms.items():
        e = list(e)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = c
    return Polynomial(f.nvars, out)


def divide_by_difference(g: Polynomial, i: int) -> Polynomial:
    """Exact quotient of ``g`` by ``x_i - x_{i+1}``.

    Long division in lex order with ``x_i`` largest: the leading term of the
    divisor is ``x_i``, so each step removes the term of highest ``x_i``
    degree. A leftover term free of ``x_i`` is a nonzero remainder.
    """
    _check_index(g, i)
    a, b = i - 1, i
    rem = dict(g.terms)
    quot: dict[tuple[int, ...], int] = {}

    def lead(e: tuple[int, ...]) -> tuple:
        return (e[a], e[b]) + e

    while rem:
        e = max(rem, key=lead)
        c = rem[e]
        if e[a] == 0:
            raise ArithmeticError(f"{g} is not divisible by x{i} - x{i + 1}")
        q = list(e)
        q[a] -= 1
        q = tuple(q)
        quot[q] = quot.get(q, 0) + c
        # rem -= c * x^q * (x_i - x_{i+1})
        del rem[e]
        s = list(q)
        s[b] += 1
        s = tuple(s)
        v = rem.get(s, 0) + c
        if v:
            rem[s] = v
        else:
            rem.pop(s, None)
    return Polynomial(g.nvars, quot)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    return divide_by_difference(f - swap_vars(f, i), i)


def pi(f: Polynomial, i: int) -> Polynomial:
    """Demazure operator: the divided difference of ``x_i * f``."""
    _check_index(f, i)
    return divided_difference(Polynomial.variable(i, f.nvars) * f, i)


def monomial_of(F: Filling) -> Polynomial:
    """``x^F``."""
    return Polynomial.monomial(weight(F))


def first_ascent_index(alpha: Composition) -> int | None:
    for i in range(1, alpha.n):
        if alpha.part(i) < alpha.part(i + 1):
            return i
    return None


def key_recursive(alpha: Composition) -> Polynomial:
    """Key polynomial from the partition monomial by repeated Demazure operators.

    At each step the smallest ``i`` with ``alpha_i < alpha_{i+1}`` is used.
    """
    return _key_recursive(alpha.parts)


@lru_cache(maxsize=4096)
def _key_recursive(parts: tuple[int, ...]) -> Polynomial:
    alpha = Composition(parts)
    i = first_ascent_index(alpha)
    if i is None:
        return Polynomial.monomial(parts)
    return pi(_key_recursive(alpha.swapped(i).parts), i)


def key_combinatorial(alpha: Composition) -> Polynomial:
    """Sum of ``x^F`` over the semistandard skyline fillings of ``alpha``."""
    acc: dict[tuple[int, ...], int] = {}
    for F in enumerate_ssf(alpha):
        w = weight(F)
        acc[w] = acc.get(w, 0) + 1
    return Polynomial(alpha.n, acc)
