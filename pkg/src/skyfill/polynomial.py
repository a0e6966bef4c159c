"""Sparse multivariate polynomials with exact integer coefficients.

A polynomial in ``x1..xn`` maps exponent tuples to nonzero ``int``
coefficients. Python integers never overflow, so arithmetic is exact.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have arity {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            acc[exp] = acc.get(exp, 0) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash: int | None = None

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: int = 1) -> Polynomial:
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x{i} is not among x1..x{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    # access

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def exact_div_monomial(self, exp: Iterable[int]) -> Polynomial:
        """Divide by ``x^exp``; raises ``ArithmeticError`` if some term is not divisible."""
        exp = tuple(exp)
        out = {}
        for e, c in self._terms.items():
            q = tuple(a - b for a, b in zip(e, exp))
            if any(v < 0 for v in q):
                raise ArithmeticError(f"term {_fmt_term(e, c)} is not divisible by {_fmt_term(exp, 1)}")
            out[q] = c
        return Polynomial(self.nvars, out)

    # text form

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self):
            s = _fmt_term(e, abs(c))
            if k == 0:
                parts.append(s if c > 0 else f"-{s}")
            else:
                parts.append(f"+ {s}" if c > 0 else f"- {s}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, nvars: int) -> Polynomial:
        """Inverse of ``str``: parse ``"x1^2 + 3*x1*x2 - 2"`` in ``nvars`` variables."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[Exponent, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2)
            coeff = 1
            exp = [0] * nvars
            for k, factor in enumerate(body.split("*")):
                if factor.isdigit():
                    if k != 0:
                        raise ValueError(f"coefficient must lead the term in {body!r}")
                    coeff = int(factor)
                    continue
                fm = _FACTOR.fullmatch(factor)
                if fm is None:
                    raise ValueError(f"bad factor {factor!r}")
                v = int(fm.group(1))
                if not 1 <= v <= nvars:
                    raise ValueError(f"x{v} is not among x1..x{nvars}")
                exp[v - 1] += int(fm.group(2) or 1)
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + sign * coeff
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        return cls(nvars, terms)


_TERM = re.compile(r"([+-])([0-9]+(?:\*x[0-9]+(?:\^[0-9]+)?)*|x[0-9]+(?:\^[0-9]+)?(?:\*x[0-9]+(?:\^[0-9]+)?)*)")
_FACTOR = re.compile(r"x([0-9]+)(?:\^([0-9]+))?")


def _grlex_key(exp: Exponent) -> tuple:
    # graded lex with x1 > x2 > ... > xn
    return (sum(exp), exp)


def _fmt_term(exp: Exponent, c: int) -> str:
    factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp, start=1) if e]
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)
