"""Derived fillings and the checks tying the involution to Demazure operators.

For ``alpha`` with first ascent ``r`` and ``alpha'`` the composition with
parts ``r`` and ``r+1`` exchanged, every ``F'`` in SSF(alpha') spawns a family
``F_0, ..., F_m`` in SSF(alpha), and these families partition SSF(alpha).
"""

from __future__ import annotations

import json
import time
from itertools import product
from dataclasses import dataclass, field
from typing import Any

from .core import (
    Composition,
    Filling,
    InvalidFillingError,
    ParameterError,
    constant_filling,
    enumerate_ssf,
)
from .demazure import first_ascent_index, key_combinatorial, monomial_of, pi, swap_vars
from .involution import Kind, classify, lower, phi, phi_row, raise_
from .polynomial import Polynomial


def first_ascent(alpha: Composition) -> int | None:
    """Smallest ``r`` with ``alpha_r < alpha_{r+1}``; ``None`` for a partition."""
    return first_ascent_index(alpha)


def _ascent_or_raise(alpha: Composition) -> int:
    r = first_ascent(alpha)
    if r is None:
        raise ParameterError(f"{alpha} is a partition and has no first ascent")
    return r


@dataclass(frozen=True)
class DerivedFamily:
    source: Filling
    r: int
    members: tuple[Filling, ...]

    @property
    def m(self) -> int:
        return len(self.members) - 1

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "r": self.r,
            "m": self.m,
            "members": [F.to_json() for F in self.members],
        }


def _free_count(F: Filling, row: int, t: int, value: int) -> int:
    return len(classify(F, t).free_columns(row, value))


def move_down(Fp: Filling, alpha: Composition, r: int) -> Filling:
    """Move the boxes of row ``r`` beyond column ``alpha_r`` down to row ``r+1``."""
    rows = [list(row) for row in Fp.rows]
    keep = alpha.part(r)
    tail = rows[r - 1][keep:]
    rows[r - 1] = rows[r - 1][:keep]
    rows[r] = rows[r] + tail
    return Filling(alpha, tuple(tuple(row) for row in rows))


def move_up(F: Filling, alpha: Composition, r: int) -> Filling:
    """Inverse of :func:`move_down`."""
    rows = [list(row) for row in F.rows]
    keep = alpha.part(r)
    tail = rows[r][keep:]
    rows[r] = rows[r][:keep]
    rows[r - 1] = rows[r - 1] + tail
    return Filling(alpha.swapped(r), tuple(tuple(row) for row in rows))


def derived_fillings(Fp: Filling, alpha: Composition) -> DerivedFamily:
    """The derived family of ``Fp``: ``F_k`` is ``F_0`` raised ``k`` times at row ``r+1``."""
    r = _ascent_or_raise(alpha)
    alpha_p = alpha.swapped(r)
    if Fp.shape != alpha_p:
        raise InvalidFillingError(f"expected a filling of shape {alpha_p}, got {Fp.shape}")
    Fp.require_ssf()
    m = _free_count(Fp, r, r, r)
    members = [move_down(Fp, alpha, r)]
    for _ in range(m):
        nxt = raise_(members[-1], r + 1, r)
        if nxt == members[-1]:
            raise AssertionError(f"raising stalled after {len(members) - 1} of {m} steps")
        members.append(nxt)
    return DerivedFamily(Fp, r, tuple(members))


def inverse_derived(F: Filling, alpha: Composition) -> tuple[Filling, int]:
    """Return ``(Fp, k)`` with ``F`` the ``k``-th member of the derived family of ``Fp``.

    ``k`` is the number of free ``r+1`` in row ``r+1`` of ``F``; lowering ``k``
    times and moving the tail of row ``r+1`` back up recovers ``Fp``.
    """
    r = _ascent_or_raise(alpha)
    if F.shape != alpha:
        raise InvalidFillingError(f"expected a filling of shape {alpha}, got {F.shape}")
    F.require_ssf()
    k = _free_count(F, r + 1, r, r + 1)
    G = F
    for _ in range(k):
        G = lower(G, r + 1, r)
    return move_up(G, alpha, r), k


def generate_inductive(alpha: Composition) -> list[Filling]:
    """SSF(alpha) built from the partition case by derived families only."""
    r = first_ascent(alpha)
    if r is None:
        return [constant_filling(alpha)]
    out: list[Filling] = []
    for Fp in generate_inductive(alpha.swapped(r)):
        out.extend(derived_fillings(Fp, alpha).members)
    return out


# reports


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    note: str | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "pass": self.passed, "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    alpha: Composition
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, witness: Any = None, note: str | None = None) -> Check:
        c = Check(name, bool(passed), witness, note)
        self.checks.append(c)
        return c

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha.parts),
            "checks": [c.to_json() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _w(obj) -> Any:
    # witness payload: JSON-friendly form of a filling or polynomial
    if isinstance(obj, Filling):
        return obj.to_json()
    if isinstance(obj, Polynomial):
        return str(obj)
    return obj


def symmetric_factor(Fp: Filling, r: int, m: int) -> Polynomial | None:
    """``f`` with ``x^Fp + x^phi_row(Fp) = x_r^m f`` and ``f`` symmetric in ``x_r, x_{r+1}``.

    ``None`` when no such factorization exists.
    """
    total = monomial_of(Fp) + monomial_of(phi_row(Fp, r))
    exp = [0] * Fp.n
    exp[r - 1] = m
    try:
        f = total.exact_div_monomial(exp)
    except ArithmeticError:
        return None
    return f if swap_vars(f, r) == f else None


def verify_pi_identity(alpha: Composition) -> VerificationReport:
    """Check that ``pi_r`` maps the SSF(alpha') sum onto the SSF(alpha) sum.

    Three checks: (a) the global identity; (b) the pairwise identity for
    ``F'`` and ``phi_row(F')``; (c) the factorization behind (b).
    """
    start = time.perf_counter()
    r = _ascent_or_raise(alpha)
    alpha_p = alpha.swapped(r)
    report = VerificationReport(alpha)

    lhs = pi(key_combinatorial(alpha_p), r)
    rhs = key_combinatorial(alpha)
    report.add("global_identity", lhs == rhs, None if lhs == rhs else {"lhs": str(lhs), "rhs": str(rhs)})

    fams: dict[Filling, DerivedFamily] = {}

    def fam(G: Filling) -> DerivedFamily:
        if G not in fams:
            fams[G] = derived_fillings(G, alpha)
        return fams[G]

    def fam_sum(G: Filling) -> Polynomial:
        acc = Polynomial.zero(alpha.n)
        for F in fam(G).members:
            acc = acc + monomial_of(F)
        return acc

    pair_fail = None
    fact_fail = None
    off_by_one = []
    for Fp in enumerate_ssf(alpha_p):
        Gp = phi_row(Fp, r)
        if Gp == Fp:
            # both sides double; compare the halves
            ok = pi(monomial_of(Fp), r) == fam_sum(Fp)
        else:
            ok = pi(monomial_of(Fp) + monomial_of(Gp), r) == fam_sum(Fp) + fam_sum(Gp)
        if not ok and pair_fail is None:
            pair_fail = Fp

        m = fam(Fp).m
        if symmetric_factor(Fp, r, m) is None:
            if fact_fail is None:
                fact_fail = Fp
            if symmetric_factor(Fp, r, m + 1) is not None:
                off_by_one.append(Fp)

    report.add("pairwise_pi_identity", pair_fail is None, _w(pair_fail))
    note = None
    if off_by_one:
        note = f"{len(off_by_one)} fillings factor with exponent m+1 instead of m"
    report.add("symmetric_factorization", fact_fail is None, _w(fact_fail), note)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# Bender-Knuth specialization


def _reflect(rows) -> list[list[int]]:
    return [list(r) for r in reversed(rows)]


def bender_knuth_row(tableau: list[list[int]], p: int, t: int) -> list[list[int]]:
    """Classical Bender-Knuth move on row ``p`` (1-based) of a reverse SSYT.

    Rows weakly decrease and columns strictly decrease downward. A ``t+1`` is
    matched when a ``t`` sits directly below it. In row ``p`` the unmatched
    entries form a block of ``n1`` copies of ``t+1`` followed by ``n2`` copies
    of ``t``; the move rewrites it as ``n2`` copies of ``t+1`` then ``n1`` of ``t``.
    """
    T = [list(r) for r in tableau]
    row = T[p - 1]
    above = T[p - 2] if p >= 2 else []
    below = T[p] if p < len(T) else []
    free = []
    for c, e in enumerate(row):
        if e == t + 1 and not (c < len(below) and below[c] == t):
            free.append(c)
        elif e == t and not (c < len(above) and above[c] == t + 1):
            free.append(c)
    if not free:
        return T
    if free != list(range(free[0], free[-1] + 1)):
        raise AssertionError(f"unmatched entries of row {p} are not contiguous: {row}")
    n1 = sum(1 for c in free if row[c] == t + 1)
    n2 = len(free) - n1
    for k, c in enumerate(free):
        row[c] = t + 1 if k < n2 else t
    return T


def reverse_ssyt_count(alpha: Composition) -> int:
    """Brute-force count of fillings of shape ``alpha`` whose reflection is a reverse SSYT.

    Every assignment of values to boxes is tried; a filling counts when rows
    weakly decrease, columns strictly increase downward and each entry is at
    most its row index.
    """
    cells = list(alpha.cells())
    count = 0
    for values in product(range(1, alpha.n + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        if all(
            v <= i
            and (j == 1 or grid[(i, j - 1)] >= v)
            and ((i - 1, j) not in grid or grid[(i - 1, j)] < v)
            for (i, j), v in grid.items()
        ):
            count += 1
    return count


def bender_knuth_check(
    alpha: Composition, r: int | None = None, t: int | None = None
) -> VerificationReport:
    """Check that ``phi`` reduces to Bender-Knuth when ``alpha`` is weakly increasing.

    With ``r`` and ``t`` omitted every pair ``r >= t+1`` is covered.
    """
    if any(a > b for a, b in zip(alpha.parts, alpha.parts[1:])):
        raise ParameterError(f"{alpha} is not weakly increasing")
    start = time.perf_counter()
    n = alpha.n
    if r is None and t is None:
        pairs = [(rr, tt) for tt in range(1, n) for rr in range(tt + 1, n + 1)]
    elif r is not None and t is not None:
        if not (1 <= t and t + 1 <= r <= n):
            raise ParameterError(f"need 1 <= t < r <= n, got r={r}, t={t}")
        pairs = [(r, t)]
    else:
        raise ParameterError("give both r and t, or neither")
    ts = sorted({tt for _, tt in pairs})

    report = VerificationReport(alpha)
    fillings = enumerate_ssf(alpha)

    col_fail = next(
        (
            F
            for F in fillings
            if any(a[1] >= b[1] for col in F.columns for a, b in zip(col, col[1:]))
        ),
        None,
    )
    report.add("columns_strictly_increasing", col_fail is None, _w(col_fail))

    pf_fail = next(
        (F for F in fillings for tt in ts if classify(F, tt).cells_of(Kind.PSEUDO_FREE)), None
    )
    report.add("no_pseudo_free", pf_fail is None, _w(pf_fail))

    bk_fail = None
    for F in fillings:
        for rr, tt in pairs:
            T = bender_knuth_row(_reflect(F.rows), n + 1 - rr, tt)
            expected = Filling.from_rows(_reflect(T), alpha)
            if phi(F, rr, tt) != expected:
                bk_fail = {"filling": F.to_json(), "r": rr, "t": tt}
                break
        if bk_fail:
            break
    report.add("phi_is_bender_knuth", bk_fail is None, bk_fail)

    expected_count = reverse_ssyt_count(alpha)
    report.add(
        "count_matches_reverse_ssyt",
        expected_count == len(fillings),
        None if expected_count == len(fillings) else {"ssf": len(fillings), "oracle": expected_count},
    )
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
