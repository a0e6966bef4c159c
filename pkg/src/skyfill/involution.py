"""Classification of the entries t, t+1 and the operators built on it.

``lower`` and ``raise_`` move one free entry in a row; ``phi`` balances the
free entries of a row and is an involution; ``phi_row`` composes ``phi`` over
all rows below a given one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .core import Cell, Filling, ParameterError


class Kind(enum.Enum):
    PAIRED = "paired"
    PSEUDO_FREE = "pseudo-free"
    FREE = "free"


@dataclass(frozen=True)
class EntryClass:
    kind: Kind
    partner: Cell | None = None  # set only for PSEUDO_FREE


PAIRED = EntryClass(Kind.PAIRED)
FREE = EntryClass(Kind.FREE)


@dataclass(frozen=True)
class Classification:
    filling: Filling
    t: int
    classes: dict[Cell, EntryClass]

    def __getitem__(self, cell: tuple[int, int]) -> EntryClass:
        return self.classes[Cell(*cell)]

    def cells_of(self, kind: Kind) -> list[Cell]:
        return sorted(c for c, k in self.classes.items() if k.kind is kind)

    def free_columns(self, r: int, value: int) -> list[int]:
        """Columns of the free entries equal to ``value`` in row ``r``, left to right."""
        return sorted(
            c.col
            for c, k in self.classes.items()
            if k.kind is Kind.FREE and c.row == r and self.filling[c] == value
        )

    def free_counts(self, r: int) -> tuple[int, int]:
        """``(n1, n2)``: numbers of free ``t+1`` and free ``t`` in row ``r``."""
        return len(self.free_columns(r, self.t + 1)), len(self.free_columns(r, self.t))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Classification):
            return NotImplemented
        return self.filling == other.filling and self.t == other.t and self.classes == other.classes

    __hash__ = None  # type: ignore[assignment]


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise ParameterError(f"t must be a positive integer, got {t!r}")


def _unpaired(F: Filling, t: int) -> tuple[dict[Cell, EntryClass], list[Cell], list[Cell]]:
    classes: dict[Cell, EntryClass] = {}
    lows: list[Cell] = []
    highs: list[Cell] = []
    for j, col in enumerate(F.columns, start=1):
        rows = {e: i for i, e in col}
        it, iu = rows.get(t), rows.get(t + 1)
        if it is not None and iu is not None:
            classes[Cell(it, j)] = PAIRED
            classes[Cell(iu, j)] = PAIRED
        elif it is not None:
            lows.append(Cell(it, j))
        elif iu is not None:
            highs.append(Cell(iu, j))
    return classes, lows, highs


def classify(F: Filling, t: int) -> Classification:
    """Classify every ``t`` and ``t+1`` of ``F`` as paired, pseudo-free or free.

    Pseudo-free pairs are found straight from their definition: an unpaired
    ``t`` and an unpaired ``t+1`` strictly above and strictly to the right of
    it, with every column in between holding both values.
    """
    F.require_ssf()
    _check_t(t)
    classes, lows, highs = _unpaired(F, t)
    both = {
        j
        for j, col in enumerate(F.columns, start=1)
        if {t, t + 1} <= {e for _, e in col}
    }
    for lo in lows:
        for hi in highs:
            if hi.row < lo.row and hi.col > lo.col and all(
                k in both for k in range(lo.col + 1, hi.col)
            ):
                if lo in classes or hi in classes:
                    raise AssertionError(f"entry matched twice while pairing {lo} with {hi}")
                classes[lo] = EntryClass(Kind.PSEUDO_FREE, hi)
                classes[hi] = EntryClass(Kind.PSEUDO_FREE, lo)
    for c in lows + highs:
        classes.setdefault(c, FREE)
    return Classification(F, t, classes)


def classify_fast(F: Filling, t: int) -> Classification:
    """Same classification, found by walking right along a row.

    An unpaired ``t`` at ``(i, j)`` is pseudo-free exactly when the ``t+1`` of
    column ``j+1`` sits in some row ``i' < i``; its partner is then the first
    ``t+1`` of row ``i'`` right of column ``j`` whose column lacks ``t``.
    """
    F.require_ssf()
    _check_t(t)
    classes, lows, highs = _unpaired(F, t)
    for lo in lows:
        ip = F.find_in_column(lo.col + 1, t + 1)
        if ip is None or ip >= lo.row:
            continue
        k = lo.col + 1
        while F.get(ip, k) == t + 1 and F.find_in_column(k, t) is not None:
            k += 1
        if F.get(ip, k) != t + 1:
            raise AssertionError(f"row {ip} stopped holding {t + 1} before an unpaired one")
        hi = Cell(ip, k)
        classes[lo] = EntryClass(Kind.PSEUDO_FREE, hi)
        classes[hi] = EntryClass(Kind.PSEUDO_FREE, lo)
    for c in lows + highs:
        classes.setdefault(c, FREE)
    return Classification(F, t, classes)


def _check_row(F: Filling, r: int) -> None:
    if not isinstance(r, int) or not 1 <= r <= F.n:
        raise ParameterError(f"row {r!r} is outside 1..{F.n}")


def _move(F: Filling, r: int, t: int, src: int, dst: int, pick) -> Filling:
    # Shared body of lower/raise: turn the chosen free ``src`` of row r into
    # ``dst`` and swap src/dst in the run of columns to its left where row r
    # holds src and the column holds dst strictly below row r.
    cls = classify(F, t)
    cols = cls.free_columns(r, src)
    if not cols:
        return F
    j = pick(cols)
    changes = {(r, j): dst}
    k = j - 1
    while k >= 1 and F.get(r, k) == src:
        below = F.find_in_column(k, dst)
        if below is None or below <= r:
            break
        changes[(r, k)] = dst
        changes[(below, k)] = src
        k -= 1
    return F.replace(changes)


def lower(F: Filling, r: int, t: int) -> Filling:
    """Lowering operator: the rightmost free ``t+1`` in row ``r`` becomes ``t``."""
    _check_t(t)
    _check_row(F, r)
    if r < t:
        raise ParameterError(f"lowering needs r >= t, got r={r}, t={t}")
    return _move(F, r, t, t + 1, t, max)


def raise_(F: Filling, r: int, t: int) -> Filling:
    """Raising operator: the leftmost free ``t`` in row ``r`` becomes ``t+1``."""
    _check_t(t)
    _check_row(F, r)
    if r < t + 1:
        raise ParameterError(f"raising needs r >= t+1, got r={r}, t={t}")
    return _move(F, r, t, t, t + 1, min)


def free_counts(F: Filling, r: int, t: int) -> tuple[int, int]:
    """Numbers ``(n1, n2)`` of free ``t+1`` and free ``t`` in row ``r``."""
    return classify(F, t).free_counts(r)


def phi_steps(F: Filling, r: int, t: int) -> Iterator[Filling]:
    """Yield ``F`` and every intermediate filling on the way to ``phi(F, r, t)``."""
    _check_t(t)
    _check_row(F, r)
    if r < t + 1:
        raise ParameterError(f"phi needs r >= t+1, got r={r}, t={t}")
    n1, n2 = free_counts(F, r, t)
    step = lower if n1 > n2 else raise_
    yield F
    for _ in range(abs(n1 - n2)):
        G = step(F, r, t)
        if G == F:
            raise AssertionError(f"{step.__name__} at row {r} found no free entry to move")
        F = G
        yield F


def phi(F: Filling, r: int, t: int) -> Filling:
    """Exchange the numbers of free ``t`` and free ``t+1`` in row ``r``."""
    for G in phi_steps(F, r, t):
        pass
    return G


def phi_row(F: Filling, r: int) -> Filling:
    """Apply ``phi(., i, r)`` for ``i = r+1, ..., n`` in that order."""
    if not isinstance(r, int) or not 1 <= r < F.n:
        raise ParameterError(f"phi_row needs 1 <= r < n={F.n}, got {r!r}")
    for i in range(r + 1, F.n + 1):
        F = phi(F, i, r)
    return F


def annotate(F: Filling, t: int) -> str:
    """Text form of ``F`` with free entries marked ``*`` and pseudo-free ones ``~``."""
    cls = classify(F, t)
    lines = []
    for i, row in enumerate(F.rows, start=1):
        if not row:
            lines.append("-")
            continue
        toks = []
        for j, e in enumerate(row, start=1):
            k = cls.classes.get(Cell(i, j))
            mark = "" if k is None else {Kind.FREE: "*", Kind.PSEUDO_FREE: "~"}.get(k.kind, "")
            toks.append(f"{e}{mark}")
        lines.append(" ".join(toks))
    return "\n".join(lines)
