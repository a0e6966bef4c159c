"""Compositions, skyline diagrams and semistandard skyline fillings.

Rows and columns are 1-based throughout, rows numbered top to bottom. A
filling is stored row-major; row ``i`` holds ``alpha_i`` entries.
"""

from __future__ import annotations

import json
from itertools import product
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence


class StructureError(ValueError):
    """A filling does not fit its shape, or an entry is not a positive integer."""


class InvalidFillingError(ValueError):
    """A filling is well formed but is not semistandard."""


class ParameterError(ValueError):
    """An operator was called with a row or entry parameter out of range."""


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise ValueError(f"parts must be nonnegative integers, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Composition:
        """Parse ``"1,3,0,2"`` (spaces tolerated)."""
        try:
            parts = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"cannot parse composition {text!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """Part ``alpha_i`` for a 1-based row index (0 outside 1..n)."""
        return self.parts[i - 1] if 1 <= i <= self.n else 0

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def swapped(self, i: int) -> Composition:
        """Exchange parts ``i`` and ``i+1``."""
        if not 1 <= i < self.n:
            raise ParameterError(f"cannot swap parts {i},{i + 1} of {self}")
        p = list(self.parts)
        p[i - 1], p[i] = p[i], p[i - 1]
        return Composition(tuple(p))

    def cells(self) -> Iterator[Cell]:
        for i, a in enumerate(self.parts, start=1):
            for j in range(1, a + 1):
                yield Cell(i, j)

    def __contains__(self, cell: object) -> bool:
        return (
            isinstance(cell, tuple)
            and len(cell) == 2
            and 1 <= cell[0] <= self.n
            and 1 <= cell[1] <= self.parts[cell[0] - 1]
        )

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


class Cell(NamedTuple):
    row: int
    col: int


def lambda_of(alpha: Composition) -> Composition:
    """The partition obtained by sorting the parts of ``alpha`` decreasingly."""
    return Composition(tuple(sorted(alpha.parts, reverse=True)))


@dataclass(frozen=True)
class Filling:
    """An assignment of positive integers to the boxes of a skyline diagram."""

    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.shape.n:
            raise StructureError(f"shape {self.shape} has {self.shape.n} rows, got {len(rows)}")
        for i, (row, a) in enumerate(zip(rows, self.shape.parts), start=1):
            if len(row) != a:
                raise StructureError(f"row {i} should hold {a} entries, got {len(row)}")
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                    raise StructureError(f"row {i} has non-positive or non-integer entry {e!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], shape: Composition | None = None) -> Filling:
        if shape is None:
            shape = Composition(tuple(len(r) for r in rows))
        return cls(shape, tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return self.shape.n

    def get(self, i: int, j: int) -> int | None:
        """Entry at box ``(i, j)``; ``None`` when the box is not in the diagram."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return None

    def __getitem__(self, cell: tuple[int, int]) -> int:
        e = self.get(*cell)
        if e is None:
            raise KeyError(cell)
        return e

    def items(self) -> Iterator[tuple[Cell, int]]:
        for i, row in enumerate(self.rows, start=1):
            for j, e in enumerate(row, start=1):
                yield Cell(i, j), e

    @cached_property
    def columns(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``columns[j-1]`` lists ``(row, entry)`` top to bottom for column ``j``."""
        width = max(self.shape.parts, default=0)
        cols: list[list[tuple[int, int]]] = [[] for _ in range(width)]
        for (i, j), e in self.items():
            cols[j - 1].append((i, e))
        return tuple(tuple(c) for c in cols)

    def column(self, j: int) -> tuple[tuple[int, int], ...]:
        return self.columns[j - 1] if 1 <= j <= len(self.columns) else ()

    def find_in_column(self, j: int, value: int) -> int | None:
        """Row holding ``value`` in column ``j`` (first from the top), or ``None``."""
        for i, e in self.column(j):
            if e == value:
                return i
        return None

    def replace(self, changes: dict[tuple[int, int], int]) -> Filling:
        """Copy with the given boxes overwritten."""
        rows = [list(r) for r in self.rows]
        for (i, j), e in changes.items():
            if (i, j) not in self.shape:
                raise StructureError(f"box {(i, j)} is outside the diagram of {self.shape}")
            rows[i - 1][j - 1] = e
        return Filling(self.shape, tuple(tuple(r) for r in rows))

    @property
    def reading_word(self) -> tuple[int, ...]:
        return tuple(e for row in self.rows for e in row)

    @cached_property
    def is_ssf(self) -> bool:
        return validate_filling(self).ok

    def require_ssf(self) -> None:
        if not self.is_ssf:
            report = validate_filling(self)
            raise InvalidFillingError(f"not a semistandard skyline filling: {report.summary()}")

    # serialization

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict | str) -> Filling:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            shape = Composition(tuple(obj["shape"]))
            rows = obj["rows"]
        except (KeyError, TypeError) as exc:
            raise StructureError(f"bad filling JSON: {exc}") from None
        return cls.from_rows(rows, shape)

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, r)) if r else "-" for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> Filling:
        rows = []
        for line in text.strip("\n").split("\n"):
            line = line.strip()
            if line == "-":
                rows.append(())
                continue
            try:
                rows.append(tuple(int(tok) for tok in line.split()))
            except ValueError:
                raise StructureError(f"cannot parse filling row {line!r}") from None
        return cls.from_rows(rows)

    def __str__(self) -> str:
        return self.to_text()


def constant_filling(alpha: Composition) -> Filling:
    """The filling with ``F(i, j) = i``; the unique SSF when ``alpha`` is a partition."""
    return Filling(alpha, tuple((i,) * a for i, a in enumerate(alpha.parts, start=1)))


# validation


@dataclass(frozen=True)
class Violation:
    condition: str  # "i", "ii", "iii" or "iv"
    cells: tuple[Cell, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violated(self) -> set[str]:
        return {v.condition for v in self.violations}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"({v.condition}) {v.message}" for v in self.violations)


def validate_filling(F: Filling) -> ValidationReport:
    """Check the four semistandard conditions, reporting the first witness of each.

    (i) rows weakly decrease, (ii) ``F(i, j) <= i``, (iii) columns have distinct
    entries, (iv) whenever ``a`` sits below ``b`` in a column with ``a < b``,
    the box right of ``b`` exists and holds some ``c > a``.
    """
    found: dict[str, Violation] = {}

    for i, row in enumerate(F.rows, start=1):
        for j in range(1, len(row)):
            if "i" not in found and row[j - 1] < row[j]:
                found["i"] = Violation(
                    "i", (Cell(i, j), Cell(i, j + 1)), f"row {i} increases at columns {j},{j + 1}"
                )
        for j, e in enumerate(row, start=1):
            if "ii" not in found and e > i:
                found["ii"] = Violation("ii", (Cell(i, j),), f"entry {e} exceeds its row index {i}")

    for j, col in enumerate(F.columns, start=1):
        for p, (ib, b) in enumerate(col):
            for ia, a in col[p + 1 :]:
                if a == b and "iii" not in found:
                    found["iii"] = Violation(
                        "iii", (Cell(ib, j), Cell(ia, j)), f"entry {a} repeats in column {j}"
                    )
                if a < b and "iv" not in found:
                    c = F.get(ib, j + 1)
                    if c is None or c <= a:
                        what = "missing" if c is None else f"{c} <= {a}"
                        found["iv"] = Violation(
                            "iv",
                            (Cell(ia, j), Cell(ib, j), Cell(ib, j + 1)),
                            f"a={a} below b={b} in column {j}, right neighbour of b {what}",
                        )

    order = ("i", "ii", "iii", "iv")
    return ValidationReport(tuple(found[c] for c in order if c in found))


def check_non_attacking(F: Filling) -> bool:
    """True iff ``F(i, j) == F(i', j+1)`` always has ``i <= i'``."""
    cols = F.columns
    for j in range(len(cols) - 1):
        right = {e: i for i, e in cols[j + 1]}
        for i, e in cols[j]:
            ip = right.get(e)
            if ip is not None and i > ip:
                return False
    return True


def weight(F: Filling) -> tuple[int, ...]:
    """Exponent vector of ``x^F``: how many boxes hold each value ``1..n``."""
    exps = [0] * F.n
    for _, e in F.items():
        if e > F.n:
            raise InvalidFillingError(f"entry {e} exceeds the number of variables {F.n}")
        exps[e - 1] += 1
    return tuple(exps)


# enumeration


def enumerate_ssf(alpha: Composition) -> list[Filling]:
    """All semistandard skyline fillings of shape ``alpha``.

    Boxes are filled row by row, left to right, trying larger values first, so
    the output is sorted by reading word in descending lexicographic order.
    Every condition is decidable when a box is placed: (iv) for a new entry
    ``a`` only looks at boxes in rows above, which are already complete.
    """
    n = alpha.n
    parts = alpha.parts
    cells = list(alpha.cells())
    grid: list[list[int]] = [[0] * a for a in parts]
    out: list[Filling] = []

    def fits(i: int, j: int, v: int) -> bool:
        for ib in range(i):
            if j >= parts[ib]:
                continue
            b = grid[ib][j]
            if b == v:
                return False
            if v < b:
                if j + 1 >= parts[ib] or grid[ib][j + 1] <= v:
                    return False
        return True

    def place(k: int) -> None:
        if k == len(cells):
            F = Filling(alpha, tuple(tuple(r) for r in grid))
            # leaf guard; pruning above already enforces every condition
            if not validate_filling(F).ok:
                raise AssertionError(f"enumeration produced an invalid filling:\n{F}")
            out.append(F)
            return
        i, j = cells[k].row - 1, cells[k].col - 1
        top = i + 1 if j == 0 else min(i + 1, grid[i][j - 1])
        for v in range(top, 0, -1):
            if fits(i, j, v):
                grid[i][j] = v
                place(k + 1)
        grid[i][j] = 0

    if n >= 1:
        place(0)
    return out


def compositions(max_n: int, max_part: int, min_n: int = 1) -> Iterator[Composition]:
    """All compositions with ``min_n <= n <= max_n`` and parts ``<= max_part``.

    Ordered by length, then lexicographically on the parts.
    """
    for n in range(min_n, max_n + 1):
        for parts in product(range(max_part + 1), repeat=n):
            yield Composition(parts)
