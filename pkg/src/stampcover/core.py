"""Stamp bases, minimal-stamp tables, covers, and generation witnesses.

A basis is a strictly increasing sequence of denominations starting at 1.
Its cover at budget h is the largest n such that every integer in 1..n is
a sum of at most h denominations (repetition allowed).  The table of
minimal stamp counts is the workhorse for everything else; a brute-force
enumerator over coefficient vectors serves as an independent cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    InvalidBasisError,
    NonPositiveError,
    NotIncreasingError,
    NotRepresentableError,
    NotStartingAtOneError,
    OverflowLimitError,
    TooLargeError,
)

MAX_ELEMENT = 2**64 - 1

# Sentinel weight meaning "no representation found yet"; larger than any
# real stamp count so min() comparisons need no special casing.
UNREACHABLE = 2**64

# Refuse to allocate tables beyond this many entries (roughly 128 MB as a
# Python list); desk-scale work stays far below it.
DEFAULT_TABLE_LIMIT = 1 << 24

# Refuse brute-force enumerations beyond this many coefficient vectors.
DEFAULT_ENUMERATION_CEILING = 10**8


# ---------- basis ----------


@dataclass(frozen=True)
class Basis:
    """Strictly increasing stamp denominations, smallest always 1."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise InvalidBasisError("a basis needs at least one element")
        for value in elems:
            if not isinstance(value, int):
                raise InvalidBasisError(f"element {value!r} is not an integer")
            if value <= 0:
                raise NonPositiveError(f"element {value} is not positive")
            if value > MAX_ELEMENT:
                raise OverflowLimitError(
                    f"element {value} does not fit in 64 bits"
                )
        if elems[0] != 1:
            raise NotStartingAtOneError(
                f"smallest element must be 1, got {elems[0]}"
            )
        for left, right in zip(elems, elems[1:]):
            if right <= left:
                raise NotIncreasingError(
                    f"elements must be strictly increasing ({left} then {right})"
                )

    @property
    def k(self) -> int:
        """Number of denominations."""
        return len(self.elements)

    @property
    def top(self) -> int:
        """Largest denomination."""
        return self.elements[-1]

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.elements)


def parse_basis(text: str) -> Basis:
    """Parse comma-separated denominations like ``"1,3,5"`` into a Basis.

    Whitespace around commas is ignored.  Raises InvalidBasisError (or a
    subclass naming the specific defect) on anything else.
    """
    if text is None or not text.strip():
        raise InvalidBasisError("empty basis text")
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise InvalidBasisError(f"empty field in basis text {text!r}")
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidBasisError(
                f"{token!r} is not an integer"
            ) from None
    return Basis(tuple(values))


# ---------- generations ----------


@dataclass(frozen=True)
class Generation:
    """One representation of ``value`` as a multiset of denominations.

    ``coefficients[i]`` counts copies of the i-th denomination; ``weight``
    is the total number of stamps used.
    """

    coefficients: tuple[int, ...]
    value: int
    weight: int

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be non-negative")
        if self.weight != sum(coeffs):
            raise ValueError(
                f"weight {self.weight} does not match coefficients {coeffs}"
            )


@dataclass(frozen=True)
class MinStampTable:
    """``min_stamps[x]`` = fewest stamps summing to x, for 0 <= x <= bound."""

    basis: Basis
    bound: int
    min_stamps: tuple[int, ...]

    def generation(self, x: int, budget: int) -> Generation:
        """Reconstruct a minimal-weight generation of x, or refuse.

        Raises NotRepresentableError when x needs more than ``budget``
        stamps.  Ties are broken toward the largest denomination, so the
        witness is deterministic.
        """
        if not 0 <= x <= self.bound:
            raise ValueError(f"{x} is outside the table range 0..{self.bound}")
        need = self.min_stamps[x]
        if need > budget:
            raise NotRepresentableError(
                f"{x} needs {need} stamps, budget is {budget}"
            )
        elems = self.basis.elements
        coeffs = [0] * len(elems)
        remaining = x
        while remaining:
            want = self.min_stamps[remaining] - 1
            for i in range(len(elems) - 1, -1, -1):
                step = elems[i]
                if step <= remaining and self.min_stamps[remaining - step] == want:
                    coeffs[i] += 1
                    remaining -= step
                    break
            else:
                raise AssertionError("minimal-stamp table is inconsistent")
        return Generation(tuple(coeffs), x, need)


def min_stamp_table(
    basis: Basis, bound: int, *, limit: int = DEFAULT_TABLE_LIMIT
) -> MinStampTable:
    """Minimal stamp counts for every value 0..bound by forward recurrence.

    Runs in O(bound * k).  Raises OverflowLimitError, reporting the size it
    would have needed, when bound + 1 exceeds ``limit``.
    """
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    if bound + 1 > limit:
        raise OverflowLimitError(
            f"table would need {bound + 1} entries, limit is {limit}"
        )
    elems = basis.elements
    stamps = [UNREACHABLE] * (bound + 1)
    stamps[0] = 0
    for x in range(1, bound + 1):
        best = UNREACHABLE
        for step in elems:
            if step > x:
                break  # elements ascend, so the rest are too big as well
            candidate = stamps[x - step]
            if candidate < best:
                best = candidate
        if best != UNREACHABLE:
            stamps[x] = best + 1
    return MinStampTable(basis, bound, tuple(stamps))


def find_generation(
    basis: Basis, x: int, h: int, *, limit: int = DEFAULT_TABLE_LIMIT
) -> Generation:
    """A minimal-weight generation of x using at most h stamps."""
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    table = min_stamp_table(basis, max(x, 1), limit=limit)
    return table.generation(x, h)


# ---------- covers ----------


@dataclass(frozen=True)
class CoverRow:
    """Cover at one budget; saturated means it reached h * top."""

    h: int
    cover: int
    saturated: bool


@dataclass(frozen=True)
class CoverProfile:
    """Covers for every budget 1..h_max of one basis."""

    basis: Basis
    rows: tuple[CoverRow, ...]

    @property
    def h_max(self) -> int:
        return len(self.rows)

    def cover(self, h: int) -> int:
        if not 1 <= h <= len(self.rows):
            raise ValueError(f"h must be in 1..{len(self.rows)}, got {h}")
        return self.rows[h - 1].cover


def _cover_bound(basis: Basis, h: int) -> int:
    """Table bound h * top + 1: the first value that cannot be covered."""
    bound = h * basis.top + 1
    if bound > MAX_ELEMENT:
        raise OverflowLimitError(
            f"h * top + 1 = {bound} does not fit in 64 bits"
        )
    return bound


def cover(basis: Basis, h: int, *, limit: int = DEFAULT_TABLE_LIMIT) -> int:
    """Largest n with every value 1..n a sum of at most h denominations.

    Always well defined: 1 is in the basis, so n >= h >= 1, and n can
    never exceed h * top.
    """
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    bound = _cover_bound(basis, h)
    stamps = min_stamp_table(basis, bound, limit=limit).min_stamps
    for x in range(1, bound + 1):
        if stamps[x] > h:
            return x - 1
    raise AssertionError("no gap found below h * top + 1")


def cover_profile(
    basis: Basis, h_max: int, *, limit: int = DEFAULT_TABLE_LIMIT
) -> CoverProfile:
    """Covers for all budgets 1..h_max from a single shared table."""
    if h_max < 1:
        raise ValueError(f"h_max must be at least 1, got {h_max}")
    bound = _cover_bound(basis, h_max)
    stamps = min_stamp_table(basis, bound, limit=limit).min_stamps
    top = basis.top
    rows = []
    h = 1
    for x in range(1, bound + 1):
        while h <= h_max and stamps[x] > h:
            n = x - 1
            rows.append(CoverRow(h, n, n == h * top))
            h += 1
        if h > h_max:
            break
    if len(rows) != h_max:
        raise AssertionError("cover sweep ended before reaching h_max")
    return CoverProfile(basis, tuple(rows))


def brute_force_cover(
    basis: Basis, h: int, *, ceiling: int = DEFAULT_ENUMERATION_CEILING
) -> int:
    """Cover by exhaustive enumeration of all multisets of size <= h.

    Independent of the table recurrence on purpose: it exists to
    cross-check it.  Raises TooLargeError when the multiset count
    C(h + k, k) exceeds ``ceiling``.
    """
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    count = math.comb(h + basis.k, basis.k)
    if count > ceiling:
        raise TooLargeError(
            f"{count} coefficient vectors exceed the ceiling {ceiling}"
        )
    reachable = {0}
    for size in range(1, h + 1):
        for combo in itertools.combinations_with_replacement(basis.elements, size):
            reachable.add(sum(combo))
    n = 0
    while n + 1 in reachable:
        n += 1
    return n
