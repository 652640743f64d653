"""Candidate Hilbert functions: validation, differences, and enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .binomials import macaulay_bound


def growth_violation(seq: Sequence[int]) -> Optional[int]:
    """Index of the first entry breaking the O-sequence conditions, or None.

    A sequence qualifies when it starts with 1, has no negative entries, and
    every step from degree i >= 1 respects the Macaulay growth bound.  The
    first entry is index 0; a bad leading entry reports index 0.
    """
    if not seq or seq[0] != 1:
        return 0
    for i in range(1, len(seq)):
        if seq[i] < 0:
            return i
        if i >= 2 and seq[i] > macaulay_bound(seq[i - 1], i - 1):
            return i
    return None


@dataclass(frozen=True)
class HVector:
    """A finite sequence of non-negative integers (h_0, h_1, ..., h_s).

    Trailing zeros are trimmed on construction, so the socle degree is always
    the last index.  Construction does not require the sequence to be an
    O-sequence; use :meth:`o_sequence_violation` / :meth:`is_o_sequence`.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise ValueError("h-vector must have at least one entry")
        if any(e < 0 for e in entries):
            raise ValueError("h-vector entries must be non-negative")
        while len(entries) > 1 and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "HVector":
        """Parse a comma-separated list of decimal integers, e.g. ``"1,3,6,10"``."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse h-vector {text!r}: {exc}") from None

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def codim3(self) -> bool:
        return len(self.entries) > 1 and self.entries[1] == 3

    def at(self, t: int) -> int:
        """Entry in degree t, reading 0 beyond the socle degree."""
        if t < 0:
            raise IndexError("degree must be non-negative")
        return self.entries[t] if t < len(self.entries) else 0

    def first_difference(self) -> tuple[int, ...]:
        """(h_0, h_1 - h_0, h_2 - h_1, ...); entries may be negative."""
        return (self.entries[0],) + tuple(
            self.entries[i] - self.entries[i - 1] for i in range(1, len(self.entries))
        )

    def o_sequence_violation(self) -> Optional[int]:
        return growth_violation(self.entries)

    def is_o_sequence(self) -> bool:
        return self.o_sequence_violation() is None

    def is_differentiable(self) -> bool:
        """True when the first difference is itself an O-sequence."""
        return growth_violation(self.first_difference()) is None

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, t: int) -> int:
        return self.entries[t]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


def enumerate_o_sequences(s: int, cap: int) -> Iterator[HVector]:
    """All O-sequences with h_1 = 3, socle degree exactly s, entries <= cap.

    Yields in ascending lexicographic order of entries.  Socle degree exactly
    s forces every entry through degree s to be positive, so the search walks
    values 1..min(cap, growth bound) at each level.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if cap < 3:
        raise ValueError("cap must be at least 3")

    def extend(prefix: list[int]) -> Iterator[HVector]:
        i = len(prefix) - 1
        if i == s:
            yield HVector(tuple(prefix))
            return
        top = min(cap, macaulay_bound(prefix[-1], i))
        for value in range(1, top + 1):
            prefix.append(value)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([1, 3])
