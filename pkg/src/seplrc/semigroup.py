"""Two-generator numerical semigroups <a, b> and their counting functions."""

from __future__ import annotations

import math
from functools import cached_property


class NumericalSemigroup:
    """The semigroup generated by two coprime positive integers.

    Membership below the conductor is answered from a precomputed table;
    everything at or above the conductor is a member.
    """

    def __init__(self, a: int, b: int):
        if a < 1 or b < 1:
            raise ValueError("generators must be positive")
        if math.gcd(a, b) != 1:
            raise ValueError(f"generators {a}, {b} are not coprime")
        self.a = a
        self.b = b
        self.genus = (a - 1) * (b - 1) // 2
        self.conductor = (a - 1) * (b - 1)
        table = [False] * (self.conductor + 1)
        for i in range(0, self.conductor + 1, a):
            for n in range(i, self.conductor + 1, b):
                table[n] = True
        self._table = table

    def __repr__(self):
        return f"<{self.a},{self.b}>"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and {self.a, self.b} == {other.a, other.b}

    def __hash__(self):
        return hash(frozenset((self.a, self.b)))

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self._table[n]

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(self.conductor) if not self._table[n])

    @cached_property
    def _small_members(self) -> tuple[int, ...]:
        return tuple(n for n in range(self.conductor) if self._table[n])

    def element_at(self, t: int) -> int:
        """h_t, the t-th smallest member (h_1 = 0)."""
        if t < 1:
            raise ValueError("t must be >= 1")
        small = self._small_members
        if t <= len(small):
            return small[t - 1]
        return self.conductor + (t - 1 - len(small))

    def iota(self, m: int) -> int:
        """Number of members <= m; 0 for negative m."""
        if m < 0:
            return 0
        if m >= self.conductor:
            return m + 1 - self.genus
        return sum(1 for n in self._small_members if n <= m)

    def members(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if self.contains(n)]
