"""Exact numerical semigroups: membership sieve, classical invariants, factorizations.

A numerical semigroup is an additively closed subset of the nonnegative integers
that contains 0 and has a finite complement (the gaps).  Everything here is exact
integer arithmetic; membership below the table extent is stored as a bitmask and
every integer at or above the conductor is a member by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


class GcdNotOneError(ValueError):
    """Raised when a generating set has gcd != 1, so the complement would be infinite."""


@dataclass(frozen=True)
class AperyTable:
    """Least semigroup members in each residue class modulo ``modulus``.

    ``entries[i]`` is the least member congruent to ``i``; ``entries[0] == 0``.
    """

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1 or len(self.entries) != self.modulus:
            raise ValueError("need exactly one entry per residue class")
        if self.entries[0] != 0:
            raise ValueError("the class of 0 must have least member 0")
        for i, e in enumerate(self.entries):
            if e % self.modulus != i:
                raise ValueError(f"entry {e} is not congruent to {i} mod {self.modulus}")

    def gap_count(self) -> int:
        """Number of gaps, summed per residue class as (entry - residue) / modulus."""
        n = self.modulus
        return sum((e - i) // n for i, e in enumerate(self.entries))


def _reach(gens: tuple[int, ...], limit: int) -> int:
    """Bitmask of the additive monoid generated by ``gens`` over [0, limit)."""
    mask = (1 << limit) - 1
    bits = 1
    for g in gens:
        if g >= limit:
            continue
        prev = 0
        while bits != prev:
            prev = bits
            bits = (bits | (bits << g)) & mask
    return bits


def _first_run_start(bits: int, run_length: int) -> int | None:
    """Index of the first run of ``run_length`` consecutive set bits, if any."""
    y = bits
    for _ in range(run_length - 1):
        y &= y >> 1
        if not y:
            return None
    if not y:
        return None
    return (y & -y).bit_length() - 1


def monoid_members(gens: Iterable[int], limit: int) -> set[int]:
    """Members below ``limit`` of the additive monoid generated by ``gens``.

    Unlike :class:`NumericalSemigroup` this places no gcd restriction on the
    generators, so it also serves profiles whose orders share a common factor.
    """
    gs = tuple(sorted({int(g) for g in gens if g > 0}))
    bits = _reach(gs, limit)
    return {i for i in range(limit) if bits >> i & 1}


class NumericalSemigroup:
    """Numerical semigroup generated by positive integers with gcd 1.

    The conductor is detected as the first index starting a run of
    ``min(generators)`` consecutive members: once that many consecutive elements
    are present, adding the multiplicity repeatedly fills in everything beyond.
    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("generators", "conductor", "_bits", "_extent")

    def __init__(self, generators: Iterable[int]) -> None:
        gens = tuple(sorted({int(g) for g in generators}))
        if not gens:
            raise ValueError("at least one generator is required")
        if gens[0] < 1:
            raise ValueError("generators must be positive")
        g = 0
        for n in gens:
            g = gcd(g, n)
        if g != 1:
            raise GcdNotOneError(f"gcd of generators {gens} is {g}, not 1")

        mult = gens[0]
        top = gens[-1]
        # Schur bound: the Frobenius number is below mult * top, so the search
        # is guaranteed to terminate within a few doublings.
        cap = mult * top + top + mult + 2
        limit = 2 * top + 2
        while True:
            bits = _reach(gens, limit)
            start = _first_run_start(bits, mult)
            if start is None:
                limit *= 2
                if limit > 4 * cap:
                    raise RuntimeError("conductor search exceeded the Schur bound")
                continue
            extent = start + top
            if extent <= limit:
                break
            limit = extent

        self.generators = gens
        self.conductor = start
        self._extent = extent
        self._bits = bits & ((1 << extent) - 1)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 when the semigroup is all of N."""
        return self.conductor - 1

    @property
    def genus(self) -> int:
        """Number of gaps."""
        return self.conductor - (self._bits & ((1 << self.conductor) - 1)).bit_count()

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self._extent:
            return True
        return bool(self._bits >> x & 1)

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def gaps(self) -> list[int]:
        """All gaps, in increasing order."""
        bits = self._bits
        return [x for x in range(self.conductor) if not bits >> x & 1]

    def gaps_above(self, t: int) -> int:
        """Number of gaps strictly greater than ``t``."""
        lo = max(t + 1, 0)
        if lo >= self.conductor:
            return 0
        width = self.conductor - lo
        return width - ((self._bits >> lo) & ((1 << width) - 1)).bit_count()

    def member_count_below(self, t: int) -> int:
        """Number of members in [0, t)."""
        if t <= 0:
            return 0
        if t <= self._extent:
            return (self._bits & ((1 << t) - 1)).bit_count()
        return self._bits.bit_count() + (t - self._extent)

    def is_symmetric(self) -> bool:
        """True when exactly one of x, F - x is a member for every 0 <= x <= F."""
        if self.conductor == 0:
            raise ValueError("symmetry is undefined for the full semigroup N")
        width = self.conductor  # F + 1
        low = self._bits & ((1 << width) - 1)
        rev = int(format(low, f"0{width}b")[::-1], 2)
        return low ^ rev == (1 << width) - 1

    def apery(self) -> AperyTable:
        """Apery table with respect to the multiplicity."""
        n = self.multiplicity
        entries = []
        for i in range(n):
            x = i
            while not self.contains(x):
                x += n
            entries.append(x)
        return AperyTable(n, tuple(entries))

    def factorizations(self, s: int) -> list[tuple[int, ...]]:
        """All nonnegative coefficient vectors over the generators summing to ``s``.

        Returned in lexicographic order; empty exactly when ``s`` is not a member.
        """
        if s < 0:
            raise ValueError("element must be nonnegative")
        gens = self.generators
        k = len(gens)
        out: list[tuple[int, ...]] = []
        vec = [0] * k

        def descend(i: int, rem: int) -> None:
            if i == k - 1:
                q, r = divmod(rem, gens[i])
                if r == 0:
                    vec[i] = q
                    out.append(tuple(vec))
                return
            g = gens[i]
            for a in range(rem // g + 1):
                vec[i] = a
                descend(i + 1, rem - a * g)

        descend(0, s)
        return out

    def betti_elements(self, bound: int) -> list[int]:
        """Members s <= bound whose factorization graph is disconnected.

        Vertices are the factorizations of s; edges join factorizations whose
        supports share a generator.  An empty or singleton factorization set
        counts as connected.  Connectivity is decided by merging the supports,
        which yields exactly the connected components of the graph.
        """
        out = []
        for s in range(1, bound + 1):
            if not self.contains(s):
                continue
            facs = self.factorizations(s)
            if len(facs) < 2:
                continue
            comps: list[set[int]] = []
            for fac in facs:
                new = {i for i, e in enumerate(fac) if e}
                rest = []
                for comp in comps:
                    if comp & new:
                        new |= comp
                    else:
                        rest.append(comp)
                rest.append(new)
                comps = rest
            if len(comps) > 1:
                out.append(s)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and (
            self._bits & ((1 << self.conductor) - 1)
            == other._bits & ((1 << other.conductor) - 1)
        )

    def __hash__(self) -> int:
        return hash((self.conductor, self._bits & ((1 << self.conductor) - 1)))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"
