"""Monte-Carlo value semigroups of generic space-curve cusps.

A ramification profile (r1 < ... < rn) fixes the vanishing orders of the
coordinate series of a cusp parameterization.  Genericity is emulated by
drawing the higher coefficients uniformly from a large prime field: each
coordinate is a truncated power series with leading coefficient 1.  The set of
valuations achieved by the generated algebra below a precision horizon equals
the pivot-degree set of the echelon form of the monomial coefficient matrix,
with rows reduced in increasing valuation so a single sweep suffices.  The
result is exact for the drawn instance; agreement across independent seeds is
the evidence that the instance is generic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Sequence

from cuspsemi.semigroup import NumericalSemigroup

DEFAULT_PRIME = (1 << 61) - 1  # Mersenne prime, 61 bits
_MIN_PRIME = 1 << 30


class PrecisionTooSmallError(ValueError):
    """The precision horizon is too small to capture the conductor."""


class SeedDisagreementError(RuntimeError):
    """Independent random trials produced different value semigroups."""


@dataclass(frozen=True)
class RamificationProfile:
    """Strictly increasing vanishing orders (r1, ..., rn), with r1 >= 2 and n >= 2."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(r) for r in self.orders)
        object.__setattr__(self, "orders", orders)
        if len(orders) < 2:
            raise ValueError("a profile needs at least two orders")
        if orders[0] < 2:
            raise ValueError("the smallest order must be at least 2")
        if any(b <= a for a, b in zip(orders, orders[1:])):
            raise ValueError("orders must be strictly increasing")

    @classmethod
    def of(cls, value: "RamificationProfile | Sequence[int]") -> "RamificationProfile":
        if isinstance(value, cls):
            return value
        return cls(tuple(value))

    def __iter__(self):
        return iter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series over F_p known on degrees [valuation, precision).

    ``coefficients[k]`` is the coefficient of t**(valuation + k); the leading
    coefficient is nonzero.
    """

    valuation: int
    coefficients: tuple[int, ...]
    precision: int
    prime: int

    def __post_init__(self) -> None:
        if not 0 < self.valuation < self.precision:
            raise ValueError("need 0 < valuation < precision")
        if len(self.coefficients) != self.precision - self.valuation:
            raise ValueError("coefficient count must equal precision - valuation")
        if self.coefficients[0] % self.prime == 0:
            raise ValueError("leading coefficient must be nonzero")
        if any(not 0 <= x < self.prime for x in self.coefficients):
            raise ValueError("coefficients must be reduced mod the prime")

    def coefficient(self, degree: int) -> int:
        """Coefficient of t**degree (0 below the valuation; degree < precision)."""
        if degree >= self.precision:
            raise ValueError("degree is beyond the precision horizon")
        if degree < self.valuation:
            return 0
        return self.coefficients[degree - self.valuation]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.precision != other.precision or self.prime != other.prime:
            raise ValueError("series must share precision and prime")
        p = self.prime
        v = self.valuation + other.valuation
        if v >= self.precision:
            raise PrecisionTooSmallError(
                f"product valuation {v} is at or beyond precision {self.precision}"
            )
        n = self.precision - v
        ca, cb = self.coefficients, other.coefficients
        out = [0] * n
        for i, ai in enumerate(ca):
            if not ai or i >= n:
                continue
            m = min(len(cb), n - i)
            for j in range(m):
                out[i + j] += ai * cb[j]
        return TruncatedSeries(v, tuple(x % p for x in out), self.precision, p)


def _draw_series(rng: random.Random, valuation: int, precision: int, prime: int) -> TruncatedSeries:
    coeffs = [1] + [rng.randrange(prime) for _ in range(precision - valuation - 1)]
    return TruncatedSeries(valuation, tuple(coeffs), precision, prime)


def random_series(valuation: int, precision: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> TruncatedSeries:
    """Random truncated series: leading coefficient 1, higher ones uniform in F_p."""
    if prime <= _MIN_PRIME:
        raise ValueError("prime must exceed 2**30")
    if valuation < 1:
        raise ValueError("valuation must be positive")
    if valuation >= precision:
        raise PrecisionTooSmallError("precision must exceed the valuation")
    return _draw_series(random.Random(seed), valuation, precision, prime)


def _exponents_below(orders: tuple[int, ...], precision: int) -> list[tuple[int, ...]]:
    """Nonzero exponent tuples with weighted degree below ``precision``, sorted by degree."""
    n = len(orders)
    found: list[tuple[int, tuple[int, ...]]] = []
    vec = [0] * n

    def descend(i: int, deg: int) -> None:
        if i == n:
            if deg:
                found.append((deg, tuple(vec)))
            return
        r = orders[i]
        e = 0
        while deg + e * r < precision:
            vec[i] = e
            descend(i + 1, deg + e * r)
            e += 1
        vec[i] = 0

    descend(0, 0)
    found.sort()
    return [exp for _, exp in found]


def _insert_row(pivots: dict[int, list[int]], valuation: int, coeffs: list[int], prime: int) -> int | None:
    """Reduce a row against the pivot rows; record a new pivot at its leading degree.

    ``coeffs`` covers degrees [valuation, precision).  Returns the new pivot
    degree, or None when the row reduces to zero below the horizon.
    """
    i = 0
    length = len(coeffs)
    while True:
        while i < length and coeffs[i] == 0:
            i += 1
        if i == length:
            return None
        degree = valuation + i
        pivot = pivots.get(degree)
        if pivot is None:
            inv = pow(coeffs[i], -1, prime)
            pivots[degree] = [(inv * x) % prime for x in coeffs[i:]]
            return degree
        f = coeffs[i]
        for k, pk in enumerate(pivot):
            if pk:
                coeffs[i + k] = (coeffs[i + k] - f * pk) % prime


def detect_conductor(achieved: Sequence[int], run_length: int) -> int | None:
    """Start of the first run of ``run_length`` consecutive values, if present."""
    run = 0
    prev: int | None = None
    for x in achieved:
        run = run + 1 if prev is not None and x == prev + 1 else 1
        if run == run_length:
            return x - run_length + 1
        prev = x
    return None


def value_semigroup(
    profile: RamificationProfile | Sequence[int],
    precision: int,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
) -> tuple[int, ...]:
    """Achieved valuations in [0, precision) for one random instance of the profile.

    Every monomial in the coordinate series with weighted degree below
    ``precision`` contributes a coefficient row; the pivot degrees of the
    echelon form, together with 0, are exactly the valuations achieved by the
    algebra below the horizon.  Raises :class:`PrecisionTooSmallError` when no
    run of r1 consecutive achieved values fits below the horizon, since the
    conductor is then not captured.
    """
    prof = RamificationProfile.of(profile)
    orders = prof.orders
    if prime <= _MIN_PRIME:
        raise ValueError("prime must exceed 2**30")
    if precision <= orders[-1]:
        raise PrecisionTooSmallError("precision must exceed every order in the profile")

    rng = random.Random(seed)
    base = [_draw_series(rng, r, precision, prime) for r in orders]

    memo: dict[tuple[int, ...], TruncatedSeries] = {}
    for i in range(len(orders)):
        unit = tuple(1 if j == i else 0 for j in range(len(orders)))
        memo[unit] = base[i]

    pivots: dict[int, list[int]] = {}
    for exp in _exponents_below(orders, precision):
        series = memo.get(exp)
        if series is None:
            j = next(idx for idx, e in enumerate(exp) if e)
            parent = exp[:j] + (exp[j] - 1,) + exp[j + 1 :]
            series = memo[parent] * base[j]
            memo[exp] = series
        _insert_row(pivots, series.valuation, list(series.coefficients), prime)

    achieved = sorted({0, *pivots})
    if detect_conductor(achieved, orders[0]) is None:
        raise PrecisionTooSmallError(
            f"no run of {orders[0]} consecutive achieved valuations below {precision}"
        )
    return tuple(achieved)


def start_precision(profile: RamificationProfile | Sequence[int]) -> int:
    """Initial precision horizon: twice the conductor scale of the profile's monoid.

    For orders with gcd d, the relevant scale is d times the conductor of the
    reduced semigroup generated by orders/d; for d = 1 this is twice the
    conductor of the generated numerical semigroup, plus a small margin.
    """
    orders = RamificationProfile.of(profile).orders
    d = 0
    for r in orders:
        d = gcd(d, r)
    reduced = NumericalSemigroup(r // d for r in orders)
    return max(2 * d * (reduced.frobenius + 1) + 2, 2 * orders[-1] + 2)


@dataclass(frozen=True)
class EmpiricalSemigroup:
    """Value semigroup of a profile as agreed by independent random trials.

    ``achieved`` lists the members below ``conductor``; every integer at or
    above the conductor is a member.
    """

    profile: RamificationProfile
    achieved: tuple[int, ...]
    conductor: int
    seeds_used: tuple[int, ...]
    prime: int

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.achieved)

    @property
    def genus(self) -> int:
        return self.conductor - len(self.achieved)

    @property
    def gaps(self) -> tuple[int, ...]:
        members = self._member_set
        return tuple(x for x in range(self.conductor) if x not in members)

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or x in self._member_set

    def __contains__(self, x: int) -> bool:
        return self.contains(x)


def empirical_generic_semigroup(
    profile: RamificationProfile | Sequence[int],
    trials: int = 3,
    prime: int = DEFAULT_PRIME,
    base_seed: int = 0,
    max_doublings: int = 8,
) -> EmpiricalSemigroup:
    """Run ``trials`` independent seeds and require bitwise agreement.

    Each trial starts at :func:`start_precision` and doubles the horizon until
    the conductor is captured.  All trials must agree on the conductor and on
    the achieved set below it, otherwise :class:`SeedDisagreementError` is
    raised.
    """
    prof = RamificationProfile.of(profile)
    if trials < 3:
        raise ValueError("at least 3 trials are required for agreement evidence")
    start = start_precision(prof)
    results: list[tuple[tuple[int, ...], int]] = []
    for t in range(trials):
        seed = base_seed + t
        precision = start
        achieved: tuple[int, ...] | None = None
        for _ in range(max_doublings + 1):
            try:
                achieved = value_semigroup(prof, precision, prime, seed)
                break
            except PrecisionTooSmallError:
                precision *= 2
        if achieved is None:
            raise PrecisionTooSmallError(
                f"conductor not captured for {prof.orders} after {max_doublings} doublings"
            )
        conductor = detect_conductor(achieved, prof.orders[0])
        assert conductor is not None
        members = set(achieved)
        if any(x not in members for x in range(conductor, precision)):
            raise RuntimeError("achieved set is not closed above its conductor")
        results.append((tuple(x for x in achieved if x < conductor), conductor))

    if any(r != results[0] for r in results[1:]):
        raise SeedDisagreementError(
            f"trials disagree for profile {prof.orders} with base seed {base_seed}"
        )
    below, conductor = results[0]
    emp = EmpiricalSemigroup(
        profile=prof,
        achieved=below,
        conductor=conductor,
        seeds_used=tuple(range(base_seed, base_seed + trials)),
        prime=prime,
    )
    members = set(below)
    if 0 not in members:
        raise RuntimeError("achieved set must contain 0")
    if any(not emp.contains(r) for r in prof.orders):
        raise RuntimeError("achieved set must contain every profile order")
    for x in below:
        for y in below:
            if x + y < conductor and x + y not in members:
                raise RuntimeError("achieved set is not additively closed")
    return emp


def combination_valuation_probe(
    series_list: Sequence[TruncatedSeries], coefficients: Sequence[int]
) -> int | None:
    """Valuation of a linear combination, or None when it vanishes below precision.

    All series must share the precision horizon and prime; the coefficients
    must be nonzero mod p.
    """
    if not series_list or len(series_list) != len(coefficients):
        raise ValueError("need one nonzero coefficient per series")
    precision = series_list[0].precision
    prime = series_list[0].prime
    if any(s.precision != precision or s.prime != prime for s in series_list):
        raise ValueError("series must share precision and prime")
    coeffs = [a % prime for a in coefficients]
    if any(a == 0 for a in coeffs):
        raise ValueError("coefficients must be nonzero mod the prime")

    base = min(s.valuation for s in series_list)
    acc = [0] * (precision - base)
    for s, a in zip(series_list, coeffs):
        off = s.valuation - base
        for i, c in enumerate(s.coefficients):
            if c:
                acc[off + i] = (acc[off + i] + a * c) % prime
    for i, x in enumerate(acc):
        if x:
            return base + i
    return None
