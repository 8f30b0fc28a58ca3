"""Supersymmetric numerical semigroups generated by the pairwise products ab, ac, bc.

For pairwise coprime 2 <= a < b < c the semigroup S = <ab, ac, bc> has closed
forms for its Frobenius number and genus, a unique-factorization zone below
abc, and a residue-triple description of its elements congruent to 1 mod abc.
The count rho of gaps above abc is computed along two independent routes (a
direct member count and an exact lattice-point count of a rational simplex)
that must agree.  Everything is exact: integers and Fractions only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from cuspsemi.semigroup import NumericalSemigroup
from cuspsemi.series import DEFAULT_PRIME, PrecisionTooSmallError, RamificationProfile, start_precision, value_semigroup


class MethodMismatchError(RuntimeError):
    """Two supposedly equivalent computations disagreed; an implementation bug."""


class NotApplicableError(ValueError):
    """The requested construction needs abc + 1 to be a gap, and it is not."""


@dataclass(frozen=True)
class SupersymTriple:
    """Pairwise coprime integers 2 <= a < b < c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if not 2 <= a < b < c:
            raise ValueError("need 2 <= a < b < c")
        if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
            raise ValueError("a, b, c must be pairwise coprime")

    @property
    def pairwise_products(self) -> tuple[int, int, int]:
        return (self.a * self.b, self.a * self.c, self.b * self.c)

    @property
    def product(self) -> int:
        return self.a * self.b * self.c


def coprime_triples(max_abc: int, min_a: int = 2) -> Iterator[tuple[int, int, int]]:
    """All pairwise coprime triples min_a <= a < b < c with abc <= max_abc, ascending."""
    a = min_a
    while a * (a + 1) * (a + 2) <= max_abc:
        b = a + 1
        while a * b * (b + 1) <= max_abc:
            if gcd(a, b) == 1:
                for c in range(b + 1, max_abc // (a * b) + 1):
                    if gcd(a, c) == 1 and gcd(b, c) == 1:
                        yield (a, b, c)
            b += 1
        a += 1


def supersym_semigroup(a: int, b: int, c: int) -> NumericalSemigroup:
    """The semigroup <ab, ac, bc>, sieve-backed."""
    t = SupersymTriple(a, b, c)
    return NumericalSemigroup(t.pairwise_products)


def frobenius_formula(a: int, b: int, c: int) -> int:
    """Closed form 2abc - (ab + ac + bc) for the Frobenius number of <ab, ac, bc>."""
    SupersymTriple(a, b, c)
    return 2 * a * b * c - (a * b + a * c + b * c)


def genus_formula(a: int, b: int, c: int) -> int:
    """Closed form (F + 1) / 2 for the genus; the semigroup is symmetric."""
    f = frobenius_formula(a, b, c)
    assert (f + 1) % 2 == 0
    return (f + 1) // 2


@dataclass(frozen=True)
class SimplexSpec:
    """Right simplex x/alpha + y/beta + z/gamma <= 1 with positive rational intercepts."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))
        if self.alpha <= 0 or self.beta <= 0 or self.gamma <= 0:
            raise ValueError("intercepts must be positive")


def lattice_count(spec: SimplexSpec) -> int:
    """Exact number of nonnegative integer points in the simplex.

    The condition is cross-multiplied once so the scan runs on plain integers.
    """
    pa, qa = spec.alpha.numerator, spec.alpha.denominator
    pb, qb = spec.beta.numerator, spec.beta.denominator
    pc, qc = spec.gamma.numerator, spec.gamma.denominator
    wx = qa * pb * pc
    wy = qb * pa * pc
    wz = qc * pa * pb
    total = pa * pb * pc
    count = 0
    x = 0
    while wx * x <= total:
        rx = total - wx * x
        y = 0
        while wy * y <= rx:
            count += (rx - wy * y) // wz + 1
            y += 1
        x += 1
    return count


def rho_simplex(a: int, b: int, c: int) -> SimplexSpec | None:
    """Simplex whose lattice points index the members of <ab, ac, bc> below abc - (ab+ac+bc).

    Returns None when that threshold is not positive (the simplex is empty).
    """
    t = SupersymTriple(a, b, c)
    d = t.product - sum(t.pairwise_products)
    if d <= 0:
        return None
    return SimplexSpec(Fraction(d, a * b), Fraction(d, a * c), Fraction(d, b * c))


def rho(a: int, b: int, c: int) -> int:
    """Number of gaps of <ab, ac, bc> exceeding abc, computed two independent ways.

    By symmetry this equals the number of members below abc - (ab + ac + bc),
    which is counted both from the membership sieve and as a lattice-point
    count; disagreement raises :class:`MethodMismatchError`.
    """
    t = SupersymTriple(a, b, c)
    threshold = t.product - sum(t.pairwise_products)
    by_sieve = supersym_semigroup(a, b, c).member_count_below(threshold)
    spec = rho_simplex(a, b, c)
    by_lattice = 0 if spec is None else lattice_count(spec)
    if by_sieve != by_lattice:
        raise MethodMismatchError(
            f"rho({a},{b},{c}): sieve count {by_sieve} != lattice count {by_lattice}"
        )
    return by_sieve


def eta(spec: SimplexSpec) -> Fraction:
    """The correction term 1/alpha + 1/beta + 1/gamma."""
    return 1 / spec.alpha + 1 / spec.beta + 1 / spec.gamma


def yz_hypothesis(spec: SimplexSpec) -> bool:
    """True when alpha >= beta >= gamma >= 1, the hypothesis of the Yau-Zhang bounds."""
    return spec.alpha >= spec.beta >= spec.gamma >= 1


def yz_weak_bound(spec: SimplexSpec) -> Fraction:
    """Yau-Zhang bound (alpha*beta*gamma / 6) * (1 + eta)**3 for the lattice count."""
    e = eta(spec)
    return spec.alpha * spec.beta * spec.gamma * (1 + e) ** 3 / 6


def yz_strong_bound(spec: SimplexSpec) -> Fraction:
    """Sharper Yau-Zhang bound, the product of (intercept*(1+eta) - 1) over 6."""
    e = eta(spec)
    return (
        (spec.alpha * (1 + e) - 1)
        * (spec.beta * (1 + e) - 1)
        * (spec.gamma * (1 + e) - 1)
        / 6
    )


def abc_normal_form(a: int, b: int, c: int, n: int) -> tuple[int, int, int]:
    """Unique representation n = x*ab + y*ac + z*bc with 0 <= x < c, 0 <= y < b, z integer.

    n is a member of <ab, ac, bc> exactly when z >= 0.
    """
    t = SupersymTriple(a, b, c)
    x = n * pow(a * b, -1, c) % c
    y = n * pow(a * c, -1, b) % b
    z, r = divmod(n - x * a * b - y * a * c, b * c)
    assert r == 0, "Chinese-remainder reduction must divide exactly"
    return (x, y, z)


def abc_member(a: int, b: int, c: int, n: int) -> bool:
    """Membership of n in <ab, ac, bc> via the normal form."""
    if n < 0:
        return False
    return abc_normal_form(a, b, c, n)[2] >= 0


def abc_all_factorizations(a: int, b: int, c: int, n: int) -> tuple[tuple[int, int, int], ...]:
    """All nonnegative (x, y, z) with x*ab + y*ac + z*bc = n, in ascending order.

    Every solution is the normal form shifted by (k1*c, k2*b, k3*a) with
    k1 + k2 + k3 = 0, and nonnegativity confines the shifts to a finite box.
    """
    if n < 0:
        return ()
    x0, y0, z0 = abc_normal_form(a, b, c, n)
    ab, ac = a * b, a * c
    out = []
    k1 = 0
    while (x0 + k1 * c) * ab <= n:
        x = x0 + k1 * c
        rem = n - x * ab
        k2 = 0
        while (y0 + k2 * b) * ac <= rem:
            z = z0 - (k1 + k2) * a
            if z >= 0:
                out.append((x, y0 + k2 * b, z))
            k2 += 1
        k1 += 1
    return tuple(sorted(out))


@dataclass(frozen=True)
class ResidueTriple:
    """Inverses alpha_hat = (bc)^-1 mod a, beta_hat = (ac)^-1 mod b, gamma_hat = (ab)^-1 mod c."""

    alpha_hat: int
    beta_hat: int
    gamma_hat: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.alpha_hat, self.beta_hat, self.gamma_hat))


def residue_triple(a: int, b: int, c: int) -> ResidueTriple:
    """The canonical inverse triple; each component lies in [1, modulus - 1]."""
    SupersymTriple(a, b, c)
    return ResidueTriple(
        alpha_hat=pow(b * c, -1, a),
        beta_hat=pow(a * c, -1, b),
        gamma_hat=pow(a * b, -1, c),
    )


def min_congruent_one(a: int, b: int, c: int) -> int:
    """Least member of <ab, ac, bc> congruent to 1 mod abc; always abc+1 or 2abc+1."""
    r = residue_triple(a, b, c)
    value = r.gamma_hat * a * b + r.beta_hat * a * c + r.alpha_hat * b * c
    abc = a * b * c
    assert value in (abc + 1, 2 * abc + 1)
    return value


def abc_plus_one_is_member(a: int, b: int, c: int) -> bool:
    """True when abc + 1 already lies in <ab, ac, bc>."""
    return min_congruent_one(a, b, c) == a * b * c + 1


def s_prime(a: int, b: int, c: int) -> NumericalSemigroup:
    """The extension <ab, ac, bc, abc + 1>; only defined when abc + 1 is a gap."""
    if abc_plus_one_is_member(a, b, c):
        raise NotApplicableError(f"abc + 1 is already a member for ({a},{b},{c})")
    t = SupersymTriple(a, b, c)
    return NumericalSemigroup(t.pairwise_products + (t.product + 1,))


def genus_s_prime(a: int, b: int, c: int) -> int:
    """Closed-form genus of the extension by abc + 1."""
    if abc_plus_one_is_member(a, b, c):
        raise NotApplicableError(f"abc + 1 is already a member for ({a},{b},{c})")
    r = residue_triple(a, b, c)
    return genus_formula(a, b, c) - (a - r.alpha_hat) * (b - r.beta_hat) * (c - r.gamma_hat)


def frobenius_s_prime(a: int, b: int, c: int) -> int:
    """Closed-form Frobenius number of the extension by abc + 1."""
    if abc_plus_one_is_member(a, b, c):
        raise NotApplicableError(f"abc + 1 is already a member for ({a},{b},{c})")
    r = residue_triple(a, b, c)
    ab, ac, bc = a * b, a * c, b * c
    candidates = (
        (r.gamma_hat - 1) * ab + (b - 1) * ac - bc,
        (c - 1) * ab + (r.beta_hat - 1) * ac - bc,
        (c - 1) * ab + (b - 1) * ac + (r.alpha_hat - a - 1) * bc,
    )
    return max(candidates)


def surrogate_generic_genus(a: int, b: int, c: int) -> int:
    """Gap count of <ab, ac, bc> below abc, a lower bound for the generic-cusp genus."""
    t = SupersymTriple(a, b, c)
    s = supersym_semigroup(a, b, c)
    return t.product - s.member_count_below(t.product)


def generic_contains_abc_plus(
    a: int, b: int, c: int, prime: int = DEFAULT_PRIME, seed: int = 0
) -> tuple[bool, bool]:
    """Whether a generic cusp with profile (ab, ac, bc) achieves abc+1 and abc+2.

    One seeded Monte-Carlo run; the horizon is grown until the conductor is
    captured and both targets are below it or achieved.
    """
    t = SupersymTriple(a, b, c)
    profile = RamificationProfile(t.pairwise_products)
    target = t.product
    precision = max(start_precision(profile), 2 * target + 2)
    for _ in range(8):
        try:
            achieved = value_semigroup(profile, precision, prime, seed)
            break
        except PrecisionTooSmallError:
            precision *= 2
    else:
        raise PrecisionTooSmallError(f"conductor not captured for {profile.orders}")
    members = set(achieved)
    return (target + 1 in members, target + 2 in members)
