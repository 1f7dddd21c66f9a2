"""Exact coefficient arithmetic for the supported base rings.

The reduction theory in the sibling modules asks more of its coefficients
than plain ring operations: lm-reduction divides with a strictly smaller
remainder, S-polynomials need a positive lcm, and G-polynomials need one
fixed Bezout convention so that every run is reproducible.  Three domains
are supported:

* the integers (a euclidean domain, the main case),
* the rationals (a field, coefficients are ``fractions.Fraction``),
* residue rings Z/mZ for m >= 2 (fields when m is prime).

Residue-class values are always kept as the least non-negative
representative; rationals are reduced with a positive denominator
(``Fraction`` guarantees both).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Coefficient = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------

def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd with a fixed canonical output.

    Returns ``(g, s, t)`` with ``g = gcd(a, b) > 0`` and ``s*a + t*b == g``.
    Among all valid cofactor pairs, ``|s|`` is minimised; on a tie the
    non-negative ``s`` is taken.  Examples::

        ext_gcd(2, 3)  == (1, -1, 1)
        ext_gcd(4, 6)  == (2, -1, 1)
        ext_gcd(5, 0)  == (5, 1, 0)
        ext_gcd(-4, 6) == (2, 1, 1)

    Raises ``ValueError`` if both arguments are zero (the gcd is undefined).
    """
    if a == 0 and b == 0:
        raise ValueError("gcd undefined for (0, 0)")
    if b == 0:
        return abs(a), (1 if a > 0 else -1), 0
    if a == 0:
        return abs(b), 0, (1 if b > 0 else -1)

    # plain iterative extended euclid
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    g, sg = old_r, old_s
    if g < 0:
        g, sg = -g, -sg

    # all solutions: s + k*(b/g); pick the representative of least |s|,
    # ties resolved towards s >= 0
    step = abs(b // g)
    s0 = sg % step
    best = min((s0, s0 - step), key=lambda s_: (abs(s_), s_ < 0))
    t = (g - best * a) // b
    return g, best, t


def lcm_coeff(a: int, b: int) -> int:
    """Positive least common multiple; ``lcm(a,b) * gcd(a,b) == |a*b|``."""
    if a == 0 or b == 0:
        raise ValueError("lcm undefined when an argument is zero")
    return abs(a // math.gcd(a, b) * b)


def _nearest_quotient(cf: int, cg: int) -> tuple[int, int]:
    """Round ``cf/cg`` to the nearest integer, ties towards remainder >= 0."""
    q = cf // cg
    b1 = cf - q * cg
    b2 = b1 - cg
    if abs(b2) < abs(b1) or (abs(b2) == abs(b1) and b2 >= 0):
        return q + 1, b2
    return q, b1


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------

class DomainKind:
    """Tag constants for the three supported coefficient domains."""

    INTEGERS = "Z"
    RATIONALS = "Q"
    RESIDUE = "Zmod"


@dataclass(frozen=True, slots=True)
class Domain:
    """A coefficient domain: Z, Q, or Z/mZ.

    ``modulus`` is ``None`` except for residue rings.  All arithmetic
    returns canonical representatives (see module docstring).
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == DomainKind.RESIDUE:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("residue modulus must be >= 2")
        elif self.modulus is not None:
            raise ValueError("modulus only makes sense for residue domains")

    # -- classification ---------------------------------------------------

    @property
    def is_field(self) -> bool:
        if self.kind == DomainKind.RATIONALS:
            return True
        if self.kind == DomainKind.RESIDUE:
            return _is_prime(self.modulus)  # type: ignore[arg-type]
        return False

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        if self.kind == DomainKind.RESIDUE:
            return f"Domain(Z/{self.modulus})"
        return f"Domain({self.kind})"

    # -- canonical values --------------------------------------------------

    def coerce(self, value: int | Fraction) -> Coefficient:
        """Bring an integer (or Fraction, over Q) into canonical form."""
        if self.kind == DomainKind.RATIONALS:
            return Fraction(value)
        if self.kind == DomainKind.RESIDUE:
            return int(value) % self.modulus  # type: ignore[operator]
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    @property
    def one(self) -> Coefficient:
        return Fraction(1) if self.kind == DomainKind.RATIONALS else 1

    # -- ring operations ---------------------------------------------------

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        c = a + b
        return c % self.modulus if self.kind == DomainKind.RESIDUE else c

    def neg(self, a: Coefficient) -> Coefficient:
        return (-a) % self.modulus if self.kind == DomainKind.RESIDUE else -a

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        c = a * b
        return c % self.modulus if self.kind == DomainKind.RESIDUE else c

    # -- divisibility and reduction ----------------------------------------

    def divides(self, a: Coefficient, b: Coefficient) -> bool:
        """Does ``a`` divide ``b`` in this domain?  ``a`` must be nonzero."""
        if self.kind == DomainKind.INTEGERS:
            return b % a == 0
        if self.kind == DomainKind.RATIONALS:
            return True
        g = math.gcd(int(a), self.modulus)  # type: ignore[arg-type]
        return int(b) % g == 0

    def exact_div(self, b: Coefficient, a: Coefficient) -> Coefficient:
        """Some ``q`` with ``q*a == b``; caller guarantees divisibility."""
        if self.kind == DomainKind.INTEGERS:
            return b // a
        if self.kind == DomainKind.RATIONALS:
            return Fraction(b) / a
        m = self.modulus
        g = math.gcd(int(a), m)  # type: ignore[arg-type]
        return (int(b) // g) * pow(int(a) // g, -1, m // g) % (m // g)

    def reduce_quotient(
        self, cf: Coefficient, cg: Coefficient
    ) -> tuple[Coefficient, Coefficient] | None:
        """Division step used by lm-reduction.

        Finds ``(a, b)`` with ``cf == a*cg + b`` and ``a != 0``, or ``None``
        when no useful step exists.  Over Z the quotient is rounded to the
        nearest integer and the remainder lands in the canonical window
        ``(-|cg|/2, |cg|/2]`` — in particular a borderline negative
        remainder steps to its positive representative, so fully reduced
        coefficients are unique per residue class.  Over fields the
        remainder is zero; over non-prime residue rings only exact
        divisions are performed.
        """
        if cg == 0:
            raise ZeroDivisionError("reduction against a zero coefficient")
        if cf == 0:
            return None
        if self.kind == DomainKind.RATIONALS:
            return Fraction(cf) / cg, Fraction(0)
        if self.kind == DomainKind.RESIDUE:
            m = self.modulus
            g = math.gcd(int(cg), m)  # type: ignore[arg-type]
            if int(cf) % g:
                return None
            a = (int(cf) // g) * pow(int(cg) // g, -1, m // g) % (m // g)
            return a, 0
        a, b = _nearest_quotient(cf, cg)
        if a != 0 and (abs(b) < abs(cf) or (b == -cf and b > 0)):
            return a, b
        return None

    # -- size and unit normalisation ----------------------------------------

    def norm(self, a: Coefficient) -> int:
        """Size measure: ``|a|`` over Z, ``gcd(a, m)`` over a residue ring
        (the canonical associate, so smaller norm means wider divisibility),
        and a 0/1 indicator over a field."""
        if self.kind == DomainKind.INTEGERS:
            return abs(a)
        if self.kind == DomainKind.RESIDUE:
            return math.gcd(int(a), self.modulus)
        return int(a != 0)

    def normalizing_unit(self, lc: Coefficient) -> Coefficient:
        """Unit ``u`` making ``u*lc`` canonical: positive over Z, 1 over a
        field (monic), and ``gcd(lc, m)`` over a squarefree residue ring
        (every residue is a unit multiple of the gcd it shares with m)."""
        if lc == 0:
            raise ValueError("zero has no normalizing unit")
        if self.kind == DomainKind.INTEGERS:
            return 1 if lc > 0 else -1
        if self.kind == DomainKind.RATIONALS:
            return Fraction(1) / lc
        m = self.modulus
        c = int(lc) % m  # type: ignore[arg-type]
        g = math.gcd(c, m)
        mp = m // g
        u0 = pow(c // g, -1, mp)
        if g == 1:
            return u0
        # lift to a unit mod m: u == u0 (mod m/g), u == 1 (mod g)
        k = ((1 - u0) * pow(mp, -1, g)) % g
        return (u0 + mp * k) % m

    def coprime(self, a: Coefficient, b: Coefficient) -> bool:
        """Unit gcd test (used by the product criterion)."""
        if self.kind == DomainKind.INTEGERS:
            return math.gcd(a, b) == 1
        if self.kind == DomainKind.RATIONALS:
            return True
        return math.gcd(int(a), int(b), self.modulus) == 1  # type: ignore[arg-type]

    # -- Bezout data (gcd domains) -------------------------------------------

    def ext_gcd(self, a: Coefficient, b: Coefficient) -> tuple[int, int, int]:
        if self.kind == DomainKind.INTEGERS:
            return ext_gcd(a, b)
        if self.kind == DomainKind.RESIDUE:
            # on canonical integer lifts; the identity holds mod m as well
            return ext_gcd(int(a), int(b))  # type: ignore[arg-type]
        raise ValueError("unsupported domain for ext_gcd")

    def lcm(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.kind == DomainKind.INTEGERS:
            return lcm_coeff(a, b)
        if self.kind == DomainKind.RATIONALS:
            return Fraction(a) * b
        if self.kind == DomainKind.RESIDUE:
            # integer lcm of the canonical lifts, deliberately not reduced:
            # cofactor division needs the true integer value
            return lcm_coeff(int(a), int(b))  # type: ignore[arg-type]
        raise ValueError("unsupported domain for lcm")

    def render(self, a: Coefficient) -> str:
        return str(a)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def squarefree_factors(m: int) -> list[int]:
    """Prime factors of a squarefree ``m >= 2``, ascending.

    Raises ``ValueError`` when ``m`` has a repeated prime factor (the
    lifting construction needs pairwise-coprime leaves).
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    out: list[int] = []
    rest, p = m, 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                raise ValueError(
                    f"prime-power moduli unsupported: {p}^2 divides {m}"
                )
            out.append(p)
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append(rest)
    return out


ZZ = Domain(DomainKind.INTEGERS)
QQ = Domain(DomainKind.RATIONALS)


def residue_domain(m: int) -> Domain:
    return Domain(DomainKind.RESIDUE, m)
