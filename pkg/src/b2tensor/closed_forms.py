"""Polynomial multiplicity tables and diagonal families.

Three families of exact closed forms for multiplicities in the p-th tensor
power, all polynomials in p for fixed index:

  * vector_table / spinor_table: the 4x4 and 8-entry windows of weights
    nearest the highest weight, as published;
  * diagonal_formula: six anti-diagonal families s = 1..6 of the vector
    power, M(p-t-s+1, t) as a gamma-factor expression in (p, t);
  * fit_polynomial: certified Newton interpolation used to rediscover such
    polynomials from recurrence samples and predict beyond the window.

Weight maps exist in validated form (matching the multiplicity oracles) and,
behind printed=True, in the published form, which differs by coordinate
slips; the discrepancies are documented where the two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .lattice import Weight


class PolynomialityError(ValueError):
    """Samples do not certify a polynomial within the window."""


# ---------------------------------------------------------------------------
# near-highest-weight tables


def spinor_table_weight(a, b: int, p: int, printed: bool = False) -> Weight:
    """Weight of the spinor-table entry (a, b) in the p-th power.

    Validated map: (p/2 - (b-1), p/2 - a). The published map adds b-1 to the
    second coordinate as well; pass printed=True for that reading.
    """
    a = Fraction(a)
    half = Fraction(p, 2)
    if printed:
        return Weight.make(half - (b - 1), half - a + (b - 1))
    return Weight.make(half - (b - 1), half - a)


def spinor_table(a, b: int, p: int) -> int:
    """Published polynomial for the spinor-power multiplicity at entry (a, b).

    a may be half-integer; those columns sit off the p-th coset and carry 0.
    """
    a = Fraction(a)
    if a.denominator != 1:
        return 0
    key = (int(a), b)
    table = {
        (0, 1): Fraction(1),
        (1, 1): Fraction(p - 1),
        (2, 1): Fraction(p * (p - 3), 2),
        (0, 2): Fraction(0),
        (1, 2): Fraction(p * (p - 1), 2),
        (2, 2): Fraction((p - 1) * (p + 1) * (p - 3), 3),
        (1, 3): Fraction(0),
        (2, 3): Fraction((p - 1) * (p - 2) * (p - 3) * (p + 2), 12),
    }
    if key not in table:
        raise KeyError(f"spinor table has no entry ({a},{b})")
    val = table[key]
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer table value at ({a},{b}), p={p}")
    return int(val)


SPINOR_TABLE_KEYS = ((0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2), (1, 3), (2, 3))


def vector_table_weight(i: int, j: int, p: int) -> Weight:
    """Weight of the vector-table cell (i, j): first coordinate p-i, second j."""
    return Weight.make(p - i, j)


def vector_table(i: int, j: int, p: int) -> int:
    """Published polynomial for the vector-power multiplicity at cell (i, j).

    Rows i = 0..3 run from the highest weight (p, 0) downward, columns
    j = 0..3 along the second coordinate. Zero cells are part of the claim.
    """
    table = {
        (0, 0): Fraction(1),
        (1, 1): Fraction(p - 1),
        (2, 0): Fraction(p * (p - 1), 2),
        (2, 1): Fraction((p - 1) * (p - 2), 2),
        (2, 2): Fraction(p * (p - 3), 2),
        (3, 0): Fraction((p - 1) * (p - 2) * (p - 3), 6),
        (3, 1): Fraction(p * (p - 1) * (p - 3), 2),
        (3, 2): Fraction(p * (p - 2) * (p - 4), 3),
        (3, 3): Fraction(p * (p - 1) * (p - 5), 6),
    }
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise KeyError(f"vector table has no cell ({i},{j})")
    val = table.get((i, j), Fraction(0))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer table value at ({i},{j}), p={p}")
    return int(val)


# ---------------------------------------------------------------------------
# diagonal families of the vector power


def _rgamma(n: int) -> Fraction:
    # reciprocal gamma at an integer: 1/(n-1)!, and 0 at the poles n <= 0
    return Fraction(1, factorial(n - 1)) if n >= 1 else Fraction(0)


def diagonal_weight(s: int, t: int, p: int, printed: bool = False) -> Weight:
    """Weight of the s-th diagonal family at offset t.

    Validated map: (p-t-s+1, t), the s-th anti-diagonal of the vector power.
    The published map starts from the spinor highest weight instead; pass
    printed=True for that reading.
    """
    if printed:
        return Weight.make(Fraction(p, 2) - t - (s - 1), Fraction(p, 2) + t)
    return Weight.make(p - t - s + 1, t)


def diagonal_bracket(s: int, t: int) -> tuple:
    """Coefficients (ascending in p) of the bracket polynomial for s >= 4.

    For s <= 3 the closed form has no bracket; () is returned.
    """
    if s == 4:
        return (
            t**4 + 4 * t**3 + 8 * t**2 + 8 * t + 6,
            -2 * (t + 2) ** 2 * (t + 1),
            t**2 + 6 * t + 2,
        )
    if s == 5:
        return (
            t**4 + 4 * t**3 + 8 * t**2 + 8 * t + 6,
            -(2 * t + 4) * (t + 1) * (t + 2),
            t**2 + 11 * t + 6,
        )
    if s == 6:
        return (
            -(t + 1) * (t + 3) * (t**4 + 8 * t**3 + 68 * t**2 + 208 * t + 12),
            3 * t**5 + 45 * t**4 + 326 * t**3 + 1086 * t**2 + 1408 * t + 516,
            -(3 * t**4 + 54 * t**3 + 309 * t**2 + 654 * t + 276),
            t**3 + 21 * t**2 + 86 * t + 36,
        )
    return ()


def diagonal_bracket_corrected(s: int, t: int) -> tuple:
    """Bracket coefficients with the s=5 row repaired.

    The published s=5 bracket reuses the linear and constant coefficients of
    the s=4 row; refitting against the recurrence gives the coefficients
    below (validated for t <= 10, p <= 20). Other rows are unchanged.
    """
    if s == 5:
        return (
            t**4 + 6 * t**3 + 29 * t**2 + 60 * t + 12,
            -(2 * t**3 + 17 * t**2 + 53 * t + 18),
            t**2 + 11 * t + 6,
        )
    return diagonal_bracket(s, t)


def _bracket_value(s: int, t: int, p: int, corrected: bool = False) -> int:
    coeffs = diagonal_bracket_corrected(s, t) if corrected else diagonal_bracket(s, t)
    return sum(c * p**k for k, c in enumerate(coeffs))


def diagonal_formula(s: int, t: int, p: int, corrected: bool = False) -> Fraction:
    """Published closed form for the vector-power multiplicity at (p-t-s+1, t).

    Exact rational arithmetic; reciprocal gamma factors vanish at the poles.
    s = 1..4 and s = 6 hold exactly as printed; the printed s = 5 bracket is
    wrong at every offset (its values are not even integers), and
    corrected=True substitutes the refitted bracket, which matches the
    recurrence everywhere tested.
    """
    g = Fraction(factorial(p))  # gamma(p+1), p >= 0 always here
    if s == 1:
        return g * (p + 1 - 2 * t) * _rgamma(p + 2 - t) * _rgamma(t + 1)
    if s == 2:
        return g * (p - t) * (p - 2 * t) * _rgamma(p + 2 - t) * _rgamma(t) / (t + 1)
    if s == 3:
        return g * (p - 2 * t - 1) * _rgamma(p - t) * _rgamma(t + 1) / 2
    if s == 4:
        core = g * (p - 2 * t - 2) * _rgamma(p + 1 - t) * _rgamma(t + 3) / 6
        return core * _bracket_value(4, t, p, corrected)
    if s == 5:
        core = g * (p - 2 * t - 3) * _rgamma(p - t) * _rgamma(t + 3) / 24
        return core * _bracket_value(5, t, p, corrected)
    if s == 6:
        core = g * (p - 2 * t - 4) * _rgamma(p - t) * _rgamma(t + 4) / 120
        return core * _bracket_value(6, t, p, corrected)
    raise KeyError(f"no diagonal family s={s}")


def diagonal_zero_power(s: int, t: int) -> int:
    """The power p at which the linear front factor of family s vanishes."""
    return 2 * t + s - 2


def bracket_factors_rationally(s: int, t: int) -> bool:
    """Whether the bracket polynomial of family s at offset t has a rational root.

    The families s <= 3 are pure products of linear integer factors; for
    s >= 4 the bracket can be irreducible over the rationals, so the pattern
    of integer-linear factorizations breaks. Quadratics are decided by a
    perfect-square discriminant, the cubic by the rational root theorem.
    """
    coeffs = diagonal_bracket(s, t)
    if not coeffs:
        return True
    if len(coeffs) == 3:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            return False
        return isqrt(disc) ** 2 == disc
    c0 = coeffs[0]
    lead = coeffs[-1]
    if c0 == 0:
        return True
    for r in _divisors(abs(c0)):
        for num in (r, -r):
            for den in _divisors(abs(lead)):
                if Fraction(num, den).denominator == den and sum(
                    c * Fraction(num, den) ** k for k, c in enumerate(coeffs)
                ) == 0:
                    return True
    return False


def bracket_discriminant(s: int, t: int) -> int:
    """Discriminant of the quadratic bracket (s = 4 or 5)."""
    coeffs = diagonal_bracket(s, t)
    if len(coeffs) != 3:
        raise ValueError(f"family s={s} has no quadratic bracket")
    c0, c1, c2 = coeffs
    return c1 * c1 - 4 * c2 * c0


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


# ---------------------------------------------------------------------------
# polynomial rediscovery from samples


@dataclass(frozen=True)
class NewtonFit:
    """Polynomial in Newton forward-difference form anchored at x0."""

    x0: int
    diffs: tuple  # leading forward differences, Fractions

    @property
    def degree(self) -> int:
        return len(self.diffs) - 1

    def __call__(self, x: int) -> Fraction:
        acc = Fraction(0)
        rising = Fraction(1)
        for k, d in enumerate(self.diffs):
            if k:
                rising = rising * (x - self.x0 - (k - 1)) / k
            acc += d * rising
        return acc

    def coefficients(self) -> tuple:
        """Standard-basis coefficients, ascending."""
        total = [Fraction(0)] * (self.degree + 1)
        basis = [Fraction(1)]  # product of (x - x0 - j)/(j+1), expanded
        for k, d in enumerate(self.diffs):
            for i, c in enumerate(basis):
                total[i] += d * c
            root = Fraction(self.x0 + k)
            basis = _poly_mul_linear(basis, -root, Fraction(1, k + 1))
        return tuple(total)


def _poly_mul_linear(coeffs, shift: Fraction, scale: Fraction):
    # multiply polynomial by scale*(x + shift)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c * shift * scale
        out[i + 1] += c * scale
    return out


def fit_polynomial(xs, ys, zero_slack: int = 2) -> NewtonFit:
    """Certified polynomial through equally spaced integer samples.

    xs must be consecutive integers. The difference table must reach an
    all-zero row that still has at least zero_slack entries; otherwise the
    window does not certify polynomiality and PolynomialityError is raised.
    """
    xs = list(xs)
    ys = [Fraction(y) for y in ys]
    if len(xs) != len(ys) or len(xs) < zero_slack + 1:
        raise ValueError("need matching xs/ys with enough samples")
    for a, b in zip(xs, xs[1:]):
        if b - a != 1:
            raise ValueError("xs must be consecutive integers")
    leading = []
    row = ys
    while row:
        if not any(row):
            if len(row) < zero_slack:
                break
            return NewtonFit(xs[0], tuple(leading) or (Fraction(0),))
        leading.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    raise PolynomialityError(
        f"window of {len(ys)} samples does not certify a polynomial"
    )
