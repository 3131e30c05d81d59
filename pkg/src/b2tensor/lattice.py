"""Root data for so(5) = B2 and the action of its Weyl group.

Weights live on the lattice generated by (1,0) and (1/2,1/2): either both
Euclidean coordinates are integers or both are half-integers. To keep every
value hashable and exact we store doubled coordinates (d1,d2) = (2*v1,2*v2),
so the lattice constraint becomes d1 = d2 (mod 2).

The Weyl group is the 8 signed permutations of two coordinates. An element
first transposes (optionally), then applies the signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _coord_str(d: int) -> str:
    # exact rational text for a doubled coordinate; avoid floor division on odd negatives
    if d % 2 == 0:
        return str(d // 2)
    return f"{d}/2"


@dataclass(frozen=True, order=True)
class Weight:
    """Lattice point in doubled coordinates (d1, d2) = (2*v1, 2*v2)."""

    d1: int
    d2: int

    def __post_init__(self):
        if (self.d1 - self.d2) % 2 != 0:
            raise ValueError(f"({self.d1},{self.d2})/2 is off the weight lattice")

    @classmethod
    def make(cls, v1, v2) -> "Weight":
        """Build from Euclidean coordinates given as ints, Fractions or strings."""
        a, b = Fraction(v1), Fraction(v2)
        d1, d2 = a * 2, b * 2
        if d1.denominator != 1 or d2.denominator != 1:
            raise ValueError(f"({v1},{v2}) is not a half-integer point")
        return cls(int(d1), int(d2))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"weight must be 'v1,v2', got {text!r}")
        return cls.make(parts[0].strip(), parts[1].strip())

    def text(self) -> str:
        return f"{_coord_str(self.d1)},{_coord_str(self.d2)}"

    @property
    def v1(self) -> Fraction:
        return Fraction(self.d1, 2)

    @property
    def v2(self) -> Fraction:
        return Fraction(self.d2, 2)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.d1 - other.d1, self.d2 - other.d2)

    def __neg__(self) -> "Weight":
        return Weight(-self.d1, -self.d2)

    def __repr__(self):
        return f"W({self.text()})"


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: transpose coordinates iff swap, then multiply by (s1,s2)."""

    swap: bool
    s1: int
    s2: int

    def __post_init__(self):
        if self.s1 not in (1, -1) or self.s2 not in (1, -1):
            raise ValueError("signs must be +-1")

    @property
    def det(self) -> int:
        return (-1 if self.swap else 1) * self.s1 * self.s2

    def apply(self, lam: Weight) -> Weight:
        a, b = (lam.d2, lam.d1) if self.swap else (lam.d1, lam.d2)
        return Weight(self.s1 * a, self.s2 * b)

    def compose(self, other: "WeylElement") -> "WeylElement":
        # self after other; derived so that apply(compose) == apply(self) o apply(other)
        swap = self.swap != other.swap
        if self.swap:
            t1, t2 = other.s2, other.s1
        else:
            t1, t2 = other.s1, other.s2
        return WeylElement(swap, self.s1 * t1, self.s2 * t2)


WEYL_GROUP = tuple(
    WeylElement(swap, s1, s2) for swap in (False, True) for s1 in (1, -1) for s2 in (1, -1)
)

ALPHA1 = Weight.make(1, -1)
ALPHA2 = Weight.make(0, 1)
OMEGA1 = Weight.make(1, 0)
OMEGA2 = Weight.make(Fraction(1, 2), Fraction(1, 2))
RHO = Weight.make(Fraction(3, 2), Fraction(1, 2))
# e1-e2, e2, e1, e1+e2
POSITIVE_ROOTS = (ALPHA1, ALPHA2, OMEGA1, Weight.make(1, 1))


def apply_weyl(w: WeylElement, lam: Weight) -> Weight:
    return w.apply(lam)


def is_dominant(lam: Weight) -> bool:
    """Closure of the fundamental chamber: v1 >= v2 >= 0."""
    return lam.d1 >= lam.d2 >= 0


def is_strictly_dominant(lam: Weight) -> bool:
    return lam.d1 > lam.d2 > 0


def to_dominant_regular(lam: Weight):
    """Reflect lam into the open chamber, tracking the determinant.

    Returns (representative, sign). Wall points (|d1| = |d2| or a zero
    coordinate) are fixed by some reflection, so their signed orbit sum
    vanishes: they get sign 0 and are returned unchanged.
    """
    a, b = lam.d1, lam.d2
    if a == 0 or b == 0 or a == b or a == -b:
        return lam, 0
    sign = 1
    if a < 0:
        a, sign = -a, -sign
    if b < 0:
        b, sign = -b, -sign
    if a < b:
        a, b, sign = b, a, -sign
    return Weight(a, b), sign


def dim_irrep(lam: Weight) -> int:
    """Dimension of the irreducible with highest weight lam.

    Product of <lam+rho, alpha> / <rho, alpha> over the four positive roots;
    in doubled coordinates with A = d1+3, B = d2+1 this collapses to
    A*B*(A^2-B^2)/24, always an exact integer.
    """
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    a = lam.d1 + 3
    b = lam.d2 + 1
    num = a * b * (a * a - b * b)
    assert num % 24 == 0
    return num // 24


def weights_of_fundamental(i: int):
    """Weight multiset of the fundamental module: i=1 vector (dim 5), i=2 spinor (dim 4)."""
    if i == 1:
        return [
            Weight.make(1, 0),
            Weight.make(-1, 0),
            Weight.make(0, 1),
            Weight.make(0, -1),
            Weight.make(0, 0),
        ]
    if i == 2:
        h = Fraction(1, 2)
        return [Weight.make(sa * h, sb * h) for sa in (1, -1) for sb in (1, -1)]
    raise ValueError(f"module index must be 1 or 2, got {i}")


MODULE_INDEX = {"vector": 1, "spinor": 2}
MODULE_NAME = {1: "vector", 2: "spinor"}
