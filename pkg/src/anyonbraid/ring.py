"""Exact scalars in Z[z, 1/2] for z = exp(i*pi/4).

Every matrix entry in this package is such a scalar, so group elements
hash and compare exactly and enumeration needs no floating-point
tolerance.  Coefficients are plain Python ints (arbitrary precision),
denominators are powers of two only.
"""

from __future__ import annotations

import cmath

ZETA_COMPLEX = cmath.exp(1j * cmath.pi / 4)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_a_sqrt2_plus_b(a: int, b: int) -> int:
    """Exact sign of a*sqrt(2) + b for integers a, b."""
    if a == 0:
        return _sign(b)
    if b == 0:
        return _sign(a)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: |a*sqrt(2)| vs |b| decided by 2a^2 vs b^2
    d = 2 * a * a - b * b
    # d == 0 would mean sqrt(2) rational
    return _sign(a) if d > 0 else _sign(b)


class CycScalar:
    """(c0 + c1*z + c2*z^2 + c3*z^3) / 2^k with z = exp(i*pi/4), z^4 = -1.

    Normal form: k == 0 or at least one coefficient odd.  The normal form
    is unique, so structural equality is mathematical equality.
    """

    __slots__ = ("c0", "c1", "c2", "c3", "k")

    def __init__(self, c0: int, c1: int = 0, c2: int = 0, c3: int = 0, k: int = 0):
        if k < 0:
            raise ValueError("denominator exponent must be non-negative")
        while k > 0 and not ((c0 | c1 | c2 | c3) & 1):
            c0 >>= 1
            c1 >>= 1
            c2 >>= 1
            c3 >>= 1
            k -= 1
        if not (c0 | c1 | c2 | c3):
            k = 0
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "c3", c3)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __repr__(self) -> str:
        return f"CycScalar({self.c0}, {self.c1}, {self.c2}, {self.c3}, k={self.k})"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycScalar(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.coeffs == other.coeffs and self.k == other.k

    def __hash__(self):
        return hash((self.coeffs, self.k))

    def __bool__(self) -> bool:
        return bool(self.c0 | self.c1 | self.c2 | self.c3)

    def is_zero(self) -> bool:
        return not self

    def __neg__(self) -> CycScalar:
        return CycScalar(-self.c0, -self.c1, -self.c2, -self.c3, self.k)

    def __add__(self, other) -> CycScalar:
        if isinstance(other, int):
            other = CycScalar(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        k = max(self.k, other.k)
        sa = k - self.k
        sb = k - other.k
        return CycScalar(
            (self.c0 << sa) + (other.c0 << sb),
            (self.c1 << sa) + (other.c1 << sb),
            (self.c2 << sa) + (other.c2 << sb),
            (self.c3 << sa) + (other.c3 << sb),
            k,
        )

    __radd__ = __add__

    def __sub__(self, other) -> CycScalar:
        return self + (-other if isinstance(other, CycScalar) else CycScalar(-other))

    def __rsub__(self, other) -> CycScalar:
        return (-self) + other

    def __mul__(self, other) -> CycScalar:
        if isinstance(other, int):
            return CycScalar(self.c0 * other, self.c1 * other,
                             self.c2 * other, self.c3 * other, self.k)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        return CycScalar(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.k + other.k,
        )

    __rmul__ = __mul__

    def conjugate(self) -> CycScalar:
        # z -> z^-1 = -z^3, z^2 -> -z^2, z^3 -> -z
        return CycScalar(self.c0, -self.c3, -self.c2, -self.c1, self.k)

    def mul_zeta(self, e: int) -> CycScalar:
        """Multiply by z^e (a signed cyclic shift of the coefficients)."""
        e %= 8
        c = [self.c0, self.c1, self.c2, self.c3]
        if e >= 4:
            c = [-x for x in c]
            e -= 4
        c = [-x for x in c[4 - e:]] + c[: 4 - e]
        return CycScalar(c[0], c[1], c[2], c[3], self.k)

    def _in_phase_domain(self) -> bool:
        """Exact test for polar angle in [0, pi/4)."""
        c0, c1, c2, c3 = self.coeffs
        # sqrt(2)*2^k*Re = c0*sqrt(2) + (c1 - c3), similarly for Im
        if _sign_a_sqrt2_plus_b(c0, c1 - c3) <= 0:
            return False
        if _sign_a_sqrt2_plus_b(c2, c1 + c3) < 0:
            return False
        return _sign_a_sqrt2_plus_b(c0 - c2, -2 * c3) > 0

    def phase_class(self) -> tuple[int, CycScalar]:
        """Return (t, rep) with rep = z^-t * self of polar angle in [0, pi/4).

        Exactly one of the eight rotations z^-t*self lands in the
        fundamental domain; t canonicalizes projective (global-phase)
        comparisons.  Rejects zero.
        """
        if self.is_zero():
            raise ValueError("phase_class of zero")
        x = self
        for t in range(8):
            if x._in_phase_domain():
                return t, x
            x = x.mul_zeta(-1)
        raise AssertionError("no rotation in fundamental domain")

    def ipower(self) -> int | None:
        """m with self == i^m, or None if self is not a power of i."""
        if self.k != 0:
            return None
        return {
            (1, 0, 0, 0): 0,
            (0, 0, 1, 0): 1,
            (-1, 0, 0, 0): 2,
            (0, 0, -1, 0): 3,
        }.get(self.coeffs)

    def to_complex(self) -> complex:
        """Floating-point embedding, for display only."""
        z = ZETA_COMPLEX
        return (self.c0 + self.c1 * z + self.c2 * z**2 + self.c3 * z**3) / 2**self.k

    def to_list(self) -> list[int]:
        return [self.c0, self.c1, self.c2, self.c3, self.k]

    @classmethod
    def from_list(cls, data) -> CycScalar:
        c0, c1, c2, c3, k = (int(x) for x in data)
        return cls(c0, c1, c2, c3, k)

    @classmethod
    def zeta_power(cls, t: int) -> CycScalar:
        return ONE.mul_zeta(t)


ZERO = CycScalar(0)
ONE = CycScalar(1)
I_UNIT = CycScalar(0, 0, 1, 0)
ZETA = CycScalar(0, 1, 0, 0)
SQRT2 = CycScalar(0, 1, 0, -1)
INV_SQRT2 = CycScalar(0, 1, 0, -1, 1)
# e^{i pi/4}/sqrt(2) = (1+i)/2, the braid-generator prefactor
BRAID_PHASE = CycScalar(1, 0, 1, 0, 1)
BRAID_PHASE_CONJ = CycScalar(1, 0, -1, 0, 1)
