"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A :class:`CycNum` stores a dense coefficient vector over the exponent
basis ``1, zeta, ..., zeta^(m-1)`` with the relation ``zeta^m = 1``,
kept in canonical form: reduced modulo the m-th cyclotomic polynomial
(so all coefficients at exponents >= phi(m) are zero), numerators
coprime with the (positive) common denominator.  Equality of values is
equality of canonical forms; mixed-order arithmetic lifts both operands
to the lcm of their orders.

Orders stay small here (m <= 24 for every built-in group), so the
dense representation wins on simplicity.  The inner loops (cyclic
convolution + reduction) are delegated to a compiled kernel when the
optional extension is available.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

try:  # compiled fast path, see _speedups.pyx
    from . import _speedups as _kernel

    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernel_py as _kernel

    KERNEL = "python"

_mul_reduce = _kernel.mul_reduce
_poly_reduce = _kernel.poly_reduce


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be positive")
    # divide x^m - 1 by every Phi_d with d | m, d < m
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (den monic, remainder zero)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for k in range(dd + 1):
                num[i - dd + k] -= c * den[k]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


class CycNum:
    """An element of Q(zeta_m), exact and immutable."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num, den: int = 1, _canonical: bool = False):
        if order < 1:
            raise ValueError("order must be a positive integer")
        num = list(num)
        if len(num) > order:
            folded = [0] * order
            for k, c in enumerate(num):
                folded[k % order] += c
            num = folded
        elif len(num) < order:
            num = num + [0] * (order - len(num))
        if not _canonical:
            _poly_reduce(num, order, cyclotomic_poly(order))
            num, den = _normalize(num, den)
        else:
            num = tuple(num)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(value) -> "CycNum":
        f = Fraction(value)
        return CycNum(1, [f.numerator], f.denominator)

    @staticmethod
    def zeta(m: int, k: int = 1) -> "CycNum":
        num = [0] * m
        num[k % m] = 1
        return CycNum(m, num)

    @staticmethod
    def zero(m: int = 1) -> "CycNum":
        return CycNum(m, [0] * m, 1, _canonical=True)

    @staticmethod
    def one(m: int = 1) -> "CycNum":
        num = [0] * m
        num[0] = 1
        return CycNum(m, num, 1, _canonical=True)

    @staticmethod
    def from_fractions(order: int, coeffs) -> "CycNum":
        """Build from a sequence of rationals indexed by zeta exponent."""
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        num = [int(f * den) for f in fracs]
        return CycNum(order, num, den)

    # -- views -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """The m canonical rational coefficients, exponent k at index k."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # -- order handling ----------------------------------------------

    def lift(self, new_order: int) -> "CycNum":
        """Re-express in Q(zeta_L) for a multiple L of the current order."""
        m = self.order
        if new_order == m:
            return self
        if new_order % m:
            raise ValueError("lift target must be a multiple of the order")
        step = new_order // m
        num = [0] * new_order
        for k, c in enumerate(self.num):
            if c:
                num[k * step] = c
        return CycNum(new_order, num, self.den)

    def rewrite(self, new_order: int) -> "CycNum":
        """Re-express in Q(zeta_{new_order}) if the value lies there."""
        if new_order % self.order == 0:
            return self.lift(new_order)
        big = lcm(self.order, new_order)
        lifted = self.lift(big)
        # basis of the subfield Q(zeta_new) inside Q(zeta_big)
        deg_new = len(cyclotomic_poly(new_order)) - 1
        step = big // new_order
        cols = []
        for k in range(deg_new):
            vec = [0] * big
            vec[(k * step) % big] = 1
            _poly_reduce(vec, big, cyclotomic_poly(big))
            cols.append([Fraction(c) for c in vec])
        target = [Fraction(c, lifted.den) for c in lifted.num]
        sol = _solve_rational(cols, target)
        if sol is None:
            raise ValueError(f"value does not lie in Q(zeta_{new_order})")
        return CycNum.from_fractions(new_order, sol + [0] * (new_order - deg_new))

    @staticmethod
    def _common(a: "CycNum", b: "CycNum") -> tuple["CycNum", "CycNum"]:
        if a.order == b.order:
            return a, b
        L = lcm(a.order, b.order)
        return a.lift(L), b.lift(L)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycNum._common(self, other)
        da, db = a.den, b.den
        d = lcm(da, db)
        fa, fb = d // da, d // db
        num = [fa * x + fb * y for x, y in zip(a.num, b.num)]
        num, den = _normalize(num, d)
        return CycNum(a.order, num, den, _canonical=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return CycNum(self.order, [-c for c in self.num], self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycNum._common(self, other)
        m = a.order
        num = _mul_reduce(list(a.num), list(b.num), m, cyclotomic_poly(m))
        num, den = _normalize(num, a.den * b.den)
        return CycNum(m, num, den, _canonical=True)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self) -> "CycNum":
        """Multiplicative inverse, via the multiplication-by-self system."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero in Q(zeta_m)")
        m = self.order
        if self.is_rational():
            f = 1 / self.as_fraction()
            return CycNum(m, [f.numerator] + [0] * (m - 1), f.denominator)
        phi = cyclotomic_poly(m)
        deg = len(phi) - 1
        # columns: canonical form of self * zeta^k, k < phi(m)
        cols = []
        vec = list(self.num)
        for k in range(deg):
            cols.append([Fraction(c, self.den) for c in vec])
            vec = vec[-1:] + vec[:-1]  # multiply by zeta (cyclic shift)
            _poly_reduce(vec, m, phi)
        target = [Fraction(1)] + [Fraction(0)] * (m - 1)
        sol = _solve_rational(cols, target)
        if sol is None:  # cannot happen in a field
            raise ArithmeticError("inversion system is singular")
        return CycNum.from_fractions(m, sol + [0] * (m - deg))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycNum._common(self, other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "CycNum":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        acc = CycNum.one(self.order)
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def conjugate(self) -> "CycNum":
        """Complex conjugation, zeta_m -> zeta_m^(-1)."""
        m = self.order
        num = [0] * m
        for k, c in enumerate(self.num):
            if c:
                num[(-k) % m] += c
        return CycNum(m, num, self.den)

    def galois(self, n: int) -> "CycNum":
        """The automorphism zeta_m -> zeta_m^n; requires gcd(n, m) = 1."""
        m = self.order
        if gcd(n, m) != 1:
            raise ValueError(f"galois exponent {n} not coprime to order {m}")
        num = [0] * m
        for k, c in enumerate(self.num):
            if c:
                num[(n * k) % m] += c
        return CycNum(m, num, self.den)

    def embed(self) -> complex:
        """Double-precision complex embedding, zeta_m -> exp(2 pi i / m)."""
        m = self.order
        z = 0j
        for k, c in enumerate(self.num):
            if c:
                z += c * cmath.exp(2j * cmath.pi * k / m)
        return z / self.den

    def as_root_of_unity(self) -> int | None:
        """Multiplicative order if this is a root of unity, else None."""
        if self.is_zero():
            return None
        # the torsion of Q(zeta_m)^x is the group of order lcm(2, m)
        bound = lcm(2, self.order)
        one = CycNum.one(self.order)
        p = self
        for k in range(1, bound + 1):
            if p == one:
                return k
            p = p * self
        return None

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return self.num == other.num and self.den == other.den
        a, b = CycNum._common(self, other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        # Rational values hash like their Fraction so that equal values
        # stored at different orders collide; irrational values are only
        # ever hashed alongside same-order peers (one field per group).
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.order, self.num, self.den))

    def __repr__(self):
        if self.is_rational():
            return f"CycNum({Fraction(self.num[0], self.den)})"
        terms = []
        for k, c in enumerate(self.num):
            if c:
                f = Fraction(c, self.den)
                terms.append(f"({f})*z{self.order}^{k}" if k else f"({f})")
        return "CycNum(" + " + ".join(terms) + ")"


def _coerce(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.rational(x)
    return NotImplemented


def _solve_rational(cols, target):
    """Solve sum_k x_k cols[k] = target over Q; None if inconsistent."""
    n_rows = len(target)
    n_cols = len(cols)
    aug = [[cols[j][i] for j in range(n_cols)] + [target[i]] for i in range(n_rows)]
    pivots = []
    row = 0
    for col in range(n_cols):
        piv = next((r for r in range(row, n_rows) if aug[r][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * p for v, p in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    # consistency on the remaining rows
    for r in range(row, n_rows):
        if aug[r][n_cols]:
            return None
    sol = [Fraction(0)] * n_cols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n_cols]
    return sol


# convenience literals used throughout the package
def sqrt_minus_two() -> CycNum:
    """sqrt(-2) represented in Q(zeta_8) as zeta_8 + zeta_8^3."""
    return CycNum.zeta(8, 1) + CycNum.zeta(8, 3)


def parse_literal(value, order: int = 1) -> CycNum:
    """Parse the spec-file literal syntax.

    Rationals are ints or "p/q" strings; cyclotomic values are arrays of
    ``order`` rational literals (coefficient of zeta_order^k at index k).
    """
    if isinstance(value, (list, tuple)):
        if len(value) != order:
            raise ValueError(
                f"cyclotomic literal needs {order} coefficients, got {len(value)}"
            )
        return CycNum.from_fractions(order, [Fraction(v) for v in value])
    return CycNum.rational(Fraction(value))
