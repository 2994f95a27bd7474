"""Exact coefficient arithmetic: Gaussian rationals times Laurent monomials.

Every coefficient in the engine is a Scalar: an exact Gaussian rational
re + i*im (both ``fractions.Fraction``) multiplying a Laurent monomial in the
formal deformation parameters.  Parameters are tracked by *axis*; each axis
names the inverse-mass (or velocity) symbol the paper deforms with, so e.g.
``kinv`` is 1/kappa and a Scalar with ``params == (("kinv", 2),)`` carries
1/kappa^2.  Exponents may be negative in intermediates (only the ``c`` axis
ever uses that in practice, during contraction).

A TruncationPolicy bounds the positive exponent of each axis; dropping terms
beyond the bound is what makes the paper's analytic functions of P_0 finitely
representable.  Applying a policy twice equals applying it once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple

#: Known parameter axes.  ``c`` is the contraction velocity; the parser also
#: accepts ``cinv`` and maps it to a negative ``c`` exponent.
AXES = ("kinv", "khinv", "xi", "c", "kbar_inv", "khbar_inv", "xibar")

Params = Tuple[Tuple[str, int], ...]
Pair = Tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)

EMPTY: Params = ()


def params_from(mapping: Mapping[str, int]) -> Params:
    items = []
    for axis, exp in mapping.items():
        if axis not in AXES:
            raise ValueError(f"unknown parameter axis {axis!r}")
        if exp:
            items.append((axis, int(exp)))
    items.sort()
    return tuple(items)


def pmul(a: Params, b: Params) -> Params:
    """Multiply two parameter monomials (add exponents)."""
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for axis, exp in b:
        new = acc.get(axis, 0) + exp
        if new:
            acc[axis] = new
        else:
            acc.pop(axis, None)
    return tuple(sorted(acc.items()))


def ppow(a: Params, n: int) -> Params:
    if n == 0 or not a:
        return EMPTY
    return tuple((axis, exp * n) for axis, exp in a)


def cmul(a: Pair, b: Pair) -> Pair:
    """Gaussian-rational product for (re, im) pairs."""
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def cinv(a: Pair) -> Pair:
    ar, ai = a
    n = ar * ar + ai * ai
    if not n:
        raise ZeroDivisionError("inverting zero Gaussian rational")
    return (ar / n, -ai / n)


@dataclass(frozen=True)
class Scalar:
    """Gaussian rational times a Laurent monomial in deformation parameters."""

    re: Fraction = ZERO
    im: Fraction = ZERO
    params: Params = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))
        if not self.re and not self.im:
            object.__setattr__(self, "params", EMPTY)
        else:
            object.__setattr__(self, "params", tuple(sorted(
                (a, int(e)) for a, e in self.params if e)))

    # -- constructors -------------------------------------------------
    @staticmethod
    def rational(num, den=1) -> "Scalar":
        return Scalar(Fraction(num, den))

    @staticmethod
    def imaginary(num=1, den=1) -> "Scalar":
        return Scalar(ZERO, Fraction(num, den))

    @staticmethod
    def param(axis: str, exp: int = 1, coeff=1) -> "Scalar":
        if axis not in AXES:
            raise ValueError(f"unknown parameter axis {axis!r}")
        return Scalar(Fraction(coeff), ZERO, ((axis, exp),))

    # -- predicates ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im and not self.params

    # -- arithmetic ----------------------------------------------------
    def __mul__(self, other: "Scalar") -> "Scalar":
        re, im = cmul((self.re, self.im), (other.re, other.im))
        if not re and not im:
            return Scalar()
        return Scalar(re, im, pmul(self.params, other.params))

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im, self.params)

    def __add__(self, other: "Scalar") -> "Scalar":
        # Addition only combines Scalars sharing a parameter monomial; sums
        # with differing monomials live at the Element level.
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.params != other.params:
            raise ValueError(
                f"cannot add Scalars with different parameter monomials: "
                f"{self.params} vs {other.params}")
        return Scalar(self.re + other.re, self.im + other.im, self.params)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def pair(self) -> Pair:
        return (self.re, self.im)


@dataclass(frozen=True)
class TruncationPolicy:
    """Per-axis cap on positive parameter exponents.

    ``bounds[axis] = n`` drops any term whose ``axis`` exponent exceeds n;
    an axis absent from ``bounds`` (or mapped to None) is unbounded.  The
    ``c`` axis is unbounded by default: contraction handles it explicitly.
    """

    bounds: Tuple[Tuple[str, Optional[int]], ...] = ()

    @staticmethod
    def default(**overrides) -> "TruncationPolicy":
        base = {"kinv": 4, "khinv": 4, "xi": 2, "xibar": 2,
                "kbar_inv": 4, "khbar_inv": 4}
        base.update(overrides)
        return TruncationPolicy(tuple(sorted(
            (a, None if b is None else int(b)) for a, b in base.items())))

    def as_dict(self) -> dict:
        return dict(self.bounds)

    def with_orders(self, **overrides) -> "TruncationPolicy":
        d = self.as_dict()
        d.update(overrides)
        return TruncationPolicy(tuple(sorted(d.items())))

    def bound(self, axis: str) -> Optional[int]:
        for a, b in self.bounds:
            if a == axis:
                return b
        return None

    def allows(self, params: Params) -> bool:
        for axis, exp in params:
            if exp > 0:
                b = self.bound(axis)
                if b is not None and exp > b:
                    return False
        return True


def series_coeffs_exp(n: int) -> Fraction:
    """n-th Taylor coefficient of exp: 1/n!."""
    f = 1
    for k in range(2, n + 1):
        f *= k
    return Fraction(1, f)


def binomial_half_coeffs(order: int) -> list:
    """Taylor coefficients of (1+u)^(1/2) in u, up to u^order."""
    coeffs = [ONE]
    c = ONE
    for n in range(1, order + 1):
        c = c * (Fraction(1, 2) - (n - 1)) / n
        coeffs.append(c)
    return coeffs
