"""Exact integer-coefficient polynomials in one variable (lambda)."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from core.exceptions import PolynomialError


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    """Strip trailing zero coefficients."""
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """
    Dense polynomial with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of lambda^i. The zero polynomial has no coefficients.
    Python integers are arbitrary precision, so arithmetic never overflows.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # Constructors

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Poly":
        """Return coeff * lambda^degree."""
        if degree < 0:
            raise PolynomialError(f"negative degree {degree}")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def lam(cls) -> "Poly":
        """Return the polynomial lambda."""
        return cls.monomial(1)

    @classmethod
    def linear(cls, root: int) -> "Poly":
        """Return lambda - root."""
        return cls((-root, 1))

    # Properties

    @property
    def degree(self) -> int:
        """Highest nonzero index; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # Arithmetic

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return sub(self, other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise PolynomialError("negative exponent")
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x: int) -> int:
        return self.eval(x)

    def eval(self, x: int) -> int:
        """Evaluate by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # Rendering

    def to_list(self) -> List[int]:
        """Coefficient array, low to high (JSON form)."""
        return list(self.coeffs)

    def to_latex(self) -> str:
        """Render as e.g. ``4\\lambda^{3} - 12\\lambda^{2} + 8\\lambda``."""
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = "\\lambda" if i == 1 else f"\\lambda^{{{i}}}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_latex()


class FallingPrefix(NamedTuple):
    """Factorization P = lambda(lambda-1)...(lambda-r) * quotient, with r maximal."""

    r: int
    quotient: Poly

    def prefix(self) -> Poly:
        return falling_factorial(self.r)

    def product(self) -> Poly:
        return self.prefix() * self.quotient


def from_coefficients(coeffs: Sequence[int]) -> Poly:
    return Poly(tuple(coeffs))


def add(a: Poly, b: Poly) -> Poly:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    res = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        res[i] += c
    return Poly(tuple(res))


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, -b)


def mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero()
    res = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            res[i + j] += x * y
    return Poly(tuple(res))


def scale(a: Poly, c: int) -> Poly:
    return Poly(tuple(c * x for x in a.coeffs))


def evaluate(p: Poly, x: int) -> int:
    return p.eval(x)


def falling_factorial(r: int) -> Poly:
    """
    Return lambda(lambda-1)...(lambda-r); r = -1 gives the constant 1.

    Args:
        r: Largest root of the product

    Returns:
        Product of r + 1 linear factors
    """
    if r < -1:
        raise PolynomialError(f"falling factorial needs r >= -1, got {r}")
    result = Poly.constant(1)
    for a in range(r + 1):
        result = result * Poly.linear(a)
    return result


def divide_linear(p: Poly, root: int) -> Tuple[Poly, int]:
    """
    Divide by (lambda - root) using synthetic division.

    Returns:
        (quotient, remainder) with p = (lambda - root) * quotient + remainder
    """
    if p.is_zero():
        return Poly.zero(), 0
    coeffs = p.coeffs
    quotient = [0] * (len(coeffs) - 1)
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * root + coeffs[i]
        quotient[i - 1] = acc
    remainder = acc * root + coeffs[0]
    return Poly(tuple(quotient)), remainder


def smallest_positive_support(p: Poly, bound: int) -> int:
    """
    Least x in 1..bound with p(x) > 0, or 0 if there is none.

    Strictly positive, since every chromatic polynomial vanishes at 0.
    """
    if bound < 1:
        raise PolynomialError(f"bound must be >= 1, got {bound}")
    for x in range(1, bound + 1):
        if p.eval(x) > 0:
            return x
    return 0


def falling_prefix(p: Poly) -> FallingPrefix:
    """
    Split off the longest falling-factorial prefix lambda(lambda-1)...(lambda-r).

    r = -1 means not even lambda divides p. The quotient is returned as is; it may
    still have positive integer roots when p has repeated roots.
    """
    if p.is_zero():
        raise PolynomialError("falling_prefix of the zero polynomial")
    r = -1
    quotient = p
    while True:
        candidate, remainder = divide_linear(quotient, r + 1)
        if remainder != 0 or quotient.degree < 1:
            break
        quotient = candidate
        r += 1
    return FallingPrefix(r, quotient)


def positive_integer_roots(p: Poly) -> List[int]:
    """
    All positive integer roots of a nonzero polynomial, ascending.

    A positive integer root divides the lowest nonzero coefficient, which bounds the scan.
    """
    if p.is_zero():
        raise PolynomialError("every integer is a root of the zero polynomial")
    lowest = next(c for c in p.coeffs if c != 0)
    return [x for x in range(1, abs(lowest) + 1) if abs(lowest) % x == 0 and p.eval(x) == 0]


def interpolate(values: Sequence[int]) -> Poly:
    """
    Exact polynomial of degree < len(values) through (i, values[i]) for i = 0, 1, ...

    Uses Newton forward differences; raises if the result is not integral.
    """
    diffs = list(values)
    leading: List[int] = []
    while diffs:
        leading.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]

    acc = [Fraction(0)] * max(len(values), 1)
    basis = [Fraction(1)]  # C(lambda, j) built incrementally
    for j, d in enumerate(leading):
        if j > 0:
            # basis *= (lambda - (j - 1)) / j
            shifted = [Fraction(0)] + basis
            for i, c in enumerate(basis):
                shifted[i] -= (j - 1) * c
            basis = [c / j for c in shifted]
        for i, c in enumerate(basis):
            acc[i] += d * c

    if any(c.denominator != 1 for c in acc):
        raise PolynomialError("interpolated polynomial has non-integer coefficients")
    return Poly(tuple(int(c) for c in acc))
