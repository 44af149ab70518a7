"""Exact arithmetic: polynomials in the Jack parameter, differences, interpolation, determinants.

Scalars are :class:`fractions.Fraction`. An :class:`AlphaPoly` is a polynomial in
``a`` (the Jack parameter) with rational coefficients, and an :class:`XPoly` is a
polynomial in ``x`` whose coefficients are AlphaPolys.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .errors import ConsistencyError, DomainError

Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc
    return value


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class AlphaPoly:
    """Polynomial in ``a`` with Fraction coefficients, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def const(cls, c: Scalar) -> "AlphaPoly":
        return cls((c,))

    @classmethod
    def alpha(cls) -> "AlphaPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "AlphaPoly":
        return cls([0] * k + [c])

    @staticmethod
    def coerce(other) -> "AlphaPoly":
        if isinstance(other, AlphaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaPoly((other,))
        return NotImplemented  # type: ignore[return-value]

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, a: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __eq__(self, other) -> bool:
        other = AlphaPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def __neg__(self) -> "AlphaPoly":
        return AlphaPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "AlphaPoly":
        other = AlphaPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return AlphaPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "AlphaPoly":
        other = AlphaPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "AlphaPoly":
        return (-self) + other

    def __mul__(self, other) -> "AlphaPoly":
        other = AlphaPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return AlphaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return AlphaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "AlphaPoly":
        if e < 0:
            raise DomainError("negative powers are not polynomials")
        result, base = AlphaPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> "AlphaPoly":
        return AlphaPoly(c * x for x in self.coeffs)

    def div_scalar(self, c: Scalar) -> "AlphaPoly":
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return AlphaPoly(x / c for x in self.coeffs)

    def div_alpha_power(self, k: int) -> "AlphaPoly":
        """Exact division by ``a**k``; a nonzero low-order coefficient is a bug."""
        if any(self.coeff(i) for i in range(k)):
            raise ConsistencyError(f"{self.render()} is not divisible by a^{k}")
        return AlphaPoly(self.coeffs[k:])

    def compose_scale(self, s: Scalar) -> "AlphaPoly":
        """``p(s*a)``."""
        return AlphaPoly(c * Fraction(s) ** k for k, c in enumerate(self.coeffs))

    def render(self, var: str = "a") -> str:
        """Ascending ``c*a^k`` terms; the constant term is printed bare."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            body = format_rational(abs(c)) if k == 0 else f"{format_rational(abs(c))}*{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"AlphaPoly({self.render()})"

    __str__ = render

    def to_json(self) -> dict:
        return {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "AlphaPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(parse_rational(s) for s in obj["coeffs"])
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed polynomial JSON: {obj!r}") from exc


ZERO = AlphaPoly()
ONE = AlphaPoly.const(1)
ALPHA = AlphaPoly.alpha()


class XPoly:
    """Polynomial in ``x`` with AlphaPoly coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[AlphaPoly, ...] = _trim(AlphaPoly.coerce(c) for c in coeffs)

    @classmethod
    def linear(cls, const, slope) -> "XPoly":
        return cls((const, slope))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> AlphaPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __call__(self, x: Scalar) -> AlphaPoly:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __mul__(self, other) -> "XPoly":
        if not isinstance(other, XPoly):
            return XPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "XPoly(" + ", ".join(c.render() for c in self.coeffs) + ")"

    def divide_linear(self, root: Scalar) -> tuple["XPoly", AlphaPoly]:
        """Synthetic division by ``x - root``: returns quotient and remainder."""
        if not self.coeffs:
            return XPoly(), ZERO
        quotient: list[AlphaPoly] = []
        carry = ZERO
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return XPoly(reversed(quotient)), remainder


def forward_difference(p: XPoly, k: int) -> AlphaPoly:
    """``sum_i (-1)^(k-i) C(k,i) p(i)``, the k-th forward difference at 0."""
    if k < 0:
        raise DomainError("difference order must be nonnegative")
    if k > p.degree:
        return ZERO
    total = ZERO
    for i in range(k + 1):
        total = total + p(i) * ((-1) ** (k - i) * comb(k, i))
    return total


def newton_interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> AlphaPoly:
    """The interpolating polynomial of degree < len(points), via divided differences."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation abscissae must be distinct")
    table = [Fraction(y) for _, y in points]
    n = len(xs)
    # in-place divided differences: table[i] becomes f[x_0..x_i]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton form
    result = ZERO
    for i in range(n - 1, -1, -1):
        result = result * AlphaPoly((-xs[i], 1)) + table[i]
    return result


def det_exact(matrix: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    # clear denominators so that Bareiss stays in the integers
    from math import lcm

    den = 1
    for row in matrix:
        for v in row:
            den = lcm(den, Fraction(v).denominator)
    m = [[int(Fraction(v) * den) for v in row] for row in matrix]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], den**n)


def falling_factorial_expand(p: XPoly) -> list[AlphaPoly]:
    """Coefficients ``c_k`` with ``p = sum_k c_k a^k x(x-1)...(x-k+1)``.

    Repeated synthetic division at the nodes 0, 1, 2, ... gives the Newton
    coefficients; each is then divided by ``a^k``, which must be exact.
    """
    out = []
    q = p
    node = 0
    while q.coeffs:
        q, r = q.divide_linear(node)
        out.append(r.div_alpha_power(node))
        node += 1
    return out


def falling_factorial_collect(coeffs: Sequence[AlphaPoly]) -> XPoly:
    """Inverse of :func:`falling_factorial_expand`."""
    total = XPoly()
    basis = XPoly((ONE,))
    for k, c in enumerate(coeffs):
        total = total + basis * (c * ALPHA**k)
        basis = basis * XPoly.linear(-k, 1)
    return total
