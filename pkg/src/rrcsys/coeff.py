"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt(d)).

Every coefficient in the package is either an ``int``, a ``Fraction`` or a
:class:`QuadExt`.  A ``QuadExt`` whose irrational part vanishes collapses to a
``Fraction``, so rational values always look rational no matter how they were
produced.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "QuadExt",
    "NotAPower",
    "FieldMismatch",
    "sqrt",
    "conjugate",
    "nth_root",
    "is_scalar",
    "to_text",
    "parse_scalar",
    "divide",
]


class NotAPower(ArithmeticError):
    """Raised when an exact root does not exist in the coefficient field."""


class FieldMismatch(TypeError):
    """Raised when two quadratic elements live in different fields."""


def _squarefree(d: int) -> bool:
    if d in (0, 1):
        return False
    d = abs(d)
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


def _ratl(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QuadExt:
    """The number ``a + b*sqrt(d)`` with ``a, b`` rational and ``d`` squarefree."""

    __slots__ = ("a", "b", "d")

    def __new__(cls, a, b, d: int):
        if not _squarefree(d):
            raise ValueError(f"d must be squarefree and not 0 or 1, got {d}")
        self = object.__new__(cls)
        self.a = _ratl(a)
        self.b = _ratl(b)
        self.d = int(d)
        return self

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, d: int):
        # trusted constructor; collapses to the rational subfield
        if b == 0:
            return a
        self = object.__new__(cls)
        self.a, self.b, self.d = a, b, d
        return self

    def _split(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatch(f"sqrt({self.d}) and sqrt({other.d}) mixed")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        ab = self._split(other)
        if ab is None:
            return NotImplemented
        return QuadExt._make(self.a + ab[0], self.b + ab[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        ab = self._split(other)
        if ab is None:
            return NotImplemented
        return QuadExt._make(self.a - ab[0], self.b - ab[1], self.d)

    def __rsub__(self, other):
        ab = self._split(other)
        if ab is None:
            return NotImplemented
        return QuadExt._make(ab[0] - self.a, ab[1] - self.b, self.d)

    def __mul__(self, other):
        ab = self._split(other)
        if ab is None:
            return NotImplemented
        c, e = ab
        if e == 0:
            return QuadExt._make(self.a * c, self.b * c, self.d)
        return QuadExt._make(self.a * c + self.d * self.b * e,
                             self.a * e + self.b * c, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        return QuadExt._make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        ab = self._split(other)
        if ab is None:
            return NotImplemented
        c, e = ab
        if c == 0 and e == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.d)
        if e == 0:
            return QuadExt._make(self.a / c, self.b / c, self.d)
        return self * QuadExt._make(c, e, self.d).inverse()

    def __rtruediv__(self, other):
        ab = self._split(other)
        if ab is None:
            return NotImplemented
        return self.inverse() * QuadExt._make(ab[0], ab[1], self.d)

    def __neg__(self):
        return QuadExt._make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Fraction(1), self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            # a genuine QuadExt always has b != 0
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True

    def conjugate(self):
        return QuadExt._make(self.a, -self.b, self.d)

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return to_text(self)

    def _sympy_(self):
        import sympy
        return sympy.Rational(self.a.numerator, self.a.denominator) + \
            sympy.Rational(self.b.numerator, self.b.denominator) * sympy.sqrt(self.d)


def sqrt(d: int) -> QuadExt:
    """``sqrt(d)`` as an element of Q(sqrt(d))."""
    return QuadExt(0, 1, d)


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))


def conjugate(x):
    """Galois conjugation ``a + b sqrt(d) -> a - b sqrt(d)``; identity on Q."""
    if isinstance(x, QuadExt):
        return x.conjugate()
    return x


def divide(x, y):
    """Exact quotient; ints are promoted so that ``1/2`` never truncates."""
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def _int_root(x: int, n: int):
    """Exact n-th root of a non-negative integer or None."""
    if x < 0:
        raise ValueError
    if x in (0, 1):
        return x
    r = round(x ** (1.0 / n)) if x.bit_length() < 1000 else None
    if r is None:
        # Newton on big integers
        r = 1 << ((x.bit_length() + n - 1) // n)
        while True:
            s = ((n - 1) * r + x // r ** (n - 1)) // n
            if s >= r:
                break
            r = s
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** n == x:
            return c
    return None


def _rational_root(x: Fraction, n: int):
    x = Fraction(x)
    sign = 1
    if x < 0:
        if n % 2 == 0:
            return None
        sign, x = -1, -x
    p = _int_root(x.numerator, n)
    q = _int_root(x.denominator, n)
    if p is None or q is None:
        return None
    return sign * Fraction(p, q)


def _quad_root_candidates(x: QuadExt, n: int):
    import mpmath

    with mpmath.workdps(60):
        a = mpmath.mpf(x.a.numerator) / x.a.denominator
        b = mpmath.mpf(x.b.numerator) / x.b.denominator
        if x.d < 0:
            s = mpmath.sqrt(-x.d)
            z = mpmath.mpc(a, b * s)
            r0 = mpmath.root(z, n)
            for j in range(n):
                w = r0 * mpmath.exp(2j * mpmath.pi * j / n)
                yield w.real, w.imag / s
        else:
            s = mpmath.sqrt(x.d)
            e1, e2 = a + b * s, a - b * s

            def real_roots(v):
                if v >= 0:
                    r = mpmath.root(v, n)
                    return [r, -r] if n % 2 == 0 else [r]
                if n % 2 == 1:
                    return [-mpmath.root(-v, n)]
                return []

            for r1 in real_roots(e1):
                for r2 in real_roots(e2):
                    yield (r1 + r2) / 2, (r1 - r2) / (2 * s)


def _to_fraction(v, bound=10 ** 15) -> Fraction:
    import mpmath
    return Fraction(mpmath.nstr(v, 50)).limit_denominator(bound)


def nth_root(x, n: int):
    """Exact n-th root of ``x`` inside its own field.

    Prefers the root with positive rational part.  Raises :class:`NotAPower`
    when no root exists in Q or Q(sqrt(d)) respectively.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return x
    if isinstance(x, (int, Fraction)):
        r = _rational_root(Fraction(x), n)
        if r is None:
            raise NotAPower(f"{x} is not an exact {n}-th power in Q")
        return r
    if not isinstance(x, QuadExt):
        raise TypeError(f"not an exact scalar: {x!r}")
    found = []
    for u, v in _quad_root_candidates(x, n):
        cand = QuadExt._make(_to_fraction(u), _to_fraction(v), x.d)
        if cand ** n == x and cand not in found:
            found.append(cand)
    if not found:
        raise NotAPower(f"{x} is not an exact {n}-th power in Q(sqrt({x.d}))")

    def rational_part(c):
        return c.a if isinstance(c, QuadExt) else c

    found.sort(key=lambda c: (rational_part(c) <= 0, -rational_part(c)))
    return found[0]


def _frac_text(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_text(x) -> str:
    """Render ``x`` as ``a/b`` or ``a/b+c/e*sqrt(d)``."""
    if isinstance(x, QuadExt):
        if x.a == 0:
            return f"{_frac_text(x.b)}*sqrt({x.d})"
        sign = "+" if x.b > 0 else "-"
        return f"{_frac_text(x.a)}{sign}{_frac_text(abs(x.b))}*sqrt({x.d})"
    return _frac_text(Fraction(x))


_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^\s*{_RAT}\s*$")


def parse_scalar(text: str):
    """Inverse of :func:`to_text`."""
    text = text.strip()
    if _RAT_RE.match(text):
        return Fraction(text.replace(" ", ""))
    m = re.match(rf"^(?P<a>{_RAT})(?P<b>[+-]\d+(?:/\d+)?)\*sqrt\((?P<d>[+-]?\d+)\)$",
                 text.replace(" ", ""))
    if m:
        return QuadExt(Fraction(m["a"]), Fraction(m["b"]), int(m["d"]))
    m = re.match(rf"^(?P<b>{_RAT})\*sqrt\((?P<d>[+-]?\d+)\)$", text.replace(" ", ""))
    if m:
        return QuadExt(0, Fraction(m["b"]), int(m["d"]))
    m = re.match(r"^(?P<s>[+-]?)sqrt\((?P<d>[+-]?\d+)\)$", text.replace(" ", ""))
    if m:
        return QuadExt(0, -1 if m["s"] == "-" else 1, int(m["d"]))
    raise ValueError(f"cannot parse scalar {text!r}")

