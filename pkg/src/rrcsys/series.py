"""Truncated Puiseux series with exact coefficients.

A :class:`PuiseuxSeries` stores finitely many terms ``c * x**(e/D)`` keyed by the
integer ``e`` together with a precision bound ``prec``: the series is known up
to ``O(x**prec)``.  ``prec=None`` marks an exact (finite) series such as a
polynomial.  Precision is propagated pessimistically, so a coefficient at or
beyond ``prec`` is never reported as zero; asking for one raises
:class:`PrecisionError`.

Example::

    >>> q = PuiseuxSeries.variable()
    >>> PuiseuxSeries.one(prec=5) / (1 - q)
    1 + q + q^2 + q^3 + q^4 + O(q^5)
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .coeff import QuadExt, divide, is_scalar, nth_root, parse_scalar, to_text

__all__ = ["PuiseuxSeries", "PrecisionError", "ValuationError"]


class PrecisionError(ArithmeticError):
    """A coefficient was requested beyond the known precision."""


class ValuationError(ValueError):
    """An operation's valuation precondition is violated."""


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _min(a, b):
    # None plays the role of +infinity
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add(a, b):
    if a is None or b is None:
        return None
    return a + b


def _bound(prec, D):
    """Smallest integer index excluded by ``prec`` in units of 1/D."""
    if prec is None:
        return None
    return math.ceil(prec * D)


def _unit_power(h: dict, a, K: int) -> list:
    """Coefficients 0..K-1 of ``(1 + sum h_j x^j)**a`` (j >= 1, rational a)."""
    g = [Fraction(1)] + [0] * (K - 1) if K > 0 else []
    hs = sorted(h.items())
    for k in range(1, K):
        acc = 0
        for j, hj in hs:
            if j > k:
                break
            gk = g[k - j]
            if gk == 0:
                continue
            acc = acc + hj * gk * (a * j - (k - j))
        g[k] = divide(acc, k) if acc != 0 else 0
    return g


def _unit_exp(h: dict, K: int) -> list:
    g = [Fraction(1)] + [0] * (K - 1) if K > 0 else []
    hs = sorted(h.items())
    for k in range(1, K):
        acc = 0
        for j, hj in hs:
            if j > k:
                break
            if g[k - j] != 0:
                acc = acc + j * hj * g[k - j]
        g[k] = divide(acc, k) if acc != 0 else 0
    return g


class PuiseuxSeries:
    """Truncated series in ``x`` with exponents in ``(1/denom) * Z``."""

    __slots__ = ("_terms", "denom", "prec")
    __hash__ = None

    def __init__(self, terms=None, denom: int = 1, prec=None):
        if denom < 1:
            raise ValueError("denom must be positive")
        prec = None if prec is None else Fraction(prec)
        bound = _bound(prec, denom)
        clean = {}
        for e, c in (terms or {}).items():
            if not is_scalar(c):
                raise TypeError(f"coefficient {c!r} is not an exact scalar")
            if c != 0 and (bound is None or e < bound):
                clean[int(e)] = c
        g = denom
        for e in clean:
            g = math.gcd(g, e)
            if g == 1:
                break
        if g > 1:
            clean = {e // g: c for e, c in clean.items()}
            denom //= g
        self._terms = clean
        self.denom = denom
        self.prec = prec

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, prec=None, start=0):
        """Integer-exponent series ``sum coeffs[i] x^(start+i)``."""
        return cls({start + i: c for i, c in enumerate(coeffs)}, 1, prec)

    @classmethod
    def monomial(cls, c=1, exponent=0, prec=None):
        exponent = Fraction(exponent)
        return cls({exponent.numerator: c}, exponent.denominator, prec)

    @classmethod
    def one(cls, prec=None):
        return cls({0: Fraction(1)}, 1, prec)

    @classmethod
    def zero(cls, prec=None):
        return cls({}, 1, prec)

    @classmethod
    def variable(cls):
        return cls({1: Fraction(1)}, 1, None)

    @classmethod
    def coerce(cls, x) -> "PuiseuxSeries":
        if isinstance(x, PuiseuxSeries):
            return x
        if is_scalar(x):
            return cls({0: x}, 1, None)
        raise TypeError(f"cannot coerce {x!r} to a series")

    # -- inspection -------------------------------------------------------

    def items(self):
        """``(exponent, coefficient)`` pairs in increasing exponent order."""
        D = self.denom
        return [(Fraction(e, D), c) for e, c in sorted(self._terms.items())]

    def raw_terms(self) -> dict:
        return dict(self._terms)

    def is_exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self._terms

    @property
    def valuation(self):
        """Least exponent with a nonzero coefficient (``prec`` for a zero series)."""
        if self._terms:
            return Fraction(min(self._terms), self.denom)
        return self.prec

    @property
    def leading_coefficient(self):
        if not self._terms:
            raise ValuationError("the zero series has no leading coefficient")
        return self._terms[min(self._terms)]

    def __getitem__(self, exponent):
        exponent = Fraction(exponent)
        if self.prec is not None and exponent >= self.prec:
            raise PrecisionError(f"coefficient of x^{exponent} is beyond O(x^{self.prec})")
        if (exponent * self.denom).denominator != 1:
            return Fraction(0)
        return self._terms.get(int(exponent * self.denom), Fraction(0))

    coefficient = __getitem__

    def coefficients(self, n: int) -> list:
        """Coefficients of ``x^0 .. x^(n-1)``."""
        return [self[i] for i in range(n)]

    def _lift(self, D: int) -> dict:
        if D == self.denom:
            return self._terms
        s = D // self.denom
        return {e * s: c for e, c in self._terms.items()}

    def truncate(self, prec) -> "PuiseuxSeries":
        return PuiseuxSeries(self._terms, self.denom, _min(self.prec, Fraction(prec)))

    def map_coefficients(self, fn) -> "PuiseuxSeries":
        return PuiseuxSeries({e: fn(c) for e, c in self._terms.items()}, self.denom, self.prec)

    # -- ring operations --------------------------------------------------

    def __neg__(self):
        return PuiseuxSeries({e: -c for e, c in self._terms.items()}, self.denom, self.prec)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if not is_scalar(other):
                return NotImplemented
            other = PuiseuxSeries.coerce(other)
        D = _lcm(self.denom, other.denom)
        out = dict(self._lift(D))
        for e, c in other._lift(D).items():
            out[e] = out.get(e, 0) + c
        return PuiseuxSeries(out, D, _min(self.prec, other.prec))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if not is_scalar(other):
                return NotImplemented
            other = PuiseuxSeries.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if not is_scalar(other):
                return NotImplemented
            if other == 0:
                return PuiseuxSeries({}, 1, None)
            return PuiseuxSeries({e: c * other for e, c in self._terms.items()},
                                 self.denom, self.prec)
        prec = _min(_add(self.prec, other.valuation), _add(other.prec, self.valuation))
        D = _lcm(self.denom, other.denom)
        bound = _bound(prec, D)
        a = sorted(self._lift(D).items())
        b = sorted(other._lift(D).items())
        out = {}
        if a and b:
            bmin = b[0][0]
            for e1, c1 in a:
                if bound is not None and e1 + bmin >= bound:
                    break
                for e2, c2 in b:
                    e = e1 + e2
                    if bound is not None and e >= bound:
                        break
                    out[e] = out.get(e, 0) + c1 * c2
        return PuiseuxSeries(out, D, prec)

    __rmul__ = __mul__

    def _split_unit(self):
        """Write self = c * x^v * (1 + h); returns (c, v_index, h, rel_prec)."""
        if not self._terms:
            raise ZeroDivisionError("the series is zero to its known precision")
        e0 = min(self._terms)
        c = self._terms[e0]
        h = {e - e0: divide(ci, c) for e, ci in self._terms.items() if e != e0}
        rel = None if self.prec is None else self.prec - Fraction(e0, self.denom)
        return c, e0, h, rel

    def inverse(self, prec=None) -> "PuiseuxSeries":
        """Multiplicative inverse; ``prec`` caps the relative precision for exact input."""
        c, e0, h, rel = self._split_unit()
        if prec is not None:
            rel = _min(rel, Fraction(prec))
        D = self.denom
        if not h:
            inv = {-e0: divide(1, c)}
            return PuiseuxSeries(inv, D, None if rel is None else Fraction(-e0, D) + rel)
        if rel is None:
            raise PrecisionError("inverse of an exact non-monomial needs a precision")
        K = _bound(rel, D)
        g = _unit_power(h, -1, K)
        cinv = divide(1, c)
        return PuiseuxSeries({k - e0: cinv * gk for k, gk in enumerate(g) if gk != 0},
                             D, Fraction(-e0, D) + rel)

    def __truediv__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if not is_scalar(other):
                return NotImplemented
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return PuiseuxSeries({e: divide(c, other) for e, c in self._terms.items()},
                                 self.denom, self.prec)
        if not other._terms:
            raise ZeroDivisionError("division by the zero series")
        cap = None
        if other.prec is None and len(other._terms) > 1:
            # relative precision is then inherited from the numerator
            if self.prec is None:
                raise PrecisionError("quotient of exact series needs a precision")
            cap = self.prec - (self.valuation if self._terms else self.prec)
            if not self._terms:
                return PuiseuxSeries({}, 1, self.prec - other.valuation)
        return self * other.inverse(prec=cap)

    def __rtruediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, a):
        if isinstance(a, int):
            if a < 0:
                return self.inverse() ** (-a)
            result = PuiseuxSeries.one()
            base = self
            while a:
                if a & 1:
                    result = result * base
                a >>= 1
                if a:
                    base = base * base
            return result
        a = Fraction(a)
        if a.denominator == 1:
            return self ** int(a)
        return self._rational_power(a)

    def _rational_power(self, a: Fraction, prec=None) -> "PuiseuxSeries":
        c, e0, h, rel = self._split_unit()
        if prec is not None:
            rel = _min(rel, Fraction(prec))
        D = self.denom
        v = Fraction(e0, D) * a
        lead = nth_root(c, a.denominator) ** a.numerator
        D2 = _lcm(D, v.denominator)
        s = D2 // D
        base = int(v * D2)
        if not h:
            return PuiseuxSeries({base: lead}, D2, None if rel is None else v + rel)
        if rel is None:
            raise PrecisionError("fractional power of an exact non-monomial needs a precision")
        g = _unit_power(h, a, _bound(rel, D))
        return PuiseuxSeries({base + k * s: lead * gk for k, gk in enumerate(g) if gk != 0},
                             D2, v + rel)

    def power(self, a, prec=None) -> "PuiseuxSeries":
        """``self**a`` for rational ``a``, with an optional relative precision cap."""
        a = Fraction(a)
        if a.denominator == 1 and prec is None:
            return self ** int(a)
        return self._rational_power(a, prec)

    def nth_root(self, n: int) -> "PuiseuxSeries":
        """The n-th root whose leading coefficient is :func:`coeff.nth_root` of ours."""
        if n < 1:
            raise ValueError("n must be positive")
        return self._rational_power(Fraction(1, n))

    def __eq__(self, other):
        if is_scalar(other):
            other = PuiseuxSeries.coerce(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        p = _min(self.prec, other.prec)
        diff = (self.truncate(p) if p is not None else self) - \
            (other.truncate(p) if p is not None else other)
        return diff.is_zero()

    # -- analysis ---------------------------------------------------------

    def theta(self) -> "PuiseuxSeries":
        """The Euler derivation ``x d/dx``."""
        D = self.denom
        return PuiseuxSeries({e: c * Fraction(e, D) for e, c in self._terms.items()},
                             D, self.prec)

    def derivative(self) -> "PuiseuxSeries":
        """``d/dx``; lowers precision by one."""
        D = self.denom
        return PuiseuxSeries({e - D: c * Fraction(e, D) for e, c in self._terms.items()},
                             D, None if self.prec is None else self.prec - 1)

    def exp(self, prec=None) -> "PuiseuxSeries":
        if self._terms and min(self._terms) <= 0:
            raise ValuationError("exp needs positive valuation")
        p = _min(self.prec, None if prec is None else Fraction(prec))
        if p is None:
            if not self._terms:
                return PuiseuxSeries.one()
            raise PrecisionError("exp of an exact series needs a precision")
        D = self.denom
        g = _unit_exp(self._terms, _bound(p, D))
        return PuiseuxSeries({k: gk for k, gk in enumerate(g) if gk != 0}, D, p)

    def log(self, prec=None) -> "PuiseuxSeries":
        if not self._terms or min(self._terms) != 0 or self._terms[0] != 1:
            raise ValuationError("log needs constant term 1")
        p = _min(self.prec, None if prec is None else Fraction(prec))
        if len(self._terms) == 1:
            return PuiseuxSeries({}, 1, p)
        if p is None:
            raise PrecisionError("log of an exact series needs a precision")
        D = self.denom
        K = _bound(p, D)
        h = sorted((e, c) for e, c in self._terms.items() if e != 0)
        L = [0] * K
        for k in range(1, K):
            acc = 0
            for j, hj in h:
                if j >= k:
                    break
                if L[k - j] != 0:
                    acc = acc + (k - j) * L[k - j] * hj
            L[k] = self._terms.get(k, 0) - (divide(acc, k) if acc != 0 else 0)
        return PuiseuxSeries({k: c for k, c in enumerate(L) if c != 0}, D, p)

    def compose(self, inner: "PuiseuxSeries") -> "PuiseuxSeries":
        """``self(inner)``; ``inner`` must have positive valuation."""
        inner = PuiseuxSeries.coerce(inner)
        if not inner._terms:
            raise ValuationError("cannot substitute the zero series")
        vi = inner.valuation
        if vi <= 0:
            raise ValuationError("inner series must have positive valuation")
        if len(inner._terms) == 1 and inner.prec is None:
            return self._compose_monomial(inner.leading_coefficient, vi)
        if self.denom != 1:
            raise ValuationError("fractional outer exponents need a monomial inner series")
        ks = sorted(self._terms)
        prec = None if self.prec is None else vi * self.prec
        if inner.prec is not None:
            for k in ks:
                if k != 0:
                    prec = _min(prec, inner.prec + (k - 1) * vi)
        if prec is None and any(k < 0 for k in ks):
            raise PrecisionError("negative powers of an exact inner series need a precision")
        out = PuiseuxSeries({}, 1, prec)
        if 0 in self._terms:
            out = out + self._terms[0]
        pos = [k for k in ks if k > 0]
        neg = sorted((k for k in ks if k < 0), reverse=True)
        for keys, base in ((pos, inner), (neg, None)):
            if not keys:
                continue
            if base is None:
                rel = prec - vi * ks[0] if prec is not None else None
                base = inner.inverse(prec=rel)
            pw, last = PuiseuxSeries.one(), 0
            for k in keys:
                step = abs(k) - last
                pw = pw * (base ** step)
                if prec is not None:
                    pw = pw.truncate(prec)
                last = abs(k)
                out = out + pw * self._terms[k]
        return out

    def _compose_monomial(self, c, a: Fraction) -> "PuiseuxSeries":
        D = self.denom
        root = nth_root(c, D) if D > 1 else c
        e_scale = a / D
        D2 = e_scale.denominator
        out = {}
        for e, ce in self._terms.items():
            out[int(e * e_scale * D2)] = ce * (root ** e if root != 1 else 1)
        return PuiseuxSeries(out, D2, None if self.prec is None else self.prec * a)

    def rescale(self, c) -> "PuiseuxSeries":
        """Substitute ``x -> c*x``."""
        return self._compose_monomial(c, Fraction(1))

    def revert(self) -> "PuiseuxSeries":
        """Compositional inverse of a series ``a x + ...`` (a != 0)."""
        if self.denom != 1 or not self._terms or min(self._terms) != 1:
            raise ValuationError("reversion needs integer exponents and valuation exactly 1")
        if self.prec is None and len(self._terms) > 1:
            raise PrecisionError("reversion of an exact polynomial needs a precision")
        if len(self._terms) == 1:
            c = self._terms[1]
            return PuiseuxSeries({1: divide(1, c)}, 1, self.prec)
        p = self.prec
        K = _bound(p, 1)  # coefficients x^1 .. x^(K-1)
        # phi = x / f, a unit with relative precision p - 1
        phi = (self * PuiseuxSeries.monomial(1, -1)).inverse()
        out = {}
        pw = PuiseuxSeries.one()
        for n in range(1, K):
            pw = pw * phi
            cn = pw[n - 1]
            if cn != 0:
                out[n] = divide(cn, n)
        return PuiseuxSeries(out, 1, p)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "denom": self.denom,
            "prec": None if self.prec is None else to_text(self.prec),
            "terms": [[e, to_text(c)] for e, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PuiseuxSeries":
        prec = data.get("prec")
        return cls({int(e): parse_scalar(c) for e, c in data["terms"]},
                   int(data["denom"]), None if prec is None else Fraction(prec))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PuiseuxSeries":
        return cls.from_dict(json.loads(text))

    def format(self, var: str = "q", max_terms: int = 12) -> str:
        parts = []
        for i, (ex, c) in enumerate(self.items()):
            if i == max_terms:
                parts.append("...")
                break
            ctext = to_text(c)
            if ex == 0:
                parts.append(ctext)
                continue
            mono = var if ex == 1 else f"{var}^{ex}" if ex.denominator == 1 and ex > 0 \
                else f"{var}^({ex})"
            if ctext == "1":
                parts.append(mono)
            elif ctext == "-1":
                parts.append("-" + mono)
            else:
                compound = isinstance(c, QuadExt) and c.a != 0
                parts.append(f"({ctext})*{mono}" if compound else f"{ctext}*{mono}")
        if self.prec is not None:
            p = self.prec
            parts.append(f"O({var}^{p})" if p.denominator == 1 else f"O({var}^({p}))")
        text = " + ".join(parts) if parts else "0"
        return text.replace("+ -", "- ")

    def __repr__(self):
        return self.format()
