"""Rankin-Cohen brackets.

All functions are generic in the value type: anything supporting ``+``, ``*``
and multiplication by exact scalars works, which covers both
:class:`~rrcsys.series.PuiseuxSeries` (with ``derive = theta``) and
:class:`~rrcsys.graded.GradedPoly` (with ``derive = D.apply``).

The coefficients are binomial: ``C(k+n-1, s)`` is the falling factorial
``(k+n-1)(k+n-2)...(k+n-s) / s!``, which for rational weights is the
generalized binomial coefficient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "binomial", "rc_bracket", "canonical_bracket", "WeightedElement",
    "identity_suite", "IdentityReport",
]


def binomial(x, s: int) -> Fraction:
    """Generalized binomial coefficient ``x (x-1) ... (x-s+1) / s!``."""
    if s < 0:
        return Fraction(0)
    out = Fraction(1)
    for i in range(s):
        out = out * (Fraction(x) - i) / (i + 1)
    return out


def _is_zero(v) -> bool:
    if hasattr(v, "is_zero"):
        return v.is_zero()
    return v == 0


def _combine(f_derivs, g_derivs, k, l, n):
    total = None
    for r in range(n + 1):
        s = n - r
        c = binomial(k + n - 1, s) * binomial(l + n - 1, r)
        if c == 0:
            continue
        term = f_derivs[r] * g_derivs[s] * (c if r % 2 == 0 else -c)
        total = term if total is None else total + term
    if total is None:
        total = f_derivs[0] * g_derivs[0] * 0
    return total


def rc_bracket(f, k, g, l, n: int, derive):
    """The standard bracket ``[f, g]_n`` built from a derivation.

    ``[f,g]_n = sum_{r+s=n} (-1)^r C(k+n-1, s) C(l+n-1, r) D^r f D^s g``,
    of weight ``k + l + 2n``.
    """
    if n < 0:
        raise ValueError("bracket order must be non-negative")
    fd, gd = [f], [g]
    for _ in range(n):
        fd.append(derive(fd[-1]))
        gd.append(derive(gd[-1]))
    return _combine(fd, gd, Fraction(k), Fraction(l), n)


def _canonical_derivs(f, k, n, partial, Phi):
    out = [f]
    prev = None
    for r in range(n):
        nxt = partial(out[r])
        if r > 0:
            nxt = nxt + Phi * prev * (r * (r + k - 1))
        prev = out[r]
        out.append(nxt)
    return out


def canonical_bracket(f, k, g, l, n: int, partial, Phi):
    """The canonical bracket built from a derivation ``partial`` and ``Phi``.

    Uses ``f_{r+1} = partial f_r + r (r + k - 1) Phi f_{r-1}`` (and likewise
    for ``g`` with its own weight ``l``), combined with the same binomial
    coefficients as :func:`rc_bracket`.
    """
    if n < 0:
        raise ValueError("bracket order must be non-negative")
    weights = getattr(Phi, "weights", None)
    if weights is not None and not Phi.is_zero() and \
            {w[0] for w in Phi.weights()} != {Fraction(4)}:
        raise ValueError("Phi must have weight 4")
    k, l = Fraction(k), Fraction(l)
    fd = _canonical_derivs(f, k, n, partial, Phi)
    gd = _canonical_derivs(g, l, n, partial, Phi)
    return _combine(fd, gd, k, l, n)


@dataclass(frozen=True)
class WeightedElement:
    """A value together with its weight."""

    value: object
    weight: Fraction

    def bracket(self, other: "WeightedElement", n: int, derive) -> "WeightedElement":
        return WeightedElement(rc_bracket(self.value, self.weight, other.value, other.weight,
                                          n, derive),
                               Fraction(self.weight) + other.weight + 2 * n)

    def __mul__(self, other: "WeightedElement") -> "WeightedElement":
        return WeightedElement(self.value * other.value, Fraction(self.weight) + other.weight)


@dataclass
class IdentityReport:
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name, witness, value):
        self.checks += 1
        if not _is_zero(value):
            self.failures.append((name, witness))


def identity_suite(samples, bracket, max_n: int = 4, labels=None) -> IdentityReport:
    """Check the standard bracket identities on samples ``[(value, weight), ...]``.

    ``bracket(f, k, g, l, n)`` computes ``[f, g]_n``.  Checked exactly:
    antisymmetry ``[f,g]_n = (-1)^n [g,f]_n`` for ``n <= max_n``; the Jacobi
    identity for ``[,]_1``; and the mixed identity
    ``[[g,h]_0,f]_2 - [[h,f]_0,g]_2 + [[g,h]_2,f]_0 - [[h,f]_2,g]_0 = [[f,g]_1,h]_1``.
    """
    labels = labels or [str(i) for i in range(len(samples))]
    items = list(zip(labels, samples))
    report = IdentityReport()
    for (la, (f, k)), (lb, (g, l)) in itertools.product(items, repeat=2):
        for n in range(max_n + 1):
            lhs = bracket(f, k, g, l, n)
            rhs = bracket(g, l, f, k, n)
            report.record(f"antisymmetry n={n}", (la, lb),
                          lhs - rhs if n % 2 == 0 else lhs + rhs)

    def b(x, y, n):
        (fv, fk), (gv, gk) = x, y
        return bracket(fv, fk, gv, gk, n), Fraction(fk) + gk + 2 * n

    for (la, f), (lb, g), (lc, h) in itertools.permutations(items, 3):
        jac = b(b(f, g, 1), h, 1)[0] + b(b(g, h, 1), f, 1)[0] + b(b(h, f, 1), g, 1)[0]
        report.record("jacobi", (la, lb, lc), jac)
        lhs = (b(b(g, h, 0), f, 2)[0] - b(b(h, f, 0), g, 2)[0]
               + b(b(g, h, 2), f, 0)[0] - b(b(h, f, 2), g, 0)[0])
        report.record("mixed", (la, lb, lc), lhs - b(b(f, g, 1), h, 1)[0])
    return report
