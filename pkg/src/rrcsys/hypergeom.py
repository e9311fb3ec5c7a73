"""Gauss hypergeometric series, the Frobenius log partner, the nome and Ohyama's field.

The hypergeometric equation is

    z(1-z) y'' + (gamma - (alpha+beta+1) z) y' - alpha beta y = 0.

For ``gamma = 1`` the second Frobenius solution at ``z = 0`` is
``y0 log z + h`` with ``h(0) = 0``; the pair ``(y0, h)`` is all we ever store,
so no logarithm needs to be represented as a series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graded import Derivation, GradedSpec
from .series import PuiseuxSeries

__all__ = [
    "HGParams", "QFormParams", "LogSolution", "hg_series", "hg_residual", "triangle_params",
    "qform", "y_transform_exponents", "frobenius_pair", "log_residual", "nome",
    "ohyama_field",
]


@dataclass(frozen=True)
class HGParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


@dataclass(frozen=True)
class QFormParams:
    a: Fraction
    b: Fraction
    c: Fraction


@dataclass(frozen=True)
class LogSolution:
    """The Frobenius pair ``y0`` and ``h``, meaning ``y0 * log z + h``."""

    y0: PuiseuxSeries
    h: PuiseuxSeries
    params: HGParams


def hg_series(p: HGParams, order: int) -> PuiseuxSeries:
    """``F(alpha, beta; gamma; z) = sum (alpha)_n (beta)_n / ((gamma)_n n!) z^n``."""
    if p.gamma.denominator == 1 and p.gamma <= 0:
        raise ValueError("gamma must not be a non-positive integer")
    coeffs = [Fraction(1)]
    for n in range(order - 1):
        c = coeffs[-1] * (p.alpha + n) * (p.beta + n) / ((p.gamma + n) * (n + 1))
        coeffs.append(c)
    return PuiseuxSeries.from_coeffs(coeffs, prec=order)


def _operator(p: HGParams, y: PuiseuxSeries) -> PuiseuxSeries:
    z = PuiseuxSeries.variable()
    d1 = y.derivative()
    d2 = d1.derivative()
    return z * (1 - z) * d2 + (p.gamma - (p.alpha + p.beta + 1) * z) * d1 - p.alpha * p.beta * y


def hg_residual(p: HGParams, y: PuiseuxSeries) -> PuiseuxSeries:
    """The hypergeometric operator applied to ``y`` (zero for a solution)."""
    return _operator(p, y)


def triangle_params(n: int, m: int, k: int, r: int) -> HGParams:
    """Parameters ``((1 + r/m - k/n)/2, (1 - k/n - r/m)/2, 1)`` of a hyperbolic triangle."""
    if min(n, m, k, r) <= 0:
        raise ValueError("n, m, k, r must be positive")
    if Fraction(k, n) + Fraction(r, m) >= 1:
        raise ValueError(f"k/n + r/m must be < 1, got {k}/{n} + {r}/{m}")
    return HGParams((1 + Fraction(r, m) - Fraction(k, n)) / 2,
                    (1 - Fraction(k, n) - Fraction(r, m)) / 2, 1)


def qform(p: HGParams) -> QFormParams:
    """Coefficients of ``Q(z) = a/z^2 + b/(z-1)^2 + c/(z(z-1))``."""
    al, be, ga = p.alpha, p.beta, p.gamma
    return QFormParams(ga * (ga - 2) / 4,
                       ((al + be - ga) ** 2 - 1) / 4,
                       (ga * (al + be - ga + 1) - 2 * al * be) / 2)


def y_transform_exponents(p: HGParams):
    """Exponents of ``z`` and ``1 - z`` turning ``F`` into a Q-form solution."""
    return p.gamma / 2, (p.alpha + p.beta - p.gamma + 1) / 2


def frobenius_pair(p: HGParams, order: int) -> LogSolution:
    """Analytic solution ``y0`` and log partner ``h`` at ``z = 0`` (``gamma = 1``)."""
    if p.gamma != 1:
        raise ValueError("the Frobenius pair is implemented for gamma = 1 only")
    for x in (p.alpha, p.beta):
        if x.denominator == 1 and x <= 0:
            raise ValueError("alpha and beta must not be non-positive integers "
                             "(terminating series need a different log partner)")
    y0 = hg_series(p, order)
    coeffs = [Fraction(0)]
    harmonic = Fraction(0)
    for n in range(1, order):
        j = n - 1
        harmonic += 1 / (p.alpha + j) + 1 / (p.beta + j) - Fraction(2, 1 + j)
        coeffs.append(y0[n] * harmonic)
    return LogSolution(y0, PuiseuxSeries.from_coeffs(coeffs, prec=order), p)


def log_residual(sol: LogSolution) -> PuiseuxSeries:
    """Log-free part of the operator applied to ``y0 log z + h``.

    With ``gamma = 1`` and ``L[y0] = 0`` this is
    ``L[h] + 2 (1 - z) y0' - (alpha + beta) y0``.
    """
    p = sol.params
    z = PuiseuxSeries.variable()
    return _operator(p, sol.h) + 2 * (1 - z) * sol.y0.derivative() - (p.alpha + p.beta) * sol.y0


def nome(sol: LogSolution) -> PuiseuxSeries:
    """The canonical nome ``z * exp(h / y0) = z + ...``."""
    return PuiseuxSeries.variable() * (sol.h / sol.y0).exp()


def ohyama_field(qp: QFormParams, names=("X", "Y", "Z")) -> Derivation:
    """Ohyama's vector field: ``dX = X^2 + q(X, Y, Z)`` and likewise for Y, Z.

    The common part is ``a (X-Y)^2 + b (X-Z)^2 + c (X-Y)(X-Z)``.
    """
    spec = GradedSpec([(n, 2) for n in names])
    X, Y, Z = spec.gens()
    common = (X - Y) ** 2 * qp.a + (X - Z) ** 2 * qp.b + (X - Y) * (X - Z) * qp.c
    return Derivation(spec, [X * X + common, Y * Y + common, Z * Z + common], (2,))
