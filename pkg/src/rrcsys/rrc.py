"""Ramanujan systems attached to triangle groups: construction, series solutions, checks.

For a signature ``(n, m, k, r)`` with ``N = nm - mk - nr`` the system is

    D P = P^2 - (N/2nm)^2 Q^(m-2r) R^(n-2k)
    D Q = (2n/N) P Q - R^(n-k) Q^(1-r) / m
    D R = (2m/N) P R - Q^(m-r) R^(1-k) / n

Two series realizations are provided:

* ``z``-coordinate (any signature): the local variable is the Hauptmodul
  ``z`` itself, ``y`` is the Q-form solution ``z^(1/2) (1-z)^((n-k)/2n) F``
  and the derivation is ``D = y^2 d/dz``.
* ``q``-coordinate (``k = r = 1``): the local variable is the canonical
  Frobenius nome and the derivation is ``q d/dq``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graded import Derivation, GradedSpec, RRCSystem, rrc_shape_check
from .hypergeom import frobenius_pair, hg_series, nome, ohyama_field, qform, triangle_params
from .series import PuiseuxSeries
from .triangle import (TriangleSignature, dim_pure_weight, generator_weights,
                       monomial_basis)

__all__ = [
    "TriangleRRC", "SeriesSolution", "build_system", "fixed_point", "solve_z", "solve_q",
    "series_residuals", "verify_system", "verify_inversion", "ohyama_roundtrip",
    "hysol_P", "rescale_constant", "rescale", "independence_check", "dimension_check",
]

# extra working precision so that every reported series is honest to `order`
_MARGIN = 3


@dataclass(frozen=True)
class TriangleRRC:
    sig: TriangleSignature
    system: RRCSystem

    @property
    def D(self) -> Derivation:
        return self.system.D

    @property
    def polynomial(self) -> bool:
        """True when no generator appears with a negative exponent."""
        return all(e >= 0 for im in self.D.images for k in im.terms for e in k)


def build_system(sig: TriangleSignature) -> TriangleRRC:
    """The symbolic system in generators ``P``, ``Q``, ``R``.

    For ``(k, r) != (1, 1)`` some exponents are negative; the Laurent ring
    plays the role of adjoining ``1/Q`` and ``1/R``.
    """
    n, m, k, r, N = sig.n, sig.m, sig.k, sig.r, sig.N
    wq, wr = generator_weights(sig)
    spec = GradedSpec([("P", 2), ("Q", wq), ("R", wr)])
    P, Q, R = spec.gens()
    images = [
        P * P - Q ** (m - 2 * r) * R ** (n - 2 * k) * Fraction(N, 2 * n * m) ** 2,
        P * Q * Fraction(2 * n, N) - R ** (n - k) * Q ** (1 - r) / m,
        P * R * Fraction(2 * m, N) - Q ** (m - r) * R ** (1 - k) / n,
    ]
    return TriangleRRC(sig, rrc_shape_check(Derivation(spec, images), "P"))


def fixed_point(sig: TriangleSignature):
    """Cusp values ``(N/2mn, 1, 1)``; asserted to annihilate every constant term."""
    point = {"P": Fraction(sig.N, 2 * sig.m * sig.n), "Q": Fraction(1), "R": Fraction(1)}
    D = build_system(sig).D
    for name in D.spec.names:
        value = D.image(name).evaluate(point)
        if value != 0:
            raise AssertionError(f"fixed point fails for {name}: {value}")
    return point["P"], point["Q"], point["R"]


@dataclass
class SeriesSolution:
    sig: TriangleSignature
    coordinate: str  # "z" or "q"
    P: PuiseuxSeries
    Q: PuiseuxSeries
    R: PuiseuxSeries
    order: int
    extras: dict = field(default_factory=dict)

    def derive(self, f: PuiseuxSeries) -> PuiseuxSeries:
        if self.coordinate == "z":
            return self.extras["Y2"] * f.derivative()
        return f.theta()

    def values(self) -> dict:
        return {"P": self.P, "Q": self.Q, "R": self.R}

    def to_dict(self) -> dict:
        out = self.sig.to_dict()
        out.update({"coordinate": self.coordinate, "order": self.order,
                    "P": self.P.to_dict(), "Q": self.Q.to_dict(), "R": self.R.to_dict()})
        return out


def _qform_solution(sig: TriangleSignature, prec: int):
    """``(F, y, Y2)`` with ``y = z^(1/2) (1-z)^((n-k)/2n) F`` and ``Y2 = y^2``."""
    F = hg_series(triangle_params(sig.n, sig.m, sig.k, sig.r), prec)
    z = PuiseuxSeries.variable()
    one_minus = (1 - z).truncate(prec)
    y = PuiseuxSeries.monomial(1, Fraction(1, 2)) * \
        one_minus.power(Fraction(sig.n - sig.k, 2 * sig.n)) * F
    return F, y, y * y


def solve_z(sig: TriangleSignature, order: int) -> SeriesSolution:
    """Series solution in the Hauptmodul ``z`` with derivation ``y^2 d/dz``.

    ``Q = (Y2^n z^-n (1-z)^-(n-k))^(1/N)``, ``R = (Y2^m z^-m (1-z)^-r)^(1/N)`` and
    ``P = (N/2mn) Y2 Delta'/Delta`` with ``Delta = Q^m - R^n``.
    """
    n, m, k, r, N = sig.n, sig.m, sig.k, sig.r, sig.N
    prec = order + _MARGIN
    F, y, Y2 = _qform_solution(sig, prec)
    z = PuiseuxSeries.variable()
    one_minus = (1 - z).truncate(prec)
    Q = (Y2 ** n * z ** (-n) * one_minus ** (-(n - k))).nth_root(N)
    R = (Y2 ** m * z ** (-m) * one_minus ** (-r)).nth_root(N)
    Delta = Q ** m - R ** n
    P = Y2 * Delta.derivative() / Delta * Fraction(N, 2 * m * n)
    return SeriesSolution(sig, "z", P.truncate(order), Q.truncate(order), R.truncate(order),
                          order, {"F": F, "y": y, "Y2": Y2, "Delta": Delta})


def hysol_P(sol: SeriesSolution) -> PuiseuxSeries:
    """The three-term expression for ``P`` in the z-coordinate.

    ``(t'' phi' - t' phi'') / (2 t' phi'^2)`` becomes ``Y2'/2`` since
    ``t'/phi' = Y2``; the remaining terms are
    ``-(m+r)/2m * Y2/(z-1) + (mk+nr)/2mn * Y2/(z(z-1))``.
    """
    sig = sol.sig
    n, m, k, r = sig.n, sig.m, sig.k, sig.r
    Y2 = sol.extras["Y2"]
    z = PuiseuxSeries.variable()
    zm1 = (z - 1).truncate(Y2.prec)
    return (Y2.derivative() / 2 - Y2 / zm1 * Fraction(m + r, 2 * m)
            + Y2 / (z * zm1) * Fraction(m * k + n * r, 2 * m * n))


def solve_q(n: int, m: int, order: int) -> SeriesSolution:
    """Series solution in the canonical Frobenius nome (``k = r = 1``).

    ``t`` is the reversion of the nome, ``Q = ((theta t)^n / (t^n (1-t)^(n-1)))^(1/N)``,
    ``R = ((theta t)^m / (t^m (1-t)))^(1/N)`` and ``P = (N/2mn) theta(Delta)/Delta``.
    """
    sig = TriangleSignature(n, m, 1, 1)
    N = sig.N
    prec = order + _MARGIN
    sol = frobenius_pair(triangle_params(n, m, 1, 1), prec)
    qt = nome(sol).truncate(prec)
    t = qt.revert()
    dt = t.theta()
    one_minus = 1 - t
    Q = (dt ** n / (t ** n * one_minus ** (n - 1))).nth_root(N)
    R = (dt ** m / (t ** m * one_minus)).nth_root(N)
    Delta = Q ** m - R ** n
    P = Delta.theta() / Delta * Fraction(N, 2 * m * n)
    return SeriesSolution(sig, "q", P.truncate(order), Q.truncate(order), R.truncate(order),
                          order, {"t": t, "nome": qt, "frobenius": sol})


def rescale_constant(series: PuiseuxSeries, target: PuiseuxSeries):
    """``c`` with ``series(c q)`` and ``target`` agreeing at the first non-constant term."""
    for e, c in series.items():
        if e > 0:
            return target[e] / c if e == 1 else _root_ratio(target[e] / c, e)
    raise ValueError("series has no non-constant term")


def _root_ratio(x, e):
    from .coeff import nth_root
    if e.denominator != 1:
        raise ValueError("rescaling needs an integer exponent")
    return nth_root(x, int(e))


def rescale(sol: SeriesSolution, c) -> SeriesSolution:
    """Substitute ``q -> c q`` in all three series (nome change)."""
    return SeriesSolution(sol.sig, sol.coordinate, sol.P.rescale(c), sol.Q.rescale(c),
                          sol.R.rescale(c), sol.order, dict(sol.extras, rescaled_by=c))


def series_residuals(sol: SeriesSolution, trc: TriangleRRC | None = None) -> dict:
    trc = trc or build_system(sol.sig)
    values = sol.values()
    return {name: sol.derive(values[name]) - trc.D.image(name).evaluate(values)
            for name in trc.D.spec.names}


def verify_system(sol: SeriesSolution, trc: TriangleRRC | None = None) -> dict:
    """Residual report: every residual must vanish to the achieved order."""
    res = series_residuals(sol, trc)
    achieved = min(r.prec for r in res.values())
    return {
        "ok": all(r.is_zero() for r in res.values()),
        "achieved_order": int(achieved) if achieved.denominator == 1 else str(achieved),
        "nonzero": {n: str(r.valuation) for n, r in res.items() if not r.is_zero()},
        "signature": sol.sig.to_dict(), "coordinate": sol.coordinate,
    }


def verify_inversion(sig: TriangleSignature, order: int, base: SeriesSolution | None = None):
    """The two inversion identities as exact identities of series in ``z``.

    (i)  ``F_j^2 = Q_j^(N_j/n)``;
    (ii) ``F_j^2 = Q_1^(N_j/n + r_j - 1) R_1^(k_j - 1) / phi_j'`` where, relative
         to ``phi_1' = 1``, ``1/phi_j' = Y2_j / Y2_1``.
    """
    sol = solve_z(sig, order)
    F = sol.extras["F"].truncate(order)
    report = {"signature": sig.to_dict(), "order": order}
    report["single"] = F * F == sol.Q.power(Fraction(sig.N, sig.n))
    if base is None:
        base = solve_z(TriangleSignature(sig.n, sig.m), order)
    a = Fraction(sig.N, sig.n) + sig.r - 1
    b = sig.k - 1
    inv_phi = sol.extras["Y2"] / base.extras["Y2"]
    rhs = base.Q.power(a) * base.R ** b * inv_phi
    report["cross"] = F * F == rhs
    report["cross_exponents"] = [str(a), str(b)]
    report["ok"] = report["single"] and report["cross"]
    return report


def ohyama_roundtrip(sig: TriangleSignature, order: int) -> dict:
    """Rebuild ``P, Q, R`` from Ohyama's ``X, Y, Z`` and compare with :func:`solve_z`.

    ``X = D log y``, ``Y = D log(y/z)``, ``Z = D log(y/(z-1))`` with ``D = y^2 d/dz``.
    """
    n, m, k, r, N = sig.n, sig.m, sig.k, sig.r, sig.N
    sol = solve_z(sig, order)
    y, Y2 = sol.extras["y"], sol.extras["Y2"]
    z = PuiseuxSeries.variable()
    zm1 = (z - 1).truncate(y.prec)

    def dlog(f):
        return Y2 * f.derivative() / f

    X, Y, Z = dlog(y), dlog(y / z), dlog(y / zm1)
    P = (X * (n * (m - r)) + Y * (m * k + n * r) + Z * (m * (n - k))) / (2 * m * n)
    Q = ((X - Y) ** k * (Z - Y) ** (n - k)).nth_root(N)
    R = ((X - Y) ** (m - r) * (Z - Y) ** r).nth_root(N)
    field_ = ohyama_field(qform(triangle_params(n, m, k, r)))
    values = {"X": X, "Y": Y, "Z": Z}
    ohy = {name: Y2 * values[name].derivative() - field_.image(name).evaluate(values)
           for name in ("X", "Y", "Z")}
    report = {
        "signature": sig.to_dict(), "order": order,
        "P": P == sol.P, "Q": Q == sol.Q, "R": R == sol.R,
        "ohyama_residuals_zero": all(v.is_zero() for v in ohy.values()),
        "ohyama_order": str(min(v.prec for v in ohy.values())),
    }
    report["ok"] = all(report[x] for x in ("P", "Q", "R", "ohyama_residuals_zero"))
    return report


def independence_check(sol: SeriesSolution) -> bool:
    """``Q^(mN)`` and ``R^(nN)`` are linearly independent over the constants.

    Both start with 1, and their difference has positive valuation while being
    nonzero, so no constant ratio relates them.
    """
    sig = sol.sig
    a, b = sol.Q ** (sig.m * sig.N), sol.R ** (sig.n * sig.N)
    diff = a - b
    return a.valuation == 0 and b.valuation == 0 and not diff.is_zero() and diff.valuation > 0


def dimension_check(sol: SeriesSolution, w) -> dict:
    """Rank of the monomials ``Q^a R^b`` of weight ``w`` versus the dimension formula."""
    import sympy

    sig = sol.sig
    basis = monomial_basis(sig, w)
    rows = []
    for a, b in basis:
        s = sol.Q ** a * sol.R ** b
        rows.append([s[i] for i in range(min(len(basis) + 2, sol.order))])
    rank = sympy.Matrix(rows).rank() if rows else 0
    return {"w": str(w), "rank": rank, "dim": dim_pure_weight(sig, w),
            "ok": rank == dim_pure_weight(sig, w) == len(basis)}
