"""Exact q-expansions of classical forms and the example verification bundles.

Every :class:`CatalogForm` records its *nome*: the power of ``e^{2 pi i tau}``
represented by one unit of the series variable.  ``nome=1`` is the usual
``q = e^{2 pi i tau}``; ``nome=1/2`` means ``q = e^{pi i tau}``, the local
parameter of the level-two triangle group.  Arithmetic between forms with
different nomes is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coeff import conjugate, sqrt
from .series import PuiseuxSeries

__all__ = [
    "CatalogForm", "NomeMismatch", "sigma", "eisenstein", "delta", "theta",
    "residuals", "verify_ramanujan", "verify_33", "quasimodular_coordinates",
    "lookup", "CATALOG_NAMES", "s33_forms", "S33_TEXT", "HAT33_TEXT", "S33_LISTED",
]


class NomeMismatch(ValueError):
    """Two catalog forms with different nome conventions were combined."""


@dataclass(frozen=True)
class CatalogForm:
    name: str
    series: PuiseuxSeries
    weight: Fraction
    nome: Fraction = Fraction(1)

    def _check(self, other):
        if isinstance(other, CatalogForm):
            if other.nome != self.nome:
                raise NomeMismatch(f"{self.name} (nome {self.nome}) and "
                                   f"{other.name} (nome {other.nome})")
            return other.series
        return other

    def __add__(self, other):
        s = self._check(other)
        return CatalogForm(f"({self.name}+{getattr(other, 'name', other)})",
                           self.series + s, self.weight, self.nome)

    def __sub__(self, other):
        s = self._check(other)
        return CatalogForm(f"({self.name}-{getattr(other, 'name', other)})",
                           self.series - s, self.weight, self.nome)

    def __mul__(self, other):
        s = self._check(other)
        w = self.weight + (other.weight if isinstance(other, CatalogForm) else 0)
        return CatalogForm(f"{self.name}*{getattr(other, 'name', other)}",
                           self.series * s, w, self.nome)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return CatalogForm(f"{self.name}^{e}", self.series ** e, self.weight * e, self.nome)

    def to_dict(self) -> dict:
        return {"name": self.name, "weight": str(self.weight), "nome": str(self.nome),
                "series": self.series.to_dict()}


def sigma(k: int, n: int) -> list:
    """``[sigma_k(0), ..., sigma_k(n-1)]`` with ``sigma_k(0) = 0``."""
    out = [0] * n
    for d in range(1, n):
        dk = d ** k
        for mult in range(d, n, d):
            out[mult] += dk
    return out


def _stretch(coeffs, order, nome):
    """Series in q with x = q^(1/nome) from integer-exponent coefficients in x."""
    scale = Fraction(1) / nome
    terms = {}
    for i, c in enumerate(coeffs):
        e = i * scale
        if e >= order:
            break
        if c:
            terms[e] = c
    return _from_fraction_exponents(terms, order)


def _from_fraction_exponents(terms: dict, order) -> PuiseuxSeries:
    D = 1
    for e in terms:
        D = D * Fraction(e).denominator // _gcd(D, Fraction(e).denominator)
    return PuiseuxSeries({int(Fraction(e) * D): c for e, c in terms.items()}, D, Fraction(order))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


_EIS = {2: (1, -24), 4: (3, 240), 6: (5, -504)}


@lru_cache(maxsize=None)
def eisenstein(k: int, order: int, nome=Fraction(1)) -> CatalogForm:
    """``E_k`` for ``k`` in {2, 4, 6} from divisor sums, known to ``O(q^order)``."""
    if k not in _EIS:
        raise ValueError("only E2, E4, E6 are available")
    nome = Fraction(nome)
    power, c = _EIS[k]
    n = int(order * nome) + 2
    coeffs = [Fraction(1)] + [Fraction(c * s) for s in sigma(power, n)[1:]]
    return CatalogForm(f"E{k}", _stretch(coeffs, order, nome), Fraction(k), nome)


@lru_cache(maxsize=None)
def delta(order: int) -> CatalogForm:
    """``Delta = (E4^3 - E6^2) / 1728 = q - 24 q^2 + 252 q^3 - ...``."""
    E4, E6 = eisenstein(4, order), eisenstein(6, order)
    s = (E4.series ** 3 - E6.series ** 2) / 1728
    return CatalogForm("DELTA", s, Fraction(12))


@lru_cache(maxsize=None)
def theta(which: int, order: int, nome=Fraction(1)) -> CatalogForm:
    """Jacobi theta ``theta_3 = sum x^(n^2)`` or ``theta_2 = sum_{n in Z+1/2} x^(n^2)``.

    Here ``x = e^{2 pi i tau} = q^(1/nome)``, so ``theta(2, ..., nome=1/2)``
    is ``2 q^(1/2) (1 + q^4 + q^12 + ...)``.
    """
    nome = Fraction(nome)
    scale = 1 / nome
    terms = {}
    if which == 3:
        n = 0
        while n * n * scale < order:
            terms[n * n * scale] = Fraction(2 if n else 1)
            n += 1
    elif which == 2:
        n = 0
        while Fraction((2 * n + 1) ** 2, 4) * scale < order:
            terms[Fraction((2 * n + 1) ** 2, 4) * scale] = Fraction(2)
            n += 1
    else:
        raise ValueError("only theta_2 and theta_3 are available")
    return CatalogForm(f"THETA{which}", _from_fraction_exponents(terms, order),
                       Fraction(1, 2), nome)


CATALOG_NAMES = ("E2", "E4", "E6", "DELTA", "THETA2", "THETA3")


def lookup(name: str, order: int) -> CatalogForm:
    """A catalog form by name (``E2``, ``E4``, ``E6``, ``DELTA``, ``THETA2``, ``THETA3``)."""
    name = name.upper()
    if name in ("E2", "E4", "E6"):
        return eisenstein(int(name[1]), order)
    if name == "DELTA":
        return delta(order)
    if name in ("THETA2", "THETA3"):
        return theta(int(name[-1]), order)
    raise KeyError(f"unknown catalog form {name!r}")


def residuals(D, values: dict, derive=PuiseuxSeries.theta) -> dict:
    """``derive(v_i) - D(t_i)(v)`` for every generator of a system."""
    return {name: derive(values[name]) - D.image(name).evaluate(values)
            for name in D.spec.names}


def _residual_report(res: dict) -> dict:
    order = min((r.prec for r in res.values() if r.prec is not None), default=None)
    return {"ok": all(r.is_zero() for r in res.values()),
            "residual_max_order": None if order is None else int(order)
            if order.denominator == 1 else str(order),
            "nonzero": sorted(n for n, r in res.items() if not r.is_zero())}


def verify_ramanujan(order: int) -> dict:
    """Residuals of the classical system with ``(E2/12, E4, E6)`` and ``q d/dq``."""
    from .graded import parse_system

    _, D = parse_system("""
        P : 2 = P^2 - Q/144
        Q : 4 = 4*P*Q - R/3
        R : 6 = 6*P*R - Q^2/2
    """)
    values = {"P": eisenstein(2, order).series / 12,
              "Q": eisenstein(4, order).series,
              "R": eisenstein(6, order).series}
    return _residual_report(residuals(D, values))


S33_TEXT = """
P : 2 = P^2 - Q*R/36
Q : 2 = 2*P*Q - R^2/3
R : 2 = 2*P*R - Q^2/3
"""

HAT33_TEXT = """
P : 2 = P^2 - R/36
Q : 2 = 2*P*Q - (Q^2 - 2*R)/3
R : 4 = 4*P*R - (Q^3 - 3*Q*R)/3
"""

# reference expansions for the level-two triangle group, through q^5
S33_LISTED = {
    "P": [Fraction(1, 6), 0, -4, 0, -12, 0],
    "Q": [1, 8 * sqrt(-3), 24, 32 * sqrt(-3), 24, 48 * sqrt(-3)],
    "R": [1, -8 * sqrt(-3), 24, -32 * sqrt(-3), 24, -48 * sqrt(-3)],
}


def s33_forms(order: int) -> dict:
    """``P = E2(q^2)/6`` and the theta-built ``Q``, ``R`` in ``q = e^{pi i tau}``."""
    half = Fraction(1, 2)
    t3 = theta(3, order, half).series
    t2 = theta(2, order, half).series
    a, b = t3 ** 4 + t2 ** 4, t3 ** 2 * t2 ** 2 * (2 * sqrt(-3))
    return {"P": eisenstein(2, order, half).series / 6, "Q": a + b, "R": a - b,
            "theta_sum": a}


def verify_33(order: int) -> dict:
    """The full check bundle for the level-two triangle group ``(3, 3)``."""
    from .graded import parse_system

    half = Fraction(1, 2)
    f = s33_forms(order)
    P, Q, R = f["P"], f["Q"], f["R"]
    report = {}
    listed_ok = all(f[name][i] == c for name, cs in S33_LISTED.items()
                    for i, c in enumerate(cs))
    report["listed_expansions"] = {"ok": listed_ok}
    _, D = parse_system(S33_TEXT)
    report["system"] = _residual_report(residuals(D, {"P": P, "Q": Q, "R": R}))
    _, H = parse_system(HAT33_TEXT)
    # the hat system holds for Qhat = Q + R (twice the theta sum)
    hat = {"P": P, "Q": Q + R, "R": Q * R}
    report["hat_system"] = _residual_report(residuals(H, hat))
    halved = _residual_report(residuals(H, {"P": P, "Q": (Q + R) / 2, "R": Q * R}))
    report["hat_system_with_half_sum"] = {"ok": halved["ok"], "nonzero": halved["nonzero"]}
    E4x = eisenstein(4, order, half).series
    report["product_is_E4"] = {"ok": Q * R == E4x}
    report["half_sum_is_theta_sum"] = {"ok": (Q + R) / 2 == f["theta_sum"]}
    report["conjugate_symmetry"] = {"ok": Q.map_coefficients(conjugate) == R}

    def integral(s):
        return all(isinstance(c, (int, Fraction)) and Fraction(c).denominator == 1
                   for _, c in s.items())

    report["integrality"] = {"ok": integral(Q + R) and integral(Q * R) and integral(P - Fraction(1, 6))}
    report["ok"] = all(v["ok"] for k, v in report.items() if k != "hat_system_with_half_sum")
    report["order"] = order
    return report


def quasimodular_coordinates(series: PuiseuxSeries, weight: int, order: int):
    """Coordinates of a q-series in the monomials ``E2^c E4^a E6^b`` of one weight.

    Returns ``{(c, a, b): coefficient}`` or None when the series is not in the
    span (decided by exact linear algebra on the first ``order`` coefficients).
    """
    import sympy

    E2, E4, E6 = (eisenstein(k, order).series for k in (2, 4, 6))
    monos = [(c, a, b) for c in range(weight // 2 + 1) for a in range(weight // 4 + 1)
             for b in range(weight // 6 + 1) if 2 * c + 4 * a + 6 * b == weight]
    cols = []
    for c, a, b in monos:
        s = E2 ** c * E4 ** a * E6 ** b
        cols.append([s[i] for i in range(order)])
    A = sympy.Matrix(order, len(monos), lambda i, j: cols[j][i])
    rhs = sympy.Matrix([series[i] for i in range(order)])
    try:
        sol, params = A.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        raise ArithmeticError("quasimodular monomials are not independent to this order")
    return {m: Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1]))
            for m, v in zip(monos, sol)}
