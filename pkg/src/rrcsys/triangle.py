"""Combinatorics of the hyperbolic triangle groups ``Delta(n, m, infinity)``.

A :class:`TriangleSignature` ``(n, m, k, r)`` describes one component of the
modular embedding: the triangle with angles ``(0, k pi/n, r pi/m)``.  From it
follow the generator weights ``2n/N`` and ``2m/N`` (``N = nm - mk - nr``),
dimensions of spaces of pure weight, monomial bases and multipliers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "TriangleSignature", "AmbiguousEmbedding", "candidate_embeddings", "generator_weights",
    "is_admissible", "dim_pure_weight", "monomial_basis", "multipliers", "monomial_rotation",
    "valence_degree", "group_generators", "dims_table", "SHIPPED_GROUPS",
]

SHIPPED_GROUPS = ((2, 3), (3, 3), (2, 5), (2, 7))


class AmbiguousEmbedding(ValueError):
    """The Galois fold produced no, or more than one, hyperbolic triangle."""


@dataclass(frozen=True, order=True)
class TriangleSignature:
    n: int
    m: int
    k: int = 1
    r: int = 1

    def __post_init__(self):
        if self.n < 2 or self.m < 2 or self.n > self.m:
            raise ValueError("need 2 <= n <= m")
        if self.k < 1 or self.r < 1:
            raise ValueError("k and r must be positive")
        if Fraction(self.k, self.n) + Fraction(self.r, self.m) >= 1:
            raise ValueError(f"k/n + r/m must be < 1 for {self}")

    @property
    def N(self) -> int:
        return self.n * self.m - self.m * self.k - self.n * self.r

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "k": self.k, "r": self.r, "N": self.N}

    def __str__(self):
        return f"({self.n},{self.m},{self.k},{self.r})"


def _fold(x: int, n: int) -> int:
    x %= 2 * n
    return min(x, 2 * n - x)


def candidate_embeddings(n: int, m: int) -> list:
    """Signatures of the components of the modular embedding of ``Delta(n, m, inf)``.

    Each unit ``u`` modulo ``2 lcm(n, m)`` (up to sign) conjugates the cosines
    ``cos(pi/n)``, ``cos(pi/m)`` to ``cos(pi u/n)``, ``cos(pi u/m)``; the angle
    numerators are folded into ``[0, n]``, ``[0, m]``.  With ``k' = f`` the
    unique hyperbolic choice of ``r' in {g, m - g}`` is kept; only when neither
    works is ``k' = n - f`` tried.
    """
    if Fraction(1, n) + Fraction(1, m) >= 1 or n > m:
        raise ValueError("need n <= m and 1/n + 1/m < 1")
    L = n * m // math.gcd(n, m)
    found = []
    for u in range(1, L + 1):
        if math.gcd(u, 2 * L) != 1:
            continue
        fn, fm = _fold(u, n), _fold(u, m)
        options = set()
        for ks in ((fn,), (n - fn,)):
            options = {(k, r) for k in ks for r in (fm, m - fm)
                       if k > 0 and r > 0 and Fraction(k, n) + Fraction(r, m) < 1}
            if options:
                break
        if len(options) != 1:
            raise AmbiguousEmbedding(f"u={u} gives {sorted(options) or 'no'} hyperbolic choices")
        sig = TriangleSignature(n, m, *options.pop())
        if sig not in found:
            found.append(sig)
    found.sort(key=lambda s: (s != TriangleSignature(n, m), s.k, s.r))
    return found


def generator_weights(sig: TriangleSignature):
    """Pure weights ``(2n/N, 2m/N)`` of the generators ``Q`` and ``R``."""
    return Fraction(2 * sig.n, sig.N), Fraction(2 * sig.m, sig.N)


def is_admissible(sig: TriangleSignature, w) -> bool:
    """``w N`` must be a non-negative multiple of ``2 gcd(n, m)``."""
    x = Fraction(w) * sig.N
    g = math.gcd(sig.n, sig.m)
    return x >= 0 and x.denominator == 1 and x.numerator % (2 * g) == 0


def dim_pure_weight(sig: TriangleSignature, w) -> int:
    """Dimension of the space of pure weight ``w`` (closed formula).

    With ``g = gcd(n, m)``, ``n' = n/g``, ``m' = m/g`` and ``x = g w N / (2mn)``
    the dimension is ``1 + floor(x)`` when ``frac(x) = a/n' + b/m'`` for some
    non-negative integers ``a, b`` and ``floor(x)`` otherwise; inadmissible
    weights give 0.  For coprime ``n, m`` this is the classical valence count.
    """
    if not is_admissible(sig, w):
        return 0
    g = math.gcd(sig.n, sig.m)
    n1, m1 = sig.n // g, sig.m // g
    x = Fraction(g) * Fraction(w) * sig.N / (2 * sig.m * sig.n)
    fl = math.floor(x)
    frac = x - fl
    representable = any(frac == Fraction(a, n1) + Fraction(b, m1)
                        for a in range(n1) for b in range(m1))
    return fl + 1 if representable else fl


def monomial_basis(sig: TriangleSignature, w) -> list:
    """All ``(a, b) >= 0`` with ``2an + 2bm = wN``, ordered by ``a``."""
    x = Fraction(w) * sig.N
    if x < 0 or x.denominator != 1:
        return []
    total = x.numerator
    return [(a, (total - 2 * a * sig.n) // (2 * sig.m))
            for a in range(total // (2 * sig.n) + 1)
            if (total - 2 * a * sig.n) % (2 * sig.m) == 0]


def multipliers(sig: TriangleSignature):
    """Rotation numbers of ``v_Q(S)`` and ``v_R(S)``: ``-k/N`` and ``-(m-r)/N`` mod 1."""
    return Fraction(-sig.k, sig.N) % 1, Fraction(-(sig.m - sig.r), sig.N) % 1


def monomial_rotation(sig: TriangleSignature, a: int, b: int) -> Fraction:
    rq, rr = multipliers(sig)
    return (a * rq + b * rr) % 1


def valence_degree(sigs, weights) -> Fraction:
    """Weighted zero count ``sum w_j N_j / (2mn)`` of a form of the given weights."""
    sigs, weights = list(sigs), list(weights)
    if len(sigs) != len(weights):
        raise ValueError("signatures and weights must be aligned")
    return sum((Fraction(w) * s.N / (2 * s.m * s.n) for s, w in zip(sigs, weights)),
               Fraction(0))


@dataclass(frozen=True)
class Generators:
    """The matrices ``S``, ``T`` with cosine data; ``symbols`` maps opaque names to minimal polynomials."""

    S: object
    T: object
    lam: object
    symbols: dict

    @property
    def exact(self) -> bool:
        return not self.symbols


def _two_cos(k: int, n: int, symbols: dict):
    import sympy

    value = sympy.nsimplify(2 * sympy.cos(sympy.pi * k / n))
    if value.is_Rational:
        return value
    name = f"c_{k}_{n}"
    x = sympy.Symbol("x")
    symbols[name] = str(sympy.minimal_polynomial(2 * sympy.cos(sympy.pi * k / n), x))
    return sympy.Symbol(name)


def group_generators(n: int, m: int, k: int = 1, r: int = 1) -> Generators:
    """``S = (-2cos(pi k/n), 1; -1, 0)`` and ``T = (1, lambda; 0, 1)``.

    ``lambda = 2cos(pi r/m) + 2cos(pi k/n)``.  Rational cosines are exact;
    irrational ones become symbols ``c_k_n`` whose minimal polynomial is
    recorded in ``symbols``.
    """
    import sympy

    symbols = {}
    cn = _two_cos(k, n, symbols)
    cm = _two_cos(r, m, symbols)
    lam = cm + cn
    S = sympy.Matrix([[-cn, 1], [-1, 0]])
    T = sympy.Matrix([[1, lam], [0, 1]])
    return Generators(S, T, lam, symbols)


def dims_table(sig: TriangleSignature, wmax) -> list:
    """Admissible weights up to ``wmax`` with dimension, basis and rotations."""
    g = math.gcd(sig.n, sig.m)
    step = Fraction(2 * g, sig.N)
    rows = []
    w = Fraction(0)
    while w <= Fraction(wmax):
        basis = monomial_basis(sig, w)
        rots = [monomial_rotation(sig, a, b) for a, b in basis]
        common = rots[0] if rots and all(x == rots[0] for x in rots) else None
        rows.append({
            "w": str(w), "dim": dim_pure_weight(sig, w),
            "basis": [list(ab) for ab in basis],
            "rotation": None if common is None else str(common),
            "rotations": [str(x) for x in rots],
        })
        w += step
    return rows
