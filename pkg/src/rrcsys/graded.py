"""Weighted (Laurent) polynomials, derivations and Ramanujan systems.

Polynomials live over a :class:`GradedSpec`, an ordered list of generator
names each carrying a weight vector.  Exponents may be negative, so the ring
is really ``K[t_i, t_i^-1]``; this is how systems needing inverted generators
(``1/Q``, ``1/F``) are represented.

A :class:`Derivation` stores one image per generator and acts on everything
else through the Leibniz rule.  On top of that sit the structural checks for
Ramanujan systems of Rankin-Cohen type (RRC systems)::

    D t1 = t1^2 + p1,     D tj = wj t1 tj + pj     (pj free of t1)
"""

from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .coeff import QuadExt, divide, is_scalar, to_text

__all__ = [
    "GradedSpec", "GradedPoly", "Derivation", "RRCSystem", "ShapeViolation", "ParseError",
    "weight_operator", "lowering_operator", "sl2_check", "rrc_shape_check",
    "canonical_from_rrc", "extend_algebra", "special_element_form",
    "bigraded_serre_check", "parse_system", "parse_poly", "format_system",
]


class ShapeViolation(ValueError):
    """A derivation image does not have the required shape."""

    def __init__(self, generator, term, reason):
        super().__init__(f"{generator}: {reason} (term {term})")
        self.generator = generator
        self.term = term
        self.reason = reason


class ParseError(ValueError):
    """Malformed system or polynomial text."""


def _weight(w) -> tuple:
    if isinstance(w, (tuple, list)):
        return tuple(Fraction(x) for x in w)
    return (Fraction(w),)


class GradedSpec:
    """Ordered generators with weight vectors of a common rank."""

    __slots__ = ("names", "weights", "_index")

    def __init__(self, generators):
        names, weights = [], []
        for name, w in generators:
            names.append(str(name))
            weights.append(_weight(w))
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        if weights and len({len(w) for w in weights}) != 1:
            raise ValueError("all weights must have the same rank")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def rank(self) -> int:
        return len(self.weights[0]) if self.weights else 1

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def weight_of(self, name: str) -> tuple:
        return self.weights[self.index(name)]

    def monomial_weight(self, exps) -> tuple:
        total = [Fraction(0)] * self.rank
        for e, w in zip(exps, self.weights):
            if e:
                for i, wi in enumerate(w):
                    total[i] += e * wi
        return tuple(total)

    def gen(self, name: str) -> "GradedPoly":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return GradedPoly(self, {tuple(exps): Fraction(1)})

    def gens(self):
        return [self.gen(n) for n in self.names]

    def without(self, name: str) -> "GradedSpec":
        return GradedSpec([(n, w) for n, w in zip(self.names, self.weights) if n != name])

    def __eq__(self, other):
        return isinstance(other, GradedSpec) and \
            (self.names, self.weights) == (other.names, other.weights)

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        ws = ", ".join(f"{n}:{_wtext(w)}" for n, w in zip(self.names, self.weights))
        return f"GradedSpec({ws})"


def _wtext(w) -> str:
    if len(w) == 1:
        return to_text(w[0])
    return "(" + ", ".join(to_text(x) for x in w) + ")"


class GradedPoly:
    """Sparse Laurent polynomial ``sum c * prod t_i^e_i`` over a spec."""

    __slots__ = ("spec", "terms")
    __hash__ = None

    def __init__(self, spec: GradedSpec, terms=None):
        self.spec = spec
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, spec, c):
        return cls(spec, {(0,) * len(spec): c})

    def _coerce(self, other):
        if isinstance(other, GradedPoly):
            if other.spec != self.spec:
                raise ValueError("polynomials over different specs")
            return other
        if is_scalar(other):
            return GradedPoly.constant(self.spec, other)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GradedPoly(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.spec, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return GradedPoly(self.spec, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return GradedPoly(self.spec, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return GradedPoly(self.spec, {k: divide(v, other) for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        q = self.divide_exact(other)
        if q is None:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.terms) != 1:
                raise ArithmeticError("negative powers only of monomials")
            (k, v), = self.terms.items()
            return GradedPoly(self.spec, {tuple(-e for e in k): divide(1, v)}) ** (-n)
        result = GradedPoly.constant(self.spec, Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, GradedPoly) else other
        if other is None:
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def divide_exact(self, other: "GradedPoly", max_steps: int = 100000):
        """The quotient ``self / other`` in the Laurent ring, or None if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return GradedPoly(self.spec, {})
        lead_g = max(other.terms)
        low_g = min(other.terms)
        low_f = min(self.terms)
        floor = tuple(a - b for a, b in zip(low_f, low_g))
        cg = other.terms[lead_g]
        rem = dict(self.terms)
        quo = {}
        for _ in range(max_steps):
            if not rem:
                return GradedPoly(self.spec, quo)
            lead = max(rem)
            mono = tuple(a - b for a, b in zip(lead, lead_g))
            if mono < floor:
                return None
            c = divide(rem[lead], cg)
            quo[mono] = c
            for k, v in other.terms.items():
                kk = tuple(a + b for a, b in zip(mono, k))
                nv = rem.get(kk, 0) - c * v
                if nv == 0:
                    rem.pop(kk, None)
                else:
                    rem[kk] = nv
        return None

    # -- inspection -------------------------------------------------------

    def weights(self) -> set:
        return {self.spec.monomial_weight(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self):
        """The common weight (a tuple) of a nonzero homogeneous polynomial."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return next(iter(ws))

    def degree_in(self, name: str) -> set:
        i = self.spec.index(name)
        return {k[i] for k in self.terms}

    def free_of(self, name: str) -> bool:
        return self.degree_in(name) <= {0}

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), Fraction(0))

    def monomial_coefficient(self, **powers):
        exps = [0] * len(self.spec)
        for n, e in powers.items():
            exps[self.spec.index(n)] = e
        return self.coefficient(exps)

    def change_spec(self, spec: GradedSpec) -> "GradedPoly":
        """Re-express over another spec containing every generator in use."""
        out = {}
        for k, v in self.terms.items():
            new = [0] * len(spec)
            for name, e in zip(self.spec.names, k):
                if e:
                    if name not in spec.names:
                        raise ValueError(f"generator {name} not present in target spec")
                    new[spec.index(name)] = e
            out[tuple(new)] = v
        return GradedPoly(spec, out)

    def evaluate(self, values: dict):
        """Substitute ring elements (series, scalars, polys) for the generators."""
        total = None
        powers = {}
        for k, c in sorted(self.terms.items()):
            term = None
            for name, e in zip(self.spec.names, k):
                if e == 0:
                    continue
                key = (name, e)
                if key not in powers:
                    powers[key] = values[name] ** e
                term = powers[key] if term is None else term * powers[key]
            term = c if term is None else term * c
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(n if e == 1 else f"{n}^{e}" if e > 0 else f"{n}^({e})"
                            for n, e in zip(self.spec.names, k) if e)
            ctext = to_text(c)
            if isinstance(c, QuadExt):
                ctext = f"({ctext})"
            if not mono:
                parts.append(ctext)
            elif ctext == "1":
                parts.append(mono)
            elif ctext == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{ctext}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class Derivation:
    """A derivation given by its generator images; ``shift`` is its degree."""

    __slots__ = ("spec", "images", "shift")

    def __init__(self, spec: GradedSpec, images, shift=None):
        if isinstance(images, dict):
            images = [images.get(n, GradedPoly(spec, {})) for n in spec.names]
        images = [GradedPoly.constant(spec, x) if is_scalar(x) else x for x in images]
        if len(images) != len(spec):
            raise ValueError("one image per generator is required")
        for im in images:
            if im.spec != spec:
                raise ValueError("image over a different spec")
        self.spec = spec
        self.images = tuple(images)
        self.shift = _weight(shift) if shift is not None else self._infer_shift()

    def _infer_shift(self):
        shifts = set()
        for w, im in zip(self.spec.weights, self.images):
            for ws in im.weights():
                shifts.add(tuple(a - b for a, b in zip(ws, w)))
        return next(iter(shifts)) if len(shifts) == 1 else None

    def image(self, name: str) -> GradedPoly:
        return self.images[self.spec.index(name)]

    def __call__(self, f):
        return self.apply(f)

    def apply(self, f: GradedPoly) -> GradedPoly:
        if is_scalar(f):
            return GradedPoly(self.spec, {})
        if f.spec != self.spec:
            raise ValueError("spec mismatch")
        out = {}
        for k, c in f.terms.items():
            for i, e in enumerate(k):
                if e == 0 or self.images[i].is_zero():
                    continue
                base = list(k)
                base[i] -= 1
                ce = c * e
                for k2, v2 in self.images[i].terms.items():
                    kk = tuple(a + b for a, b in zip(base, k2))
                    out[kk] = out.get(kk, 0) + ce * v2
        return GradedPoly(self.spec, out)

    def is_zero(self) -> bool:
        return all(im.is_zero() for im in self.images)

    def _combine(self, other, fn):
        if other.spec != self.spec:
            raise ValueError("spec mismatch")
        return Derivation(self.spec, [fn(a, b) for a, b in zip(self.images, other.images)])

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return Derivation(self.spec, [-a for a in self.images], self.shift)

    def __mul__(self, c):
        if not is_scalar(c):
            return NotImplemented
        return Derivation(self.spec, [a * c for a in self.images], self.shift)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.spec == other.spec and \
            self.images == other.images

    __hash__ = None

    def lie_bracket(self, other: "Derivation") -> "Derivation":
        """``[R, S] = R S - S R``, with images ``R(S_i) - S(R_i)``."""
        if other.spec != self.spec:
            raise ValueError("spec mismatch")
        images = [self.apply(s) - other.apply(r) for r, s in zip(self.images, other.images)]
        shift = None
        if self.shift is not None and other.shift is not None:
            shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        return Derivation(self.spec, images, shift)

    def __str__(self):
        return "\n".join(f"D({n}) = {im}" for n, im in zip(self.spec.names, self.images))

    __repr__ = __str__


def weight_operator(spec: GradedSpec, component: int = 0) -> Derivation:
    """``W = sum w_j t_j d/dt_j`` (using one component of the weight vector)."""
    imgs = [spec.gen(n) * w[component] for n, w in zip(spec.names, spec.weights)]
    return Derivation(spec, imgs, (0,) * spec.rank)


def lowering_operator(spec: GradedSpec, t1: str | None = None) -> Derivation:
    """``delta = -d/dt1`` for the designated weight-2 generator ``t1``."""
    t1 = t1 if t1 is not None else spec.names[0]
    if spec.rank != 1 or spec.weight_of(t1) != (2,):
        raise ValueError(f"{t1} is not a designated generator of weight 2")
    imgs = {t1: GradedPoly.constant(spec, Fraction(-1))}
    return Derivation(spec, imgs, (-2,))


@dataclass
class Sl2Report:
    """Residuals of the three sl2 relations; every one must vanish."""

    residuals: dict

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "residuals": {k: {n: str(im) for n, im in zip(v.spec.names, v.images)}
                              for k, v in self.residuals.items()}}


def sl2_check(D: Derivation, W: Derivation | None = None,
              delta: Derivation | None = None) -> Sl2Report:
    """Check ``[D, delta] = W``, ``[W, D] = 2D`` and ``[W, delta] = -2 delta``."""
    W = W if W is not None else weight_operator(D.spec)
    delta = delta if delta is not None else lowering_operator(D.spec)
    return Sl2Report({
        "[D,delta]-W": D.lie_bracket(delta) - W,
        "[W,D]-2D": W.lie_bracket(D) - D * 2,
        "[W,delta]+2delta": W.lie_bracket(delta) + delta * 2,
    })


@dataclass
class RRCSystem:
    """A derivation of RRC shape together with its decomposition."""

    D: Derivation
    t1: str
    p: dict  # generator name -> t1-free part of its image

    @property
    def spec(self) -> GradedSpec:
        return self.D.spec

    @property
    def others(self) -> list:
        return [n for n in self.spec.names if n != self.t1]


def rrc_shape_check(D: Derivation, t1: str | None = None) -> RRCSystem:
    """Validate the RRC shape and return the decomposed system.

    Raises :class:`ShapeViolation` naming the generator and offending term.
    """
    spec = D.spec
    t1 = t1 if t1 is not None else spec.names[0]
    if spec.rank != 1:
        raise ShapeViolation(t1, None, "RRC shape needs a rank-one grading")
    if spec.weight_of(t1) != (2,):
        raise ShapeViolation(t1, None, "designated generator must have weight 2")
    i1 = spec.index(t1)
    p = {}
    for i, name in enumerate(spec.names):
        image = D.images[i]
        w = spec.weights[i][0]
        lead = [0] * len(spec)
        lead[i1] += 1
        lead[i] += 1
        expected = Fraction(1) if i == i1 else w
        got = image.coefficient(lead)
        if got != expected:
            raise ShapeViolation(name, str(spec.gen(t1) * spec.gen(name)),
                                 f"coefficient {to_text(got)} instead of {to_text(expected)}")
        rest = image - GradedPoly(spec, {tuple(lead): expected})
        for k, c in rest.terms.items():
            term = str(GradedPoly(spec, {k: c}))
            if k[i1] != 0:
                raise ShapeViolation(name, term, f"remainder depends on {t1}")
            if spec.monomial_weight(k) != (w + 2,):
                raise ShapeViolation(name, term, f"remainder not of weight {to_text(w + 2)}")
        p[name] = rest
    return RRCSystem(D, t1, p)


def canonical_from_rrc(system: RRCSystem):
    """The Ramanujan-Serre derivation on the t1-free subalgebra and ``Phi = p1``."""
    M = system.spec.without(system.t1)
    partial = Derivation(M, [system.p[n].change_spec(M) for n in M.names], (2,))
    return partial, system.p[system.t1].change_spec(M)


def extend_algebra(partial: Derivation, Phi: GradedPoly, t1: str = "P",
                   position: int = 0) -> RRCSystem:
    """Adjoin ``t1`` of weight 2 with ``D f = partial f + k t1 f`` and ``D t1 = t1^2 + Phi``."""
    M = partial.spec
    if not Phi.is_zero() and Phi.weights() != {(Fraction(4),)}:
        raise ValueError("Phi must be homogeneous of weight 4")
    gens = list(zip(M.names, M.weights))
    gens.insert(position, (t1, (2,)))
    spec = GradedSpec(gens)
    P = spec.gen(t1)
    images = {t1: P * P + Phi.change_spec(spec)}
    for n, w in zip(M.names, M.weights):
        images[n] = P * spec.gen(n) * w[0] + partial.image(n).change_spec(spec)
    return rrc_shape_check(Derivation(spec, images), t1)


def special_element_form(system: RRCSystem, F: GradedPoly, extend: bool = True,
                         inverse_name: str = "U") -> dict:
    """Read the system off the brackets of a special element ``F``.

    Checks ``p_j = [F, t_j]_1 / (w F)`` and ``p_1 = [F, F]_2 / (w^2 (w+1) F^2)``
    using the canonical brackets of the system.  When a quotient is not exact
    and ``extend`` is set, the system with ``1/F`` adjoined is returned instead.
    """
    from .brackets import canonical_bracket

    partial, Phi = canonical_from_rrc(system)
    M = partial.spec
    F = F.change_spec(M)
    w = F.weight[0]
    report = {"weight": w, "mismatches": [], "divisible": True, "brackets": {}}
    first = {}
    for n, wn in zip(M.names, M.weights):
        b = canonical_bracket(F, w, M.gen(n), wn[0], 1, partial.apply, Phi)
        first[n] = b
        report["brackets"][n] = b
        q = b.divide_exact(F * w)
        if q is None:
            report["divisible"] = False
        elif q != partial.image(n):
            report["mismatches"].append(n)
    b2 = canonical_bracket(F, w, F, w, 2, partial.apply, Phi)
    report["brackets"]["[F,F]_2"] = b2
    q = b2.divide_exact(F * F * (w * w * (w + 1)))
    if q is None:
        report["divisible"] = False
    elif q != Phi:
        report["mismatches"].append(system.t1)
    report["ok"] = report["divisible"] and not report["mismatches"]
    if not report["divisible"]:
        if not extend:
            raise ArithmeticError("special element does not divide its brackets")
        gens = [(system.t1, (2,))] + list(zip(M.names, M.weights)) + [(inverse_name, (-w,))]
        spec = GradedSpec(gens)
        P, U = spec.gen(system.t1), spec.gen(inverse_name)
        images = {system.t1: P * P + b2.change_spec(spec) * U * U / (w * w * (w + 1)),
                  inverse_name: P * U * (-w)}
        for n, wn in zip(M.names, M.weights):
            images[n] = P * spec.gen(n) * wn[0] + first[n].change_spec(spec) * U / w
        report["extended_system"] = rrc_shape_check(Derivation(spec, images), system.t1)
    return report


def bigraded_serre_check(D: Derivation, p1: str = "P1", p2: str = "P2",
                         phi: GradedPoly | None = None) -> dict:
    """Check the bi-graded Serre shape of a rank-two system.

    Each modular generator ``f`` of weight ``(k, l)`` must satisfy
    ``D f = (k P1 + l phi P2) f + p_f`` with ``p_f`` free of ``P1, P2`` and of
    weight ``(k+2, l)``.  The quasi-modular generators follow Riccati shapes:
    ``D P1 = P1^2 + p`` with ``p`` of weight ``(4, 0)`` and
    ``D P2 = phi P2^2 + p`` with ``p`` of weight ``(2, 2)``.
    """
    spec = D.spec
    if spec.rank != 2:
        raise ValueError("bi-graded check needs a rank-two spec")
    if phi is None:
        phi = spec.gen("B") ** 2 * spec.gen("Q2")
    P1, P2 = spec.gen(p1), spec.gen(p2)
    i1, i2 = spec.index(p1), spec.index(p2)
    results = {}
    for name, w in zip(spec.names, spec.weights):
        f = spec.gen(name)
        if name == p1:
            rest, target = D.image(name) - P1 * P1, (Fraction(4), Fraction(0))
        elif name == p2:
            rest, target = D.image(name) - phi * P2 * P2, (Fraction(2), Fraction(2))
        else:
            k, l = w
            rest = D.image(name) - (P1 * k + phi * P2 * l) * f
            target = (k + 2, l)
        bad = [str(GradedPoly(spec, {m: c})) for m, c in rest.terms.items()
               if m[i1] or m[i2] or spec.monomial_weight(m) != target]
        results[name] = {"ok": not bad, "remainder": str(rest), "offending": bad,
                         "target_weight": [to_text(x) for x in target]}
    return {"ok": all(r["ok"] for r in results.values()), "generators": results}


# -- text format -----------------------------------------------------------

class _Eval(ast.NodeVisitor):
    def __init__(self, spec):
        self.spec = spec

    def generic_visit(self, node):
        raise ParseError(f"unsupported syntax: {ast.dump(node)}")

    def visit_Expression(self, node):
        return self.visit(node.body)

    def visit_Constant(self, node):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        raise ParseError(f"unsupported literal {node.value!r}")

    def visit_Name(self, node):
        if node.id not in self.spec.names:
            raise ParseError(f"unknown generator {node.id!r}")
        return self.spec.gen(node.id)

    def visit_UnaryOp(self, node):
        v = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ParseError("unsupported unary operator")

    def visit_Call(self, node):
        if not (isinstance(node.func, ast.Name) and node.func.id == "sqrt" and len(node.args) == 1):
            raise ParseError("only sqrt(d) calls are allowed")
        d = self.visit(node.args[0])
        if not isinstance(d, Fraction) or d.denominator != 1:
            raise ParseError("sqrt needs an integer argument")
        return QuadExt(0, 1, int(d))

    def visit_BinOp(self, node):
        a, b = self.visit(node.left), self.visit(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if not is_scalar(b):
                raise ParseError("division only by scalars")
            return divide(a, b)
        if isinstance(node.op, ast.Pow):
            if not isinstance(b, Fraction) or b.denominator != 1:
                raise ParseError("exponents must be integers")
            return a ** int(b)
        raise ParseError("unsupported operator")


def parse_poly(spec: GradedSpec, text: str) -> GradedPoly:
    """Parse ``+ - * / ^`` expressions over the spec's generators."""
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    try:
        value = _Eval(spec).visit(tree)
    except ArithmeticError as exc:
        raise ParseError(str(exc)) from None
    if is_scalar(value):
        value = GradedPoly.constant(spec, value)
    return value


def _parse_weight(text: str):
    text = text.strip()
    try:
        if text.startswith("("):
            return tuple(Fraction(x.strip()) for x in text.strip("()").split(","))
        return (Fraction(text),)
    except ValueError:
        raise ParseError(f"bad weight {text!r}") from None


def parse_system(text: str):
    """Parse ``name : weight = expression`` lines into ``(spec, derivation)``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, expr = line.partition("=")
        name, sep2, weight = head.partition(":")
        if not sep or not sep2 or not name.strip().isidentifier():
            raise ParseError(f"line {lineno}: expected 'name : weight = expression'")
        rows.append((name.strip(), _parse_weight(weight), expr))
    if not rows:
        raise ParseError("empty system")
    try:
        spec = GradedSpec([(n, w) for n, w, _ in rows])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    images = [parse_poly(spec, expr) for _, _, expr in rows]
    return spec, Derivation(spec, images)


def format_system(D: Derivation) -> str:
    return "\n".join(f"{n} : {_wtext(w)} = {im}"
                     for n, w, im in zip(D.spec.names, D.spec.weights, D.images))


def random_homogeneous(spec: GradedSpec, weight, rng, terms: int = 3, coeff_range: int = 5):
    """A random homogeneous polynomial of the given rank-one weight (may be zero)."""
    target = Fraction(weight)
    ws = [w[0] for w in spec.weights]
    monos = []
    bound = [int(target // w) if w > 0 else 0 for w in ws]
    for exps in itertools.product(*(range(b + 1) for b in bound)):
        if sum(e * w for e, w in zip(exps, ws)) == target:
            monos.append(exps)
    out = {}
    for exps in rng.sample(monos, min(terms, len(monos))):
        out[exps] = Fraction(rng.randint(-coeff_range, coeff_range))
    return GradedPoly(spec, out)
