"""Exact coefficient rings shared by the whole package.

Two rings are supported: arbitrary-precision rationals (plain
``fractions.Fraction``) and sparse multivariate polynomials in a fixed tuple
of formal parameters with rational coefficients.  A computation fixes one
ring for all of its operands; mixing rings raises ``RingMismatchError``.

The module also provides ``Poly``, the dense univariate polynomial in the
main variable ``t`` whose coefficients live in one of these rings.  Row
polynomials, operator coefficient polynomials and recurrence data are all
``Poly`` values.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "RingMismatchError",
    "NotAUnitError",
    "ParamPoly",
    "Poly",
    "RationalRing",
    "PolyRing",
    "QQ",
    "param_ring",
    "ring_of",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "ring_inv",
    "substitute",
    "substitute_poly",
    "parse_rational",
    "format_rational",
    "format_coeff",
    "format_poly",
    "ring_to_json",
    "ring_from_json",
]


class RingMismatchError(TypeError):
    """Operands belong to different coefficient rings."""


class NotAUnitError(ArithmeticError):
    """The element has no multiplicative inverse in its ring."""


def parse_rational(text):
    """Parse "p/q" (or "p") into a Fraction."""
    return Fraction(str(text).strip())


def format_rational(q):
    """Canonical "p/q" string, "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class ParamPoly:
    """Sparse polynomial in declared parameters with Fraction coefficients.

    ``vars`` is the fixed, ordered tuple of parameter names; ``terms`` maps
    exponent tuples (one exponent per parameter) to nonzero coefficients.
    Values are immutable once built; all arithmetic returns new objects.
    Integers and Fractions coerce to constant polynomials, so mixed
    scalar/polynomial arithmetic stays inside the ring.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        object.__setattr__(self, "vars", tuple(vars))
        clean = {}
        nvars = len(self.vars)
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(
                    f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                )
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, Fraction(0)) + coef
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    @classmethod
    def constant(cls, vars, value):
        vars = tuple(vars)
        value = Fraction(value)
        if not value:
            return cls(vars)
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        if name not in vars:
            raise KeyError(f"unknown parameter {name!r}; declared: {vars}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {exp: Fraction(1)})

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other.vars != self.vars:
                raise RingMismatchError(
                    f"parameter rings differ: {self.vars} vs {other.vars}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.constant(self.vars, other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(exp) for exp in self.terms)

    def constant_value(self):
        """The value of a constant polynomial, as a Fraction."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(exp) for exp in self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            acc = terms.get(exp, Fraction(0)) + coef
            if acc:
                terms[exp] = acc
            else:
                terms.pop(exp, None)
        return ParamPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exp, Fraction(0)) + c1 * c2
                if acc:
                    terms[exp] = acc
                else:
                    terms.pop(exp, None)
        return ParamPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a ParamPoly")
        result = ParamPoly.constant(self.vars, 1)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, ParamPoly):
            return self * _param_inv(self._coerce(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not self.terms:
                return Fraction(other) == 0
            return self.is_constant() and self.constant_value() == Fraction(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in display order: total degree descending, then lex on exponents."""
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def substitute(self, assignment):
        """Evaluate at rational parameter values; every parameter must be assigned."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise KeyError(f"missing assignment for parameter(s) {missing}")
        values = [Fraction(assignment[v]) for v in self.vars]
        total = Fraction(0)
        for exp, coef in self.terms.items():
            term = coef
            for val, e in zip(values, exp):
                if e:
                    term *= val ** e
            total += term
        return total

    def __repr__(self):
        return f"ParamPoly({format_coeff(self)!r}, vars={self.vars})"

    def __str__(self):
        return format_coeff(self)


def _param_inv(p):
    if not p.terms:
        raise NotAUnitError("zero is not invertible")
    if not p.is_constant():
        raise NotAUnitError(f"{p} is not a unit (non-constant polynomial)")
    return ParamPoly.constant(p.vars, Fraction(1) / p.constant_value())


class RationalRing:
    """The field of arbitrary-precision rationals; elements are Fractions."""

    vars = ()

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        if isinstance(x, ParamPoly):
            raise RingMismatchError("cannot coerce a ParamPoly into the rational ring")
        raise TypeError(f"cannot coerce {x!r} into the rational ring")

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        if not a:
            raise NotAUnitError("zero is not invertible")
        return Fraction(1) / Fraction(a)

    def element_to_json(self, a):
        return format_rational(a)

    def element_from_json(self, obj):
        return parse_rational(obj)

    def to_json(self):
        return "rational"

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("RationalRing")

    def __repr__(self):
        return "QQ"


class PolyRing:
    """Polynomials over the rationals in a fixed tuple of parameters."""

    def __init__(self, names):
        self.vars = tuple(names)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate parameter names in {self.vars}")

    @property
    def zero(self):
        return ParamPoly(self.vars)

    @property
    def one(self):
        return ParamPoly.constant(self.vars, 1)

    def gen(self, name):
        return ParamPoly.variable(self.vars, name)

    def gens(self):
        return tuple(self.gen(v) for v in self.vars)

    def coerce(self, x):
        if isinstance(x, ParamPoly):
            if x.vars != self.vars:
                raise RingMismatchError(
                    f"parameter rings differ: {self.vars} vs {x.vars}"
                )
            return x
        if isinstance(x, (int, Fraction)):
            return ParamPoly.constant(self.vars, x)
        if isinstance(x, str):
            if x in self.vars:
                return self.gen(x)
            return ParamPoly.constant(self.vars, parse_rational(x))
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return bool(a) and a.is_constant()

    def inv(self, a):
        return _param_inv(self.coerce(a))

    def element_to_json(self, a):
        terms = [
            {"exp": list(exp), "coef": format_rational(coef)}
            for exp, coef in a.sorted_terms()
        ]
        return {"vars": list(self.vars), "terms": terms}

    def element_from_json(self, obj):
        if tuple(obj.get("vars", self.vars)) != self.vars:
            raise RingMismatchError(
                f"parameter rings differ: {self.vars} vs {tuple(obj['vars'])}"
            )
        terms = {tuple(t["exp"]): parse_rational(t["coef"]) for t in obj["terms"]}
        return ParamPoly(self.vars, terms)

    def to_json(self):
        return {"params": list(self.vars)}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.vars == self.vars

    def __hash__(self):
        return hash(("PolyRing", self.vars))

    def __repr__(self):
        return f"QQ[{', '.join(self.vars)}]"


QQ = RationalRing()


def param_ring(*names):
    return PolyRing(names)


def ring_of(a):
    """The ring an element belongs to."""
    if isinstance(a, (int, Fraction)):
        return QQ
    if isinstance(a, ParamPoly):
        return PolyRing(a.vars)
    raise TypeError(f"{a!r} is not a ring element")


def ring_to_json(ring):
    return ring.to_json()


def ring_from_json(obj):
    if obj == "rational":
        return QQ
    if isinstance(obj, dict) and "params" in obj:
        return PolyRing(obj["params"])
    raise ValueError(f"unknown ring encoding {obj!r}")


def _require_same_ring(a, b):
    ra, rb = ring_of(a), ring_of(b)
    if ra != rb:
        raise RingMismatchError(f"mixed-ring operands: {ra} vs {rb}")


def ring_add(a, b):
    _require_same_ring(a, b)
    return a + b


def ring_mul(a, b):
    _require_same_ring(a, b)
    return a * b


def ring_neg(a):
    return -a


def ring_inv(a):
    """Multiplicative inverse; raises NotAUnitError when none exists."""
    return ring_of(a).inv(a)


def substitute(p, assignment):
    """Evaluate a ParamPoly at rational parameter values."""
    if isinstance(p, (int, Fraction)):
        return Fraction(p)
    return p.substitute(assignment)


class Poly:
    """Dense univariate polynomial in t with coefficients in a fixed ring.

    Coefficients are stored ascending with trailing zeros removed; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        object.__setattr__(self, "ring", ring)
        cs = [ring.coerce(c) for c in coeffs]
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def one(cls, ring):
        return cls(ring, (ring.one,))

    @classmethod
    def t(cls, ring):
        return cls(ring, (ring.zero, ring.one))

    @classmethod
    def monomial(cls, ring, k, coef=1):
        return cls(ring, (ring.zero,) * k + (ring.coerce(coef),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatchError(f"mixed-ring polynomials: {self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            if not self.coeffs or not other.coeffs:
                return Poly.zero(self.ring)
            out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if self.ring.is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(self.ring, out)
        c = self.ring.coerce(other)
        return Poly(self.ring, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return Poly(self.ring, (self.ring.zero,) * k + self.coeffs)

    def derivative(self, times=1):
        p = self
        for _ in range(times):
            p = Poly(p.ring, [p.coeffs[i] * i for i in range(1, len(p.coeffs))])
        return p

    def __call__(self, x):
        """Horner evaluation at a ring element."""
        x = self.ring.coerce(x)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def substitute_poly(p, assignment):
    """Specialize the parameters of a Poly's coefficients, landing in QQ[t]."""
    return Poly(QQ, [substitute(c, assignment) for c in p.coeffs])


def _format_monomial(vars, exp):
    parts = []
    for name, e in zip(vars, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_coeff(a):
    """Human-readable form of a ring element ("2*z^2 + 4*y", "5/6", ...)."""
    if isinstance(a, (int, Fraction)):
        return format_rational(a)
    if not a.terms:
        return "0"
    chunks = []
    for exp, coef in a.sorted_terms():
        mono = _format_monomial(a.vars, exp)
        if not mono:
            text = format_rational(abs(coef))
        elif abs(coef) == 1:
            text = mono
        else:
            text = f"{format_rational(abs(coef))}*{mono}"
        sign = "-" if coef < 0 else "+"
        chunks.append((sign, text))
    first_sign, first_text = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_text
    for sign, text in chunks[1:]:
        out += f" {sign} {text}"
    return out


def _coeff_term_count(a):
    if isinstance(a, ParamPoly):
        return len(a.terms)
    return 1


def format_poly(p, var="t"):
    """Render a Poly in descending powers, paper-display style."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if p.ring.is_zero(c):
            continue
        if k == 0:
            body = format_coeff(c)
            sign = "-" if body.startswith("-") else "+"
            if body.startswith("-"):
                body = body[1:]
        else:
            tpow = var if k == 1 else f"{var}^{k}"
            if c == p.ring.one:
                sign, body = "+", tpow
            elif c == -p.ring.one:
                sign, body = "-", tpow
            else:
                text = format_coeff(c)
                sign = "+"
                if _coeff_term_count(c) > 1:
                    body = f"({text})*{tpow}"
                else:
                    if text.startswith("-"):
                        sign, text = "-", text[1:]
                    body = f"{text}*{tpow}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
