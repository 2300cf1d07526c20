"""Exact scalar arithmetic: multivariate Laurent fractions and truncated hbar-series.

Every symbolic quantity in this package is a `Scalar`: a normalized fraction
num/den of multivariate polynomials with exact rational coefficients, over a
fixed registry of invertible parameter symbols.  Inverse powers such as q^-1
are stored as fractions with monomial denominators, so the fraction field of
the polynomial ring coincides with the fraction field of the Laurent ring.

Two registries are used throughout:

* ``QUANTUM_PARAMS`` -- the multiplicative parameters (q, the q-power symbols
  qs, qt, qe, qr, qw, qn, and the six Hecke parameters t, t0, tn, u0, un, v).
  Each q-power symbol is an independent invertible generator, not an actual
  power of q.
* ``DEGEN_PARAMS`` -- the additive exponents (sigma, tau, eta, ...) and
  m1..m6 appearing in quasi-classical limits.

`TruncatedSeries` implements arithmetic in D[[hbar]]/(hbar^{K+1}) where D is
the fraction field over ``DEGEN_PARAMS``; `to_hbar_series` is the ring
homomorphism sending each multiplicative parameter p to exp(hbar * e(p)) for a
linear exponent form e(p).
"""

from __future__ import annotations

import math
from fractions import Fraction

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring as _sympy_ring

QUANTUM_PARAMS = ("q", "qs", "qt", "qe", "qr", "qw", "qn",
                  "t", "t0", "tn", "u0", "un", "v")
DEGEN_PARAMS = ("sigma", "tau", "eta", "rho", "omega", "nu", "mu", "lam",
                "m1", "m2", "m3", "m4", "m5", "m6")


class ScalarError(ArithmeticError):
    pass


def _as_rational(x):
    """Coerce int / Fraction / mpq to the ground domain QQ."""
    if isinstance(x, (int, Fraction)):
        return QQ(x)
    return x


class ScalarField:
    """Fraction field of Q[names], with every name treated as invertible."""

    def __init__(self, names):
        self.names = tuple(names)
        objs = _sympy_ring(",".join(self.names), QQ, lex)
        self.ring = objs[0]
        self._gens = {name: g for name, g in zip(self.names, objs[1:])}
        self._index = {name: i for i, name in enumerate(self.names)}
        self.zero = Scalar(self, self.ring.zero, self.ring.one)
        self.one = Scalar(self, self.ring.one, self.ring.one)

    def gen(self, name):
        if name not in self._gens:
            raise KeyError("unknown parameter %r (registry: %s)"
                           % (name, ", ".join(self.names)))
        return Scalar(self, self._gens[name], self.ring.one)

    def __call__(self, x):
        """Coerce an int or Fraction into the field."""
        if isinstance(x, Scalar):
            if x.field is not self:
                raise ScalarError("scalar from a different field")
            return x
        return Scalar(self, self.ring.ground_new(_as_rational(x)), self.ring.one)

    def monomial(self, exponents, coeff=1):
        """Laurent monomial coeff * prod(gen_i^e_i) with integer exponents."""
        pos = tuple(max(e, 0) for e in exponents)
        neg = tuple(max(-e, 0) for e in exponents)
        num = self.ring({pos: _as_rational(coeff)})
        den = self.ring({neg: QQ(1)})
        return _make(self, num, den)

    def parse(self, text):
        return _parse_scalar(self, text)


def _strip_term_denominator(num, den):
    """Normalize num/den when den is a single term: remove the common
    monomial factor and make den monic."""
    dmono, dcoeff = den.LT
    if any(dmono):
        common = list(dmono)
        for m in num.monoms():
            for i, e in enumerate(m):
                if e < common[i]:
                    common[i] = e
            if not any(common):
                break
        if any(common):
            ring = num.ring
            shift = tuple(common)
            num = ring({tuple(a - b for a, b in zip(m, shift)): c
                        for m, c in num.items()})
            dmono = tuple(a - b for a, b in zip(dmono, shift))
    ring = num.ring
    if dcoeff != 1:
        num = num.quo_ground(dcoeff)
    return num, ring({dmono: QQ(1)})


def _normalize(field, num, den):
    if not den:
        raise ZeroDivisionError("scalar with zero denominator")
    if not num:
        return field.ring.zero, field.ring.one
    if len(den) == 1:
        return _strip_term_denominator(num, den)
    num, den = num.cancel(den)
    lc = den.LC
    if lc != 1:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


def _make(field, num, den):
    num, den = _normalize(field, num, den)
    return Scalar(field, num, den)


_RING_ONE_CACHE = {}


class Scalar:
    """Normalized fraction of polynomials over a ScalarField.

    Instances are immutable; equality is syntactic equality of the normal
    form (gcd-free, monic denominator).
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    # -- coercion helpers -------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ScalarError("mixed scalar fields")
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(QQ(1)):
            ring = self.field.ring
            return Scalar(self.field, ring.ground_new(_as_rational(other)), ring.one)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den == self.field.ring.one:
                return Scalar(self.field, self.num + other.num, self.den)
            return _make(self.field, self.num + other.num, self.den)
        return _make(self.field,
                     self.num * other.den + other.num * self.den,
                     self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        one = self.field.ring.one
        if self.den == one and other.den == one:
            return Scalar(self.field, self.num * other.num, one)
        return _make(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("scalar division by zero")
        return _make(self.field, self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return _make(self.field, self.den, self.num)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return self.field.one
        base = self if k > 0 else self.inv()
        # normal form is preserved by powering (coprimality, monic denominator)
        return Scalar(base.field, base.num ** abs(k), base.den ** abs(k))

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return (self.field is other.field and self.num == other.num
                    and self.den == other.den)
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        return self == coerced

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation ----------------------------------------------------------
    def symbols(self):
        """Names actually occurring in this scalar."""
        used = set()
        for poly in (self.num, self.den):
            for mono in poly.monoms():
                for name, i in self.field._index.items():
                    if mono[i]:
                        used.add(name)
        return used

    def specialize(self, assignment):
        """Evaluate at a rational point.  Returns a Fraction.

        `assignment` maps parameter names to rationals; every symbol occurring
        in the scalar must be assigned, and the denominator must not vanish.
        """
        idx = self.field._index
        vals = {}
        for name, v in assignment.items():
            vals[idx[name]] = _as_rational(v)

        def eval_poly(poly):
            total = QQ(0)
            for mono, coeff in poly.items():
                term = coeff
                for i, e in enumerate(mono):
                    if e:
                        if i not in vals:
                            raise ScalarError("unassigned symbol %r"
                                              % self.field.names[i])
                        term = term * vals[i] ** e
                total += term
            return total

        den = eval_poly(self.den)
        if not den:
            raise ZeroDivisionError("denominator vanishes at the assignment")
        res = eval_poly(self.num) / den
        return Fraction(int(res.numerator), int(res.denominator))

    def subs_param(self, name, value):
        """Substitute a parameter by another Scalar (exact, re-normalized)."""
        value = self.field(value) if not isinstance(value, Scalar) else value
        gen = self.field._gens[name]

        def sub_poly(poly):
            out_num = self.field.ring.zero
            out_den = self.field.ring.one
            acc = self.field.zero
            for mono, coeff in poly.items():
                term = Scalar(self.field, self.field.ring.ground_new(coeff),
                              self.field.ring.one)
                for i, e in enumerate(mono):
                    if not e:
                        continue
                    if self.field.names[i] == name:
                        term = term * value ** e
                    else:
                        term = term * Scalar(self.field,
                                             self.field._gens[self.field.names[i]] ** e,
                                             self.field.ring.one)
                acc = acc + term
            return acc

        return sub_poly(self.num) / sub_poly(self.den)

    # -- printing ------------------------------------------------------------
    def __str__(self):
        num = _poly_str(self.num)
        if self.den == self.field.ring.one:
            return num
        den = _poly_str(self.den)
        if len(self.num) > 1:
            num = "(%s)" % num
        if len(self.den) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "Scalar(%s)" % self.__str__()


def _poly_str(poly):
    return str(poly).replace("**", "^")


# ---------------------------------------------------------------------------
# parser for the canonical string form
# ---------------------------------------------------------------------------

def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "+-*/^()":
            tokens.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ScalarError("unexpected character %r in scalar string" % c)
    return tokens


def _parse_scalar(field, text):
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_expr():
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        value = parse_term() * sign
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term():
        value = parse_factor()
        while peek() in ("*", "/"):
            op = take()
            rhs = parse_factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_factor():
        if peek() == "-":
            take()
            return -parse_factor()
        base = parse_base()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            exp = take()
            if not isinstance(exp, int):
                raise ScalarError("expected integer exponent")
            return base ** (sign * exp)
        return base

    def parse_base():
        tok = take()
        if tok == "(":
            value = parse_expr()
            if take() != ")":
                raise ScalarError("unbalanced parenthesis")
            return value
        if isinstance(tok, int):
            return field(tok)
        if isinstance(tok, str):
            return field.gen(tok)
        raise ScalarError("unexpected token %r" % (tok,))

    value = parse_expr()
    if pos != len(tokens):
        raise ScalarError("trailing input in scalar string")
    return value


# ---------------------------------------------------------------------------
# the two shared fields
# ---------------------------------------------------------------------------

QUANTUM = ScalarField(QUANTUM_PARAMS)
DEGEN = ScalarField(DEGEN_PARAMS)


# ---------------------------------------------------------------------------
# truncated hbar-series
# ---------------------------------------------------------------------------

DEFAULT_ORDER = 2


class TruncatedSeries:
    """Element of D[[hbar]]/(hbar^{K+1}), coefficients in the DEGEN field."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(DEGEN(c) if not isinstance(c, Scalar) else c
                            for c in coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order=DEFAULT_ORDER):
        return cls((DEGEN(c),) + (DEGEN.zero,) * order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _match(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        if other.order != self.order:
            raise ScalarError("mixed truncation orders")
        return other

    def __add__(self, other):
        other = self._match(other)
        return TruncatedSeries(tuple(a + b for a, b in
                                     zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        other = self._match(other)
        K = self.order
        out = [DEGEN.zero] * (K + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(K + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inv(self):
        c0 = self.coeffs[0]
        if not c0:
            raise ScalarError("series with non-invertible constant term")
        K = self.order
        inv0 = c0.inv()
        out = [inv0] + [DEGEN.zero] * K
        for k in range(1, K + 1):
            acc = DEGEN.zero
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -inv0 * acc
        return TruncatedSeries(out)

    def __truediv__(self, other):
        return self * self._match(other).inv()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                other = TruncatedSeries.constant(other, self.order)
            except Exception:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c and parts:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                parts.append("(%s)*hbar^%d" % (c, k))
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def exp_series(linear_form, order=DEFAULT_ORDER):
    """exp(hbar * c) truncated: coefficients c^k / k!."""
    c = DEGEN(linear_form) if not isinstance(linear_form, Scalar) else linear_form
    coeffs = []
    power = DEGEN.one
    for k in range(order + 1):
        coeffs.append(power * Fraction(1, math.factorial(k)))
        power = power * c
    return TruncatedSeries(coeffs)


DEFAULT_EXPONENT_MAP = {
    "q": DEGEN.one,
    "qs": DEGEN.gen("sigma"),
    "qt": DEGEN.gen("tau"),
    "qe": DEGEN.gen("eta"),
    "qr": DEGEN.gen("rho"),
    "qw": DEGEN.gen("omega"),
    "qn": DEGEN.gen("nu"),
    "t": DEGEN.gen("m1"),
    "tn": DEGEN.gen("m2"),
    "t0": DEGEN.gen("m3"),
    "u0": DEGEN.gen("m4"),
    "un": DEGEN.gen("m5"),
    "v": DEGEN.gen("m6"),
}


def to_hbar_series(a, exponent_map=None, order=DEFAULT_ORDER):
    """Expand a quantum Scalar under p -> exp(hbar * e(p)).

    `exponent_map` maps parameter names to DEGEN scalars (linear exponent
    forms); it defaults to the standard degeneration dictionary q -> 1,
    qs -> sigma, t -> m1, tn -> m2, t0 -> m3, u0 -> m4, un -> m5, v -> m6.
    """
    if exponent_map is None:
        exponent_map = DEFAULT_EXPONENT_MAP
    field = a.field

    def expand_poly(poly):
        total = TruncatedSeries.constant(0, order)
        for mono, coeff in poly.items():
            form = DEGEN.zero
            for i, e in enumerate(mono):
                if e:
                    name = field.names[i]
                    if name not in exponent_map:
                        raise ScalarError("no exponent form for %r" % name)
                    form = form + exponent_map[name] * e
            total = total + exp_series(form, order) * Fraction(coeff.numerator,
                                                               coeff.denominator)
        return total

    num = expand_poly(a.num)
    den = expand_poly(a.den)
    if not den.coeffs[0]:
        raise ScalarError("denominator is not a unit at hbar=0")
    return num / den
