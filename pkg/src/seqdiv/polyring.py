"""Univariate polynomials over an exact coefficient field.

``Poly`` stores raw coefficient values (lowest degree first, no trailing
zeros) plus its field descriptor.  All arithmetic is exact; the hot paths
(division, gcd) run on plain lists with the mod-p reduction inlined so that
large verification campaigns stay affordable in pure Python.

Units of K[x] are the nonzero constants; two polynomials are associated
exactly when their monic normalizations coincide, and ideals are identified
with their unique monic (or zero) generator.
"""

import re
from fractions import Fraction

from .coeff import PrimeField, Rationals
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotDivisible,
    ParseError,
    PreconditionViolated,
    ZeroArgument,
)

__all__ = [
    "Poly",
    "MonicIdeal",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_divrem",
    "exact_div",
    "poly_gcd",
    "monic",
    "is_unit",
    "is_associated",
    "ideals_coprime",
    "valuation",
    "parse_poly",
]


def _strip(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _divrem_raw(a, b, field):
    """(quotient, remainder) on raw lists; remainder degree < divisor degree."""
    if not b:
        raise DivisionByZero("division by the zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return [], list(a)
    p = field.char
    r = list(a)
    q = [field.zero] * (da - db + 1)
    if p:
        inv = pow(b[db], p - 2, p)
        for k in range(da - db, -1, -1):
            c = r[db + k]
            if c:
                c = c * inv % p
                q[k] = c
                for i in range(db):
                    r[i + k] = (r[i + k] - c * b[i]) % p
                r[db + k] = 0
    else:
        lead = b[db]
        for k in range(da - db, -1, -1):
            c = r[db + k]
            if c:
                c = c / lead
                q[k] = c
                for i in range(db):
                    r[i + k] = r[i + k] - c * b[i]
                r[db + k] = Fraction(0)
    return q, _strip(r)


def _gcd_raw(a, b, field):
    """Monic gcd on raw lists via the Euclidean algorithm."""
    p = field.char
    a, b = list(a), list(b)
    if p:
        while b:
            db = len(b) - 1
            inv = pow(b[db], p - 2, p)
            r = a
            while len(r) > db:
                c = r[-1] * inv % p
                if c:
                    k = len(r) - 1 - db
                    for i in range(db):
                        r[i + k] = (r[i + k] - c * b[i]) % p
                r.pop()
                while r and not r[-1]:
                    r.pop()
            a, b = b, r
        if a and a[-1] != 1:
            inv = pow(a[-1], p - 2, p)
            a = [c * inv % p for c in a]
        return a
    while b:
        # keep the divisor monic so coefficient growth stays tame
        lead = b[-1]
        if lead != 1:
            b = [c / lead for c in b]
        r = a
        while len(r) > len(b) - 1:
            c = r[-1]
            if c:
                k = len(r) - len(b)
                for i in range(len(b) - 1):
                    r[i + k] = r[i + k] - c * b[i]
            r.pop()
            while r and not r[-1]:
                r.pop()
        a, b = b, r
    if a and a[-1] != 1:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class Poly:
    """Immutable dense polynomial over Q or F_p."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field.normalize(c) for c in coeffs]
        _strip(cs)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _make(cls, field, raw):
        """Trusted constructor: raw values already canonical, may have trailing zeros."""
        _strip(raw)
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(raw))
        return self

    @classmethod
    def zero(cls, field):
        return cls._make(field, [])

    @classmethod
    def one(cls, field):
        return cls._make(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls._make(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, v):
        return cls._make(field, [field.normalize(v)])

    @classmethod
    def parse(cls, field, text):
        return parse_poly(field, text)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        return len(self.coeffs) == 1

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def monic(self):
        """The unique monic associate (zero stays zero)."""
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == self.field.one:
            return self
        inv = self.field.inv(lead)
        p = self.field.char
        if p:
            return Poly._make(self.field, [c * inv % p for c in self.coeffs])
        return Poly._make(self.field, [c * inv for c in self.coeffs])

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.field, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        p = self.field.char
        out = list(a)
        if p:
            for i, c in enumerate(b):
                out[i] = (out[i] + c) % p
        else:
            for i, c in enumerate(b):
                out[i] = out[i] + c
        return Poly._make(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.char
        if p:
            return Poly._make(self.field, [-c % p for c in self.coeffs])
        return Poly._make(self.field, [-c for c in self.coeffs])

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        p = self.field.char
        if p:
            out = [c % p for c in out]
        return Poly._make(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        q, r = _divrem_raw(list(self.coeffs), list(other.coeffs), self.field)
        return Poly._make(self.field, q), Poly._make(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, v):
        """Evaluate by Horner's rule at a raw scalar."""
        v = self.field.normalize(v)
        acc = self.field.zero
        p = self.field.char
        if p:
            for c in reversed(self.coeffs):
                acc = (acc * v + c) % p
        else:
            for c in reversed(self.coeffs):
                acc = acc * v + c
        return acc

    def derivative(self):
        p = self.field.char
        if p:
            out = [c * k % p for k, c in enumerate(self.coeffs)][1:]
        else:
            out = [c * k for k, c in enumerate(self.coeffs)][1:]
        return Poly._make(self.field, out)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def poly_add(a, b):
    return a + b


def poly_sub(a, b):
    return a - b


def poly_mul(a, b):
    return a * b


def poly_divrem(a, b):
    """Quotient and remainder with deg r < deg b."""
    return divmod(a, b)


def exact_div(a, b):
    """a / b when b | a exactly; NotDivisible otherwise."""
    q, r = divmod(a, b)
    if r:
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    return q


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    a._check(b)
    return Poly._make(a.field, _gcd_raw(a.coeffs, b.coeffs, a.field))


def monic(a):
    return a.monic()


def is_unit(a):
    return a.is_unit()


def is_associated(a, b):
    """True when a and b differ by a nonzero constant factor."""
    return a.monic() == b.monic()


def ideals_coprime(a, b):
    """True when the ideals generated by a and b sum to the whole ring."""
    return poly_gcd(a, b).is_unit()


def valuation(q, h):
    """Largest e with q^e dividing h.

    q must be non-constant (the caller asserts irreducibility where the
    count is meant to be prime-wise); h must be nonzero.
    """
    if h.is_zero():
        raise ZeroArgument("valuation of the zero polynomial")
    if q.degree < 1:
        raise PreconditionViolated("valuation divisor must be non-constant")
    e = 0
    while True:
        qq, r = divmod(h, q)
        if r:
            return e
        h = qq
        e += 1


class MonicIdeal:
    """An ideal of K[x], identified by its unique monic (or zero) generator."""

    __slots__ = ("generator",)

    def __init__(self, generator):
        object.__setattr__(self, "generator", generator.monic())

    def __setattr__(self, name, value):
        raise AttributeError("MonicIdeal is immutable")

    @classmethod
    def from_element(cls, a):
        return cls(a)

    def is_zero(self):
        return self.generator.is_zero()

    def is_unit_ideal(self):
        return self.generator.is_unit()

    def contains(self, b):
        """Membership: the generator divides b (the zero ideal holds only 0)."""
        if self.generator.is_zero():
            return b.is_zero()
        return not (b % self.generator)

    def __eq__(self, other):
        return isinstance(other, MonicIdeal) and other.generator == self.generator

    def __hash__(self):
        return hash(("ideal", self.generator))

    def __repr__(self):
        return f"MonicIdeal({self.generator!r})"

    def __str__(self):
        return f"<{self.generator}>"


# --- text syntax ------------------------------------------------------------
#
# expr  := term (('+'|'-') term)*
# term  := coef ('*'? 'x' ('^' uint)?)? | 'x' ('^' uint)?
# coef  := int | int '/' uint
#
# Whitespace is ignored and the '*' between a coefficient and x is optional.

_TERM_RE = re.compile(
    r"^(?P<coef>[0-9]+(?:/[0-9]+)?)?(?P<star>\*)?(?:x(?:\^(?P<exp>[0-9]+))?)?$"
)


def parse_poly(field, text):
    """Parse an expression like ``x^3-2*x`` or ``1/2*x+3`` into a Poly."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial expression")
    coeffs = {}
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while pos <= len(s):
        nxt = pos
        while nxt < len(s) and s[nxt] not in "+-":
            nxt += 1
        chunk = s[pos:nxt]
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise ParseError(f"bad term {chunk!r} in {text!r}")
        coef_txt, star = m.group("coef"), m.group("star")
        has_x = "x" in chunk
        if coef_txt is None and not has_x:
            raise ParseError(f"bad term {chunk!r} in {text!r}")
        if star and (coef_txt is None or not has_x):
            raise ParseError(f"bad term {chunk!r} in {text!r}")
        c = field.parse_scalar(coef_txt) if coef_txt is not None else field.one
        if sign < 0:
            c = field.neg(c)
        e = 0
        if has_x:
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        coeffs[e] = field.add(coeffs.get(e, field.zero), c)
        if nxt >= len(s):
            break
        sign = -1 if s[nxt] == "-" else 1
        pos = nxt + 1
        if pos == len(s):
            raise ParseError(f"dangling sign in {text!r}")
    raw = [field.zero] * (max(coeffs) + 1 if coeffs else 0)
    for e, c in coeffs.items():
        raw[e] = c
    return Poly._make(field, raw)


def format_poly(a):
    """Canonical expression string: descending powers, explicit '*', reduced scalars."""
    if not a.coeffs:
        return "0"
    field = a.field
    out = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        negative = field.char == 0 and c < 0
        mag = -c if negative else c
        if k == 0:
            body = field.format_scalar(mag)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            body = xs if mag == field.one else f"{field.format_scalar(mag)}*{xs}"
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append(("-" if negative else "+") + body)
    return "".join(out)


def rationals_poly(coeffs):
    """Convenience: a Poly over Q from ints/Fractions."""
    return Poly(Rationals(), coeffs)


def fp_poly(p, coeffs):
    """Convenience: a Poly over F_p from ints."""
    return Poly(PrimeField(p), coeffs)
