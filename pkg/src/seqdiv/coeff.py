"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

A field descriptor owns the raw value representation (``fractions.Fraction``
for the rationals, canonical residues ``0..p-1`` for F_p) and all arithmetic
on it.  ``FieldElem`` is a thin typed wrapper pairing a descriptor with a raw
value; polynomial code works on raw values directly for speed.
"""

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NotPrime, ParseError, WrongField


def is_prime(n):
    """Trial-division primality test, meant for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """Descriptor for Q with Fraction values (always reduced, positive denominator)."""

    kind = "q"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise WrongField(f"not a rational value: {v!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def from_int(self, k):
        return Fraction(k)

    def parse_scalar(self, text):
        """Parse ``int`` or ``int/uint`` literal syntax."""
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def format_scalar(self, v):
        return str(v)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """Descriptor for F_p with residues 0..p-1 as raw values."""

    kind = "fp"
    __slots__ = ("p", "char")

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"modulus must be prime, got {p!r}")
        self.p = p
        self.char = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def normalize(self, v):
        if isinstance(v, int):
            return v % self.p
        raise WrongField(f"not an integer residue: {v!r}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        a %= self.p
        if not a:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, k):
        return k % self.p

    def parse_scalar(self, text):
        """Bare integers only; they reduce mod p."""
        if "/" in text:
            raise ParseError(f"fractional literal {text!r} not allowed over F_{self.p}")
        try:
            return int(text) % self.p
        except ValueError as exc:
            raise ParseError(f"bad integer literal {text!r}") from exc

    def format_scalar(self, v):
        return str(v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def characteristic(field):
    """0 for the rationals, p for a prime field."""
    return field.char


class FieldElem:
    """A field element tagged with its descriptor.

    Mixing descriptors raises FieldMismatch instead of silently coercing.
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = field.normalize(value)

    def _check(self, other):
        if not isinstance(other, FieldElem):
            raise FieldMismatch(f"expected FieldElem, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.mul(self.value, other.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def is_zero(self):
        return not self.value

    def __eq__(self, other):
        return (
            isinstance(other, FieldElem)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"FieldElem({self.field!r}, {self.value!r})"

    def __str__(self):
        return self.field.format_scalar(self.value)


def field_add(a, b):
    return a + b


def field_sub(a, b):
    return a - b


def field_mul(a, b):
    return a * b


def field_neg(a):
    return -a


def field_inv(a):
    return a.inverse()
