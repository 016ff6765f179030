"""Squarefree decomposition over Q and F_p, full factorization over F_p,
and the bounded-degree rational divisor search used by the valuation checks.

The F_p pipeline is squarefree decomposition (with p-th-root extraction when
the derivative vanishes), then distinct-degree splitting with Frobenius
powers, then randomized equal-degree splitting; for p = 2 the equal-degree
split uses the trace map.  Randomness is confined to an explicitly seeded
generator so runs are reproducible, and factors are returned in a canonical
order either way.
"""

import math
import random
from fractions import Fraction

from .coeff import PrimeField, Rationals
from .errors import UnsupportedField, ZeroArgument
from .polyring import Poly, exact_div, poly_gcd

__all__ = [
    "DEFAULT_SEED",
    "Factorization",
    "squarefree_decomp",
    "factor_fp",
    "is_irreducible_fp",
    "low_degree_factors_q",
]

DEFAULT_SEED = 1


class Factorization:
    """unit * product(factor^exp) == the factored polynomial, factors monic."""

    __slots__ = ("field", "unit", "factors")

    def __init__(self, field, unit, factors):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "unit", field.normalize(unit))
        object.__setattr__(
            self,
            "factors",
            tuple(sorted(factors, key=lambda fe: (fe[0].degree, fe[0].coeffs))),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Factorization is immutable")

    def expand(self):
        acc = Poly.const(self.field, self.unit)
        for f, e in self.factors:
            acc = acc * f**e
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Factorization)
            and other.field == self.field
            and other.unit == self.unit
            and other.factors == self.factors
        )

    def __hash__(self):
        return hash((self.field, self.unit, self.factors))

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        return f"Factorization({self.field!r}, {self.unit!r}, {self.factors!r})"

    def __str__(self):
        parts = []
        if self.unit != self.field.one or not self.factors:
            parts.append(self.field.format_scalar(self.unit))
        for f, e in self.factors:
            parts.append(f"({f})" if e == 1 else f"({f})^{e}")
        return "".join(parts)


def _pow_mod(base, e, mod):
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def _yun_q(f):
    """Squarefree components of a monic polynomial over Q with multiplicities."""
    out = []
    d = poly_gcd(f, f.derivative())
    c = exact_div(f, d)
    w = exact_div(f.derivative(), d)
    y = w - c.derivative()
    i = 1
    while not c.is_one():
        g = poly_gcd(c, y)
        if g.degree > 0:
            out.append((g, i))
        c = exact_div(c, g)
        w = exact_div(y, g)
        y = w - c.derivative()
        i += 1
    return out


def _pth_root_fp(f, p):
    return Poly(f.field, [f.coeffs[i] for i in range(0, len(f.coeffs), p)])


def _sqf_fp(f):
    """Squarefree components of a monic polynomial over F_p with multiplicities."""
    p = f.field.p
    out = []
    n = 1
    while True:
        df = f.derivative()
        if not df.is_zero():
            g = poly_gcd(f, df)
            h = exact_div(f, g)
            i = 1
            while not h.is_one():
                gh = poly_gcd(g, h)
                part = exact_div(h, gh)
                if part.degree > 0:
                    out.append((part, i * n))
                g = exact_div(g, gh)
                h = gh
                i += 1
            if g.is_one():
                return out
            f = g
        # at this point f is a p-th power
        f = _pth_root_fp(f, p)
        n *= p


def squarefree_decomp(h):
    """Squarefree components with multiplicities; works over Q and F_p."""
    if h.is_zero():
        raise ZeroArgument("cannot decompose the zero polynomial")
    unit = h.lc()
    f = h.monic()
    if f.degree < 1:
        return Factorization(h.field, unit, ())
    parts = _sqf_fp(f) if h.field.char else _yun_q(f)
    return Factorization(h.field, unit, parts)


def _ddf(f):
    """Distinct-degree split of a monic squarefree polynomial over F_p."""
    p = f.field.p
    out = []
    x = Poly.x(f.field)
    h = x % f
    d = 1
    while f.degree >= 2 * d:
        h = _pow_mod(h, p, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = exact_div(f, g)
            h = h % f
        d += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _random_poly(field, degree, rng):
    cs = [rng.randrange(field.p) for _ in range(degree)]
    cs.append(rng.randrange(1, field.p))
    return Poly(field, cs)


def _edf(f, d, rng):
    """Equal-degree split: f is monic squarefree, all factors of degree d."""
    if f.degree == d:
        return [f]
    p = f.field.p
    while True:
        r = _random_poly(f.field, rng.randrange(f.degree), rng)
        if p == 2:
            acc = r
            t = r
            for _ in range(d - 1):
                t = (t * t) % f
                acc = (acc + t) % f
            g = poly_gcd(f, acc)
        else:
            t = _pow_mod(r, (p**d - 1) // 2, f)
            g = poly_gcd(f, t - 1)
        if 0 < g.degree < f.degree:
            return _edf(g, d, rng) + _edf(exact_div(f, g), d, rng)


def factor_fp(h, seed=None):
    """Complete factorization over F_p into monic irreducibles with exponents."""
    if not isinstance(h.field, PrimeField):
        raise UnsupportedField("full factorization is implemented over F_p only")
    if h.is_zero():
        raise ZeroArgument("cannot factor the zero polynomial")
    unit = h.lc()
    f = h.monic()
    if f.degree < 1:
        return Factorization(h.field, unit, ())
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    factors = []
    for part, mult in _sqf_fp(f):
        for prod, d in _ddf(part):
            for q in _edf(prod, d, rng):
                factors.append((q, mult))
    return Factorization(h.field, unit, factors)


def is_irreducible_fp(h):
    """Distinct-degree irreducibility test over F_p."""
    if not isinstance(h.field, PrimeField):
        raise UnsupportedField("irreducibility test is implemented over F_p only")
    if h.degree < 1:
        return False
    if h.degree == 1:
        return True
    p = h.field.p
    f = h.monic()
    x = Poly.x(f.field)
    u = x % f
    for _ in range(f.degree // 2):
        u = _pow_mod(u, p, f)
        if not poly_gcd(f, u - x).is_unit():
            return False
    return True


def _int_divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _primitive_int_coeffs(f):
    """Integer coefficient list of a Q-polynomial, content removed, positive lead."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _is_square(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def low_degree_factors_q(h, max_degree=2):
    """All monic irreducible divisors of h over Q of degree <= max_degree (<= 2).

    Linear factors come from the rational root theorem on the primitive
    integer form of the squarefree part; quadratic factors from divisor
    interpolation through the values at 0, 1 and -1.  Both searches are
    complete for their degree, so no general factorization is needed.
    """
    if not isinstance(h.field, Rationals):
        raise UnsupportedField("rational divisor search needs a polynomial over Q")
    if h.is_zero():
        raise ZeroArgument("zero polynomial")
    if max_degree not in (1, 2):
        raise ValueError("only degrees 1 and 2 are supported")
    if h.degree < 1:
        return []
    s = exact_div(h, poly_gcd(h, h.derivative())).monic()
    found = []
    x = Poly.x(h.field)

    # linear: strip powers of x, then rational roots
    if s.coeffs[0] == 0:
        found.append(x)
        while s.coeffs[0] == 0:
            s = exact_div(s, x)
    if s.degree >= 1:
        ints = _primitive_int_coeffs(s)
        roots = set()
        for num in _int_divisors(ints[0]):
            for den in _int_divisors(ints[-1]):
                for r in (Fraction(num, den), Fraction(-num, den)):
                    if r not in roots and s(r) == 0:
                        roots.add(r)
        for r in sorted(roots):
            lin = x - Poly.const(h.field, r)
            found.append(lin)
            s = exact_div(s, lin)

    if max_degree >= 2 and s.degree >= 2:
        cz = _primitive_int_coeffs(s)
        c = Poly(h.field, cz)
        v0, v1, vm1 = int(c(0)), int(c(1)), int(c(-1))
        seen = set()
        for d0s in _int_divisors(v0):
            for d0 in (d0s, -d0s):
                for d1s in _int_divisors(v1):
                    for d1 in (d1s, -d1s):
                        for dm1s in _int_divisors(vm1):
                            for dm1 in (dm1s, -dm1s):
                                if (d1 + dm1) % 2:
                                    continue
                                c1 = (d1 - dm1) // 2
                                c2 = (d1 + dm1) // 2 - d0
                                if c2 <= 0:
                                    continue
                                if math.gcd(math.gcd(abs(d0), abs(c1)), c2) != 1:
                                    continue
                                if _is_square(c1 * c1 - 4 * c2 * d0):
                                    continue
                                cand = Poly(h.field, [d0, c1, c2])
                                key = cand.monic().coeffs
                                if key in seen:
                                    continue
                                if not (c % cand):
                                    seen.add(key)
        found.extend(Poly(h.field, k) for k in sorted(seen))
    return found
