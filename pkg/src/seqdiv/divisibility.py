"""Divisibility theorems as executable checks.

Covers, for validated sequence parameters: the strong divisibility law
gcd(term(m), term(n)) ~ term(gcd(m, n)); primitive parts and primitive prime
divisors with their cyclotomic description; valuation stability under index
scaling; and a family of coprimality facts between related terms.

The primitive part of term(n) is the product of the primitive prime powers:
those irreducible factors that divide no earlier term, kept with their full
multiplicity.  It is computed here by gcd-stripping, which needs no
factorization and therefore works over Q[x] and F_p[x] alike; over F_p an
independent factorization-based construction is provided as a cross-check.
"""

from dataclasses import dataclass
from math import gcd as int_gcd
from typing import Optional

from .errors import PreconditionViolated, UnsupportedField
from .factorization import factor_fp, low_degree_factors_q
from .polyring import (
    Poly,
    exact_div,
    format_poly,
    is_associated,
    monic,
    poly_gcd,
    valuation,
)
from .sequences import SeqKind, cyclotomic_value, term

__all__ = [
    "PrimitiveReport",
    "strong_div_check",
    "primitive_part",
    "zsigmondy_check",
    "zsigmondy_claimed",
    "zsigmondy_failures",
    "phi_match_failures",
    "valuation_stability_check",
    "term_divisors",
    "sum_square_coprime_check",
    "index_scaled_coprime_check",
    "coprime_pair_check",
    "primitive_parts_factored",
]


@dataclass(frozen=True)
class PrimitiveReport:
    """Primitive-divisor data for a single index.

    position is the index of n inside the subsequence that survives deleting
    the indices divisible by the characteristic (equal to n over Q); it is
    None when n itself is deleted.  primitive_primes lists (irreducible,
    exponent) pairs and is filled only on request over a prime field.
    """

    n: int
    position: Optional[int]
    term: Poly
    primitive_part: Poly
    has_primitive: bool
    matches_phi: bool
    excluded: bool
    primitive_primes: Optional[tuple] = None

    def to_json(self):
        doc = {
            "n": self.n,
            "term": format_poly(self.term),
            "primitive_part": format_poly(self.primitive_part),
            "has_primitive": self.has_primitive,
            "matches_phi": self.matches_phi,
            "excluded": self.excluded,
        }
        if self.primitive_primes is not None:
            doc["primitive_primes"] = [
                {"factor": format_poly(q), "exp": e} for q, e in self.primitive_primes
            ]
        return doc


def strong_div_check(params, m, n):
    """True iff gcd(term(m), term(n)) is associated to term(gcd(m, n))."""
    if m < 1 or n < 1:
        raise PreconditionViolated("indices must be positive")
    g = poly_gcd(term(params, m), term(params, n))
    return is_associated(g, term(params, int_gcd(m, n)))


def primitive_part(params, n, with_primes=False):
    """Strip every non-primitive factor out of term(n) and report.

    For each earlier index m the gcd with term(m) is divided out repeatedly,
    so an irreducible occurring in any earlier term is removed with its full
    multiplicity while primitive irreducibles are never touched.  The
    survivor (made monic) is the primitive part.  matches_phi holds when it
    is associated to the n-th cyclotomic value; that comparison is defined
    for n >= 3 at indices not divisible by the characteristic, and the flag
    is false elsewhere.
    """
    if n < 1:
        raise PreconditionViolated("index must be positive")
    p = params.field.char
    excluded = bool(p) and n % p == 0
    t = term(params, n)
    b = t
    for m in range(1, n):
        tm = term(params, m)
        while True:
            g = poly_gcd(b, tm)
            if g.is_unit():
                break
            b = exact_div(b, g)
    b = monic(b)
    has_primitive = not b.is_unit()
    if excluded or n < 3:
        matches_phi = False
    else:
        matches_phi = b == monic(cyclotomic_value(params, n))
    if excluded:
        position = None
    elif p:
        position = n - n // p
    else:
        position = n
    primes = None
    if with_primes and p:
        primes = factor_fp(b).factors
    return PrimitiveReport(
        n=n,
        position=position,
        term=t,
        primitive_part=b,
        has_primitive=has_primitive,
        matches_phi=matches_phi,
        excluded=excluded,
        primitive_primes=primes,
    )


def zsigmondy_check(params, n_max, with_primes=False):
    """Primitive-divisor reports for every index 1 <= n <= n_max."""
    if n_max < 3:
        raise PreconditionViolated("n_max must be at least 3")
    return [primitive_part(params, n, with_primes=with_primes) for n in range(1, n_max + 1)]


def zsigmondy_claimed(report, include_excluded=False):
    """Whether the primitive-divisor property is asserted at this index.

    The property is claimed for every term beyond the second of the
    subsequence that survives deleting indices divisible by the
    characteristic, i.e. at pruned position >= 3 (which over Q is just
    n >= 3).  With include_excluded the pruning is deliberately skipped and
    every raw index n >= 3 is claimed; that mode exists to demonstrate the
    failures the deletion is there to avoid.
    """
    if report.n < 3:
        return False
    if include_excluded:
        return True
    if report.excluded:
        return False
    return report.position >= 3


def zsigmondy_failures(reports, include_excluded=False):
    """Reports where the primitive-divisor claim applies but fails."""
    return [
        r
        for r in reports
        if zsigmondy_claimed(r, include_excluded) and not r.has_primitive
    ]


def phi_match_failures(reports):
    """Non-excluded reports at n >= 3 whose primitive part is not the cyclotomic value."""
    return [r for r in reports if r.n >= 3 and not r.excluded and not r.matches_phi]


def valuation_stability_check(params, q, n, m):
    """True iff the q-adic valuation of term(m*n) equals that of term(n).

    q must be a divisor of term(n) and the scaling index m must avoid the
    characteristic.
    """
    if params.kind is not SeqKind.LEHMER:
        raise PreconditionViolated("valuation stability is stated for the lehmer kind")
    if n < 3 or m < 1:
        raise PreconditionViolated("need n >= 3 and m >= 1")
    p = params.field.char
    if p and m % p == 0:
        raise PreconditionViolated(f"scaling index {m} is divisible by the characteristic")
    tn = term(params, n)
    vn = valuation(q, tn)
    if vn == 0:
        raise PreconditionViolated(f"{q} does not divide term({n})")
    return valuation(q, term(params, m * n)) == vn


def term_divisors(params, n, max_degree=2):
    """Irreducible divisors of term(n): all of them over F_p, those of
    degree <= max_degree over Q."""
    t = term(params, n)
    if params.field.char:
        return [q for q, _ in factor_fp(t).factors]
    return low_degree_factors_q(t, max_degree=max_degree)


def sum_square_coprime_check(params, n):
    """True iff term(n) and the squared-sum parameter generate coprime ideals (odd n)."""
    if params.kind is not SeqKind.LEHMER:
        raise PreconditionViolated("the squared-sum coprimality is a lehmer statement")
    if n % 2 == 0:
        raise PreconditionViolated("index must be odd")
    return poly_gcd(term(params, n), params.a).is_unit()


def index_scaled_coprime_check(params, m, n):
    """True iff term(m*n)/term(n) and term(2n)/term(n) generate coprime ideals.

    Both quotients are exact for odd m, n; the first is the m-th power-sum
    value at the n-th powers of the defining pair, the second is their sum
    divided by the original sum.
    """
    if params.kind is not SeqKind.LEHMER:
        raise PreconditionViolated("index-scaled coprimality is a lehmer statement")
    if m % 2 == 0 or n % 2 == 0:
        raise PreconditionViolated("both indices must be odd")
    tn = term(params, n)
    left = exact_div(term(params, m * n), tn)
    right = exact_div(term(params, 2 * n), tn)
    return poly_gcd(left, right).is_unit()


def coprime_pair_check(params, m, n):
    """True iff term(m) and term(n) generate coprime ideals, for coprime m, n.

    For the lehmer kind the statement covers odd m with n of either parity,
    so m must be odd (swap the pair if needed).
    """
    if params.kind is SeqKind.POWER:
        raise PreconditionViolated("pairwise coprimality applies to lucas and lehmer terms")
    if int_gcd(m, n) != 1:
        raise PreconditionViolated(f"indices {m}, {n} are not coprime")
    if params.kind is SeqKind.LEHMER and m % 2 == 0:
        raise PreconditionViolated("for the lehmer kind the first index must be odd")
    return poly_gcd(term(params, m), term(params, n)).is_unit()


def primitive_parts_factored(params, n_max):
    """Primitive parts over F_p from complete factorizations, per definition.

    Factors every term up to n_max and keeps, for each n, the factors never
    seen at an earlier index, with their multiplicity in term(n).  Serves as
    the independent oracle for the gcd-stripping construction.
    """
    if not params.field.char:
        raise UnsupportedField("the factorization oracle needs a prime field")
    seen = set()
    parts = {}
    for n in range(1, n_max + 1):
        factors = factor_fp(term(params, n)).factors
        part = Poly.one(params.field)
        for q, e in factors:
            if q.coeffs not in seen:
                part = part * q ** e
        parts[n] = part
        for q, _ in factors:
            seen.add(q.coeffs)
    return parts
