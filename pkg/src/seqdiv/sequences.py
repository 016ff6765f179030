"""Power-difference, Lucas-type, and Lehmer-type sequences over K[x].

Three kinds share one parameter shape (a, b):

* ``power``:  F_n = a^n - b^n for a coprime pair of polynomials;
* ``lucas``:  terms of the pair with sum a and product b, i.e. L_1 = 1,
  L_2 = a, L_n = a L_(n-1) - b L_(n-2);
* ``lehmer``: terms of the pair with squared sum a and product b, i.e.
  U_1 = U_2 = 1, U_n = a U_(n-1) - b U_(n-2) for odd n and
  U_n = U_(n-1) - b U_(n-2) for even n.

For lucas and lehmer the defining pair lives in a small commutative tower
over K[x]; ``oracle_term`` computes terms there from the definition alone
and is kept deliberately independent of the recurrences so either side can
catch a bug in the other.
"""

from enum import Enum

from .cyclokit import cyclotomic_form, divisors, eval_form, mobius
from .errors import (
    BothUnits,
    FieldMismatch,
    NotCoprime,
    OracleMismatch,
    PreconditionViolated,
    RatioRootOfUnity,
    ZeroParameter,
)
from .polyring import Poly, exact_div, ideals_coprime, is_associated
from .errors import NotDivisible

__all__ = [
    "SeqKind",
    "SeqParams",
    "validate",
    "term",
    "oracle_term",
    "mobius_product",
    "cyclotomic_value",
]


class SeqKind(str, Enum):
    POWER = "power"
    LUCAS = "lucas"
    LEHMER = "lehmer"


class SeqParams:
    """A validated parameter pair plus growable per-sequence caches."""

    __slots__ = ("kind", "field", "a", "b", "_terms", "_apow", "_bpow", "_lam", "_eta")

    def __init__(self, kind, field, a, b):
        self.kind = kind
        self.field = field
        self.a = a
        self.b = b
        self._terms = [None]
        self._apow = [Poly.one(field)]
        self._bpow = [Poly.one(field)]
        self._lam = None
        self._eta = None

    def __eq__(self, other):
        return (
            isinstance(other, SeqParams)
            and other.kind == self.kind
            and other.field == self.field
            and other.a == self.a
            and other.b == self.b
        )

    def __hash__(self):
        return hash((self.kind, self.field, self.a, self.b))

    def __repr__(self):
        return f"SeqParams({self.kind.value!r}, {self.field!r}, {self.a!r}, {self.b!r})"

    def describe(self):
        return f"{self.kind.value}(a={self.a}, b={self.b})"


def validate(kind, field, a, b):
    """Admission control for parameter pairs.

    Checks, in order: neither parameter zero; for the power kind the ratio
    a/b is not a constant root of unity (over F_p every nonzero constant has
    finite order, over Q only 1 and -1 do); the parameters generate coprime
    ideals; not both are units.

    For lucas and lehmer no separate ratio test is needed: a root-of-unity
    ratio of the underlying pair would force a constant c with a^2 = c b
    (lucas) or a = c b (lehmer), which together with coprimality forces both
    parameters to be units, or c = 0 and with it a = 0 - and those cases are
    already rejected.  A zero parameter (including a = 0) is rejected
    outright as degenerate.
    """
    kind = SeqKind(kind)
    if a.field != field or b.field != field:
        raise FieldMismatch("parameters must live over the declared field")
    if a.is_zero() or b.is_zero():
        raise ZeroParameter(f"{kind.value} parameters must be nonzero")
    if kind is SeqKind.POWER and is_associated(a, b):
        if field.char:
            raise RatioRootOfUnity(
                "a/b is a constant of the multiplicative group of F_p, "
                "so every group element order divides some n and a^n = b^n"
            )
        c = field.mul(a.lc(), field.inv(b.lc()))
        if c == field.one or c == field.neg(field.one):
            raise RatioRootOfUnity("a = c*b with c in {1, -1}")
    if not ideals_coprime(a, b):
        raise NotCoprime(f"gcd({a}, {b}) is not a unit")
    if a.is_unit() and b.is_unit():
        raise BothUnits("both parameters are constants; all terms would be units")
    return SeqParams(kind, field, a, b)


def _check_index(n):
    if not isinstance(n, int) or n < 1:
        raise PreconditionViolated(f"term index must be a positive integer, got {n!r}")


def term(params, n):
    """The n-th sequence term, computed by definition (power) or recurrence."""
    _check_index(n)
    terms = params._terms
    if params.kind is SeqKind.POWER:
        apow, bpow = params._apow, params._bpow
        while len(apow) <= n:
            apow.append(apow[-1] * params.a)
            bpow.append(bpow[-1] * params.b)
        while len(terms) <= n:
            k = len(terms)
            terms.append(apow[k] - bpow[k])
        return terms[n]
    a, b = params.a, params.b
    while len(terms) <= n:
        k = len(terms)
        if k == 1:
            terms.append(Poly.one(params.field))
        elif k == 2:
            terms.append(a if params.kind is SeqKind.LUCAS else Poly.one(params.field))
        elif params.kind is SeqKind.LUCAS or k % 2:
            terms.append(a * terms[k - 1] - b * terms[k - 2])
        else:
            terms.append(terms[k - 1] - b * terms[k - 2])
    return terms[n]


# --- definitional oracle ------------------------------------------------------
#
# lucas:  the pair (alpha, beta) lives in K[x][t] / (t^2 - a t + b) with
#         alpha = t, beta = a - t; elements are pairs (c0, c1) = c0 + c1 t.
# lehmer: the pair (lam, eta) lives in K[x][s, t] / (s^2 - a, t^2 - s t + b)
#         with lam = t, eta = s - t; elements are quadruples
#         (c0, c1, c2, c3) = c0 + c1 s + c2 t + c3 st.


def _quad_mul(c, d, a, b):
    c0, c1 = c
    d0, d1 = d
    cross = c1 * d1
    return (c0 * d0 - b * cross, c0 * d1 + c1 * d0 + a * cross)


def _biquad_mul(c, d, a, b, ab):
    c0, c1, c2, c3 = c
    d0, d1, d2, d3 = d
    t23 = c2 * d3 + c3 * d2
    e0 = c0 * d0 + a * (c1 * d1) - b * (c2 * d2) - ab * (c3 * d3)
    e1 = c0 * d1 + c1 * d0 - b * t23
    e2 = c0 * d2 + c2 * d0 + a * (c1 * d3 + c3 * d1) + a * t23
    e3 = c0 * d3 + c3 * d0 + c1 * d2 + c2 * d1 + c2 * d2 + a * (c3 * d3)
    return (e0, e1, e2, e3)


def _solve_scalar(u, d):
    """The unique w in K[x] with u = w * d componentwise, if it exists."""
    w = None
    for ui, di in zip(u, d):
        if di:
            try:
                w = exact_div(ui, di)
            except NotDivisible as exc:
                raise OracleMismatch(f"quotient left the base ring: {exc}") from exc
            break
    if w is None:
        raise OracleMismatch("degenerate divisor in the tower")
    for ui, di in zip(u, d):
        if ui != w * di:
            raise OracleMismatch("tower element is not a scalar multiple")
    return w


def oracle_term(params, n):
    """Recompute term(n) from the defining pair in the tower.

    Shares nothing with the recurrence in term(): powers of the pair are
    formed in the tower and the difference is divided back into K[x].
    """
    _check_index(n)
    if params.kind is SeqKind.POWER:
        raise PreconditionViolated("the power kind is already definitional")
    field = params.field
    zero, one = Poly.zero(field), Poly.one(field)
    a, b = params.a, params.b
    if params.kind is SeqKind.LUCAS:
        if params._lam is None:
            params._lam = [(one, zero)]
            params._eta = [(one, zero)]
        lam_pows, eta_pows = params._lam, params._eta
        alpha = (zero, one)
        beta = (a, -one)
        while len(lam_pows) <= n:
            lam_pows.append(_quad_mul(lam_pows[-1], alpha, a, b))
            eta_pows.append(_quad_mul(eta_pows[-1], beta, a, b))
        u = tuple(x - y for x, y in zip(lam_pows[n], eta_pows[n]))
        div = (-a, one + one)
        return _solve_scalar(u, div)
    ab = a * b
    if params._lam is None:
        params._lam = [(one, zero, zero, zero)]
        params._eta = [(one, zero, zero, zero)]
    lam_pows, eta_pows = params._lam, params._eta
    lam = (zero, zero, one, zero)
    eta = (zero, one, -one, zero)
    while len(lam_pows) <= n:
        lam_pows.append(_biquad_mul(lam_pows[-1], lam, a, b, ab))
        eta_pows.append(_biquad_mul(eta_pows[-1], eta, a, b, ab))
    u = tuple(x - y for x, y in zip(lam_pows[n], eta_pows[n]))
    if n % 2:
        div = (zero, -one, one + one, zero)
    else:
        div = (-a, zero, zero, one + one)
    return _solve_scalar(u, div)


def mobius_product(params, n):
    """The Moebius-alternating product of terms over the divisors of n.

    For the lehmer kind this is the cyclotomic part of term(n): the products
    of (term(d))^(mu(n/d)) assemble back to term(n) over the divisor lattice,
    and the n-th part equals the n-th cyclotomic form evaluated at the
    defining pair.  Indices 1 and 2 are defined as 1.
    """
    _check_index(n)
    if params.kind is not SeqKind.LEHMER:
        raise PreconditionViolated("mobius_product is defined for the lehmer kind")
    if n <= 2:
        return Poly.one(params.field)
    return _mobius_term_product(params, n)


def _mobius_term_product(params, n):
    num = Poly.one(params.field)
    den = Poly.one(params.field)
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num = num * term(params, d)
        elif mu == -1:
            den = den * term(params, d)
    return exact_div(num, den)


def cyclotomic_value(params, n):
    """The n-th cyclotomic form evaluated at the defining pair, for n >= 3.

    power: direct evaluation at (a, b).  lucas and lehmer: expressed through
    earlier terms by Moebius inversion, which stays inside K[x].
    """
    if not isinstance(n, int) or n < 3:
        raise PreconditionViolated("cyclotomic comparison starts at index 3")
    if params.kind is SeqKind.POWER:
        return eval_form(cyclotomic_form(n), params.a, params.b)
    if params.kind is SeqKind.LUCAS:
        return _mobius_term_product(params, n)
    return mobius_product(params, n)
