"""Verification campaigns over parameter grids.

A campaign enumerates (or samples) admissible parameter pairs for the chosen
sequence kinds, runs the configured divisibility checks over an index grid,
and aggregates exact pass/fail results with replayable failure witnesses.
Everything is deterministic: exhaustive enumeration is ordered
lexicographically by coefficient tuples and random enumeration is seeded.
"""

import json
import random
import time
from dataclasses import dataclass
from itertools import product
from math import gcd as int_gcd
from typing import Optional

from .coeff import PrimeField, Rationals, is_prime
from .divisibility import (
    coprime_pair_check,
    index_scaled_coprime_check,
    primitive_part,
    primitive_parts_factored,
    strong_div_check,
    sum_square_coprime_check,
    term_divisors,
    valuation_stability_check,
    zsigmondy_check,
    zsigmondy_claimed,
)
from .errors import ConfigInvalid, OracleMismatch, ParseError, ValidationError
from .polyring import Poly, format_poly, parse_poly, poly_gcd
from .sequences import SeqKind, cyclotomic_value, oracle_term, term, validate

__all__ = [
    "ALL_CHECKS",
    "Exhaustive",
    "Random",
    "CampaignConfig",
    "Failure",
    "VerifyReport",
    "enumerate_params",
    "run_campaign",
    "parse_config",
    "load_config",
    "render_report",
]

ALL_CHECKS = (
    "strong_div",
    "zsigmondy",
    "primitive_part_phi",
    "valuation_stability",
    "sum_square_coprime",
    "index_scaled_coprime",
    "coprime_pairs",
    "oracle_equivalence",
)


@dataclass(frozen=True)
class Exhaustive:
    def to_json(self):
        return {"type": "exhaustive"}


@dataclass(frozen=True)
class Random:
    count: int
    seed: int

    def to_json(self):
        return {"type": "random", "count": self.count, "seed": self.seed}


@dataclass(frozen=True)
class CampaignConfig:
    """Everything needed to reproduce a campaign run.

    When ``params`` is given it is used verbatim (after validation) and the
    enumeration strategy is ignored; otherwise pairs come from exhaustive or
    seeded-random enumeration at degree <= max_param_degree.
    """

    field: object
    kinds: tuple
    max_param_degree: int
    enumeration: object
    n_max: int
    m_max: int
    checks: tuple
    include_excluded: bool = False
    params: Optional[tuple] = None

    def to_json(self):
        doc = {
            "field": _field_json(self.field),
            "kinds": [k.value for k in self.kinds],
            "max_param_degree": self.max_param_degree,
            "enumeration": None
            if self.enumeration is None
            else self.enumeration.to_json(),
            "n_max": self.n_max,
            "m_max": self.m_max,
            "checks": list(self.checks),
            "include_excluded": self.include_excluded,
        }
        if self.params is not None:
            doc["params"] = [[format_poly(a), format_poly(b)] for a, b in self.params]
        return doc


def _field_json(field):
    if field.char:
        return {"type": "fp", "p": field.p}
    return {"type": "q"}


@dataclass(frozen=True)
class Failure:
    kind: str
    a: str
    b: str
    check: str
    indices: dict
    detail: str

    def to_json(self):
        return {
            "kind": self.kind,
            "a": self.a,
            "b": self.b,
            "check": self.check,
            "indices": dict(self.indices),
            "detail": self.detail,
        }


@dataclass
class VerifyReport:
    config: CampaignConfig
    params_admitted: int
    params_rejected: int
    cases_run: int
    cases_passed: int
    failures: list
    wall_time: float

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "config": self.config.to_json(),
            "params_admitted": self.params_admitted,
            "params_rejected": self.params_rejected,
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "failures": [f.to_json() for f in self.failures],
            "wall_time": self.wall_time,
        }


def validate_config(config):
    field = config.field
    if not isinstance(field, (Rationals, PrimeField)):
        raise ConfigInvalid("field must be the rationals or a prime field")
    if not config.kinds:
        raise ConfigInvalid("at least one sequence kind is required")
    for k in config.kinds:
        if not isinstance(k, SeqKind):
            raise ConfigInvalid(f"unknown kind {k!r}")
    if not config.checks:
        raise ConfigInvalid("at least one check is required")
    for c in config.checks:
        if c not in ALL_CHECKS:
            raise ConfigInvalid(f"unknown check {c!r}")
    if config.max_param_degree < 0:
        raise ConfigInvalid("max_param_degree must be >= 0")
    if config.m_max < 1 or config.n_max < 1:
        raise ConfigInvalid("index bounds must be positive")
    needs_reports = {"zsigmondy", "primitive_part_phi"} & set(config.checks)
    if needs_reports and config.n_max < 3:
        raise ConfigInvalid("primitive-divisor checks need n_max >= 3")
    if config.params is not None:
        if not config.params:
            raise ConfigInvalid("explicit parameter list is empty")
        for pair in config.params:
            if len(pair) != 2 or any(q.field != field for q in pair):
                raise ConfigInvalid("explicit parameters must be pairs over the config field")
        return
    if isinstance(config.enumeration, Exhaustive):
        if not field.char or field.p > 7 or config.max_param_degree > 3:
            raise ConfigInvalid(
                "exhaustive enumeration is limited to prime fields with "
                "p <= 7 and degree <= 3"
            )
    elif isinstance(config.enumeration, Random):
        if config.enumeration.count < 1:
            raise ConfigInvalid("random enumeration needs count >= 1")
    else:
        raise ConfigInvalid("enumeration must be exhaustive or random")


def _monic_candidates(field, max_deg):
    p = field.p
    for d in range(max_deg + 1):
        for tail in product(range(p), repeat=d):
            yield Poly(field, tail + (1,))


def _nonzero_candidates(field, max_deg):
    p = field.p
    for d in range(max_deg + 1):
        for lead in range(1, p):
            for tail in product(range(p), repeat=d):
                yield Poly(field, tail + (lead,))


def _lead_representatives(field):
    # one leading coefficient per orbit of squared units
    p = field.p
    if p == 2:
        return (1,)
    squares = {(i * i) % p for i in range(1, p)}
    smallest = min(v for v in range(1, p) if v not in squares)
    return (1, smallest)


def _first_candidates(field, max_deg, kind):
    if kind is SeqKind.LEHMER:
        reps = _lead_representatives(field)
        p = field.p
        for d in range(max_deg + 1):
            for lead in reps:
                for tail in product(range(p), repeat=d):
                    yield Poly(field, tail + (lead,))
    else:
        yield from _monic_candidates(field, max_deg)


def _random_poly(field, max_deg, rng):
    d = rng.randrange(max_deg + 1)
    if field.char:
        p = field.p
        tail = [rng.randrange(p) for _ in range(d)]
        return Poly(field, tuple(tail) + (rng.randrange(1, p),))
    tail = [field.from_int(rng.randint(-4, 4)) for _ in range(d)]
    lead = rng.randint(1, 4) * rng.choice((1, -1))
    return Poly(field, tuple(tail) + (field.from_int(lead),))


def enumerate_params(config):
    """Admissible parameter pairs for the campaign, with the rejection count.

    Returns (params_list, rejected).  Exhaustive enumeration walks one
    representative per unit orbit: the first parameter is monic (for the
    lehmer kind, its leading coefficient is 1 or the smallest non-square,
    one per coset of squared units), the second is any nonzero polynomial;
    candidates failing validate() are counted as rejected.  Random
    enumeration draws seeded coefficient tuples until `count` distinct
    admissible pairs are found per kind.
    """
    validate_config(config)
    field = config.field
    admitted = []
    rejected = 0
    if config.params is not None:
        for kind in config.kinds:
            for a, b in config.params:
                try:
                    admitted.append(validate(kind, field, a, b))
                except ValidationError:
                    rejected += 1
        return admitted, rejected
    if isinstance(config.enumeration, Exhaustive):
        seconds = list(_nonzero_candidates(field, config.max_param_degree))
        for kind in config.kinds:
            for a in _first_candidates(field, config.max_param_degree, kind):
                for b in seconds:
                    try:
                        admitted.append(validate(kind, field, a, b))
                    except ValidationError:
                        rejected += 1
        return admitted, rejected
    rng = random.Random(config.enumeration.seed)
    for kind in config.kinds:
        seen = set()
        found = 0
        attempts = 0
        while found < config.enumeration.count:
            attempts += 1
            if attempts > 20000 * config.enumeration.count:
                raise ConfigInvalid("rejection rate too high for random enumeration")
            a = _random_poly(field, config.max_param_degree, rng)
            b = _random_poly(field, config.max_param_degree, rng)
            key = (a.coeffs, b.coeffs)
            try:
                params = validate(kind, field, a, b)
            except ValidationError:
                rejected += 1
                continue
            if key in seen:
                continue
            seen.add(key)
            admitted.append(params)
            found += 1
    return admitted, rejected


# --- per-check case generators ------------------------------------------------
# Each runner yields (indices, ok, detail) triples; detail is only filled on
# failure.  ctx carries per-params shared state (the primitive reports).


def _reports(params, config, ctx):
    if "reports" not in ctx:
        ctx["reports"] = zsigmondy_check(params, config.n_max)
    return ctx["reports"]


def _run_strong_div(params, config, ctx):
    for m in range(1, config.m_max + 1):
        for n in range(m, config.n_max + 1):
            ok = strong_div_check(params, m, n)
            detail = ""
            if not ok:
                g = poly_gcd(term(params, m), term(params, n))
                d = int_gcd(m, n)
                detail = (
                    f"gcd(term({m}), term({n})) = {g} but term({d}) = {term(params, d)}"
                )
            yield {"m": m, "n": n}, ok, detail


def _run_zsigmondy(params, config, ctx):
    for r in _reports(params, config, ctx):
        if not zsigmondy_claimed(r, config.include_excluded):
            continue
        ok = r.has_primitive
        detail = "" if ok else f"term = {r.term}, primitive part = {r.primitive_part}"
        yield {"n": r.n}, ok, detail


def _run_phi_match(params, config, ctx):
    for r in _reports(params, config, ctx):
        if r.n < 3 or r.excluded:
            continue
        ok = r.matches_phi
        detail = ""
        if not ok:
            detail = (
                f"primitive part = {r.primitive_part}, "
                f"cyclotomic value = {cyclotomic_value(params, r.n)}"
            )
        yield {"n": r.n}, ok, detail


def _run_valuation_stability(params, config, ctx):
    if params.kind is not SeqKind.LEHMER:
        return
    p = params.field.char
    for n in range(3, config.n_max + 1):
        for q in term_divisors(params, n):
            for m in range(1, config.m_max + 1):
                if p and m % p == 0:
                    continue
                ok = valuation_stability_check(params, q, n, m)
                detail = "" if ok else f"q = {q}, term({n}) vs term({m * n})"
                yield {"q": format_poly(q), "n": n, "m": m}, ok, detail


def _run_sum_square_coprime(params, config, ctx):
    if params.kind is not SeqKind.LEHMER:
        return
    for n in range(1, config.n_max + 1, 2):
        ok = sum_square_coprime_check(params, n)
        detail = "" if ok else f"gcd(term({n}), {params.a}) is not a unit"
        yield {"n": n}, ok, detail


def _run_index_scaled_coprime(params, config, ctx):
    if params.kind is not SeqKind.LEHMER:
        return
    for m in range(1, config.m_max + 1, 2):
        for n in range(1, config.m_max + 1, 2):
            ok = index_scaled_coprime_check(params, m, n)
            detail = "" if ok else f"quotients at ({m}*{n}, 2*{n}) share a factor"
            yield {"m": m, "n": n}, ok, detail


def _run_coprime_pairs(params, config, ctx):
    if params.kind is SeqKind.POWER:
        return
    for m in range(1, config.n_max + 1):
        for n in range(m + 1, config.n_max + 1):
            if int_gcd(m, n) != 1:
                continue
            if params.kind is SeqKind.LEHMER and m % 2 == 0:
                ok = coprime_pair_check(params, n, m)
            else:
                ok = coprime_pair_check(params, m, n)
            detail = "" if ok else f"gcd(term({m}), term({n})) is not a unit"
            yield {"m": m, "n": n}, ok, detail


def _run_oracle_equivalence(params, config, ctx):
    if params.kind is not SeqKind.POWER:
        for n in range(1, config.n_max + 1):
            try:
                ok = oracle_term(params, n) == term(params, n)
                detail = "" if ok else f"recurrence {term(params, n)} != tower value"
            except OracleMismatch as exc:
                ok, detail = False, str(exc)
            yield {"n": n}, ok, detail
    if params.field.char:
        parts = primitive_parts_factored(params, config.n_max)
        reports = _reports(params, config, ctx) if config.n_max >= 3 else None
        for n in range(1, config.n_max + 1):
            stripped = (
                reports[n - 1].primitive_part
                if reports
                else primitive_part(params, n).primitive_part
            )
            ok = stripped == parts[n]
            detail = "" if ok else f"stripped = {stripped}, factored = {parts[n]}"
            yield {"n": n}, ok, detail


_RUNNERS = {
    "strong_div": _run_strong_div,
    "zsigmondy": _run_zsigmondy,
    "primitive_part_phi": _run_phi_match,
    "valuation_stability": _run_valuation_stability,
    "sum_square_coprime": _run_sum_square_coprime,
    "index_scaled_coprime": _run_index_scaled_coprime,
    "coprime_pairs": _run_coprime_pairs,
    "oracle_equivalence": _run_oracle_equivalence,
}


def run_campaign(config):
    """Run every configured check for every admissible parameter pair.

    Never aborts on a failed case; failures accumulate in enumeration order
    with enough context to replay the single case by hand.
    """
    start = time.perf_counter()
    params_list, rejected = enumerate_params(config)
    cases_run = 0
    cases_passed = 0
    failures = []
    try:
        for params in params_list:
            ctx = {}
            a_text, b_text = format_poly(params.a), format_poly(params.b)
            for check in config.checks:
                for indices, ok, detail in _RUNNERS[check](params, config, ctx):
                    cases_run += 1
                    if ok:
                        cases_passed += 1
                    else:
                        failures.append(
                            Failure(params.kind.value, a_text, b_text, check, indices, detail)
                        )
    except MemoryError:
        failures.append(
            Failure("-", "-", "-", "resource", {}, "memory limit reached; report is partial")
        )
    wall = time.perf_counter() - start
    return VerifyReport(
        config=config,
        params_admitted=len(params_list),
        params_rejected=rejected,
        cases_run=cases_run,
        cases_passed=cases_passed,
        failures=failures,
        wall_time=wall,
    )


# --- config files ---------------------------------------------------------


def _field_from_desc(kind_text, p_value):
    if kind_text == "q":
        return Rationals()
    if kind_text == "fp":
        if p_value is None:
            raise ConfigInvalid("prime field needs p")
        if not is_prime(p_value):
            raise ConfigInvalid(f"{p_value} is not prime")
        return PrimeField(p_value)
    raise ConfigInvalid(f"unknown field type {kind_text!r}")


def _parse_kinds(values):
    try:
        return tuple(SeqKind(v) for v in values)
    except ValueError as exc:
        raise ConfigInvalid(str(exc)) from exc


def _parse_checks(values):
    out = []
    for v in values:
        if v == "all":
            out.extend(ALL_CHECKS)
        elif v in ALL_CHECKS:
            out.append(v)
        else:
            raise ConfigInvalid(f"unknown check {v!r}")
    seen = set()
    uniq = []
    for v in out:
        if v not in seen:
            seen.add(v)
            uniq.append(v)
    return tuple(uniq)


def _parse_param_pairs(field, pairs):
    out = []
    for pair in pairs:
        if len(pair) != 2:
            raise ConfigInvalid("parameter entries must be [a, b] pairs")
        try:
            out.append((parse_poly(field, pair[0]), parse_poly(field, pair[1])))
        except ParseError as exc:
            raise ConfigInvalid(f"bad parameter polynomial: {exc}") from exc
    return tuple(out)


def parse_config(text):
    """Build a CampaignConfig from JSON or key=value text.

    JSON keys: field {"type": "q"|"fp", "p"?}, kinds, max_param_degree,
    enumeration {"type": "exhaustive"} or {"type": "random", "count", "seed"},
    n_max, m_max, checks (names or "all"), include_excluded, params (pairs of
    polynomial strings).  The key=value format takes one key per line with #
    comments; lists are comma-separated, params entries are semicolon-
    separated "a,b" pairs, and enumeration is "exhaustive" or
    "random:count:seed".
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigInvalid(f"bad JSON config: {exc}") from exc
        return _config_from_dict(doc)
    doc = {}
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigInvalid(f"expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        doc[key] = value
    return _config_from_flat(doc)


def _config_from_dict(doc):
    known = {
        "field",
        "kinds",
        "max_param_degree",
        "enumeration",
        "n_max",
        "m_max",
        "checks",
        "include_excluded",
        "params",
    }
    unknown = set(doc) - known
    if unknown:
        raise ConfigInvalid(f"unknown config keys: {sorted(unknown)}")
    fdesc = doc.get("field")
    if not isinstance(fdesc, dict) or "type" not in fdesc:
        raise ConfigInvalid('field must be {"type": "q"} or {"type": "fp", "p": ...}')
    field = _field_from_desc(fdesc["type"], fdesc.get("p"))
    kinds = _parse_kinds(doc.get("kinds", []))
    checks = _parse_checks(doc.get("checks", []))
    enum_desc = doc.get("enumeration", {"type": "exhaustive"})
    if not isinstance(enum_desc, dict):
        raise ConfigInvalid("enumeration must be an object with a type")
    if enum_desc.get("type") == "exhaustive":
        enumeration = Exhaustive()
    elif enum_desc.get("type") == "random":
        try:
            enumeration = Random(int(enum_desc["count"]), int(enum_desc.get("seed", 0)))
        except KeyError as exc:
            raise ConfigInvalid("random enumeration needs a count") from exc
    else:
        raise ConfigInvalid("enumeration type must be exhaustive or random")
    params = None
    if "params" in doc:
        params = _parse_param_pairs(field, doc["params"])
    try:
        config = CampaignConfig(
            field=field,
            kinds=kinds,
            max_param_degree=int(doc.get("max_param_degree", 2)),
            enumeration=enumeration,
            n_max=int(doc.get("n_max", 12)),
            m_max=int(doc.get("m_max", 12)),
            checks=checks,
            include_excluded=bool(doc.get("include_excluded", False)),
            params=params,
        )
    except (TypeError, ValueError) as exc:
        raise ConfigInvalid(f"bad config value: {exc}") from exc
    validate_config(config)
    return config


def _config_from_flat(doc):
    out = {}
    if "field" in doc:
        out["field"] = {"type": doc["field"]}
        if "p" in doc:
            try:
                out["field"]["p"] = int(doc["p"])
            except ValueError as exc:
                raise ConfigInvalid("p must be an integer") from exc
    if "kinds" in doc:
        out["kinds"] = [v.strip() for v in doc["kinds"].split(",") if v.strip()]
    if "checks" in doc:
        out["checks"] = [v.strip() for v in doc["checks"].split(",") if v.strip()]
    if "enumeration" in doc:
        enum_text = doc["enumeration"]
        if enum_text == "exhaustive":
            out["enumeration"] = {"type": "exhaustive"}
        elif enum_text.startswith("random:"):
            bits = enum_text.split(":")
            if len(bits) != 3:
                raise ConfigInvalid("random enumeration is random:count:seed")
            out["enumeration"] = {"type": "random", "count": bits[1], "seed": bits[2]}
        else:
            raise ConfigInvalid(f"unknown enumeration {enum_text!r}")
    for key in ("max_param_degree", "n_max", "m_max"):
        if key in doc:
            out[key] = doc[key]
    if "include_excluded" in doc:
        out["include_excluded"] = doc["include_excluded"].lower() in ("1", "true", "yes")
    if "params" in doc:
        pairs = []
        for chunk in doc["params"].split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            bits = [v.strip() for v in chunk.split(",")]
            pairs.append(bits)
        out["params"] = pairs
    return _config_from_dict(out)


def load_config(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config(handle.read())


def render_report(report):
    """Human-readable summary of a VerifyReport."""
    config = report.config
    field = config.field
    field_text = f"F_{field.p}" if field.char else "Q"
    lines = [
        "campaign over {} | kinds: {} | degree <= {}".format(
            field_text,
            ",".join(k.value for k in config.kinds),
            config.max_param_degree,
        ),
        "checks: " + ", ".join(config.checks),
        f"indices: n <= {config.n_max}, m <= {config.m_max}"
        + (" (excluded indices kept in)" if config.include_excluded else ""),
        f"params: {report.params_admitted} admitted, {report.params_rejected} rejected",
        f"cases: {report.cases_run} run, {report.cases_passed} passed, "
        f"{len(report.failures)} failed",
        f"wall time: {report.wall_time:.2f}s",
    ]
    for f in report.failures[:50]:
        where = " ".join(f"{k}={v}" for k, v in f.indices.items())
        lines.append(f"FAIL {f.kind} a={f.a} b={f.b} {f.check} [{where}] {f.detail}")
    if len(report.failures) > 50:
        lines.append(f"... and {len(report.failures) - 50} more failures")
    lines.append("result: " + ("PASS" if report.ok else "FAIL"))
    return "\n".join(lines)
