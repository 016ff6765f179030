"""Command-line surface for sequence generation, reports, and campaigns.

Every invocation is reproducible from its argument vector alone; the only
environment input is the optional SEQ_SEED default for randomized work, and
the --seed flag overrides it.

Exit codes: 0 success, 1 campaign ran and found failures, 2 for validation,
parse, or configuration errors (the error name and message go to stderr).
"""

import argparse
import json
import os
import sys

from .coeff import PrimeField, Rationals
from .cyclokit import cyclotomic_form, power_sum_form, resultant
from .divisibility import primitive_part, zsigmondy_check
from .errors import ConfigInvalid, SeqdivError, UnsupportedField
from .factorization import DEFAULT_SEED, factor_fp, squarefree_decomp
from .polyring import parse_poly
from .sequences import SeqKind, term, validate
from .verifier import (
    ALL_CHECKS,
    CampaignConfig,
    load_config,
    render_report,
    run_campaign,
    validate_config,
)

__all__ = ["main"]


def _field_from_args(args):
    if args.field == "fp":
        if args.p is None:
            raise ConfigInvalid("--field fp requires --p")
        return PrimeField(args.p)
    if args.p is not None:
        raise ConfigInvalid("--p only makes sense with --field fp")
    return Rationals()


def _field_json(field):
    if field.char:
        return {"type": "fp", "p": field.p}
    return {"type": "q"}


def _params_from_args(args):
    field = _field_from_args(args)
    a = parse_poly(field, args.a)
    b = parse_poly(field, args.b)
    return validate(SeqKind(args.kind), field, a, b)


def _resolve_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    raw = os.environ.get("SEQ_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ConfigInvalid(f"SEQ_SEED must be an integer, got {raw!r}")


def _bool(v):
    return "true" if v else "false"


def _primes_text(primes):
    return "".join(f"({f})" if e == 1 else f"({f})^{e}" for f, e in primes)


def cmd_gen(args):
    if args.n < 1:
        raise ConfigInvalid("--n must be at least 1")
    params = _params_from_args(args)
    terms = [term(params, i) for i in range(1, args.n + 1)]
    if args.json:
        print(
            json.dumps(
                {
                    "kind": params.kind.value,
                    "field": _field_json(params.field),
                    "params": {"a": str(params.a), "b": str(params.b)},
                    "terms": [str(t) for t in terms],
                },
                indent=2,
            )
        )
    else:
        for t in terms:
            print(t)
    return 0


def _report_line(r):
    line = (
        f"n={r.n} term={r.term} primitive_part={r.primitive_part} "
        f"has_primitive={_bool(r.has_primitive)} "
        f"matches_phi={_bool(r.matches_phi)} excluded={_bool(r.excluded)}"
    )
    if r.primitive_primes is not None:
        line += f" primitive_primes={_primes_text(r.primitive_primes)}"
    return line


def cmd_primitive(args):
    if (args.n is None) == (args.n_max is None):
        raise ConfigInvalid("give exactly one of --n or --n-max")
    params = _params_from_args(args)
    with_primes = bool(params.field.char)
    if args.n is not None:
        reports = [primitive_part(params, args.n, with_primes=with_primes)]
    else:
        reports = zsigmondy_check(params, args.n_max, with_primes=with_primes)
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if args.n is not None else payload, indent=2))
    else:
        for r in reports:
            print(_report_line(r))
    return 0


def cmd_verify(args):
    if args.config is not None:
        if args.a is not None or args.b is not None:
            raise ConfigInvalid("--config and inline --a/--b are mutually exclusive")
        config = load_config(args.config)
    else:
        if args.kind is None or args.a is None or args.b is None:
            raise ConfigInvalid(
                "inline verify needs --kind, --a and --b (or use --config)"
            )
        field = _field_from_args(args)
        pair = (parse_poly(field, args.a), parse_poly(field, args.b))
        validate(SeqKind(args.kind), field, pair[0], pair[1])
        config = CampaignConfig(
            field=field,
            kinds=(SeqKind(args.kind),),
            max_param_degree=max(p.degree for p in pair),
            enumeration=None,
            n_max=args.n_max,
            m_max=args.m_max,
            checks=ALL_CHECKS,
            include_excluded=args.include_excluded,
            params=(pair,),
        )
        validate_config(config)
    report = run_campaign(config)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(render_report(report))
    return 0 if report.ok else 1


def cmd_cyclo(args):
    form = cyclotomic_form(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "phi": str(form)}))
    else:
        print(form)
    return 0


def cmd_resultant(args):
    value = resultant(power_sum_form(args.m), power_sum_form(args.n))
    text = Rationals().format_scalar(value)
    if args.json:
        print(json.dumps({"m": args.m, "n": args.n, "resultant": text}))
    else:
        print(text)
    return 0


def cmd_factor(args):
    field = _field_from_args(args)
    h = parse_poly(field, args.poly)
    if args.squarefree:
        fact = squarefree_decomp(h)
    elif field.char:
        fact = factor_fp(h, seed=_resolve_seed(args))
    else:
        raise UnsupportedField(
            "full factorization over Q is not provided; --squarefree is"
        )
    if args.json:
        print(
            json.dumps(
                {
                    "field": _field_json(field),
                    "input": str(h),
                    "unit": field.format_scalar(fact.unit),
                    "factors": [{"factor": str(f), "exp": e} for f, e in fact.factors],
                },
                indent=2,
            )
        )
    else:
        print(fact)
    return 0


def _add_field_flags(sub):
    sub.add_argument("--field", choices=("q", "fp"), required=True)
    sub.add_argument("--p", type=int, help="characteristic, required for --field fp")


def _add_pair_flags(sub):
    sub.add_argument("--kind", choices=[k.value for k in SeqKind], required=True)
    _add_field_flags(sub)
    sub.add_argument("--a", required=True, help="first parameter, e.g. \"x^2+1\"")
    sub.add_argument("--b", required=True, help="second parameter")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="seq",
        description="Exact divisibility sequences over Q[x] and F_p[x].",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="print terms 1..n")
    _add_pair_flags(gen)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_gen)

    prim = sub.add_parser("primitive", help="primitive-divisor reports")
    _add_pair_flags(prim)
    prim.add_argument("--n", type=int, help="single index")
    prim.add_argument("--n-max", type=int, help="report every index 1..n_max")
    prim.add_argument("--json", action="store_true")
    prim.set_defaults(func=cmd_primitive)

    ver = sub.add_parser("verify", help="run a verification campaign")
    ver.add_argument("--config", help="campaign config path (json or key=value)")
    ver.add_argument("--kind", choices=[k.value for k in SeqKind])
    ver.add_argument("--field", choices=("q", "fp"), default="q")
    ver.add_argument("--p", type=int)
    ver.add_argument("--a")
    ver.add_argument("--b")
    ver.add_argument("--n-max", type=int, default=12)
    ver.add_argument("--m-max", type=int, default=12)
    ver.add_argument("--include-excluded", action="store_true")
    ver.add_argument("--seed", type=int)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    cyc = sub.add_parser("cyclo", help="homogeneous cyclotomic form")
    cyc.add_argument("--n", type=int, required=True)
    cyc.add_argument("--json", action="store_true")
    cyc.set_defaults(func=cmd_cyclo)

    res = sub.add_parser("resultant", help="resultant of two power-sum forms")
    res.add_argument("--m", type=int, required=True)
    res.add_argument("--n", type=int, required=True)
    res.add_argument("--json", action="store_true")
    res.set_defaults(func=cmd_resultant)

    fac = sub.add_parser("factor", help="factor a polynomial")
    _add_field_flags(fac)
    fac.add_argument("poly", help="polynomial expression")
    fac.add_argument("--squarefree", action="store_true")
    fac.add_argument("--seed", type=int)
    fac.add_argument("--json", action="store_true")
    fac.set_defaults(func=cmd_factor)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SeqdivError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
