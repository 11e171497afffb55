"""Command-line surface: certificates, root search, graph utilities,
polynomial advice, and instance emission.

Every command is pure input to output; all randomness is seed-parameterized.
Exit codes: ``check`` 0 when a certificate fires / 1 when none; ``search``
0 witness / 1 exhausted / 3 budget exceeded; 2 on input errors everywhere.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import criteria, fixedpoint, instances, mfnio, poly, pullback, search
from .core import Multifunction, SingleMap, invert, iterate, iterate_map

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _load(path: str) -> Multifunction | SingleMap:
    try:
        with open(path, encoding="utf-8") as handle:
            return mfnio.parse(handle.read())
    except OSError as exc:
        raise InputError(str(exc)) from exc
    except mfnio.ParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_multifunction(path: str) -> Multifunction:
    value = _load(path)
    return value.as_multifunction() if isinstance(value, SingleMap) else value


def _labels(ground, indices) -> list[str]:
    return [ground.labels[i] for i in sorted(indices)]


def _certificate_json(ground, cert: criteria.Certificate) -> dict:
    return {
        "rule": cert.rule.value,
        "citation": cert.citation,
        "x0": ground.labels[cert.x0],
        "M": cert.M,
        "N": cert.N,
        "measured_Q": str(cert.measured_Q),
        "measured_N_max": str(cert.measured_N_max),
        "hypotheses": dict(cert.hypotheses),
        "conclusion": cert.conclusion.value,
        "failed_hypotheses": list(cert.failed_hypotheses),
        "root_class": cert.root_class,
    }


def _print_certificate(ground, cert: criteria.Certificate) -> None:
    print(f"rule {cert.rule.value}  x0={ground.labels[cert.x0]}  M={cert.M}  N={cert.N}")
    print(f"  Q={cert.measured_Q}  N_max={cert.measured_N_max}  "
          f"bound M*N^3={cert.M * cert.N ** 3}")
    print(f"  conclusion: {cert.conclusion.value} ({cert.root_class} class)")
    if cert.failed_hypotheses:
        print(f"  failed hypotheses: {', '.join(cert.failed_hypotheses)}")


def cmd_check(args) -> int:
    F = _load_multifunction(args.file)
    ground = F.ground
    if args.M < 1:
        raise InputError("M must be positive")
    if args.rule == "scan":
        certs = criteria.scan(F, args.M)
    else:
        rule = criteria.Rule(args.rule)
        checker = criteria.CHECKERS[rule]
        if args.x0 is not None:
            try:
                points = [ground.index(args.x0)]
            except KeyError as exc:
                raise InputError(str(exc)) from exc
        else:
            points = list(range(ground.size))
        certs = []
        for x0 in points:
            N = args.N if args.N is not None else criteria.minimal_N(F, rule, x0)
            cert = checker(F, x0, args.M, N)
            if cert.fires or args.x0 is not None:
                certs.append(cert)
    if args.json:
        print(json.dumps({"certificates": [_certificate_json(ground, c) for c in certs]},
                         indent=2, sort_keys=True))
    else:
        if not certs:
            print("no certificate fires")
        for cert in certs:
            _print_certificate(ground, cert)
    return EXIT_OK if any(c.fires for c in certs) else EXIT_NEGATIVE


def cmd_search(args) -> int:
    value = _load(args.file)
    if args.budget < 1:
        raise InputError("budget must be positive")
    if args.order < 2:
        raise InputError("order must be at least 2")
    if isinstance(value, SingleMap) and not (args.max_out or args.max_in):
        result = search.find_single_root(value, args.order, budget=args.budget,
                                         max_points=value.ground.size)
    else:
        F = value.as_multifunction() if isinstance(value, SingleMap) else value
        if args.max_out and args.max_in:
            raise InputError("--max-out and --max-in are mutually exclusive")
        if args.max_out:
            constraint = search.max_out_degree(args.max_out, args.total)
        elif args.max_in:
            constraint = search.max_in_degree(args.max_in, args.total)
        else:
            constraint = search.RootConstraint(require_total_domain=args.total)
        result = search.find_multi_root(F, args.order, constraint, budget=args.budget,
                                        max_points=F.ground.size)
    payload = {
        "order": result.order,
        "outcome": result.outcome,
        "nodes_explored": str(result.nodes_explored),
        "witness": mfnio.serialize(result.witness) if result.found else None,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif result.found:
        sys.stdout.write(mfnio.serialize(result.witness))
    else:
        print(result.outcome)
    if result.found:
        return EXIT_OK
    return EXIT_BUDGET if result.outcome == "budget" else EXIT_NEGATIVE


def cmd_iterate(args) -> int:
    value = _load(args.file)
    if args.order < 0:
        raise InputError("order must be nonnegative")
    if isinstance(value, SingleMap):
        sys.stdout.write(mfnio.serialize(iterate_map(value, args.order)))
    else:
        sys.stdout.write(mfnio.serialize(iterate(value, args.order)))
    return EXIT_OK


def cmd_invert(args) -> int:
    F = _load_multifunction(args.file)
    sys.stdout.write(mfnio.serialize(invert(F)))
    return EXIT_OK


def cmd_pullback(args) -> int:
    value = _load(args.file)
    if isinstance(value, SingleMap):
        sys.stdout.write(mfnio.serialize(pullback.pullback_of(value)))
        return EXIT_OK
    witness = pullback.is_pullback(value)
    if witness.is_pullback:
        sys.stdout.write(mfnio.serialize(witness.witness_map))
        return EXIT_OK
    print("not a pullback multifunction; failed conditions: "
          + ", ".join(sorted(witness.failed_conditions)))
    return EXIT_NEGATIVE


def _point_list(ground, csv: str) -> list[int]:
    try:
        return [ground.index(lab) for lab in csv.split(",") if lab]
    except KeyError as exc:
        raise InputError(str(exc)) from exc


def cmd_paths(args) -> int:
    from .paths import count_paths
    F = _load_multifunction(args.file)
    if args.length < 1:
        raise InputError("length must be at least 1")
    sources = _point_list(F.ground, getattr(args, "from"))
    targets = _point_list(F.ground, args.to)
    print(count_paths(F, sources, targets, args.length))
    return EXIT_OK


def cmd_fixedpoints(args) -> int:
    value = _load(args.file)
    if not isinstance(value, SingleMap):
        raise InputError("fixedpoints requires a 'kind single' input")
    ground = value.ground
    prof = fixedpoint.fixed_point_profile(value)
    print("fixed points: " + (" ".join(_labels(ground, prof.fixed_points)) or "(none)"))
    for x in prof.fixed_points:
        tail = prof.tails[x]
        kind = "non-isolated" if tail else "isolated"
        tail_str = " ".join(_labels(ground, tail)) or "-"
        print(f"  {ground.labels[x]}: {kind}, tail: {tail_str}")
    print(f"total tail size: {prof.total_tail_size}")
    for name, exclusion in (("tail-mass", fixedpoint.rice_exclusion(value)),
                            ("non-isolated-count", fixedpoint.non_isolated_exclusion(value))):
        if exclusion is None:
            print(f"{name} exclusion: not applicable")
        elif exclusion.forbidden_divisor_max is None:
            print(f"{name} exclusion: all orders n > {exclusion.lower_bound}")
        else:
            print(f"{name} exclusion: orders n > {exclusion.lower_bound} with no divisor "
                  f"in [2, {exclusion.forbidden_divisor_max}]")
    return EXIT_OK


def _parse_complex(token: str) -> complex:
    try:
        return complex(token.strip().replace("i", "j"))
    except ValueError as exc:
        raise InputError(f"bad complex coefficient {token!r}") from exc


def cmd_poly(args) -> int:
    coeffs = tuple(_parse_complex(tok) for tok in args.coeffs.split(","))
    try:
        polynomial = poly.ComplexPolynomial(coeffs)
        advice = poly.advise(polynomial, args.order)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        findings = []
        for f in advice.findings:
            if isinstance(f.excluded, frozenset):
                excluded = {"orders": sorted(f.excluded)}
            else:
                excluded = {"lower_bound": f.excluded.lower_bound,
                            "forbidden_divisor_max": f.excluded.forbidden_divisor_max}
            findings.append({"rule": f.rule, "citation": f.citation,
                             "tolerance": f.tolerance, "excluded": excluded})
        print(json.dumps({"degree": polynomial.degree, "order": args.order,
                          "excludes_order": advice.excludes_order(args.order),
                          "findings": findings}, indent=2, sort_keys=True))
    else:
        if not advice.findings:
            print("no finding; nothing is asserted")
        for f in advice.findings:
            if isinstance(f.excluded, frozenset):
                desc = "orders " + ", ".join(str(n) for n in sorted(f.excluded))
            elif f.excluded.forbidden_divisor_max is None:
                desc = f"all orders n > {f.excluded.lower_bound}"
            else:
                desc = (f"orders n > {f.excluded.lower_bound} with no divisor in "
                        f"[2, {f.excluded.forbidden_divisor_max}]")
            tol = f" (tolerance {f.tolerance})" if f.tolerance is not None else ""
            print(f"{f.rule}: excludes {desc}{tol} [{f.citation}]")
        print(f"order {args.order} excluded: {advice.excludes_order(args.order)}")
    return EXIT_OK


def cmd_solar(args) -> int:
    if args.count < 1:
        raise InputError("count must be positive")
    print(" ".join(str(d) for d in poly.first_solar(args.count)))
    return EXIT_OK


def cmd_instance(args) -> int:
    spec = instances.InstanceSpec(
        name=args.name, depth=args.depth, modulus=args.modulus, exponent=args.exponent,
        variant=args.variant, size=args.size, max_out_degree=args.max_out,
        density=args.density, seed=args.seed)
    try:
        value = instances.build(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write(mfnio.serialize(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iterroot")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run nonexistence certificates")
    p.add_argument("file")
    p.add_argument("--x0")
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--rule", default="scan",
                   choices=["forward-paths", "forward-points", "inverse-paths",
                            "inverse-points", "scan"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exhaustive root search")
    p.add_argument("file")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-out", type=int, default=None)
    p.add_argument("--max-in", type=int, default=None)
    p.add_argument("--total", action="store_true")
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("iterate", help="print an iterate")
    p.add_argument("file")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("invert", help="reverse all edges")
    p.add_argument("file")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("pullback", help="pullback of a map, or witness map of a pullback")
    p.add_argument("file")
    p.set_defaults(func=cmd_pullback)

    p = sub.add_parser("paths", help="count fixed-length paths between point sets")
    p.add_argument("file")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("fixedpoints", help="fixed-point profile and order exclusions")
    p.add_argument("file")
    p.set_defaults(func=cmd_fixedpoints)

    p = sub.add_parser("poly", help="polynomial root-order advice")
    p.add_argument("--coeffs", required=True,
                   help="comma-separated complex coefficients, low degree first, 're+imi'")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("solar", help="degrees passing the modular power criterion")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_solar)

    p = sub.add_parser("instance", help="emit a named instance in .mfn format")
    p.add_argument("name")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--exponent", type=int, default=None)
    p.add_argument("--variant", default=None)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--max-out", type=int, default=None)
    p.add_argument("--density", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_instance)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
