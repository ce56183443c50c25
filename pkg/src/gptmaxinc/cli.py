"""Command-line front end.

Exit codes: 0 for a positive answer (compatible, found, discriminable, all
checks passed, duality holds), 1 for a negative one, 2 for usage or input
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import compat, maxinc, zoo
from .channel import qubit_channel_case, verify_case
from .exactmath import format_rational
from .gpt import OutsideStateSpace
from .instance import (
    InstanceFile, SchemaError, channel_instance, dumps, load, zoo_instance,
)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _r(x: Fraction) -> str:
    return format_rational(x)


def _v(x) -> list:
    return [_r(c) for c in x]


def _approx(x: Fraction) -> str:
    return f"{float(x):.12g}"


def _source(args) -> InstanceFile:
    given = [a for a in ("space", "zoo", "seed") if getattr(args, a, None) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --space FILE, --zoo NAME, --seed N")
    if args.space is not None:
        try:
            return load(args.space)
        except OSError as exc:
            raise UsageError(f"cannot read {args.space}: {exc.strerror}") from None
    if args.zoo is not None:
        try:
            return zoo_instance(args.zoo)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    K, f, g = zoo.random_instance(args.seed)
    return InstanceFile(list(K.vertices), {"f": {"values": f.values}, "g": {"values": g.values}},
                        name=f"random-{args.seed}")


def _pair(args, inst: InstanceFile):
    names = args.effect or ["f", "g"]
    if len(names) != 2:
        raise UsageError("--effect must be given exactly twice (or omitted for f, g)")
    K = inst.space()
    return K, inst.effect(names[0], K), inst.effect(names[1], K), names


# -- commands ---------------------------------------------------------------

def cmd_check_compat(args):
    inst = _source(args)
    K, f, g, names = _pair(args, inst)
    w = compat.check_compatible(f, g)
    rep = {"command": "check-compat", "effects": names,
           "verdict": "compatible" if w else "incompatible"}
    lines = [f"verdict: {rep['verdict']}"]
    if w:
        rep["witness"] = {k: _v(v) for k, v in w.table.items()}
        lines.append("witness p (vertex values): " + ", ".join(rep["witness"]["p"]))
    return rep, lines, EXIT_YES if w else EXIT_NO


def cmd_degcom(args):
    inst = _source(args)
    K, f, g, names = _pair(args, inst)
    res = compat.degcom_half(f, g) if args.coin == "half" else compat.degcom_free(f, g)
    half = res if args.coin == "half" else compat.degcom_half(f, g)
    cert = compat.dual_beta(f, g)
    lam_half = half.lambda_star
    ok = cert.beta == (1 - lam_half) / lam_half
    rep = {
        "command": "degcom", "coin": args.coin, "effects": names,
        "lambda": _r(res.lambda_star), "lambda_approx": _approx(res.lambda_star),
        "mu": [_r(res.mu1), _r(res.mu2)],
        "beta": _r(cert.beta), "beta_approx": _approx(cert.beta),
        "duality": ok,
        "witness_p": _v(res.witness.p.values),
    }
    if cert.nu is not None:
        rep["dual_certificate"] = {"nu": _r(cert.nu), "eta": _r(cert.eta),
                                   "z": [_v(z) for z in cert.points]}
    lines = [
        f"lambda = {rep['lambda']}, beta = {rep['beta']}, duality {'ok' if ok else 'FAILED'}",
        f"lambda (decimal approximation) ~ {rep['lambda_approx']}",
        f"beta (decimal approximation) ~ {rep['beta_approx']}",
        f"coin biases = {rep['mu'][0]}, {rep['mu'][1]}",
        "witness p (vertex values): " + ", ".join(rep["witness_p"]),
    ]
    if "dual_certificate" in rep:
        dc = rep["dual_certificate"]
        lines.append(f"dual certificate: nu = {dc['nu']}, eta = {dc['eta']}, "
                     + ", ".join(f"z{i + 1} = ({', '.join(z)})" for i, z in enumerate(dc["z"])))
    return rep, lines, EXIT_YES if ok else EXIT_NO


def cmd_find_maxinc(args):
    inst = _source(args)
    K = inst.space()
    found = maxinc.find_maxinc(K)
    rep = {"command": "find-maxinc", "result": "found" if found else "none"}
    lines = [rep["result"]]
    if found:
        f, g, cert = found
        section = maxinc.cross_section(cert)
        for label, e in (("f", f), ("g", g)):
            a, b = e.affine()
            rep[label] = {"a": _v(a), "b": _r(b), "values": _v(e.values)}
            lines.append(f"{label}(x) = ({', '.join(rep[label]['a'])}) . x + {rep[label]['b']}; "
                         f"vertex values {', '.join(rep[label]['values'])}")
        rep["points"] = {name: _v(x) for name, x in zip(maxinc.ROLES, cert.points)}
        for name, x in rep["points"].items():
            lines.append(f"{name} = ({', '.join(x)})")
        rep["section"] = [_v(x) for x in section]
        lines.append("parallelogram section: " + " -> ".join(f"({', '.join(x)})" for x in rep["section"]))
    return rep, lines, EXIT_YES if found else EXIT_NO


def cmd_discriminate(args):
    inst = _source(args)
    K = inst.space()
    task = maxinc.DiscriminationTask(inst.point_set(args.set0), inst.point_set(args.set1))
    try:
        e = maxinc.find_discriminator(K, task)
    except OutsideStateSpace as exc:
        raise UsageError(str(exc)) from None
    rep = {"command": "discriminate", "sets": [args.set0, args.set1],
           "result": "effect" if e else "impossible"}
    lines = []
    if e:
        a, b = e.affine()
        rep["effect"] = {"a": _v(a), "b": _r(b), "values": _v(e.values)}
        lines.append(f"effect: f(x) = ({', '.join(rep['effect']['a'])}) . x + {rep['effect']['b']}")
        lines.append("vertex values: " + ", ".join(rep["effect"]["values"]))
    else:
        lines.append("impossible")
    return rep, lines, EXIT_YES if e else EXIT_NO


def cmd_witness_channel(args):
    if args.case is not None:
        try:
            inst = load(args.case)
        except OSError as exc:
            raise UsageError(f"cannot read {args.case}: {exc.strerror}") from None
        if inst.channel is None:
            raise SchemaError("channel", "missing")
        case = inst.channel
    else:
        case = qubit_channel_case()
    report = verify_case(case)
    rep = {"command": "witness-channel",
           "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                      for c in report.checks],
           "values": {k: (_v(v) if v else None) for k, v in report.values.items()},
           "verdict": report.verdict, "passed": report.passed}
    width = max(len(c.name) for c in report.checks)
    lines = [f"{c.name.ljust(width)}  {'pass' if c.passed else 'FAIL'}  {c.detail}"
             for c in report.checks]
    lines.append(f"verdict: {report.verdict}")
    return rep, lines, EXIT_YES if report.passed else EXIT_NO


def cmd_zoo(args):
    if args.action == "list":
        rep = {"command": "zoo", "names": zoo.names()}
        lines = [f"{n}: {zoo.ZOO[n].note}" for n in zoo.names()]
        return rep, lines, EXIT_YES
    if not args.name:
        raise UsageError("zoo emit needs a NAME")
    if args.name == "qubit-channels":
        text = dumps(channel_instance(qubit_channel_case()))
    else:
        try:
            text = dumps(zoo_instance(args.name))
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    return None, text, EXIT_YES


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gpt-maxinc",
        description="Exact compatibility and maximal-incompatibility tools for polytope state spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def space_opts(sp, effects=True):
        sp.add_argument("--space", metavar="FILE", help="JSON instance file")
        sp.add_argument("--zoo", metavar="NAME", help="built-in state space")
        sp.add_argument("--seed", type=int, metavar="N", help="seeded random instance (effects f, g)")
        if effects:
            sp.add_argument("--effect", action="append", metavar="NAME",
                            help="effect name; give twice (default: f and g)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("check-compat", help="decide compatibility of two effects")
    space_opts(sp)
    sp.set_defaults(func=cmd_check_compat)

    sp = sub.add_parser("degcom", help="exact degree of compatibility and dual optimum")
    space_opts(sp)
    sp.add_argument("--coin", choices=("half", "free"), default="half")
    sp.set_defaults(func=cmd_degcom)

    sp = sub.add_parser("find-maxinc", help="search a state space for a maximally incompatible pair")
    space_opts(sp, effects=False)
    sp.set_defaults(func=cmd_find_maxinc)

    sp = sub.add_parser("discriminate", help="find an effect discriminating two point sets")
    space_opts(sp, effects=False)
    sp.add_argument("--set0", default="E0", metavar="NAME")
    sp.add_argument("--set1", default="E1", metavar="NAME")
    sp.set_defaults(func=cmd_discriminate)

    sp = sub.add_parser("witness-channel", help="verify the qubit-channel witness")
    sp.add_argument("--case", metavar="FILE", help="instance file with a \"channel\" object")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_witness_channel)

    sp = sub.add_parser("zoo", help="list or emit built-in instances")
    sp.add_argument("action", choices=("list", "emit"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_zoo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        rep, lines, code = args.func(args)
    except (UsageError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if rep is None:
        sys.stdout.write(lines)
    elif getattr(args, "json", False):
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
