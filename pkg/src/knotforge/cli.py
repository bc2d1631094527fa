"""Command line interface.

Exit codes: 0 success, 1 bad input, 2 inconclusive (no recurrence within the
caps), 3 an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import ajpipeline, apoly, qholo, twobridge
from .cjones import BraidWord, colored_jones, jones_table
from .cjones.catalog import CatalogError
from .exactalg.factor import factor_biv_Q

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_ASSERTION = 0, 1, 2, 3
DEFAULT_TOL = 1e-9


class InputError(ValueError):
    pass


def parse_caps(text: str):
    try:
        caps = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"caps must look like 6,12,12, got {text!r}")
    if len(caps) != 3 or min(caps) < 1:
        raise argparse.ArgumentTypeError("caps need three positive integers dL,dM,dt")
    return caps


def parse_tol(text: str) -> float:
    tol = float(text)
    if not 0 < tol <= 1e-6:
        raise argparse.ArgumentTypeError("tol must lie in (0, 1e-6]")
    return tol


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # the same options are accepted before and after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    sup = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=("text", "json"), **({"default": "text"} if defaults else sup))
    p.add_argument("--cache-dir", **({"default": None} if defaults else sup))
    p.add_argument("--caps", type=parse_caps, **({"default": ajpipeline.DEFAULT_CAPS} if defaults else sup))
    p.add_argument("--tol", type=parse_tol, **({"default": DEFAULT_TOL} if defaults else sup))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotforge", parents=[_global_options(True)],
                                     description="A-polynomials, colored Jones polynomials and AJ checks")
    sub = parser.add_subparsers(dest="command", required=True)
    local = _global_options(False)

    def knot_command(name, help_text):
        cmd = sub.add_parser(name, parents=[local], help=help_text)
        cmd.add_argument("--p", type=int, required=True)
        cmd.add_argument("--q", type=int, required=True)
        return cmd

    knot_command("riley", "Riley polynomial of b(p,q)")
    knot_command("apoly", "A-polynomial of b(p,q)")
    aj = knot_command("aj", "compare the A-polynomial with the colored Jones recurrence")
    aj.add_argument("--nmax", type=int, default=ajpipeline.DEFAULT_N)

    jones = sub.add_parser("jones", parents=[local], help="colored Jones polynomial of a braid closure")
    jones.add_argument("--braid", required=True)
    jones.add_argument("--strands", type=int, required=True)
    jones.add_argument("--color", type=int, required=True)

    recur = sub.add_parser("recur", parents=[local], help="minimal recurrence of a colored Jones table")
    recur.add_argument("--braid", required=True)
    recur.add_argument("--strands", type=int, required=True)
    recur.add_argument("--nmax", type=int, default=ajpipeline.DEFAULT_N)

    for name, help_text in (("survey-riley", "Riley irreducibility survey"),
                            ("survey-degree", "degree-bound survey over catalog knots")):
        cmd = sub.add_parser(name, parents=[local], help=help_text)
        cmd.add_argument("--pmax", type=int, required=True)
    return parser


def _knot(args) -> twobridge.TwoBridgeKnot:
    try:
        return twobridge.normalize(args.p, args.q).knot
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _braid(args) -> BraidWord:
    try:
        return BraidWord.parse(args.braid, args.strands)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_riley(args):
    K = _knot(args)
    phi = twobridge.riley_polynomial(K)
    factors = factor_biv_Q(phi.phi)
    irreducible = len(factors) == 1 and factors[0][1] == 1
    roots = twobridge.riley_roots(K, 1)
    residual = max((twobridge.relator_residual(K, 1, u) for u in roots), default=0.0)
    data = {
        "knot": K.name,
        "phi": phi.phi.to_json(),
        "phi_text": str(phi.phi),
        "u_degree": phi.u_degree,
        "s_degree": phi.s_degree,
        "irreducible": irreducible,
        "parabolic_residual_ok": bool(residual < args.tol),
    }
    text = [f"knot       {K.name}", f"phi(s,u)   {phi.phi}", f"degree     {phi.u_degree} in u, {phi.s_degree} in s",
            f"irreducible={str(irreducible).lower()}",
            f"parabolic roots verified to {args.tol:g}: {str(residual < args.tol).lower()}"]
    status = EXIT_OK if residual < args.tol else EXIT_ASSERTION
    return data, text, status


def cmd_apoly(args):
    K = _knot(args)
    report = apoly.a_polynomial(K)
    data = report.to_json()
    text = [f"knot       {K.name}", f"A          {report.A}", f"Ahat       {report.Ahat}",
            f"degrees    m {report.m_degree}, l {report.l_degree}",
            f"balanced   {report.balanced_cert}", f"in Z[m^2,l] {report.in_Z_m2_l}"]
    return data, text, EXIT_OK


def cmd_jones(args):
    braid = _braid(args)
    try:
        value = colored_jones(braid, args.color)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    data = {"braid": braid.to_json(), "color": args.color, "J": value.to_json(), "J_text": str(value)}
    return data, [str(value)], EXIT_OK


def cmd_recur(args):
    braid = _braid(args)
    try:
        table = jones_table(braid, args.nmax, args.cache_dir)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        op = qholo.minimal_recurrence(table, args.caps)
    except qholo.RecurrenceNotFound as exc:
        return {"braid": braid.to_json(), "found": False, "reason": str(exc)}, [f"inconclusive: {exc}"], \
            EXIT_INCONCLUSIVE
    witness = qholo.specialize_and_quotient(op)
    data = {"braid": braid.to_json(), "found": True, "operator": op.to_json(), "witness": witness.to_json(),
            "operator_balance": qholo.operator_balance_check(op)}
    text = [f"caps       {op.caps} (fit n={op.fit[0]}..{op.fit[1]}, holdout n={op.holdout[0]}..{op.holdout[1]})"]
    text += [f"a_{i}        {a}" for i, a in enumerate(op.coeffs)]
    text += [f"alpha(-1)  {witness.alpha_at_minus1}", f"alpha-hat  {witness.hat_alpha}"]
    return data, text, EXIT_OK


def cmd_aj(args):
    K = _knot(args)
    try:
        report = ajpipeline.aj_verify(K, N=args.nmax, caps=args.caps, cache=args.cache_dir)
    except CatalogError as exc:
        raise InputError(str(exc)) from exc
    data = report.to_json()
    text = [f"knot       {K.name} (braid {report.braid})", f"Ahat       {report.Ahat}",
            f"alpha-hat  {report.hat_alpha}", f"status     {report.status}",
            f"match={str(report.match).lower()} m_shift={report.m_shift} sign={report.sign} mirror={report.mirror}",
            f"riley irreducible={str(report.riley_irreducible).lower()}"]
    text += [f"note       {n}" for n in report.notes]
    status = {"match": EXIT_OK, "inconclusive": EXIT_INCONCLUSIVE}.get(report.status, EXIT_ASSERTION)
    return data, text, status


def cmd_survey_riley(args):
    try:
        rows = ajpipeline.survey_riley(args.pmax)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    data = {"rows": [r.to_json() for r in rows]}
    text = [f"b({r.p},{r.q})  degree {r.degree}  irreducible={str(r.irreducible).lower()}"
            + ("" if r.asserted else "  (composite p)") for r in rows]
    return data, text, EXIT_OK


def cmd_survey_degree(args):
    try:
        rows = ajpipeline.degree_survey(args.pmax)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    data = {"rows": [r.to_json() for r in rows]}
    text = [f"b({r.p},{r.q})  m-degree {r.m_degree}  l-degree {r.l_degree}  candidates {r.candidate_d}  "
            f"passed={str(r.passed).lower()}" for r in rows]
    status = EXIT_OK if all(r.passed for r in rows) else EXIT_ASSERTION
    return data, text, status


COMMANDS = {
    "riley": cmd_riley,
    "apoly": cmd_apoly,
    "jones": cmd_jones,
    "recur": cmd_recur,
    "aj": cmd_aj,
    "survey-riley": cmd_survey_riley,
    "survey-degree": cmd_survey_degree,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        data, text, status = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except qholo.InsufficientTable as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=err)
        return EXIT_ASSERTION
    if args.format == "json":
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print("\n".join(text), file=out)
    return status


def main(argv: Optional[List[str]] = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
