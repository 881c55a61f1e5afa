"""Command line front end.

    hopfstrict demo       build the dihedral example and verify everything
    hopfstrict check      re-verify the objects stored in a workspace
    hopfstrict strictify  strictify a stored action and save the result
    hopfstrict obstruct   enumerate compositor trivializations / replay proof

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad usage
or unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import docio
from .actions import (
    GHopfAlgebra,
    check_g_grading,
    check_hopf_action,
    check_weak_action,
    counterexample_action,
    trivial_grading,
    weak_action_from_extension,
)
from .algebras import CarrierTooLarge, FieldNotEnumerable
from .axioms import classify
from .fields import FieldError, field_from_name
from .groups import extension_d4
from .modules import check_module
from .obstruction import (
    ObstructionProblem,
    WrongShape,
    forced_constraint_replay,
    search_solutions,
)
from .ribbon import check_ribbon_support
from .strictify import strictify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _report_payload(report) -> list[dict]:
    return [{"name": c.name, "passed": c.passed,
             "witness": None if c.witness is None else list(c.witness),
             "note": c.note}
            for c in report.checks]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _demo_workspace(field, action, strict) -> docio.Workspace:
    ws = docio.Workspace(field=field)
    ws.groups["G"] = action.group
    ws.algebras["A"] = action.algebra
    ws.actions["demo"] = action
    ws.algebras["A_str"] = strict.algebra
    ws.actions["demo_str"] = strict.result.action
    ws.gradings["demo_str"] = strict.result.grading
    return ws


def cmd_demo(args) -> int:
    field = field_from_name(args.field)
    action = weak_action_from_extension(extension_d4(), field)
    strict = strictify(action)
    lines = [
        f"field: {field.describe()}",
        f"input dim: {action.algebra.dim}, group order: {action.group.order}",
        f"strictified dim: {strict.algebra.dim}",
        f"classification: {strict.classification}",
    ]
    lines += strict.report.lines()
    payload = {
        "command": "demo",
        "field": field.describe(),
        "input_dim": action.algebra.dim,
        "strict_dim": strict.algebra.dim,
        "classification": strict.classification,
        "checks": _report_payload(strict.report),
        "passed": strict.report.passed,
    }
    if args.out:
        docio.save(args.out, _demo_workspace(field, action, strict))
        lines.append(f"workspace written to {args.out}")
        payload["written"] = args.out
    _emit(args, payload, lines)
    return EXIT_OK if strict.report.passed else EXIT_FAIL


def cmd_check(args) -> int:
    ws = docio.load(args.workspace)
    lines: list[str] = []
    sections: dict = {}
    ok = True

    algs = sections["algebras"] = {}
    for name, alg in ws.algebras.items():
        kind, report = classify(alg)
        algs[name] = {"classification": kind, "checks": _report_payload(report)}
        ok &= report.passed
        lines.append(f"algebra {name}: {kind}")
        lines += [f"  {ln}" for ln in report.lines()]

    acts = sections["actions"] = {}
    for name, action in ws.actions.items():
        report = check_weak_action(action)
        if action.algebra.has_coalgebra:
            report.extend(check_hopf_action(action))
        acts[name] = {"checks": _report_payload(report)}
        ok &= report.passed
        lines.append(f"action {name}:")
        lines += [f"  {ln}" for ln in report.lines()]

    grads = sections["gradings"] = {}
    for name, grading in ws.gradings.items():
        report = check_g_grading(grading)
        grads[name] = {"checks": _report_payload(report)}
        ok &= report.passed
        lines.append(f"grading {name}:")
        lines += [f"  {ln}" for ln in report.lines()]

    mods = sections["modules"] = {}
    for name, mod in ws.modules.items():
        report = check_module(mod)
        mods[name] = {"checks": _report_payload(report)}
        ok &= report.passed
        lines.append(f"module {name}:")
        lines += [f"  {ln}" for ln in report.lines()]

    if ws.ribbon is not None:
        report = check_ribbon_support(ws.ribbon)
        sections["ribbon"] = {"checks": _report_payload(report)}
        ok &= report.passed
        lines.append("ribbon:")
        lines += [f"  {ln}" for ln in report.lines()]

    lines.append("all checks passed" if ok else "CHECKS FAILED")
    _emit(args, {"command": "check", "sections": sections, "passed": ok}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_strictify(args) -> int:
    ws = docio.load(args.workspace)
    if args.action not in ws.actions:
        print(f"no action named {args.action!r} in the workspace",
              file=sys.stderr)
        return EXIT_USAGE
    action = ws.actions[args.action]
    grading = None
    if args.grading is not None:
        if args.grading not in ws.gradings:
            print(f"no grading named {args.grading!r} in the workspace",
                  file=sys.stderr)
            return EXIT_USAGE
        grading = ws.gradings[args.grading]
    bundle = GHopfAlgebra(algebra=action.algebra, action=action,
                          grading=grading or trivial_grading(action.group,
                                                             action.algebra))
    strict = strictify(bundle)
    lines = [
        f"strictified dim: {strict.algebra.dim}",
        f"classification: {strict.classification}",
    ]
    lines += strict.report.lines()
    payload = {
        "command": "strictify",
        "action": args.action,
        "strict_dim": strict.algebra.dim,
        "classification": strict.classification,
        "checks": _report_payload(strict.report),
        "passed": strict.report.passed,
    }
    if args.out:
        if strict.report.passed or args.force:
            ws.algebras[args.action + "_str"] = strict.algebra
            ws.actions[args.action + "_str"] = strict.result.action
            ws.gradings[args.action + "_str"] = strict.result.grading
            docio.save(args.out, ws)
            lines.append(f"workspace written to {args.out}")
            payload["written"] = args.out
        else:
            lines.append("verification failed; not writing (use --force)")
    _emit(args, payload, lines)
    return EXIT_OK if strict.report.passed else EXIT_FAIL


def cmd_obstruct(args) -> int:
    field = field_from_name(args.field)
    if args.workspace is not None:
        ws = docio.load(args.workspace)
        if args.action is None or args.action not in ws.actions:
            print("--workspace needs --action naming an action stored there",
                  file=sys.stderr)
            return EXIT_USAGE
        action = ws.actions[args.action]
        field = ws.field
    else:
        action = counterexample_action(field)
    problem = ObstructionProblem(action)

    lines: list[str] = [f"field: {field.describe()}"]
    payload: dict = {"command": "obstruct", "field": field.describe()}
    if args.replay:
        replay = forced_constraint_replay(problem)
        lines += replay.steps
        if replay.characteristic_note:
            lines.append(f"note: {replay.characteristic_note}")
        payload["replay"] = {
            "contradiction": replay.contradiction,
            "steps": replay.steps,
            "note": replay.characteristic_note,
        }
    if field.is_prime_field:
        outcome = search_solutions(problem, max_carrier=args.max_carrier)
        lines.append(f"units enumerated: {outcome.units_seen}")
        lines.append(f"solutions found: {len(outcome.solutions)}")
        payload["units"] = outcome.units_seen
        payload["solutions"] = len(outcome.solutions)
        payload["solution_tuples"] = [
            [docio._vec_out(field, v) for v in tup]
            for tup in outcome.solutions]
    elif not args.replay:
        print("exhaustive search needs a finite prime field; "
              "use --field <p>, or --replay for the field-independent argument",
              file=sys.stderr)
        return EXIT_USAGE
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfstrict",
        description="exact strictification toolkit for weak group actions "
                    "on finite-dimensional Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("demo", help="build and verify the dihedral example")
    p.add_argument("--field", default="Q", help="Q or a prime (default Q)")
    p.add_argument("--out", help="write a workspace JSON here")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("check", help="re-verify everything in a workspace")
    p.add_argument("workspace", help="workspace JSON path")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("strictify", help="strictify a stored action")
    p.add_argument("workspace", help="workspace JSON path")
    p.add_argument("--action", required=True, help="name of the action")
    p.add_argument("--grading", help="name of a stored grading to carry along")
    p.add_argument("--out", help="write the extended workspace here")
    p.add_argument("--force", action="store_true",
                   help="write the workspace even if verification failed")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.set_defaults(func=cmd_strictify)

    p = sub.add_parser("obstruct",
                       help="search for unit families trivializing a compositor")
    p.add_argument("--field", default="3", help="prime field for the search")
    p.add_argument("--replay", action="store_true",
                   help="print the field-independent forced derivation")
    p.add_argument("--max-carrier", type=int, default=200_000,
                   help="cap on candidate vectors to enumerate")
    p.add_argument("--workspace", help="take the action from this workspace")
    p.add_argument("--action", help="action name inside --workspace")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.set_defaults(func=cmd_obstruct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (docio.WorkspaceError, FieldError, WrongShape, CarrierTooLarge,
            FieldNotEnumerable, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
