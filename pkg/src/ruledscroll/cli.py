"""Command-line front end.

Every command reads a scenario file and prints one JSON (or plain text)
document.  Exit status: 0 on success, 1 for a malformed or inconsistent
scenario, 2 for a violated precondition, 3 when ``verify`` finds a
failing check.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from enum import Enum

from . import linear_system as ls
from .curve_model import Domain
from .elm_engine import ElmStep, generic_center, project_scroll, transform_class, transform_surface
from .errors import PreconditionViolation, RuledScrollError, ScenarioError
from .scenario import Scenario, load_scenario
from .speciality import (SpecialityLedger, is_cone_test, special_directrix_for, speciality)
from .surface import check_segre, min_section_info, scroll_degree
from .values import Tri

SCHEMA_VERSION = 1
EXIT_OK, EXIT_SCENARIO, EXIT_PRECONDITION, EXIT_CHECKS_FAILED = 0, 1, 2, 3


def _plain(obj):
    """Turn report objects into plain JSON values, keeping key order."""
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def _domain(args) -> Domain:
    return Domain(args.quantifier_domain == "named+generic")


def _names(selected, available) -> list:
    if selected:
        missing = [n for n in selected if n not in available]
        if missing:
            raise ScenarioError(f"unknown name(s) {', '.join(missing)}")
        return list(selected)
    return list(available)


def _surface_json(S) -> dict:
    out = S.describe()
    out["min_section"] = min_section_info(S).to_json()
    return out


# commands ----------------------------------------------------------------

def cmd_classify(sc: Scenario, args) -> dict:
    dom = _domain(args)
    systems = {}
    for name in _names(args.system, sc.systems):
        surf, H = sc.systems[name]
        S = sc.surfaces[surf]
        rep = ls.classify(S, H.m, H.b, dom)
        entry = {"surface": surf, "report": rep.to_json()}
        if H.m == 1 and rep.bpf is Tri.TRUE:
            entry["isomorphism_locus"] = ls.isomorphism_locus(S, H, dom).to_json()
            entry["singularities"] = ls.singularity_report(S, H, dom).to_json()
        systems[name] = entry
    return {"systems": systems}


def _steps(texts) -> list:
    out = []
    for t in texts or []:
        out.extend(ElmStep.parse(part) for part in t.split(",") if part.strip())
    return out


def cmd_transform(sc: Scenario, args) -> dict:
    S = sc.surface(args.surface)
    steps = _steps(args.steps)
    tracked = {name: H for name, (surf, H) in sc.systems.items() if sc.surfaces[surf] is S}
    trace = [{"step": None, "surface": _surface_json(S),
              "systems": {n: str(H) for n, H in tracked.items()}}]
    for st in steps:
        S = transform_surface(S, st)
        # tracked systems pass through x with multiplicity 0 unless told otherwise
        tracked = {n: transform_class(S, H, args.multiplicity if H.m >= 1 else 0)
                   for n, H in tracked.items()}
        trace.append({"step": S.last_step.to_json(), "surface": _surface_json(S),
                      "systems": {n: str(H) for n, H in tracked.items()}})
    return {"surface": args.surface or next(iter(sc.surfaces)), "trace": trace}


def _centers(args) -> list:
    if args.center:
        return list(args.center)
    return [f"*{k + 1}" for k in range(args.n)]


def cmd_project(sc: Scenario, args) -> dict:
    dom = _domain(args)
    surf, H = sc.system(args.system)
    S = sc.surfaces[surf]
    h = ls.h0(S, H.m, H.b)
    traj = [{"center": None, "e": S.e, "decomposable": S.decomposable.value, "H": str(H),
             "d": scroll_degree(S, H), "h0": h.to_json(), "N": (h - 1).to_json(),
             "i": speciality(S, H).to_json()}]
    for text in _centers(args):
        step = generic_center(S, text) if ":" not in text else ElmStep.parse(text)
        res = project_scroll(S, H, step, smooth_image=not args.strict, domain=dom)
        traj.append({"center": step.to_json(), **res.to_json()})
        S, H = res.surface, res.H
    return {"system": args.system or next(iter(sc.systems)), "trajectory": traj}


def _parse_cycle(text: str):
    try:
        deg, span = text.split(":")
        return int(deg), int(span)
    except ValueError:
        raise ScenarioError(f"cycle must be DEGREE:SPAN_DIM, got {text!r}") from None


def cmd_report(sc: Scenario, args) -> dict:
    dom = _domain(args)
    segre = {}
    for name, S in sc.surfaces.items():
        g, e = S.genus, S.e
        try:
            check_segre(g, e, S.decomposable)
            holds = True
        except PreconditionViolation:
            holds = False
        segre[name] = {"decomposable": S.decomposable.value, "e": e,
                       "bound": "e >= 0" if S.decomposable is Tri.TRUE else f"{-g} <= e <= {2 * g - 2}",
                       "holds": holds}
    systems = {}
    for name in _names(args.system, sc.systems):
        surf, H = sc.systems[name]
        S = sc.surfaces[surf]
        if H.m != 1:
            continue
        ledger = SpecialityLedger(speciality(S, H))
        for cyc in args.cycle or []:
            ledger = ledger.project(*_parse_cycle(cyc))
        entry = {"surface": surf, "d": scroll_degree(S, H), "ledger": ledger.to_json(),
                 "special_directrix": special_directrix_for(S, H).to_json()}
        if S.genus >= 1 and ls.h0(S, 1, H.b).lo >= 4 and ls.is_bpf_surface(S, 1, H.b, dom) is Tri.TRUE:
            entry["cone"] = is_cone_test(S, H, dom).value
        systems[name] = entry
    return {"segre": segre, "systems": systems}


def cmd_verify(sc: Scenario | None, args) -> dict:
    from .verify import run_all

    results = run_all()
    out = {
        "passed": sum(r.passed for r in results),
        "failed": sum(not r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }
    if sc is not None:
        out["scenario"] = {"name": sc.name, "surfaces": sorted(sc.surfaces), "systems": sorted(sc.systems)}
    return out


def cmd_run(sc: Scenario, args) -> dict:
    """Run the scenario's own scripts in order."""
    parser = build_parser()
    results = []
    for entry in sc.scripts:
        argv = shlex.split(entry) if isinstance(entry, str) else [str(a) for a in entry]
        if argv and argv[0] == "run":
            raise ScenarioError("scripts cannot call run")
        sub = parser.parse_args(argv)
        results.append({"argv": argv, "result": COMMANDS[sub.command](sc, sub)})
    return {"scripts": results}


COMMANDS = {
    "classify": cmd_classify,
    "transform": cmd_transform,
    "project": cmd_project,
    "report": cmd_report,
    "verify": cmd_verify,
    "run": cmd_run,
}


# plumbing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", metavar="PATH", help="scenario JSON file")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--quantifier-domain", choices=("named", "named+generic"), default="named+generic",
                        help="points quantified over in base-point and separation checks")

    p = argparse.ArgumentParser(prog="ruledscroll", description="Ruled surfaces and scrolls over curves.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify linear systems")
    c.add_argument("--system", action="append", help="system name (repeatable; default all)")

    t = sub.add_parser("transform", parents=[common], help="apply elementary transforms")
    t.add_argument("--surface")
    t.add_argument("--steps", action="append", help="comma-separated POINT:Position steps")
    t.add_argument("--multiplicity", type=int, default=0,
                   help="multiplicity of each center on the tracked systems")

    pr = sub.add_parser("project", parents=[common], help="project a scroll from points on it")
    pr.add_argument("--system")
    pr.add_argument("--center", action="append",
                    help="'*k' for a general point or POINT:Position (repeatable)")
    pr.add_argument("--n", type=int, default=1, help="number of general centers when --center is absent")
    pr.add_argument("--strict", action="store_true",
                    help="refuse centers whose smoothness cannot be decided")

    r = sub.add_parser("report", parents=[common], help="speciality ledger and Segre verdicts")
    r.add_argument("--system", action="append")
    r.add_argument("--cycle", action="append", help="projection cycle DEGREE:SPAN_DIM (repeatable)")

    sub.add_parser("verify", parents=[common], help="run the invariant and oracle suite")
    sub.add_parser("run", parents=[common], help="run the scripts stored in the scenario")
    return p


def render_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v, ensure_ascii=False)}")
    else:
        lines.append(f"{pad}{json.dumps(doc, ensure_ascii=False)}")
    return "\n".join(lines)


def _emit(doc: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    else:
        text = render_text(doc) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    head = {"schema_version": SCHEMA_VERSION, "command": args.command}
    try:
        sc = None
        if args.scenario:
            sc = load_scenario(args.scenario)
        elif args.command != "verify":
            raise ScenarioError("--scenario is required")
        if sc is not None:
            head["scenario"] = sc.name
        head["quantifier_domain"] = args.quantifier_domain
        body = COMMANDS[args.command](sc, args)
    except RuledScrollError as exc:
        code = EXIT_SCENARIO if isinstance(exc, ScenarioError) else EXIT_PRECONDITION
        doc = {**head, "status": "error", "error": {"type": type(exc).__name__,
                                                    "invariant": exc.invariant, "message": str(exc)}}
        _emit(doc, args)
        print(f"ruledscroll: {exc.invariant}: {exc}", file=sys.stderr)
        return code
    doc = {**head, "status": "ok", **_plain(body)}
    _emit(doc, args)
    if args.command == "verify" and body["failed"]:
        return EXIT_CHECKS_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
