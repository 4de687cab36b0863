"""``roster`` command line.

Exit codes: 0 yes / ok, 1 no, 2 invalid input (error JSON on stderr).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import decide as route_decide
from . import solve as route_solve
from .assignment import balance_profile, check_well_formed, is_balanced, is_feasible
from .augmentation import augment
from .coloring import Infeasible, color_first_week, coloring_to_json
from .decomposition import find_decomposition
from .io import dumps, load_graph, load_instance, load_plan, plan_to_json
from .merge import min_workers
from .model import InfeasibleInstanceError, InputError, boundary_tasks, max_overlap_depth, validate
from .oracle import GuardrailExceeded, oracle_decide_basic, oracle_decide_extended
from .pebbles import (
    LiftTooLarge,
    lift_component,
    periodic_color_sequence,
    simulate_random_colors,
    validate_colored_graph,
    visit_frequencies,
)
from .render import render_ascii, render_svg


class _Invalid(Exception):
    pass


def _emit(data: dict) -> None:
    sys.stdout.write(dumps(data))


def _instance(path: str):
    inst = load_instance(path)
    problems = validate(inst)
    if problems:
        raise _Invalid({"error": "invalid_instance", "violations": [str(v) for v in problems]})
    return inst


def cmd_validate(args) -> int:
    inst = load_instance(args.instance)
    problems = validate(inst)
    _emit({"valid": not problems, "violations": [str(v) for v in problems]})
    return 2 if problems else 0


def cmd_feasible(args) -> int:
    inst = _instance(args.instance)
    if not inst.is_extended:
        col = color_first_week(inst)
        if isinstance(col, Infeasible):
            _emit({"feasible": False, "depth": col.depth, "point": col.point})
            return 1
        _emit({"feasible": True, "depth": max_overlap_depth(inst), "coloring": coloring_to_json(col)})
        return 0
    if len(boundary_tasks(inst)) > inst.workers:
        _emit({"feasible": False, "reason": "more boundary tasks than workers"})
        return 1
    dec = find_decomposition(augment(inst).augmented)
    if dec is None:
        _emit({"feasible": False, "reason": "no week decomposition"})
        return 1
    _emit({"feasible": True, "decomposition": [
        {"finishing": sorted(p.finishing), "starting": p.starting} for p in dec.parts
    ]})
    return 0


def _oracle_answer(inst) -> bool:
    if inst.is_extended:
        return oracle_decide_extended(inst)
    return oracle_decide_basic(inst)


def cmd_decide(args) -> int:
    inst = _instance(args.instance)
    if args.oracle:
        ans = _oracle_answer(inst)
        _emit({"status": "yes" if ans else "no", "source": "oracle"})
        return 0 if ans else 1
    decision = route_decide(inst)
    _emit(decision.to_json())
    return 0 if decision.yes else 1


def cmd_solve(args) -> int:
    inst = _instance(args.instance)
    decision, plan = route_solve(inst)
    if plan is None:
        _emit(decision.to_json())
        return 1
    text = dumps(plan_to_json(plan))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        summary = {"status": "yes", "period": plan.period, "output": args.output}
        if inst.is_extended:
            q = inst.workers
            summary["period_bound"] = q * q * math.factorial(q)
        _emit(summary)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    inst = _instance(args.instance)
    plan = load_plan(args.plan)
    check_well_formed(inst, plan)
    feas = is_feasible(inst, plan)
    bal = is_balanced(inst, plan)
    prof = balance_profile(inst, plan)
    _emit({
        "feasible": feas.feasible,
        "violation": feas.violation,
        "balanced": bal,
        "period": plan.period,
        "profile": [{"task": i, "worker": j, "count": c} for (i, j), c in sorted(prof.counts.items())],
    })
    return 0 if feas and bal else 1


def cmd_min_workers(args) -> int:
    inst = _instance(args.instance)
    probes: list = []
    q = min_workers(inst, probes)
    out = {"min_workers": q, "probes": [{"workers": w, "balanced": a} for w, a in probes]}
    if inst.is_extended:
        out["note"] = "schedule set ignored; basic version only"
    _emit(out)
    return 0


def cmd_render(args) -> int:
    inst = _instance(args.instance)
    plan = load_plan(args.plan) if args.plan else None
    if plan is not None:
        check_well_formed(inst, plan)
    elif not args.tasks_only:
        _, plan = route_solve(inst)
    fn = render_svg if args.format == "svg" else render_ascii
    text = fn(inst, plan, periods=args.periods)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    inst = _instance(args.instance)
    ans = _oracle_answer(inst)
    _emit({"status": "yes" if ans else "no", "source": "oracle"})
    return 0 if ans else 1


def _graph(path: str):
    g = load_graph(path)
    report = validate_colored_graph(g)
    if not report.valid:
        raise _Invalid({"error": "invalid_graph", "violations": list(report.errors)})
    return g, report


def cmd_pebbles(args) -> int:
    if args.action == "validate":
        g = load_graph(args.graph)
        report = validate_colored_graph(g)
        _emit({"valid": report.valid, "errors": list(report.errors), "warnings": list(report.warnings)})
        return 0 if report.valid else 2
    g, report = _graph(args.graph)
    if args.action == "walk":
        comp = lift_component(g, vertex_cap=args.vertex_cap)
        seq = periodic_color_sequence(g, vertex_cap=args.vertex_cap)
        counts = visit_frequencies(g, seq)
        _emit({
            "period": seq.period,
            "colors": [g.names[c] for c in seq.colors],
            "component_size": comp.size,
            "kappa": comp.n_components,
            "visits_per_pebble_arc": sorted(set(int(x) for x in counts.ravel())),
            "warnings": list(report.warnings),
        })
        return 0
    res = simulate_random_colors(g, args.steps, args.seed)
    _emit({
        "steps": res.steps,
        "seed": res.seed,
        "target": 1.0 / g.n_arcs,
        "max_deviation": res.max_deviation,
        "frequencies": res.frequencies.round(6).tolist(),
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="roster", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check an instance file")
    s.add_argument("instance")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("feasible", help="does any feasible assignment exist")
    s.add_argument("instance")
    s.set_defaults(fn=cmd_feasible)

    s = sub.add_parser("decide", help="does a balanced assignment exist")
    s.add_argument("instance")
    s.add_argument("--oracle", action="store_true", help="use the brute-force oracle (small instances)")
    s.set_defaults(fn=cmd_decide)

    s = sub.add_parser("solve", help="emit a balanced periodic plan")
    s.add_argument("instance")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_solve)

    s = sub.add_parser("verify", help="check a plan against an instance")
    s.add_argument("instance")
    s.add_argument("plan")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("min-workers", help="fewest workers admitting a balanced assignment")
    s.add_argument("instance")
    s.set_defaults(fn=cmd_min_workers)

    s = sub.add_parser("render", help="Gantt chart of a plan")
    s.add_argument("instance")
    s.add_argument("plan", nargs="?")
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.add_argument("--periods", type=int, default=1, choices=(1, 2))
    s.add_argument("--tasks-only", action="store_true", help="one row per task, no plan")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_render)

    s = sub.add_parser("oracle", help="brute-force decision (guardrails apply)")
    s.add_argument("instance")
    s.set_defaults(fn=cmd_oracle)

    s = sub.add_parser("pebbles", help="pebble systems on colored Eulerian graphs")
    s.add_argument("action", choices=("validate", "walk", "simulate"))
    s.add_argument("graph")
    s.add_argument("--steps", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--vertex-cap", type=int, default=8)
    s.set_defaults(fn=cmd_pebbles)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _Invalid as exc:
        sys.stderr.write(json.dumps(exc.args[0]) + "\n")
        return 2
    except (GuardrailExceeded, LiftTooLarge) as exc:
        return _fail("guardrail", exc)
    except OSError as exc:
        return _fail("io", exc)
    except (InputError, InfeasibleInstanceError) as exc:
        return _fail("invalid_input", exc)


def _fail(kind: str, exc: Exception) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
