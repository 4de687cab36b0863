"""JSON readers and writers for instances, plans and colored graphs."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, Union

from .assignment import PeriodicAssignment
from .model import InputError, Instance, Schedule, Task
from .pebbles import ColoredEulerianGraph, graph_from_json, graph_to_json

PathLike = Union[str, Path]

FIXTURES = ("E1", "E2", "P1", "night_shift")


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def instance_from_json(data: dict) -> Instance:
    try:
        L = _int(data["units_per_week"], "units_per_week")
        q = _int(data["workers"], "workers")
        tasks = tuple(
            Task(_int(t["id"], "task id"), _int(t["start"], "task start"), _int(t["end"], "task end"))
            for t in data["tasks"]
        )
        schedules = data.get("schedules")
        if schedules is not None:
            schedules = tuple(
                Schedule(
                    frozenset(_int(i, "finishing task") for i in s["finishing"]),
                    None if s.get("starting") is None else _int(s["starting"], "starting task"),
                )
                for s in schedules
            )
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed instance JSON: {exc!r}") from None
    return Instance(L, tasks, q, schedules)


def instance_to_json(instance: Instance) -> dict:
    out: dict = {
        "units_per_week": instance.units_per_week,
        "workers": instance.workers,
        "tasks": [{"id": t.id, "start": t.start, "end": t.end} for t in instance.tasks],
    }
    if instance.schedules is not None:
        out["schedules"] = [
            {"finishing": sorted(s.finishing), "starting": s.starting} for s in instance.schedules
        ]
    return out


def plan_from_json(data: dict) -> PeriodicAssignment:
    try:
        period = _int(data["period"], "period")
        table = {}
        for row in data["rows"]:
            key = (_int(row["task"], "task"), _int(row["week"], "week"))
            if key in table:
                raise InputError(f"duplicate plan row for task {key[0]}, week {key[1]}")
            table[key] = _int(row["worker"], "worker")
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed plan JSON: {exc!r}") from None
    if period < 1:
        raise InputError("period must be positive")
    for _, r in table:
        if not 1 <= r <= period:
            raise InputError(f"week {r} outside 1..{period}")
    return PeriodicAssignment(period, table)


def plan_to_json(plan: PeriodicAssignment) -> dict:
    rows = sorted(plan.table.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    return {
        "period": plan.period,
        "rows": [{"task": i, "week": r, "worker": w} for (i, r), w in rows],
    }


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def _read(path: PathLike) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_instance(path: PathLike) -> Instance:
    return instance_from_json(_read(path))


def load_plan(path: PathLike) -> PeriodicAssignment:
    return plan_from_json(_read(path))


def load_graph(path: PathLike) -> ColoredEulerianGraph:
    data = _read(path)
    try:
        return graph_from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph JSON: {exc!r}") from None


def save(path: PathLike, data: dict) -> None:
    Path(path).write_text(dumps(data))


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURES}")
    return Path(str(resources.files("periodic_roster") / "fixtures" / f"{name}.json"))


def load_fixture(name: str):
    """Shipped instance (``E1``, ``E2``, ``night_shift``) or colored graph (``P1``)."""
    path = fixture_path(name)
    return load_graph(path) if name == "P1" else load_instance(path)


__all__ = [
    "instance_from_json", "instance_to_json", "plan_from_json", "plan_to_json", "graph_from_json",
    "graph_to_json", "load_instance", "load_plan", "load_graph", "load_fixture", "fixture_path", "save", "dumps",
]
