"""Ratio experiments: run solvers against a reference and emit CSV records.

Solvers run behind small adapters that rescale non-integer instances onto
the integer grid for the grid-bound algorithms and translate costs back.
Solver failures become record statuses; a batch never dies because one
point was infeasible or hit a resource cap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from . import exact, order_dp
from .fileio import format_scalar
from .untangle import untangle as untangle_solution
from .model import (
    Instance,
    InfeasibleError,
    ResourceLimitError,
    Scalar,
    ScalarLike,
    as_scalar,
    cost,
    integral_scale_factor,
    is_feasible,
    scale_instance,
)
from .generators import gen_fig5, gen_fig6

CSV_HEADER = "instance,algo,status,cost,ref_cost,ratio,time_ms"

STATUS_OK = "ok"
STATUS_INFEASIBLE = "infeasible"
STATUS_RESOURCE = "resource-limit"


@dataclass(frozen=True)
class RunRecord:
    """One solver run on one instance; ratio = cost / reference when both exist."""

    instance: str
    algo: str
    status: str
    cost: Optional[Scalar]
    ref_cost: Optional[Scalar]
    ratio: Optional[Scalar]
    time_ms: int

    def csv_row(self) -> str:
        def fmt(v: Optional[Scalar]) -> str:
            return "" if v is None else format_scalar(v)

        return (
            f"{self.instance},{self.algo},{self.status},"
            f"{fmt(self.cost)},{fmt(self.ref_cost)},{fmt(self.ratio)},{self.time_ms}"
        )


Outcome = tuple[str, Optional[Scalar]]
Solver = Callable[[Instance], Outcome]


def _on_grid(instance: Instance, run, node_cap: int) -> Outcome:
    """Run a grid-bound solver on the scaled instance; cost back in input units."""
    factor = integral_scale_factor(instance)
    work = instance if factor == 1 else scale_instance(instance, factor)
    found = run(work, node_cap)
    if found is None:
        return STATUS_INFEASIBLE, None
    _, value = found
    return STATUS_OK, value / factor


def make_solver(name: str, eps: ScalarLike = Fraction(1, 2), node_cap: int = exact.DEFAULT_NODE_CAP) -> Solver:
    """Named solver adapters used by the harness and the bench command."""

    def oracle(instance: Instance) -> Outcome:
        return _on_grid(instance, lambda w, cap: exact.oracle_optimal(w, node_cap=cap), node_cap)

    def fpt(instance: Instance) -> Outcome:
        def run(work: Instance, cap: int):
            if not is_feasible(work):
                return None
            _, upper = order_dp.greedy_cover(work)
            budget = 1
            while True:
                found = exact.fpt_solve(work, budget, node_cap=cap)
                if found is not None:
                    return found
                if budget > 2 * upper:
                    raise RuntimeError("fpt budget doubling escaped its upper bound")
                budget *= 2

        return _on_grid(instance, run, node_cap)

    def dp_optimal(instance: Instance) -> Outcome:
        def run(work: Instance, cap: int):
            try:
                solution, _ = order_dp.dp_optimal(work)
            except InfeasibleError:
                return None
            return solution, cost(work, solution)

        return _on_grid(instance, run, node_cap)

    def dp_eps(instance: Instance) -> Outcome:
        try:
            solution, _ = order_dp.dp_eps(instance, as_scalar(eps))
        except InfeasibleError:
            return STATUS_INFEASIBLE, None
        return STATUS_OK, cost(instance, solution)

    def untangle_oracle(instance: Instance) -> Outcome:
        factor = integral_scale_factor(instance)
        work = instance if factor == 1 else scale_instance(instance, factor)
        found = exact.oracle_optimal(work, node_cap=node_cap)
        if found is None:
            return STATUS_INFEASIBLE, None
        scaled_y, _ = found
        y = tuple(v / factor for v in scaled_y)
        hat, _ = untangle_solution(instance, y)
        return STATUS_OK, cost(instance, hat)

    table: Mapping[str, Solver] = {
        "oracle": oracle,
        "fpt": fpt,
        "dp-optimal": dp_optimal,
        "dp-eps": dp_eps,
        "untangle-oracle": untangle_oracle,
    }
    if name not in table:
        raise ValueError(f"unknown algorithm {name!r}; pick from {sorted(table)}")
    return table[name]


def _run_one(instance_id: str, instance: Instance, name: str, solver: Solver) -> RunRecord:
    start = time.perf_counter()
    try:
        status, value = solver(instance)
    except InfeasibleError:
        status, value = STATUS_INFEASIBLE, None
    except ResourceLimitError:
        status, value = STATUS_RESOURCE, None
    elapsed = int((time.perf_counter() - start) * 1000)
    return RunRecord(
        instance=instance_id,
        algo=name,
        status=status,
        cost=value,
        ref_cost=None,
        ratio=None,
        time_ms=elapsed,
    )


def compare(
    instance: Instance,
    algorithms: Sequence[str],
    reference: str,
    instance_id: str = "instance",
    eps: ScalarLike = Fraction(1, 2),
    node_cap: int = exact.DEFAULT_NODE_CAP,
) -> list[RunRecord]:
    """Run every algorithm on one instance, rating each against the reference.

    The reference is run once; its cost (when available and positive)
    becomes every record's ``ref_cost`` and the ratio is cost/ref_cost.
    """
    ref_record = _run_one(instance_id, instance, reference, make_solver(reference, eps, node_cap))
    records = []
    for name in algorithms:
        if name == reference:
            record = ref_record
        else:
            record = _run_one(instance_id, instance, name, make_solver(name, eps, node_cap))
        ref_cost = ref_record.cost if record.status == STATUS_OK else None
        ratio = None
        if record.cost is not None and ref_cost is not None and ref_cost > 0:
            ratio = record.cost / ref_cost
        records.append(
            RunRecord(
                instance=record.instance,
                algo=record.algo,
                status=record.status if ref_record.status == STATUS_OK else ref_record.status,
                cost=record.cost,
                ref_cost=ref_cost,
                ratio=ratio,
                time_ms=record.time_ms,
            )
        )
    return sorted(records, key=lambda r: (r.instance, r.algo))


def ratio_sweep(
    family: str,
    grid: Mapping[str, Sequence],
    node_cap: int = exact.DEFAULT_NODE_CAP,
) -> list[RunRecord]:
    """Run a family's ratio experiment over a parameter grid.

    fig5 measures the optimal order-preserving cost against the unrestricted
    optimum; fig6 measures the cost of untangling the oracle's optimum
    against that optimum.
    """
    records: list[RunRecord] = []
    if family == "fig5":
        rho = as_scalar(grid.get("rho", [2])[0])
        for length in grid["L"]:
            instance = gen_fig5(rho, as_scalar(length))
            instance_id = f"fig5:rho={rho}:L={as_scalar(length)}"
            records += compare(
                instance, ["oracle", "dp-optimal"], "oracle", instance_id, node_cap=node_cap
            )
    elif family == "fig6":
        rho = as_scalar(grid.get("rho", [2])[0])
        delta = as_scalar(grid.get("delta", [Fraction(1, 8)])[0])
        for m in grid["m"]:
            instance = gen_fig6(rho, int(m), delta)
            instance_id = f"fig6:rho={rho}:m={int(m)}:delta={delta}"
            records += compare(
                instance,
                ["oracle", "untangle-oracle"],
                "oracle",
                instance_id,
                node_cap=node_cap,
            )
    else:
        raise ValueError(f"unknown sweep family {family!r}")
    return records


def records_to_csv(records: Sequence[RunRecord]) -> str:
    lines = [CSV_HEADER]
    lines += [r.csv_row() for r in records]
    return "\n".join(lines) + "\n"
