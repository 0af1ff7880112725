"""Plain-text formats for instances and solutions.

Instance files::

    # optional comment lines
    L 12
    N 5
    0 2
    1 1
    ...

Solution files::

    COST 3
    1
    3

Rationals are serialized ``p/q`` in lowest terms (bare integer when q = 1),
so parse -> serialize is the identity on canonical files.  Sensor lines need
not be pre-sorted; the loader sorts them (the Instance invariant) and can
report the permutation it applied, which is what solution-file indices are
relative to.
"""

from __future__ import annotations

from fractions import Fraction

from .model import Instance, Scalar, Sensor, Solution, as_scalar, cost


def format_scalar(value: Scalar) -> str:
    return str(Fraction(value))


def parse_scalar(text: str) -> Scalar:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _data_lines(text: str) -> list[str]:
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]


def parse_instance_with_order(text: str) -> tuple[Instance, tuple[int, ...]]:
    """Parse an instance file; also return the applied sort permutation.

    ``order[k]`` is the input line number (0-based, among sensor lines) of
    the sensor that ended up at index k after sorting.
    """
    lines = _data_lines(text)
    if len(lines) < 2:
        raise ValueError("instance file needs an L line and an N line")
    if not lines[0].startswith("L "):
        raise ValueError("first data line must be 'L <rational>'")
    length = parse_scalar(lines[0][2:])
    if not lines[1].startswith("N "):
        raise ValueError("second data line must be 'N <int>'")
    try:
        count = int(lines[1][2:])
    except ValueError as exc:
        raise ValueError(f"bad sensor count: {lines[1]!r}") from exc
    body = lines[2:]
    if len(body) != count:
        raise ValueError(f"expected {count} sensor lines, found {len(body)}")
    sensors = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"sensor line must be '<x> <r>': {line!r}")
        sensors.append(Sensor(parse_scalar(parts[0]), parse_scalar(parts[1])))
    instance = Instance(length=length, sensors=tuple(sensors))
    order = sorted(range(count), key=lambda i: (sensors[i].x, sensors[i].r, i))
    return instance, tuple(order)


def parse_instance(text: str) -> Instance:
    return parse_instance_with_order(text)[0]


def serialize_instance(instance: Instance) -> str:
    lines = [f"L {format_scalar(instance.length)}", f"N {instance.n}"]
    lines += [
        f"{format_scalar(s.x)} {format_scalar(s.r)}" for s in instance.sensors
    ]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> tuple[Scalar, tuple[Scalar, ...]]:
    """Parse a solution file into (recorded cost, positions)."""
    lines = _data_lines(text)
    if not lines or not lines[0].startswith("COST "):
        raise ValueError("solution file must start with 'COST <rational>'")
    recorded = parse_scalar(lines[0][5:])
    positions = tuple(parse_scalar(line) for line in lines[1:])
    return recorded, positions


def load_solution(instance: Instance, text: str) -> Solution:
    """Parse and validate a solution against its instance.

    The recorded COST must match the recomputed one exactly; the positions
    are index-aligned with the instance's sorted sensor order.
    """
    recorded, positions = parse_solution(text)
    if len(positions) != instance.n:
        raise ValueError(f"expected {instance.n} positions, got {len(positions)}")
    actual = cost(instance, positions)
    if actual != recorded:
        raise ValueError(f"recorded COST {recorded} != recomputed cost {actual}")
    return tuple(as_scalar(p) for p in positions)


def serialize_solution(instance: Instance, solution: Solution) -> str:
    lines = [f"COST {format_scalar(cost(instance, solution))}"]
    lines += [format_scalar(y) for y in solution]
    return "\n".join(lines) + "\n"
