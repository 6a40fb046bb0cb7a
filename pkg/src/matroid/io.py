"""Plain-text instance and weight files.

    uniform <n> <k>
    partition <n>            then   block <capacity> <ids...>
    graphic <n_vertices>     then   edge <id> <u> <v>
    laminar <n>              then   set <capacity> <ids...>
    transversal <n>          then   left <ids...>

Weights: one `<element_id> <weight>` per line. `#` starts a comment.
"""
from typing import Dict, Iterator, List, Tuple

from src.errors import InfeasibleParametersError, InstanceParseError
from src.matroid.base import Matroid
from src.matroid.families import (GraphicMatroid, LaminarMatroid, PartitionMatroid,
                                  TransversalMatroid, UniformMatroid)
from src.matroid.weights import WeightedGroundSet

RECORD_OF = {"partition": "block", "graphic": "edge", "laminar": "set", "transversal": "left"}


def _records(path: str) -> Iterator[Tuple[int, List[str]]]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            for line_no, line in enumerate(f, start=1):
                fields = line.split('#', 1)[0].split()
                if fields:
                    yield line_no, fields
    except UnicodeDecodeError as e:
        raise InstanceParseError(path, None, f"not a text file: {e}") from e


def _ints(path: str, line_no: int, fields: List[str]) -> List[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise InstanceParseError(path, line_no, f"expected integers, got {' '.join(fields)!r}") from None


def parse_instance(path: str) -> Matroid:
    records = list(_records(path))
    if not records:
        raise InstanceParseError(path, None, "empty instance file")
    header_line, header = records[0]
    family = header[0]
    if family == "uniform":
        if len(header) != 3:
            raise InstanceParseError(path, header_line, "expected 'uniform <n> <k>'")
        n, k = _ints(path, header_line, header[1:])
        if len(records) > 1:
            raise InstanceParseError(path, records[1][0], "uniform instances take no further records")
        return _build(path, header_line, UniformMatroid, n, k)
    if family not in RECORD_OF:
        raise InstanceParseError(path, header_line, f"unknown matroid family {family!r}")
    if len(header) != 2:
        raise InstanceParseError(path, header_line, f"expected '{family} <size>'")
    (size,) = _ints(path, header_line, header[1:])
    body: List[Tuple[int, List[int]]] = []
    for line_no, fields in records[1:]:
        if fields[0] != RECORD_OF[family]:
            raise InstanceParseError(path, line_no, f"expected a '{RECORD_OF[family]}' record, got {fields[0]!r}")
        body.append((line_no, _ints(path, line_no, fields[1:])))

    if family == "graphic":
        edges: Dict[int, Tuple[int, int]] = {}
        for line_no, values in body:
            if len(values) != 3:
                raise InstanceParseError(path, line_no, "expected 'edge <id> <u> <v>'")
            edge_id, u, v = values
            if edge_id in edges:
                raise InstanceParseError(path, line_no, f"duplicate edge id {edge_id}")
            edges[edge_id] = (u, v)
        if sorted(edges) != list(range(len(edges))):
            raise InstanceParseError(path, None, "edge ids must be exactly 0..m-1")
        return _build(path, None, GraphicMatroid, size, [edges[i] for i in range(len(edges))])

    if family == "transversal":
        return _build(path, None, TransversalMatroid, size, [values for _, values in body])

    groups, capacities = [], []
    for line_no, values in body:
        if len(values) < 1:
            raise InstanceParseError(path, line_no, f"expected '{RECORD_OF[family]} <capacity> <ids...>'")
        capacities.append(values[0])
        groups.append(values[1:])
    cls = PartitionMatroid if family == "partition" else LaminarMatroid
    return _build(path, None, cls, size, groups, capacities)


def _build(path, line_no, cls, *args) -> Matroid:
    try:
        return cls(*args)
    except (InfeasibleParametersError, ValueError) as e:
        raise InstanceParseError(path, line_no, str(e)) from e


def parse_weights(path: str, n: int) -> WeightedGroundSet:
    weights: Dict[int, float] = {}
    for line_no, fields in _records(path):
        if len(fields) != 2:
            raise InstanceParseError(path, line_no, "expected '<element_id> <weight>'")
        try:
            e, w = int(fields[0]), float(fields[1])
        except ValueError:
            raise InstanceParseError(path, line_no, f"malformed weight record {' '.join(fields)!r}") from None
        if not 0 <= e < n:
            raise InstanceParseError(path, line_no, f"element id {e} outside [0, {n})")
        if e in weights:
            raise InstanceParseError(path, line_no, f"element {e} weighted twice")
        if not w > 0:
            raise InstanceParseError(path, line_no, f"weight {w} is not positive")
        weights[e] = w
    if not weights:
        raise InstanceParseError(path, None, "no elements")
    missing = set(range(n)) - weights.keys()
    if missing:
        raise InstanceParseError(path, None, f"elements without weight: {sorted(missing)[:10]}")
    return WeightedGroundSet(weights)


def write_instance(m: Matroid, path: str) -> None:
    lines: List[str] = []
    if isinstance(m, UniformMatroid):
        lines.append(f"uniform {m.n} {m.k}")
    elif isinstance(m, PartitionMatroid):
        lines.append(f"partition {m.n}")
        lines += [f"block {c} " + " ".join(map(str, sorted(b))) for b, c in zip(m.blocks, m.capacities)]
    elif isinstance(m, GraphicMatroid):
        lines.append(f"graphic {m.n_vertices}")
        lines += [f"edge {i} {u} {v}" for i, (u, v) in enumerate(m.edges)]
    elif isinstance(m, LaminarMatroid):
        lines.append(f"laminar {m.n}")
        lines += [f"set {c} " + " ".join(map(str, sorted(s))) for s, c in zip(m.sets, m.capacities)]
    elif isinstance(m, TransversalMatroid):
        lines.append(f"transversal {m.n}")
        lines += ["left " + " ".join(map(str, sorted(adj))) for adj in m.left]
    else:
        raise TypeError(f"cannot serialise {type(m).__name__}")
    with open(path, 'w', encoding='utf-8') as f:
        f.write("\n".join(lines) + "\n")


def write_weights(w: WeightedGroundSet, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        for e in sorted(w):
            f.write(f"{e} {w[e]!r}\n")
