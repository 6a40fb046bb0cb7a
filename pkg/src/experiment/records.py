import csv
import math
from dataclasses import dataclass, fields
from typing import Iterable, List, Optional, TextIO


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return repr(value)
    return str(value)


@dataclass
class TrialRecord:
    trial: int
    seed: int
    family: str
    n: int
    rho: int
    h: Optional[int]
    tau: Optional[int]
    delta: Optional[int]
    parity: str
    sample_size: int
    selected_size: int
    opt_weight: float
    selected_weight: float
    ratio: float
    promise_violations: int
    bucketing: str
    order: str
    best_selected: bool
    independent: bool

    @staticmethod
    def header() -> List[str]:
        return [f.name for f in fields(TrialRecord)]

    def as_row(self) -> List[str]:
        return [format_value(getattr(self, f.name)) for f in fields(self)]


def write_records(records: Iterable[TrialRecord], stream: TextIO) -> int:
    writer = csv.writer(stream)
    writer.writerow(TrialRecord.header())
    count = 0
    for record in records:
        writer.writerow(record.as_row())
        count += 1
    return count
