"""Bound-check rows and their CSV form."""
import csv
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, TextIO, Union

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]

COLUMNS = ("check", "context", "element_id", "class", "bucket", "observed", "bound",
           "slack", "mode", "trials", "pass", "enforced")


def format_number(value: Optional[Number]) -> str:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


@dataclass
class BoundRow:
    check: str
    observed: Number
    bound: Number
    mode: str = "exact"
    tolerance: Number = 0
    context: str = ""
    element_id: Optional[int] = None
    class_index: Optional[int] = None
    bucket: Optional[int] = None
    trials: Optional[int] = None
    enforced: bool = True

    @property
    def slack(self) -> Number:
        return self.observed - self.bound

    @property
    def passed(self) -> bool:
        return self.observed >= self.bound - self.tolerance

    def as_record(self) -> List[str]:
        def opt(value):
            return "" if value is None else str(value)
        return [self.check, self.context, opt(self.element_id), opt(self.class_index), opt(self.bucket),
                format_number(self.observed), format_number(self.bound), format_number(self.slack),
                self.mode, opt(self.trials), "true" if self.passed else "false",
                "true" if self.enforced else "false"]


@dataclass
class BoundReport:
    rows: List[BoundRow] = field(default_factory=list)

    def add(self, row: BoundRow) -> None:
        self.rows.append(row)

    @property
    def failures(self) -> List[BoundRow]:
        """Rows that break an enforced bound"""
        return [row for row in self.rows if row.enforced and not row.passed]

    @property
    def known_gaps(self) -> List[BoundRow]:
        """Rows below a bound that is reported but not enforced"""
        return [row for row in self.rows if not row.enforced and not row.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def checks(self) -> List[str]:
        return sorted({row.check for row in self.rows})

    def min_slack(self, check: Optional[str] = None) -> Optional[Number]:
        slacks = [row.slack for row in self.rows if check is None or row.check == check]
        return min(slacks) if slacks else None

    def write_csv(self, stream: TextIO) -> None:
        writer = csv.writer(stream)
        writer.writerow(COLUMNS)
        for row in self.rows:
            writer.writerow(row.as_record())

    def summary(self) -> List[str]:
        lines = []
        for check in self.checks():
            rows = [row for row in self.rows if row.check == check]
            below = sum(not row.passed for row in rows)
            line = f"{check}: rows={len(rows)} failed={below} min_slack={format_number(self.min_slack(check))}"
            if not all(row.enforced for row in rows):
                line += " (not enforced)"
            lines.append(line)
        return lines
