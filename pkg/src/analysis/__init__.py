from src.analysis.bounds import (aided_bound_upper, competitive_bound, end_to_end_bound, reduction_bound)
from src.analysis.p_table import SpanProbabilityTable, estimate_p_table, exact_p_table
from src.analysis.report import BoundReport, BoundRow
from src.analysis.selection import (SelectionTable, bucketing_mixture, estimate_selection,
                                    exact_selection_probabilities, exact_selection_table)
from src.analysis.suite import axiom_report, exact_bound_suite, monte_carlo_bound_suite

__all__ = [
    "aided_bound_upper", "competitive_bound", "end_to_end_bound", "reduction_bound", "SpanProbabilityTable",
    "estimate_p_table", "exact_p_table", "BoundReport", "BoundRow", "SelectionTable", "bucketing_mixture",
    "estimate_selection", "exact_selection_probabilities", "exact_selection_table", "axiom_report",
    "exact_bound_suite", "monte_carlo_bound_suite",
]
