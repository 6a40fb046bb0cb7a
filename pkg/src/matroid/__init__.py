from src.matroid.audit import AuditOracle, audit_oracle
from src.matroid.base import IndependenceOracle, Matroid
from src.matroid.families import (GraphicMatroid, LaminarMatroid, PartitionMatroid,
                                  TransversalMatroid, UniformMatroid)
from src.matroid.minor import MinorView, minor_rank
from src.matroid.weights import WeightedGroundSet, greedy_max_weight

__all__ = [
    "AuditOracle", "audit_oracle", "IndependenceOracle", "Matroid", "GraphicMatroid",
    "LaminarMatroid", "PartitionMatroid", "TransversalMatroid", "UniformMatroid",
    "MinorView", "minor_rank", "WeightedGroundSet", "greedy_max_weight",
]
