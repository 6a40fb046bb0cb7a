from src.buckets.bucketing import (Bucketing, RandomBucketingParams, all_params, make_bucketing,
                                   sample_params, tau_max)
from src.buckets.classing import WeightClassing, class_count, class_of

__all__ = [
    "Bucketing", "RandomBucketingParams", "all_params", "make_bucketing", "sample_params",
    "tau_max", "WeightClassing", "class_count", "class_of",
]
