"""Exact q-series and partition tools for the Stanley partition function."""

from .partitions import Partition, parse_partition
from .series import INF, TruncatedSeries

__all__ = ["INF", "Partition", "TruncatedSeries", "parse_partition"]
__version__ = "0.1.0"
