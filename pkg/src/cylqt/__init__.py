"""Cylindric plane partitions with (q,t)-Macdonald weights.

Exact-arithmetic toolkit: enumeration of cylindric plane partitions,
their Pieri-product weights, the equivalent peak/valley alphabet form,
and truncated-series verification of the associated product identities
(including the q=t, q=0, reverse-plane-partition and plane-partition
specializations).
"""

from .series import kernel_name

__version__ = "0.1.0"

__all__ = ["kernel_name", "__version__"]
