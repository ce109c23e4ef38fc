"""Nil clean divisor graphs of finite commutative rings."""

from .rings import ClassifiedRing, Cyclic, Field, RingSpec, RingSpecError, make_ring
from .graphs import (
    Graph,
    build_idempotent_divisor_graph,
    build_nil_clean_graph,
    build_nilpotent_divisor_graph,
    build_zero_divisor_graph,
)

__version__ = "0.1.0"
