"""Transforms Module - parity, time reversal, sign change and duality on fields"""

from .operations import (
    TransformOp,
    IDENTITY,
    P,
    T,
    C,
    D,
    GENERATORS,
    compose,
    parse_op,
    label,
    group_elements,
    apply,
    apply_time_derivative,
    invariance_report,
)

__all__ = [
    "TransformOp",
    "IDENTITY",
    "P",
    "T",
    "C",
    "D",
    "GENERATORS",
    "compose",
    "parse_op",
    "label",
    "group_elements",
    "apply",
    "apply_time_derivative",
    "invariance_report",
]
