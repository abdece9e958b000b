"""k-shapes, their poset, strips, tableaux, and the pushout bijection."""

from .partitions import (
    DomainError,
    boundary,
    core_from_bounded,
    enumerate_kshapes,
    format_partition,
    is_kcore,
    is_kshape,
    parse_partition,
)
from .moves import Move, StringType, classify_string, enumerate_moves
from .poset import branching_polynomial, build_poset, path_classes
from .strips import Strip, is_strip, maximize_strip, reverse_maximize_strip
from .tableaux import decompose_into_weak, dkr, enumerate_tableaux, generating_function
from .pushout import analyze, pull, push, pushout_sequence, weak_bijection

__all__ = [
    "DomainError",
    "Move",
    "Strip",
    "StringType",
    "analyze",
    "boundary",
    "branching_polynomial",
    "build_poset",
    "classify_string",
    "core_from_bounded",
    "decompose_into_weak",
    "dkr",
    "enumerate_kshapes",
    "enumerate_moves",
    "enumerate_tableaux",
    "format_partition",
    "generating_function",
    "is_kcore",
    "is_kshape",
    "is_strip",
    "maximize_strip",
    "parse_partition",
    "path_classes",
    "pull",
    "push",
    "pushout_sequence",
    "reverse_maximize_strip",
    "weak_bijection",
]
