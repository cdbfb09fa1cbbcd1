"""Sliding-window hull maintenance: chain engines, sequences and the window."""

from .chain import ChainEngine, ChainNode
from .finger_seq import EditKind, FingerSeq, HullEdit
from .stats import ONCE_PER_POINT, Procedure, ProcedureStats
from .window import HullSnapshot, HullWindow

__all__ = [
    "ChainEngine",
    "ChainNode",
    "EditKind",
    "FingerSeq",
    "HullEdit",
    "HullSnapshot",
    "HullWindow",
    "ONCE_PER_POINT",
    "Procedure",
    "ProcedureStats",
]
