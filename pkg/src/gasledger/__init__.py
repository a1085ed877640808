"""gasledger: deterministic gas-cost models for Ethereum data-storage strategies."""

from .chunking import Platform, build_tree, make_cid
from .estimators import Estimate, StrategyKind, compare, run_strategy
from .keccak import active_backend, keccak256, set_backend
from .schedule import BLOCK_GAS_LIMIT, Fork, GasSchedule, schedule_for

__version__ = "0.1.0"

__all__ = [
    "BLOCK_GAS_LIMIT",
    "Estimate",
    "Fork",
    "GasSchedule",
    "Platform",
    "StrategyKind",
    "active_backend",
    "build_tree",
    "compare",
    "keccak256",
    "make_cid",
    "run_strategy",
    "schedule_for",
    "set_backend",
    "__version__",
]
