"""Gas constants, parameterized by fork.

Every gas number used anywhere in the package lives here, either in the
fork-specific schedule tables or in the fork-independent model constants
below, so estimators never carry magic numbers of their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Fork(Enum):
    PRE_BERLIN = "pre-berlin"
    BERLIN = "berlin"


@dataclass(frozen=True)
class GasSchedule:
    fork: Fork
    tx_base: int
    calldata_zero_byte: int
    calldata_nonzero_byte: int
    log_base: int
    log_topic: int
    log_data_byte: int
    sstore_set: int
    sstore_reset: int
    refund_clear: int
    # fork-dependent read pricing: flat rate before Berlin, warm/cold after
    sload_flat: int | None = None
    cold_sload: int | None = None
    warm_access: int | None = None

    def as_dict(self) -> dict[str, int]:
        """Key -> integer map for machine-readable output; unused fields dropped."""
        out = {}
        for key, value in self.__dict__.items():
            if key == "fork":
                continue
            if value is not None:
                out[key] = value
        return out


_PRE_BERLIN = GasSchedule(
    fork=Fork.PRE_BERLIN,
    tx_base=21_000,
    calldata_zero_byte=4,
    calldata_nonzero_byte=16,
    log_base=375,
    log_topic=375,
    log_data_byte=8,
    sstore_set=20_000,
    sstore_reset=5_000,
    refund_clear=15_000,
    sload_flat=800,
)

_BERLIN = GasSchedule(
    fork=Fork.BERLIN,
    tx_base=21_000,
    calldata_zero_byte=4,
    calldata_nonzero_byte=16,
    log_base=375,
    log_topic=375,
    log_data_byte=8,
    sstore_set=20_000,
    sstore_reset=5_000,
    refund_clear=15_000,
    cold_sload=2_100,
    warm_access=100,
)

_TABLES = {Fork.PRE_BERLIN: _PRE_BERLIN, Fork.BERLIN: _BERLIN}


def schedule_for(fork: Fork) -> GasSchedule:
    """Complete constant table for the fork. Total and deterministic."""
    return _TABLES[fork]


# Ropsten block gas limit during the measurements; overridable per estimate.
BLOCK_GAS_LIMIT = 8_000_000

# Bytecode-level dispatch model, fork independent. A call into a contract
# runs a value/payload pre-check (65 gas over a bare transfer), loads the
# 4-byte selector (12), burns one {dup1, push4, eq, push2, jumpi} block per
# selector compared (22 each) and, when nothing matches, one jump into the
# fallback (10).
DISPATCH_PRECHECK = 65
DISPATCH_SELECTOR_LOAD = 12
DISPATCH_COMPARE = 22
DISPATCH_FALLBACK_JUMP = 10

# Refund cap: at most half of the gas charged is refundable.
MAX_REFUND_QUOTIENT = 2
