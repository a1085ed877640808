"""SLOAD/SSTORE charging with per-transaction warm/cold tracking.

Pre-Berlin pricing is flat per operation class. Berlin (EIP-2929) adds the
access set: the first touch of a slot in an execution context pays the cold
surcharge, later touches the warm rate. Refunds for clearing a slot are
accrued separately and never netted here; capping happens at report level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .schedule import Fork, schedule_for


class SlotState(Enum):
    ZERO = "zero"
    NONZERO = "nonzero"


class AccessSet:
    """Slots touched so far in one simulated transaction. Grows only."""

    __slots__ = ("_touched",)

    def __init__(self) -> None:
        self._touched: set[int] = set()

    def touch(self, slot: int) -> bool:
        """Mark slot accessed; True if this was the first (cold) touch."""
        if slot in self._touched:
            return False
        self._touched.add(slot)
        return True

    def __contains__(self, slot: int) -> bool:
        return slot in self._touched

    def __len__(self) -> int:
        return len(self._touched)


@dataclass(frozen=True)
class SlotWrite:
    slot: int
    old_state: SlotState
    new_state: SlotState
    same_value: bool = False

    def __post_init__(self) -> None:
        if self.same_value and self.old_state != self.new_state:
            raise ValueError("same_value write cannot change the slot state")
        if (
            self.old_state is SlotState.ZERO
            and self.new_state is SlotState.ZERO
            and not self.same_value
        ):
            raise ValueError("zero-to-zero write is by definition a no-op")

    @classmethod
    def initialize(cls, slot: int) -> "SlotWrite":
        return cls(slot, SlotState.ZERO, SlotState.NONZERO)

    @classmethod
    def update(cls, slot: int) -> "SlotWrite":
        return cls(slot, SlotState.NONZERO, SlotState.NONZERO)

    @classmethod
    def clear(cls, slot: int) -> "SlotWrite":
        return cls(slot, SlotState.NONZERO, SlotState.ZERO)

    @classmethod
    def noop(cls, slot: int, state: SlotState = SlotState.NONZERO) -> "SlotWrite":
        return cls(slot, state, state, same_value=True)


@dataclass(frozen=True)
class GasReceipt:
    gas_charged: int
    refund_accrued: int = 0


def charge_sload(slot: int, access: AccessSet, fork: Fork) -> int:
    sched = schedule_for(fork)
    cold = access.touch(slot)
    if fork is Fork.PRE_BERLIN:
        return sched.sload_flat
    return sched.cold_sload if cold else sched.warm_access


def charge_sstore(write: SlotWrite, access: AccessSet, fork: Fork) -> GasReceipt:
    sched = schedule_for(fork)
    cold = access.touch(write.slot)
    refund = sched.refund_clear if write.new_state is SlotState.ZERO and not write.same_value else 0

    if fork is Fork.PRE_BERLIN:
        if write.same_value:
            charged = sched.sload_flat  # EIP-2200 no-op rate of the era
        elif write.old_state is SlotState.ZERO:
            charged = sched.sstore_set
        else:
            charged = sched.sstore_reset
        return GasReceipt(charged, refund)

    if write.same_value:
        charged = sched.warm_access + (sched.cold_sload if cold else 0)
    elif write.old_state is SlotState.ZERO:
        charged = sched.sstore_set + (sched.cold_sload if cold else 0)
    else:
        # cold: cold_sload + (reset - cold_sload) = reset; warm: reset - cold_sload
        charged = sched.sstore_reset - (0 if cold else sched.cold_sload)
    return GasReceipt(charged, refund)
