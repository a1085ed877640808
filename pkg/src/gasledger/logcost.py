"""Event declarations, emitted log shapes, and LOG* gas.

A non-anonymous event spends its first topic on the declaration hash; each
indexed parameter adds one more topic. Non-indexed parameters land in the
data section as a regular encoded tuple. Gas is flat per log, flat per
topic, and linear in data bytes, identical on both forks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abi import AbiValue, abi_encode, encode_static, is_dynamic_type, type_name, SUPPORTED_TYPES
from .errors import TooManyIndexed, TypeMismatch
from .keccak import keccak256
from .schedule import Fork, GasSchedule
from .write_engine import AccessSet, SlotWrite, charge_sload, charge_sstore

# LOG0..LOG4: at most four topic operands, one consumed by the declaration
# hash unless the event is anonymous.
MAX_TOPICS = 4


@dataclass(frozen=True)
class EventParam:
    type_name: str
    indexed: bool = False

    def __post_init__(self) -> None:
        if self.type_name not in SUPPORTED_TYPES:
            raise TypeMismatch(f"unsupported parameter type {self.type_name!r}")
        if self.indexed and is_dynamic_type(self.type_name):
            raise TypeMismatch(
                f"indexed {self.type_name} is out of model: its topic would "
                "be a hash, not the value"
            )


@dataclass(frozen=True)
class EventDecl:
    name: str
    params: tuple
    anonymous: bool = False

    def __post_init__(self) -> None:
        if not self.name.isidentifier():
            raise TypeMismatch(f"bad event name {self.name!r}")
        budget = MAX_TOPICS if self.anonymous else MAX_TOPICS - 1
        indexed = sum(1 for p in self.params if p.indexed)
        if indexed > budget:
            raise TooManyIndexed(
                f"{indexed} indexed parameters; "
                f"{'anonymous' if self.anonymous else 'named'} events top out at {budget}"
            )

    def canonical(self) -> str:
        return f"{self.name}({','.join(p.type_name for p in self.params)})"

    def declaration_hash(self) -> bytes:
        return keccak256(self.canonical().encode("ascii"))


@dataclass(frozen=True)
class LogShape:
    topics: tuple
    data: bytes

    @property
    def topic_count(self) -> int:
        return len(self.topics)


def log_shape(decl: EventDecl, values: Sequence[AbiValue]) -> LogShape:
    """Topics and data section this event produces for the given arguments."""
    if len(values) != len(decl.params):
        raise TypeMismatch(
            f"{decl.canonical()} takes {len(decl.params)} arguments, got {len(values)}"
        )
    topics = [] if decl.anonymous else [decl.declaration_hash()]
    plain = []
    for param, value in zip(decl.params, values):
        if type_name(value) != param.type_name:
            raise TypeMismatch(f"expected {param.type_name}, got {type_name(value)}")
        if param.indexed:
            topics.append(encode_static(value))
        else:
            plain.append(value)
    return LogShape(tuple(topics), abi_encode(plain))


def log_gas(shape: LogShape, schedule: GasSchedule) -> int:
    return (
        schedule.log_base
        + schedule.log_topic * shape.topic_count
        + schedule.log_data_byte * len(shape.data)
    )


def counter_overhead(fork: Fork, slot: int = 0) -> int:
    """Gas to bump a sequence counter: read it twice, write it back.

    The counter is read once for the new identifier and once more when the
    stored value is re-checked before the write. On the access-list fork only
    the first read pays the cold surcharge, so the overhead drops.
    """
    access = AccessSet()
    total = charge_sload(slot, access, fork)
    total += charge_sload(slot, access, fork)
    total += charge_sstore(SlotWrite.update(slot), access, fork).gas_charged
    return total
