"""Storage-slot layout of Solidity-style dynamic string/bytes values.

A value at base slot p keeps its length in p; payloads of at most 31 bytes
pack into p itself, longer ones occupy ceil(len/32) consecutive slots
starting at keccak256(p). Slot addresses wrap modulo 2**256.
"""

from __future__ import annotations

from dataclasses import dataclass

from .keccak import keccak256

SLOT_MODULUS = 2**256
IN_PLACE_MAX = 31
WORD = 32


@dataclass(frozen=True)
class StorageLayoutPlan:
    base_slot: int
    in_place: bool
    length_slot: int
    data_slots: tuple[int, ...]
    byte_length: int

    @property
    def touched_slots(self) -> tuple[int, ...]:
        """Every slot a full write of the value touches, length slot first."""
        if self.in_place:
            return (self.base_slot,)
        return (self.length_slot, *self.data_slots)


def data_slot_count(byte_length: int) -> int:
    """ceil(byte_length / 32)."""
    if byte_length < 0:
        raise ValueError("byte_length must be non-negative")
    return -(-byte_length // WORD)


def data_area_start(base_slot: int) -> int:
    """First data slot: keccak256 of the 32-byte big-endian slot number."""
    digest = keccak256(base_slot.to_bytes(WORD, "big"))
    return int.from_bytes(digest, "big")


def layout_dynamic(base_slot: int, byte_length: int) -> StorageLayoutPlan:
    base_slot %= SLOT_MODULUS
    if byte_length < 0:
        raise ValueError("byte_length must be non-negative")
    if byte_length <= IN_PLACE_MAX:
        return StorageLayoutPlan(
            base_slot=base_slot,
            in_place=True,
            length_slot=base_slot,
            data_slots=(),
            byte_length=byte_length,
        )
    start = data_area_start(base_slot)
    slots = tuple((start + i) % SLOT_MODULUS for i in range(data_slot_count(byte_length)))
    return StorageLayoutPlan(
        base_slot=base_slot,
        in_place=False,
        length_slot=base_slot,
        data_slots=slots,
        byte_length=byte_length,
    )
