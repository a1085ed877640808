"""Call-data construction: typed values, selectors, head/tail encoding.

Static values occupy one 32-byte head word. Dynamic values put an offset in
the head and append a length-prefixed, right-padded tail. The selector is
the first four bytes of keccak256 over the canonical signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import TooManyParameters, TypeMismatch
from .keccak import keccak256
from .schedule import GasSchedule

WORD = 32
SELECTOR_BYTES = 4

# Observed compiler ceiling for flat parameter lists before running out of
# addressable stack during dispatch.
MAX_FUNCTION_PARAMS = 16

_UINT_MAX = 2**256 - 1


@dataclass(frozen=True)
class Uint256:
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value <= _UINT_MAX:
            raise TypeMismatch(f"uint256 out of range: {self.value}")


@dataclass(frozen=True)
class Bool:
    value: bool


@dataclass(frozen=True)
class Address:
    value: str

    def __post_init__(self) -> None:
        body = self.value[2:] if self.value[:2] in ("0x", "0X") else None
        if body is None or len(body) != 40:
            raise TypeMismatch(f"address must be 0x + 40 hex chars: {self.value!r}")
        try:
            bytes.fromhex(body)
        except ValueError:
            raise TypeMismatch(f"address is not hex: {self.value!r}") from None

    @property
    def raw(self) -> bytes:
        return bytes.fromhex(self.value[2:])


@dataclass(frozen=True)
class StringVal:
    value: str

    @property
    def raw(self) -> bytes:
        return self.value.encode("utf-8")


@dataclass(frozen=True)
class BytesVal:
    value: bytes

    @property
    def raw(self) -> bytes:
        return bytes(self.value)


AbiValue = Union[Uint256, Bool, Address, StringVal, BytesVal]

_TYPE_NAMES = {
    Uint256: "uint256",
    Bool: "bool",
    Address: "address",
    StringVal: "string",
    BytesVal: "bytes",
}

SUPPORTED_TYPES = tuple(_TYPE_NAMES.values())

_DYNAMIC_TYPES = ("string", "bytes")


def type_name(value: AbiValue) -> str:
    try:
        return _TYPE_NAMES[type(value)]
    except KeyError:
        raise TypeMismatch(f"not an encodable value: {value!r}") from None


def is_dynamic_type(name: str) -> bool:
    return name in _DYNAMIC_TYPES


def value_from_raw(name: str, raw: object) -> AbiValue:
    """Build a typed value from a plain Python literal (CLI and JSON input)."""
    if name == "uint256":
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise TypeMismatch(f"uint256 needs an int, got {raw!r}")
        return Uint256(raw)
    if name == "bool":
        if not isinstance(raw, bool):
            raise TypeMismatch(f"bool needs true/false, got {raw!r}")
        return Bool(raw)
    if name == "address":
        if not isinstance(raw, str):
            raise TypeMismatch(f"address needs a hex string, got {raw!r}")
        return Address(raw)
    if name == "string":
        if not isinstance(raw, str):
            raise TypeMismatch(f"string needs text, got {raw!r}")
        return StringVal(raw)
    if name == "bytes":
        if isinstance(raw, (bytes, bytearray)):
            return BytesVal(bytes(raw))
        if isinstance(raw, str):
            try:
                return BytesVal(bytes.fromhex(raw[2:] if raw[:2] in ("0x", "0X") else raw))
            except ValueError:
                raise TypeMismatch(f"bytes is not hex: {raw!r}") from None
        raise TypeMismatch(f"bytes needs hex or raw bytes, got {raw!r}")
    raise TypeMismatch(f"unsupported parameter type {name!r}")


def _word(n: int) -> bytes:
    return n.to_bytes(WORD, "big")


def _pad_right(data: bytes) -> bytes:
    rem = len(data) % WORD
    return data if rem == 0 else data + b"\x00" * (WORD - rem)


def encode_static(value: AbiValue) -> bytes:
    """One 32-byte word for a value type; dynamic values have no single word."""
    if isinstance(value, Uint256):
        return _word(value.value)
    if isinstance(value, Bool):
        return _word(1 if value.value else 0)
    if isinstance(value, Address):
        return value.raw.rjust(WORD, b"\x00")
    raise TypeMismatch(f"{type_name(value)} does not fit a single word")


def abi_encode(values: Sequence[AbiValue]) -> bytes:
    """Encode a flat argument tuple (no selector)."""
    heads = []
    tails = []
    offset = WORD * len(values)
    for value in values:
        if is_dynamic_type(type_name(value)):
            raw = value.raw
            tail = _word(len(raw)) + _pad_right(raw)
            heads.append(_word(offset))
            tails.append(tail)
            offset += len(tail)
        else:
            heads.append(encode_static(value))
    return b"".join(heads) + b"".join(tails)


def abi_decode(type_names: Sequence[str], blob: bytes) -> tuple:
    """Inverse of abi_encode for the supported type set."""
    values = []
    for i, name in enumerate(type_names):
        head = blob[i * WORD : (i + 1) * WORD]
        if len(head) != WORD:
            raise TypeMismatch("encoded blob shorter than its head")
        if name == "uint256":
            values.append(Uint256(int.from_bytes(head, "big")))
        elif name == "bool":
            values.append(Bool(int.from_bytes(head, "big") != 0))
        elif name == "address":
            values.append(Address("0x" + head[-20:].hex()))
        elif name in _DYNAMIC_TYPES:
            offset = int.from_bytes(head, "big")
            length = int.from_bytes(blob[offset : offset + WORD], "big")
            raw = blob[offset + WORD : offset + WORD + length]
            if len(raw) != length:
                raise TypeMismatch("encoded blob shorter than its tail")
            values.append(StringVal(raw.decode("utf-8")) if name == "string" else BytesVal(raw))
        else:
            raise TypeMismatch(f"unsupported parameter type {name!r}")
    return tuple(values)


@dataclass(frozen=True)
class FunctionSignature:
    name: str
    param_types: tuple = ()

    def __post_init__(self) -> None:
        if not self.name.isidentifier():
            raise TypeMismatch(f"bad function name {self.name!r}")
        if len(self.param_types) > MAX_FUNCTION_PARAMS:
            raise TooManyParameters(
                f"{len(self.param_types)} parameters; compilers reject flat "
                f"lists past {MAX_FUNCTION_PARAMS} (stack too deep)"
            )
        for name in self.param_types:
            if name not in SUPPORTED_TYPES:
                raise TypeMismatch(f"unsupported parameter type {name!r}")

    def canonical(self) -> str:
        return f"{self.name}({','.join(self.param_types)})"

    def selector(self) -> bytes:
        return keccak256(self.canonical().encode("ascii"))[:SELECTOR_BYTES]


def encode_call(signature: FunctionSignature, values: Sequence[AbiValue]) -> bytes:
    """Selector plus encoded arguments, i.e. the full transaction payload."""
    if len(values) != len(signature.param_types):
        raise TypeMismatch(
            f"{signature.canonical()} takes {len(signature.param_types)} "
            f"arguments, got {len(values)}"
        )
    for declared, value in zip(signature.param_types, values):
        if type_name(value) != declared:
            raise TypeMismatch(f"expected {declared}, got {type_name(value)}")
    return signature.selector() + abi_encode(values)


@dataclass(frozen=True)
class PayloadStats:
    total_bytes: int
    zero_bytes: int
    nonzero_bytes: int


def payload_stats(payload: bytes) -> PayloadStats:
    zeros = payload.count(0)
    return PayloadStats(len(payload), zeros, len(payload) - zeros)


def intrinsic_gas(payload: bytes, schedule: GasSchedule) -> int:
    """Base transaction charge plus per-byte call-data pricing."""
    stats = payload_stats(payload)
    return (
        schedule.tx_base
        + stats.zero_bytes * schedule.calldata_zero_byte
        + stats.nonzero_bytes * schedule.calldata_nonzero_byte
    )
