"""Per-strategy gas estimates and the comparison report.

Every estimate is a pure function of (data bytes, strategy, fork, config)
and itemizes its cost as labeled breakdown components. Opcode-level
execution overhead inside the called function body (stack shuffling, memory
expansion, jump bookkeeping) is not simulated; it is exposed as a separate
component defaulting to zero so callers can calibrate absolute totals.
Cross-strategy and cross-fork deltas are exact without calibration.
"""

from __future__ import annotations

import csv
import dataclasses
from dataclasses import dataclass
from enum import Enum
import io
import json
from typing import Optional, Sequence

from .abi import (
    AbiValue,
    BytesVal,
    FunctionSignature,
    Uint256,
    encode_call,
    intrinsic_gas,
    type_name,
)
from .chunking import (
    ChunkerConfig,
    Platform,
    build_tree,
    default_config,
    identifier_bytes,
    identifier_text,
)
from .errors import NoDispatchTarget
from .logcost import EventDecl, EventParam, counter_overhead, log_gas, log_shape
from .schedule import (
    BLOCK_GAS_LIMIT,
    DISPATCH_COMPARE,
    DISPATCH_FALLBACK_JUMP,
    DISPATCH_PRECHECK,
    DISPATCH_SELECTOR_LOAD,
    Fork,
    MAX_REFUND_QUOTIENT,
    schedule_for,
)
from .storage_layout import data_area_start, data_slot_count, layout_dynamic
from .write_engine import AccessSet, SlotWrite, charge_sload, charge_sstore

SELECTOR_BYTES = 4

# Slot the stored variable is declared at; fixed because only slot-class
# counts and warm/cold transitions matter, never absolute slot numbers.
BASE_SLOT = 0
COUNTER_SLOT = 1


class StrategyKind(Enum):
    SC_STORE_CLEAN = "sc-store-clean"
    SC_GROW_DOUBLE = "sc-grow-double"
    SC_UPDATE_SAME_SIZE = "sc-update-same-size"
    EVENT_INDEXED = "event-indexed"
    EVENT_NON_INDEXED = "event-non-indexed"
    EVENT_ANONYMOUS_INDEXED = "event-anonymous-indexed"
    TX_PAYLOAD_EOA_TO_EOA = "tx-payload-eoa-to-eoa"
    TX_PAYLOAD_FALLBACK = "tx-payload-fallback"
    UNUSED_PARAM_PLAIN = "unused-param-plain"
    UNUSED_PARAM_WITH_EVENT = "unused-param-with-event"
    HYBRID_SWARM = "hybrid-swarm"
    HYBRID_IPFS = "hybrid-ipfs"


class PayloadTarget(Enum):
    EOA_TO_EOA = "eoa-to-eoa"
    EOA_TO_CONTRACT = "eoa-to-contract"


class EventVariant(Enum):
    INDEXED = "indexed"
    NON_INDEXED = "non-indexed"
    ANONYMOUS_INDEXED = "anonymous-indexed"


class HybridPlatform(Enum):
    SWARM = "swarm"
    SWARM_ENCRYPTED = "swarm-encrypted"
    IPFS_CID_V0 = "ipfs-cid-v0"
    IPFS_CID_V1 = "ipfs-cid-v1"


class AnchorKind(Enum):
    SC_STORAGE = "sc-storage"
    EVENT_LOG = "event-log"


@dataclass(frozen=True)
class DispatchConfig:
    selectors: tuple
    has_fallback: bool = True

    def __post_init__(self) -> None:
        for sel in self.selectors:
            if len(sel) != SELECTOR_BYTES:
                raise ValueError(f"selector must be {SELECTOR_BYTES} bytes, got {sel.hex()}")
        if len(set(self.selectors)) != len(self.selectors):
            raise ValueError("dispatch selectors must be pairwise distinct")


SETTER = FunctionSignature("store", ("bytes",))
GETTER = FunctionSignature("retrieve")
RESETTER = FunctionSignature("reset")


def contract_for(setter: FunctionSignature) -> DispatchConfig:
    """Three-function contract: the setter under test, a getter, a reset."""
    return DispatchConfig(
        selectors=(setter.selector(), GETTER.selector(), RESETTER.selector()),
        has_fallback=True,
    )


DEFAULT_CONTRACT = contract_for(SETTER)


@dataclass(frozen=True)
class Estimate:
    strategy: StrategyKind
    fork: Fork
    data_size: int
    breakdown: tuple
    refund: int = 0
    block_gas_limit: int = BLOCK_GAS_LIMIT
    offchain: Optional[dict] = None

    @property
    def gas_total(self) -> int:
        return sum(gas for _, gas in self.breakdown)

    @property
    def exceeds_block_limit(self) -> bool:
        return self.gas_total > self.block_gas_limit

    @property
    def net_gas(self) -> int:
        """Charged gas minus the capped end-of-transaction refund."""
        total = self.gas_total
        return total - min(self.refund, total // MAX_REFUND_QUOTIENT)

    def component(self, label: str) -> int:
        for name, gas in self.breakdown:
            if name == label:
                return gas
        raise KeyError(label)


def estimate_as_dict(est: Estimate) -> dict:
    out = {
        "strategy": est.strategy.value,
        "fork": est.fork.value,
        "size_bytes": est.data_size,
        "gas_total": est.gas_total,
        "refund": est.refund,
        "net_gas": est.net_gas,
        "exceeds_block_limit": est.exceeds_block_limit,
        "breakdown": [[label, gas] for label, gas in est.breakdown],
    }
    if est.offchain is not None:
        out["offchain"] = dict(est.offchain)
    return out


def dispatch_cost(payload: bytes, cfg: DispatchConfig) -> int:
    """Cost of routing a call through the compiled selector scan.

    Payloads shorter than a selector skip the scan entirely. Otherwise the
    selector is loaded once and compared against the deployed selectors in
    hex-ascending order; a miss pays one extra jump into the fallback.
    """
    if len(payload) < SELECTOR_BYTES:
        if not cfg.has_fallback:
            raise NoDispatchTarget("short payload and the contract has no fallback")
        return DISPATCH_PRECHECK
    ordered = sorted(cfg.selectors)
    sel = payload[:SELECTOR_BYTES]
    if sel in ordered:
        compared = ordered.index(sel) + 1
        return DISPATCH_PRECHECK + DISPATCH_SELECTOR_LOAD + DISPATCH_COMPARE * compared
    if not cfg.has_fallback:
        raise NoDispatchTarget(f"no function matches selector {sel.hex()}")
    return (
        DISPATCH_PRECHECK
        + DISPATCH_SELECTOR_LOAD
        + DISPATCH_COMPARE * len(ordered)
        + DISPATCH_FALLBACK_JUMP
    )


def _assemble(
    strategy: StrategyKind,
    fork: Fork,
    data_size: int,
    parts: list,
    refund: int = 0,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    offchain: Optional[dict] = None,
) -> Estimate:
    parts = list(parts) + [("execution_overhead", execution_overhead)]
    return Estimate(
        strategy=strategy,
        fork=fork,
        data_size=data_size,
        breakdown=tuple(parts),
        refund=refund,
        block_gas_limit=block_gas_limit,
        offchain=offchain,
    )


def setter_payload(data: bytes) -> bytes:
    """Full calldata of the standard setter invoked with these bytes."""
    return encode_call(SETTER, [BytesVal(data)])


def estimate_sc_store(
    data: bytes,
    fork: Fork,
    *,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    dispatch: DispatchConfig = DEFAULT_CONTRACT,
) -> Estimate:
    """Write into fully cleared storage: every touched slot is initialized.

    Values past the in-place threshold take one length slot plus one slot
    per 32 data bytes; at or below it the value and length share the
    declaration slot.
    """
    if len(data) < 1:
        raise ValueError("storing needs at least one byte")
    sched = schedule_for(fork)
    payload = setter_payload(data)
    plan = layout_dynamic(BASE_SLOT, len(data))
    access = AccessSet()
    writes = 0
    for slot in plan.touched_slots:
        writes += charge_sstore(SlotWrite.initialize(slot), access, fork).gas_charged
    parts = [
        ("intrinsic", intrinsic_gas(payload, sched)),
        ("dispatch", dispatch_cost(payload, dispatch)),
        ("storage_writes", writes),
    ]
    return _assemble(
        StrategyKind.SC_STORE_CLEAN, fork, len(data), parts,
        execution_overhead=execution_overhead, block_gas_limit=block_gas_limit,
    )


def estimate_sc_update(
    data: bytes,
    fork: Fork,
    *,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    dispatch: DispatchConfig = DEFAULT_CONTRACT,
) -> Estimate:
    """Overwrite an equal-length value: length slot is read twice but never
    written, and each occupied data slot takes one update."""
    if len(data) < 1:
        raise ValueError("updating needs at least one byte")
    sched = schedule_for(fork)
    payload = setter_payload(data)
    access = AccessSet()
    reads = charge_sload(BASE_SLOT, access, fork)
    reads += charge_sload(BASE_SLOT, access, fork)
    first = data_area_start(BASE_SLOT)
    writes = 0
    for i in range(data_slot_count(len(data))):
        writes += charge_sstore(SlotWrite.update(first + i), access, fork).gas_charged
    parts = [
        ("intrinsic", intrinsic_gas(payload, sched)),
        ("dispatch", dispatch_cost(payload, dispatch)),
        ("storage_reads", reads),
        ("storage_writes", writes),
    ]
    return _assemble(
        StrategyKind.SC_UPDATE_SAME_SIZE, fork, len(data), parts,
        execution_overhead=execution_overhead, block_gas_limit=block_gas_limit,
    )


def estimate_sc_grow(
    old_size: int,
    new_data: bytes,
    fork: Fork,
    *,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    dispatch: DispatchConfig = DEFAULT_CONTRACT,
) -> Estimate:
    """Replace a value with a longer one: occupied slots update, the tail
    initializes, and the length slot takes a (warm) update at the end."""
    if old_size < 0:
        raise ValueError("old size cannot be negative")
    if len(new_data) <= old_size:
        raise ValueError("growth needs the new value to be strictly longer")
    if old_size == 0:
        est = estimate_sc_store(
            new_data, fork, execution_overhead=execution_overhead,
            block_gas_limit=block_gas_limit, dispatch=dispatch,
        )
        return dataclasses.replace(est, strategy=StrategyKind.SC_GROW_DOUBLE)
    sched = schedule_for(fork)
    payload = setter_payload(new_data)
    access = AccessSet()
    reads = charge_sload(BASE_SLOT, access, fork)
    reads += charge_sload(BASE_SLOT, access, fork)
    first = data_area_start(BASE_SLOT)
    old_slots = data_slot_count(old_size)
    new_slots = data_slot_count(len(new_data))
    writes = 0
    for i in range(old_slots):
        writes += charge_sstore(SlotWrite.update(first + i), access, fork).gas_charged
    for i in range(old_slots, new_slots):
        writes += charge_sstore(SlotWrite.initialize(first + i), access, fork).gas_charged
    writes += charge_sstore(SlotWrite.update(BASE_SLOT), access, fork).gas_charged
    parts = [
        ("intrinsic", intrinsic_gas(payload, sched)),
        ("dispatch", dispatch_cost(payload, dispatch)),
        ("storage_reads", reads),
        ("storage_writes", writes),
    ]
    return _assemble(
        StrategyKind.SC_GROW_DOUBLE, fork, len(new_data), parts,
        execution_overhead=execution_overhead, block_gas_limit=block_gas_limit,
    )


def estimate_tx_payload(
    data: bytes,
    target: PayloadTarget,
    fork: Fork,
    *,
    dispatch: DispatchConfig = DEFAULT_CONTRACT,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
) -> Estimate:
    """Data rides in the transaction payload itself; nothing is stored.

    Between externally owned accounts only intrinsic gas applies. Against a
    contract the payload matches no function, so the selector scan runs to
    exhaustion and drops into the (empty) fallback.
    """
    sched = schedule_for(fork)
    parts = [("intrinsic", intrinsic_gas(data, sched))]
    if target is PayloadTarget.EOA_TO_CONTRACT:
        strategy = StrategyKind.TX_PAYLOAD_FALLBACK
        parts.append(("dispatch", dispatch_cost(data, dispatch)))
    else:
        strategy = StrategyKind.TX_PAYLOAD_EOA_TO_EOA
    return _assemble(
        strategy, fork, len(data), parts,
        execution_overhead=execution_overhead, block_gas_limit=block_gas_limit,
    )


_EVENT_DECLS = {
    EventVariant.INDEXED: EventDecl(
        "Stored", (EventParam("uint256", indexed=True), EventParam("bytes"))
    ),
    EventVariant.NON_INDEXED: EventDecl(
        "Stored", (EventParam("uint256"), EventParam("bytes"))
    ),
    EventVariant.ANONYMOUS_INDEXED: EventDecl(
        "Stored", (EventParam("uint256", indexed=True), EventParam("bytes")),
        anonymous=True,
    ),
}

_EVENT_STRATEGY = {
    EventVariant.INDEXED: StrategyKind.EVENT_INDEXED,
    EventVariant.NON_INDEXED: StrategyKind.EVENT_NON_INDEXED,
    EventVariant.ANONYMOUS_INDEXED: StrategyKind.EVENT_ANONYMOUS_INDEXED,
}

# Identifier assigned by the contract's sequence counter; logs price the
# encoded word identically for every value.
_COUNTER_ID = Uint256(1)


def event_decl(variant: EventVariant) -> EventDecl:
    return _EVENT_DECLS[variant]


def estimate_event(
    variant: EventVariant,
    data: bytes,
    fork: Fork,
    *,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    dispatch: DispatchConfig = DEFAULT_CONTRACT,
) -> Estimate:
    """Data is emitted as an event instead of written to storage; the only
    storage traffic is the identifier counter bump."""
    sched = schedule_for(fork)
    payload = setter_payload(data)
    shape = log_shape(_EVENT_DECLS[variant], [_COUNTER_ID, BytesVal(data)])
    parts = [
        ("intrinsic", intrinsic_gas(payload, sched)),
        ("dispatch", dispatch_cost(payload, dispatch)),
        ("counter", counter_overhead(fork, COUNTER_SLOT)),
        ("log", log_gas(shape, sched)),
    ]
    return _assemble(
        _EVENT_STRATEGY[variant], fork, len(data), parts,
        execution_overhead=execution_overhead, block_gas_limit=block_gas_limit,
    )


# Emitted by the with-event variant: one indexed identifier, no data section.
_MARKER_EVENT = EventDecl("Stored", (EventParam("uint256", indexed=True),))


def estimate_unused_param(
    args: Sequence[AbiValue],
    with_event: bool,
    fork: Fork,
    *,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    dispatch: Optional[DispatchConfig] = None,
) -> Estimate:
    """Arguments are passed to a function body that never reads them.

    The bytes still pay call-data and encoding costs. With the event flag
    the function also bumps the counter and emits a marker log whose data
    section is empty, so its cost does not grow with the arguments.
    """
    setter = FunctionSignature("store", tuple(type_name(v) for v in args))
    payload = encode_call(setter, args)
    if dispatch is None:
        dispatch = contract_for(setter)
    sched = schedule_for(fork)
    parts = [
        ("intrinsic", intrinsic_gas(payload, sched)),
        ("dispatch", dispatch_cost(payload, dispatch)),
    ]
    if with_event:
        strategy = StrategyKind.UNUSED_PARAM_WITH_EVENT
        parts.append(("counter", counter_overhead(fork, COUNTER_SLOT)))
        parts.append(("log", log_gas(log_shape(_MARKER_EVENT, [_COUNTER_ID]), sched)))
    else:
        strategy = StrategyKind.UNUSED_PARAM_PLAIN
    size = sum(len(v.raw) if hasattr(v, "raw") else 32 for v in args)
    return _assemble(
        strategy, fork, size, parts,
        execution_overhead=execution_overhead, block_gas_limit=block_gas_limit,
    )


_HYBRID_SOURCE = {
    HybridPlatform.SWARM: (Platform.SWARM, 0),
    HybridPlatform.SWARM_ENCRYPTED: (Platform.SWARM_ENCRYPTED, 0),
    HybridPlatform.IPFS_CID_V0: (Platform.IPFS, 0),
    HybridPlatform.IPFS_CID_V1: (Platform.IPFS, 1),
}


def _nominal_identifier(identifier: bytes) -> bytes:
    """Identifier priced at the nonzero call-data rate throughout, so the
    anchor cost depends only on identifier length, never digest content."""
    return bytes(b if b else 1 for b in identifier)


def estimate_hybrid(
    data: bytes,
    platform: HybridPlatform,
    anchor: AnchorKind,
    fork: Fork,
    *,
    chunker: Optional[ChunkerConfig] = None,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
    dispatch: DispatchConfig = DEFAULT_CONTRACT,
) -> Estimate:
    """Data lives off-chain; only the root identifier is anchored on-chain.

    The breakdown is the anchoring transaction's; chunk and tree statistics
    ride along as off-chain metadata.
    """
    source, cid_version = _HYBRID_SOURCE[platform]
    tree = build_tree(data, source, chunker or default_config(source))
    identifier = identifier_bytes(tree, cid_version)
    anchored = _nominal_identifier(identifier)
    if anchor is AnchorKind.SC_STORAGE:
        est = estimate_sc_store(
            anchored, fork, execution_overhead=execution_overhead,
            block_gas_limit=block_gas_limit, dispatch=dispatch,
        )
    else:
        est = estimate_event(
            EventVariant.INDEXED, anchored, fork,
            execution_overhead=execution_overhead,
            block_gas_limit=block_gas_limit, dispatch=dispatch,
        )
    strategy = (
        StrategyKind.HYBRID_IPFS
        if source is Platform.IPFS
        else StrategyKind.HYBRID_SWARM
    )
    offchain = {
        "platform": platform.value,
        "anchor": anchor.value,
        "chunk_count": tree.chunk_count,
        "node_count": tree.node_count,
        "depth": tree.depth,
        "identifier_length": len(identifier),
        "identifier": identifier_text(tree, cid_version),
    }
    return dataclasses.replace(
        est, strategy=strategy, data_size=len(data), offchain=offchain,
    )


CSV_HEADER = "strategy,fork,size_bytes,gas_total,refund,exceeds_block_limit"


@dataclass(frozen=True)
class ComparisonReport:
    fork: Fork
    sizes: tuple
    strategies: tuple
    estimates: tuple

    def cell(self, strategy: StrategyKind, size: int) -> Estimate:
        for est in self.estimates:
            if est.strategy is strategy and est.data_size == size:
                return est
        raise KeyError((strategy, size))

    def ranking(self, size: int) -> tuple:
        """Strategies cheapest-first at one size; ties keep declaration order."""
        at_size = [e for e in self.estimates if e.data_size == size]
        return tuple(e.strategy for e in sorted(at_size, key=lambda e: e.gas_total))

    def series(self, strategy: StrategyKind) -> list:
        return [
            (e.data_size, e.gas_total)
            for e in self.estimates
            if e.strategy is strategy
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for est in self.estimates:
            writer.writerow(
                [
                    est.strategy.value,
                    est.fork.value,
                    est.data_size,
                    est.gas_total,
                    est.refund,
                    "true" if est.exceeds_block_limit else "false",
                ]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([estimate_as_dict(e) for e in self.estimates], indent=2)


_STRATEGY_ORDER = {kind: i for i, kind in enumerate(StrategyKind)}


def run_strategy(
    strategy: StrategyKind,
    data: bytes,
    fork: Fork,
    *,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
) -> Estimate:
    """One strategy on one concrete byte string, with uniform conventions:
    growth starts from a half-size value and hybrids anchor via storage."""
    common = {
        "execution_overhead": execution_overhead,
        "block_gas_limit": block_gas_limit,
    }
    if strategy is StrategyKind.SC_STORE_CLEAN:
        return estimate_sc_store(data, fork, **common)
    if strategy is StrategyKind.SC_GROW_DOUBLE:
        return estimate_sc_grow(len(data) // 2, data, fork, **common)
    if strategy is StrategyKind.SC_UPDATE_SAME_SIZE:
        return estimate_sc_update(data, fork, **common)
    if strategy is StrategyKind.EVENT_INDEXED:
        return estimate_event(EventVariant.INDEXED, data, fork, **common)
    if strategy is StrategyKind.EVENT_NON_INDEXED:
        return estimate_event(EventVariant.NON_INDEXED, data, fork, **common)
    if strategy is StrategyKind.EVENT_ANONYMOUS_INDEXED:
        return estimate_event(EventVariant.ANONYMOUS_INDEXED, data, fork, **common)
    if strategy is StrategyKind.TX_PAYLOAD_EOA_TO_EOA:
        return estimate_tx_payload(data, PayloadTarget.EOA_TO_EOA, fork, **common)
    if strategy is StrategyKind.TX_PAYLOAD_FALLBACK:
        return estimate_tx_payload(data, PayloadTarget.EOA_TO_CONTRACT, fork, **common)
    if strategy is StrategyKind.UNUSED_PARAM_PLAIN:
        return estimate_unused_param([BytesVal(data)], False, fork, **common)
    if strategy is StrategyKind.UNUSED_PARAM_WITH_EVENT:
        return estimate_unused_param([BytesVal(data)], True, fork, **common)
    if strategy is StrategyKind.HYBRID_SWARM:
        return estimate_hybrid(
            data, HybridPlatform.SWARM, AnchorKind.SC_STORAGE, fork, **common
        )
    if strategy is StrategyKind.HYBRID_IPFS:
        return estimate_hybrid(
            data, HybridPlatform.IPFS_CID_V0, AnchorKind.SC_STORAGE, fork, **common
        )
    raise ValueError(f"unhandled strategy {strategy}")


def compare(
    data_sizes: Sequence[int],
    strategies: Sequence[StrategyKind],
    fork: Fork,
    *,
    make_data=None,
    execution_overhead: int = 0,
    block_gas_limit: int = BLOCK_GAS_LIMIT,
) -> ComparisonReport:
    """Estimate every (strategy, size) cell.

    Output order is deterministic: strategies in declaration order, sizes
    ascending. make_data turns a size into concrete bytes and defaults to a
    printable repeating pattern.
    """
    if make_data is None:
        make_data = lambda n: bytes(33 + i % 94 for i in range(n))
    sizes = sorted(set(data_sizes))
    if sizes and sizes[0] < 1:
        raise ValueError("comparison sizes start at one byte")
    ordered = sorted(set(strategies), key=_STRATEGY_ORDER.__getitem__)
    estimates = []
    for strategy in ordered:
        for size in sizes:
            estimates.append(
                run_strategy(
                    strategy, make_data(size), fork,
                    execution_overhead=execution_overhead,
                    block_gas_limit=block_gas_limit,
                )
            )
    return ComparisonReport(
        fork=fork,
        sizes=tuple(sizes),
        strategies=tuple(ordered),
        estimates=tuple(estimates),
    )
