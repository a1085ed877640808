"""Command-line front end.

Subcommands: estimate, compare, layout, encode, chunk. Input is either a
file or a synthesized byte string (--size with --fill). Exit codes: 0 ok,
1 usage, 2 input/output, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .abi import intrinsic_gas, payload_stats
from .chunking import (
    ChunkerConfig,
    Platform,
    build_tree,
    default_config,
    identifier_bytes,
    identifier_text,
)
from .errors import GasledgerError
from .estimators import (
    CSV_HEADER,
    Estimate,
    StrategyKind,
    compare,
    estimate_as_dict,
    run_strategy,
    SETTER,
    setter_payload,
)
from .schedule import BLOCK_GAS_LIMIT, Fork, schedule_for
from .storage_layout import layout_dynamic

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DOMAIN = 3

FORK_ENV = "GASLEDGER_FORK"
DEFAULT_SIZES = "1b..12kb:14"

_SUFFIX = {"": 1, "b": 1, "kb": 1024, "mb": 1024 * 1024}

# Accepted spellings for --method, beyond the canonical strategy names.
_METHOD_ALIASES = {
    "tx-payload": StrategyKind.TX_PAYLOAD_EOA_TO_EOA,
}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; this tool reserves 2 for I/O."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_size(text: str) -> int:
    body = text.strip().lower()
    suffix = ""
    for candidate in ("kb", "mb", "b"):
        if body.endswith(candidate):
            body, suffix = body[: -len(candidate)], candidate
            break
    if not body.isdigit():
        raise argparse.ArgumentTypeError(f"bad size {text!r} (digits with b/kb/mb suffix)")
    return int(body) * _SUFFIX[suffix]


def size_grid(lo: int, hi: int, count: int) -> list:
    """count sizes equally spaced over [lo, hi], endpoints included."""
    if count < 1:
        raise argparse.ArgumentTypeError("size count must be at least 1")
    if lo > hi:
        raise argparse.ArgumentTypeError("size range must not be descending")
    if count == 1:
        return [lo]
    return [round(lo + i * (hi - lo) / (count - 1)) for i in range(count)]


def parse_sizes(text: str) -> list:
    """`A..B:N` for an N-point grid, or comma-separated explicit sizes."""
    if ".." in text:
        span, _, count = text.partition(":")
        if not count:
            raise argparse.ArgumentTypeError(f"range {text!r} needs a :N point count")
        lo, _, hi = span.partition("..")
        if not count.isdigit():
            raise argparse.ArgumentTypeError(f"bad point count {count!r}")
        return size_grid(parse_size(lo), parse_size(hi), int(count))
    return [parse_size(part) for part in text.split(",")]


def parse_fill(text: str):
    kind, _, seed = text.partition(":")
    if kind not in ("ascii", "zero", "random"):
        raise argparse.ArgumentTypeError(f"fill must be ascii, zero, or random:SEED, not {text!r}")
    if kind == "random":
        if not seed.lstrip("-").isdigit():
            raise argparse.ArgumentTypeError("random fill needs an integer seed (random:SEED)")
        return kind, int(seed)
    if seed:
        raise argparse.ArgumentTypeError(f"{kind} fill takes no seed")
    return kind, None


def parse_method(text: str) -> StrategyKind:
    if text in _METHOD_ALIASES:
        return _METHOD_ALIASES[text]
    try:
        return StrategyKind(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown method {text!r}") from None


def parse_strategies(text: str) -> list:
    return [parse_method(part.strip()) for part in text.split(",")]


def synthesize_input(size: int, fill: str = "ascii", seed=None) -> bytes:
    """Deterministic test payloads: printable ASCII, all-zero, or seeded random."""
    if size < 0:
        raise ValueError("size cannot be negative")
    if fill == "ascii":
        return (33 + np.arange(size, dtype=np.int64) % 94).astype(np.uint8).tobytes()
    if fill == "zero":
        return bytes(size)
    if fill == "random":
        if seed is None:
            raise ValueError("random fill needs a seed")
        rng = np.random.default_rng(seed)
        return rng.integers(0, 256, size=size, dtype=np.uint8, endpoint=False).tobytes()
    raise ValueError(f"unknown fill {fill!r}")


def _resolve_fork(value) -> Fork:
    if value is None:
        value = os.environ.get(FORK_ENV) or Fork.BERLIN.value
    try:
        return Fork(value)
    except ValueError:
        names = ", ".join(f.value for f in Fork)
        raise GasledgerError(f"fork must be one of {names}, not {value!r}") from None


def _load_data(args) -> bytes:
    if getattr(args, "input", None) is not None:
        with open(args.input, "rb") as handle:
            return handle.read()
    fill, seed = args.fill
    return synthesize_input(args.size, fill, seed)


def _print_table(pairs) -> None:
    width = max(len(label) for label, _ in pairs)
    for label, value in pairs:
        print(f"{label.ljust(width)}  {value}")


def _estimate_pairs(est: Estimate) -> list:
    pairs = [
        ("strategy", est.strategy.value),
        ("fork", est.fork.value),
        ("size_bytes", est.data_size),
    ]
    pairs += [(f"  {label}", gas) for label, gas in est.breakdown]
    pairs += [
        ("gas_total", est.gas_total),
        ("refund", est.refund),
        ("net_gas", est.net_gas),
        ("exceeds_block_limit", "true" if est.exceeds_block_limit else "false"),
    ]
    if est.offchain:
        pairs += [(f"  offchain.{key}", value) for key, value in est.offchain.items()]
    return pairs


def _estimate_csv(estimates) -> str:
    lines = [CSV_HEADER]
    for est in estimates:
        lines.append(
            f"{est.strategy.value},{est.fork.value},{est.data_size},"
            f"{est.gas_total},{est.refund},"
            f"{'true' if est.exceeds_block_limit else 'false'}"
        )
    return "\n".join(lines) + "\n"


def _cmd_estimate(args) -> int:
    fork = _resolve_fork(args.fork)
    data = _load_data(args)
    est = run_strategy(
        args.method, data, fork,
        execution_overhead=args.execution_overhead,
        block_gas_limit=args.block_gas_limit,
    )
    if args.format == "json":
        print(json.dumps(estimate_as_dict(est), indent=2))
    elif args.format == "csv":
        print(_estimate_csv([est]), end="")
    else:
        _print_table(_estimate_pairs(est))
    return EXIT_OK


def _cmd_compare(args) -> int:
    fork = _resolve_fork(args.fork)
    fill, seed = args.fill
    report = compare(
        args.sizes,
        args.strategies,
        fork,
        make_data=lambda n: synthesize_input(n, fill, seed),
        execution_overhead=args.execution_overhead,
        block_gas_limit=args.block_gas_limit,
    )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        rows = [("strategy", "size_bytes", "gas_total", "exceeds")]
        for est in report.estimates:
            rows.append(
                (
                    est.strategy.value,
                    str(est.data_size),
                    str(est.gas_total),
                    "true" if est.exceeds_block_limit else "false",
                )
            )
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        for row in rows:
            print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)))
    return EXIT_OK


def _cmd_layout(args) -> int:
    data = _load_data(args)
    plan = layout_dynamic(args.base_slot, len(data))
    fields = {
        "byte_length": plan.byte_length,
        "base_slot": plan.base_slot,
        "in_place": plan.in_place,
        "length_slot": None if plan.in_place else plan.length_slot,
        "data_slot_count": len(plan.data_slots),
        "first_data_slot": hex(plan.data_slots[0]) if plan.data_slots else None,
        "touched_slot_count": len(plan.touched_slots),
    }
    if args.format == "json":
        print(json.dumps(fields, indent=2))
    else:
        _print_table([(k, "null" if v is None else v) for k, v in fields.items()])
    return EXIT_OK


def _cmd_encode(args) -> int:
    fork = _resolve_fork(args.fork)
    data = _load_data(args)
    payload = setter_payload(data)
    stats = payload_stats(payload)
    fields = {
        "signature": SETTER.canonical(),
        "selector": SETTER.selector().hex(),
        "payload_bytes": stats.total_bytes,
        "zero_bytes": stats.zero_bytes,
        "nonzero_bytes": stats.nonzero_bytes,
        "intrinsic_gas": intrinsic_gas(payload, schedule_for(fork)),
        "fork": fork.value,
        "payload": payload.hex(),
    }
    if args.format == "json":
        print(json.dumps(fields, indent=2))
    else:
        shown = dict(fields)
        if len(shown["payload"]) > 64:
            shown["payload"] = shown["payload"][:64] + f"... ({stats.total_bytes} bytes)"
        _print_table(list(shown.items()))
    return EXIT_OK


def _cmd_chunk(args) -> int:
    data = _load_data(args)
    platform = Platform(args.platform)
    cfg = None
    if args.chunk_size is not None or args.fanout is not None:
        base = default_config(platform)
        cfg = ChunkerConfig(
            args.chunk_size if args.chunk_size is not None else base.chunk_size,
            args.fanout if args.fanout is not None else base.fanout,
        )
    tree = build_tree(data, platform, cfg)
    ident = identifier_bytes(tree, args.cid_version)
    fields = {
        "platform": platform.value,
        "data_bytes": tree.data_length,
        "chunk_count": tree.chunk_count,
        "node_count": tree.node_count,
        "depth": tree.depth,
        "identifier_length": len(ident),
        "identifier_hex": ident.hex(),
        "identifier": identifier_text(tree, args.cid_version),
    }
    if args.format == "json":
        print(json.dumps(fields, indent=2))
    else:
        _print_table(list(fields.items()))
    return EXIT_OK


def _add_input_source(sub, required: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--size", type=parse_size, help="synthesize SIZE bytes (b/kb/mb suffix)")
    group.add_argument("--input", metavar="FILE", help="read bytes from FILE")
    sub.add_argument(
        "--fill", type=parse_fill, default=("ascii", None),
        help="pattern for --size: ascii, zero, or random:SEED (default ascii)",
    )


def _add_common(sub, with_fork: bool = True) -> None:
    if with_fork:
        sub.add_argument(
            "--fork", choices=[f.value for f in Fork], default=None,
            help=f"gas schedule (default: ${FORK_ENV} or berlin)",
        )
    sub.add_argument(
        "--format", choices=["table", "json", "csv"], default="table",
        help="output format (default table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gasledger", description=__doc__)
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)

    est = commands.add_parser("estimate", help="gas for one strategy on one input")
    est.add_argument("--method", type=parse_method, required=True,
                     help="strategy name, e.g. tx-payload or sc-store-clean")
    _add_input_source(est)
    _add_common(est)
    est.add_argument("--block-gas-limit", type=int, default=BLOCK_GAS_LIMIT)
    est.add_argument("--execution-overhead", type=int, default=0,
                     help="calibration constant added to every estimate")
    est.set_defaults(func=_cmd_estimate)

    cmp_ = commands.add_parser("compare", help="strategy matrix over a size grid")
    cmp_.add_argument("--sizes", type=parse_sizes, default=parse_sizes(DEFAULT_SIZES),
                      help=f"A..B:N grid or comma list (default {DEFAULT_SIZES})")
    cmp_.add_argument("--strategies", type=parse_strategies,
                      default=list(StrategyKind),
                      help="comma-separated strategy names (default: all)")
    cmp_.add_argument("--fill", type=parse_fill, default=("ascii", None))
    _add_common(cmp_)
    cmp_.add_argument("--block-gas-limit", type=int, default=BLOCK_GAS_LIMIT)
    cmp_.add_argument("--execution-overhead", type=int, default=0)
    cmp_.set_defaults(func=_cmd_compare)

    lay = commands.add_parser("layout", help="storage slots a value occupies")
    _add_input_source(lay)
    lay.add_argument("--base-slot", type=int, default=0)
    _add_common(lay, with_fork=False)
    lay.set_defaults(func=_cmd_layout)

    enc = commands.add_parser("encode", help="setter call payload for the input")
    _add_input_source(enc)
    _add_common(enc)
    enc.set_defaults(func=_cmd_encode)

    chk = commands.add_parser("chunk", help="content-address the input off-chain")
    _add_input_source(chk)
    chk.add_argument("--platform", choices=[p.value for p in Platform], default="swarm")
    chk.add_argument("--cid-version", type=int, choices=[0, 1], default=0)
    chk.add_argument("--chunk-size", type=parse_size, default=None)
    chk.add_argument("--fanout", type=int, default=None)
    _add_common(chk, with_fork=False)
    chk.set_defaults(func=_cmd_chunk)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except OSError as exc:
        print(f"gasledger: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GasledgerError, ValueError) as exc:
        print(f"gasledger: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
