"""keccak-256 front end.

Two call patterns with different performance profiles:

* ``keccak256(data)``: one message of any length. Runs on the numpy
  permutation unconditionally; the inputs on this path (selectors, slot
  addresses, key derivation) are tiny and JIT warm-up would dominate.
* ``keccak256_fixed(msgs)``: a batch of equal-length single-block
  messages. This is the hot path of BMT tree hashing and dispatches to the
  numba kernel, or to the vectorized numpy kernel when ``GASLEDGER_BACKEND``
  is set to ``numpy`` (or numba is not importable).
"""

from __future__ import annotations

import os

import numpy as np

from . import _keccak_numpy

RATE = 136

_batch_backend = None
_batch_hash = None


def _resolve_backend():
    global _batch_backend, _batch_hash
    if _batch_hash is not None:
        return
    requested = os.environ.get("GASLEDGER_BACKEND", "").strip().lower()
    if requested not in ("", "numba", "numpy"):
        raise ValueError(f"GASLEDGER_BACKEND must be 'numba' or 'numpy', not {requested!r}")
    if requested == "numpy":
        _batch_backend, _batch_hash = "numpy", _keccak_numpy.hash_blocks
        return
    try:
        from . import _keccak_numba
    except ImportError:
        if requested == "numba":
            raise RuntimeError("GASLEDGER_BACKEND=numba but numba is not installed")
        _batch_backend, _batch_hash = "numpy", _keccak_numpy.hash_blocks
        return
    _batch_backend, _batch_hash = "numba", _keccak_numba.hash_blocks


def set_backend(name: str | None) -> None:
    """Force the batch backend ('numba' or 'numpy'); None re-reads the env."""
    global _batch_backend, _batch_hash
    _batch_backend = _batch_hash = None
    if name is None:
        os.environ.pop("GASLEDGER_BACKEND", None)
    else:
        os.environ["GASLEDGER_BACKEND"] = name
    _resolve_backend()


def active_backend() -> str:
    _resolve_backend()
    return _batch_backend


def pad_message(data: bytes) -> bytes:
    """Multi-rate 0x01...0x80 padding to a whole number of rate blocks."""
    padded = bytearray(data)
    padded.append(0x01)
    padded.extend(b"\x00" * (-len(padded) % RATE))
    padded[-1] |= 0x80
    return bytes(padded)


def keccak256(data: bytes) -> bytes:
    """keccak-256 of a single message of arbitrary length."""
    padded = np.frombuffer(pad_message(data), dtype=np.uint8)
    lanes = padded.view("<u8").reshape(-1, 17)
    state = np.zeros((25, 1), dtype=np.uint64)
    for block in lanes:
        state[:17, 0] ^= block
        _keccak_numpy.permute(state)
    return np.ascontiguousarray(state[:4, 0]).view(np.uint8).tobytes()


def keccak256_fixed(msgs: np.ndarray) -> np.ndarray:
    """keccak-256 of n equal-length messages, (n, length) uint8 -> (n, 32) uint8.

    length must fit a single sponge block (at most 135 bytes).
    """
    _resolve_backend()
    n, length = msgs.shape
    if length > RATE - 1:
        raise ValueError(f"message length {length} does not fit one {RATE}-byte block")
    blocks = np.zeros((n, RATE), dtype=np.uint8)
    blocks[:, :length] = msgs
    blocks[:, length] ^= 0x01
    blocks[:, RATE - 1] ^= 0x80
    return _batch_hash(blocks)
