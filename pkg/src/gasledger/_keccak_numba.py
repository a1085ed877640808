"""Numba keccak backend: one jitted loop over sponge instances with the
whole permutation inlined. First call pays the JIT compile (cached on disk)."""

import numpy as np
from numba import njit

from ._keccak_tables import PI_DST, RC, ROT

_U64 = np.uint64


@njit(cache=True)
def _hash_blocks_lanes(lanes, out):
    """lanes: (n, 17) uint64 absorbed blocks; out: (n, 4) uint64 digests."""
    a = np.empty(25, _U64)
    b = np.empty(25, _U64)
    c = np.empty(5, _U64)
    d = np.empty(5, _U64)
    for row in range(lanes.shape[0]):
        for i in range(25):
            a[i] = _U64(0)
        for i in range(17):
            a[i] = lanes[row, i]
        for rnd in range(24):
            for x in range(5):
                c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20]
            for x in range(5):
                t = c[(x + 1) % 5]
                d[x] = c[(x + 4) % 5] ^ ((t << _U64(1)) | (t >> _U64(63)))
            for i in range(25):
                a[i] ^= d[i % 5]
            for i in range(25):
                r = ROT[i]
                v = a[i]
                if r:
                    v = (v << r) | (v >> (_U64(64) - r))
                b[PI_DST[i]] = v
            for y in range(0, 25, 5):
                for x in range(5):
                    a[y + x] = b[y + x] ^ (~b[y + (x + 1) % 5] & b[y + (x + 2) % 5])
            a[0] ^= RC[rnd]
        for i in range(4):
            out[row, i] = a[i]


def hash_blocks(blocks: np.ndarray) -> np.ndarray:
    """keccak-256 of n pre-padded rate-size blocks, (n, 136) uint8 -> (n, 32) uint8."""
    n = blocks.shape[0]
    lanes = np.ascontiguousarray(blocks).view("<u8")
    out = np.empty((n, 4), dtype=np.uint64)
    _hash_blocks_lanes(lanes, out)
    return out.view(np.uint8).reshape(n, 32)
