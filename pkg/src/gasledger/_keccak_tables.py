"""Shared constant tables for the keccak-f[1600] kernels.

Lane (x, y) lives at flat index 5*y + x, matching the little-endian byte
layout of the sponge state. ROT and RC are the published tables; the test
suite cross-checks them against an oracle that derives both from scratch.
"""

import numpy as np

# Rotation offsets r[x][y], flattened to index 5*y + x.
ROT = np.array(
    [
        0, 1, 62, 28, 27,
        36, 44, 6, 55, 20,
        3, 10, 43, 25, 39,
        41, 45, 15, 21, 8,
        18, 2, 61, 56, 14,
    ],
    dtype=np.uint64,
)

# Round constants for the 24 rounds.
RC = np.array(
    [
        0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
        0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
        0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
        0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
        0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
        0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
    ],
    dtype=np.uint64,
)


def _pi_destinations() -> np.ndarray:
    # pi moves lane (x, y) to (y, (2x + 3y) mod 5)
    dst = np.empty(25, dtype=np.int64)
    for y in range(5):
        for x in range(5):
            dst[5 * y + x] = 5 * ((2 * x + 3 * y) % 5) + y
    return dst


PI_DST = _pi_destinations()
