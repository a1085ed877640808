"""Pure-numpy keccak backend: the permutation is vectorized across sponge
instances, so hashing N independent single-block messages is one pass of
array-wide bitwise ops per round instead of N scalar permutations."""

import numpy as np

from ._keccak_tables import PI_DST, RC, ROT

_ROT_L = ROT[:, np.newaxis]
_ROT_R = ((np.uint64(64) - ROT) % np.uint64(64))[:, np.newaxis]
_ONE = np.uint64(1)
_SIXTY_THREE = np.uint64(63)


def permute(state: np.ndarray) -> None:
    """Apply keccak-f[1600] in place to `state`, shaped (25, n) uint64."""
    s = state
    for rc in RC:
        grid = s.reshape(5, 5, -1)  # indexed [y, x, instance]
        c = np.bitwise_xor.reduce(grid, axis=0)
        rot1 = (np.roll(c, -1, axis=0) << _ONE) | (np.roll(c, -1, axis=0) >> _SIXTY_THREE)
        d = np.roll(c, 1, axis=0) ^ rot1
        grid ^= d[np.newaxis, :, :]

        b = np.empty_like(s)
        b[PI_DST] = (s << _ROT_L) | (s >> _ROT_R)

        bg = b.reshape(5, 5, -1)
        s[:] = (bg ^ (~np.roll(bg, -1, axis=1) & np.roll(bg, -2, axis=1))).reshape(25, -1)
        s[0] ^= rc


def hash_blocks(blocks: np.ndarray) -> np.ndarray:
    """keccak-256 of n pre-padded rate-size blocks, (n, 136) uint8 -> (n, 32) uint8."""
    n = blocks.shape[0]
    lanes = np.ascontiguousarray(blocks).view("<u8")  # (n, 17)
    state = np.zeros((25, n), dtype=np.uint64)
    state[:17] = lanes.T
    permute(state)
    return np.ascontiguousarray(state[:4].T).view(np.uint8).reshape(n, 32)
