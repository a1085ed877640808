"""Reference keccak-256, used only as a test oracle.

Deliberately independent of the package implementation: the state is a 5x5
matrix of Python ints, the round constants come from the degree-8 LFSR and
the rotation offsets from the (t+1)(t+2)/2 walk, so a transcription error in
the package's precomputed tables cannot go unnoticed here.
"""

_MASK = (1 << 64) - 1


def _rotl(value: int, shift: int) -> int:
    shift %= 64
    if shift == 0:
        return value
    return ((value << shift) | (value >> (64 - shift))) & _MASK


def _rc(t: int) -> int:
    """Output bit of the rc LFSR after t steps."""
    r = 1
    for _ in range(t % 255):
        r <<= 1
        if r & 0x100:
            r ^= 0x171
    return r & 1


def _round_constant(round_index: int) -> int:
    rc = 0
    for j in range(7):
        if _rc(j + 7 * round_index):
            rc |= 1 << (2**j - 1)
    return rc


def _rotation_offsets() -> dict:
    offsets = {(0, 0): 0}
    x, y = 1, 0
    for t in range(24):
        offsets[(x, y)] = ((t + 1) * (t + 2) // 2) % 64
        x, y = y, (2 * x + 3 * y) % 5
    return offsets


_OFFSETS = _rotation_offsets()
_ROUND_CONSTANTS = [_round_constant(i) for i in range(24)]


def _keccak_f1600(a: list) -> None:
    """Permute the 5x5 lane matrix a[x][y] in place."""
    for rc in _ROUND_CONSTANTS:
        # theta
        c = [a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl(c[(x + 1) % 5], 1) for x in range(5)]
        for x in range(5):
            for y in range(5):
                a[x][y] ^= d[x]
        # rho + pi
        b = [[0] * 5 for _ in range(5)]
        for x in range(5):
            for y in range(5):
                b[y][(2 * x + 3 * y) % 5] = _rotl(a[x][y], _OFFSETS[(x, y)])
        # chi
        for x in range(5):
            for y in range(5):
                a[x][y] = b[x][y] ^ ((~b[(x + 1) % 5][y] & _MASK) & b[(x + 2) % 5][y])
        # iota
        a[0][0] ^= rc


def keccak256(data: bytes) -> bytes:
    """keccak-256 with the original 0x01 multi-rate padding (not NIST SHA3)."""
    rate = 136
    padded = bytearray(data)
    padded.append(0x01)
    while len(padded) % rate:
        padded.append(0x00)
    padded[-1] |= 0x80

    a = [[0] * 5 for _ in range(5)]
    for block_start in range(0, len(padded), rate):
        for i in range(rate // 8):
            lane = int.from_bytes(padded[block_start + 8 * i : block_start + 8 * i + 8], "little")
            a[i % 5][i // 5] ^= lane
        _keccak_f1600(a)

    out = bytearray()
    for i in range(4):
        out += a[i % 5][i // 5].to_bytes(8, "little")
    return bytes(out)
