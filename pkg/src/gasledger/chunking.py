"""Content-addressed chunking: BMT addresses, Merkle-DAG roots, CIDs.

Two chunker families are modeled. The 4 KB family pads each chunk to a fixed
size, hashes its 128 segments up a binary keccak256 tree, and prefixes an
8-byte little-endian span before the final hash; intermediate nodes pack
child references and are addressed the same way. The 256 KB family hashes
raw chunk bytes with sha2-256 and wraps the root digest in a CID.

Tree building is the hot path here: a 16 MB input needs half a million
keccak256 calls, so whole levels are hashed as one batch.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
import hashlib

import numpy as np

from .errors import BadDigestLength, ChunkTooLarge
from .keccak import keccak256, keccak256_fixed

BMT_CHUNK = 4096
BMT_SEGMENT = 32
SPAN_BYTES = 8

SHA2_256_CODE = 0x12
DIGEST_LENGTH = 32
RAW_CODEC = 0x55
DAG_PB_CODEC = 0x70

_B58_ALPHABET = "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz"


class Platform(Enum):
    SWARM = "swarm"
    SWARM_ENCRYPTED = "swarm-encrypted"
    IPFS = "ipfs"


@dataclass(frozen=True)
class ChunkerConfig:
    chunk_size: int
    fanout: int

    def __post_init__(self) -> None:
        if self.chunk_size < 1:
            raise ValueError(f"chunk_size must be positive, got {self.chunk_size}")
        if self.fanout < 2:
            raise ValueError(f"fanout below 2 cannot form a tree, got {self.fanout}")


SWARM_CONFIG = ChunkerConfig(chunk_size=BMT_CHUNK, fanout=128)
IPFS_CONFIG = ChunkerConfig(chunk_size=262144, fanout=174)


def default_config(platform: Platform) -> ChunkerConfig:
    return IPFS_CONFIG if platform is Platform.IPFS else SWARM_CONFIG


@dataclass(frozen=True)
class ChunkTree:
    platform: Platform
    data_length: int
    chunk_count: int
    node_count: int
    depth: int
    root_id: bytes


def split(data: bytes, cfg: ChunkerConfig) -> list:
    """Cut data into chunk_size pieces; empty input is one empty chunk."""
    if not data:
        return [b""]
    return [data[i : i + cfg.chunk_size] for i in range(0, len(data), cfg.chunk_size)]


def _padded_rows(data: bytes, width: int, row_length: int) -> np.ndarray:
    """View data as rows of row_length bytes inside zero-padded width-wide rows."""
    count = max(1, -(-len(data) // row_length))
    rows = np.zeros((count, width), dtype=np.uint8)
    flat = np.frombuffer(data, dtype=np.uint8)
    full = len(data) // row_length
    if full:
        rows[:full, :row_length] = flat[: full * row_length].reshape(full, row_length)
    rem = len(data) - full * row_length
    if rem:
        rows[full, :rem] = flat[full * row_length :]
    return rows


def _bmt_batch(payloads: np.ndarray, spans: np.ndarray) -> np.ndarray:
    """Addresses for payload rows already padded to the fixed chunk size."""
    level = payloads
    while level.shape[1] > BMT_SEGMENT:
        pairs = level.reshape(-1, 2 * BMT_SEGMENT)
        level = keccak256_fixed(pairs).reshape(level.shape[0], -1)
    prefixed = np.empty((level.shape[0], SPAN_BYTES + BMT_SEGMENT), dtype=np.uint8)
    prefixed[:, :SPAN_BYTES] = spans.astype("<u8").reshape(-1, 1).view(np.uint8)
    prefixed[:, SPAN_BYTES:] = level
    return keccak256_fixed(prefixed)


def bmt_address(chunk: bytes, span: int) -> bytes:
    """Address of one chunk: segment tree root hashed with its span prefix."""
    if len(chunk) > BMT_CHUNK:
        raise ChunkTooLarge(f"chunk is {len(chunk)} bytes, the tree covers {BMT_CHUNK}")
    padded = np.zeros((1, BMT_CHUNK), dtype=np.uint8)
    if chunk:
        padded[0, : len(chunk)] = np.frombuffer(chunk, dtype=np.uint8)
    return _bmt_batch(padded, np.array([span], dtype="<u8"))[0].tobytes()


def _swarm_levels(data: bytes, cfg: ChunkerConfig):
    """Hash leaves then fold reference levels until one root remains."""
    if cfg.chunk_size > BMT_CHUNK:
        raise ChunkTooLarge(
            f"chunk_size {cfg.chunk_size} exceeds the {BMT_CHUNK}-byte segment tree"
        )
    if cfg.fanout * BMT_SEGMENT > BMT_CHUNK:
        raise ChunkTooLarge(
            f"fanout {cfg.fanout} packs more references than one node holds"
        )
    leaves = _padded_rows(data, BMT_CHUNK, cfg.chunk_size)
    count = leaves.shape[0]
    spans = np.full(count, cfg.chunk_size, dtype="<u8")
    if len(data) % cfg.chunk_size or not data:
        spans[-1] = len(data) - (count - 1) * cfg.chunk_size
    refs = _bmt_batch(leaves, spans)

    chunk_count = count
    node_count = count
    depth = 1
    while count > 1:
        groups = -(-count // cfg.fanout)
        packed = np.zeros((groups * cfg.fanout, BMT_SEGMENT), dtype=np.uint8)
        packed[:count] = refs
        payloads = np.zeros((groups, BMT_CHUNK), dtype=np.uint8)
        payloads[:, : cfg.fanout * BMT_SEGMENT] = packed.reshape(groups, -1)
        spans = np.add.reduceat(spans, np.arange(0, count, cfg.fanout))
        refs = _bmt_batch(payloads, spans)
        count = groups
        node_count += count
        depth += 1
    return refs[0].tobytes(), chunk_count, node_count, depth


def _ipfs_levels(data: bytes, cfg: ChunkerConfig):
    """sha2-256 leaves folded fanout-at-a-time into parent digests."""
    digests = [hashlib.sha256(c).digest() for c in split(data, cfg)]
    chunk_count = len(digests)
    node_count = chunk_count
    depth = 1
    while len(digests) > 1:
        digests = [
            hashlib.sha256(b"".join(digests[i : i + cfg.fanout])).digest()
            for i in range(0, len(digests), cfg.fanout)
        ]
        node_count += len(digests)
        depth += 1
    return digests[0], chunk_count, node_count, depth


@lru_cache(maxsize=8)
def _tree_cached(data: bytes, platform: Platform, chunk_size: int, fanout: int):
    cfg = ChunkerConfig(chunk_size, fanout)
    if platform is Platform.IPFS:
        return _ipfs_levels(data, cfg)
    if platform is Platform.SWARM_ENCRYPTED:
        # Decryption key stands in for real encryption; only the doubled
        # reference length matters to the cost model.
        root, chunks, nodes, depth = _tree_cached(data, Platform.SWARM, chunk_size, fanout)
        return root + keccak256(root), chunks, nodes, depth
    return _swarm_levels(data, cfg)


def build_tree(data: bytes, platform: Platform, cfg: ChunkerConfig = None) -> ChunkTree:
    if cfg is None:
        cfg = default_config(platform)
    root, chunks, nodes, depth = _tree_cached(bytes(data), platform, cfg.chunk_size, cfg.fanout)
    return ChunkTree(
        platform=platform,
        data_length=len(data),
        chunk_count=chunks,
        node_count=nodes,
        depth=depth,
        root_id=root,
    )


def _base58btc(data: bytes) -> str:
    """Leading zero bytes become '1'; the rest is long division by 58."""
    pad = 0
    for byte in data:
        if byte:
            break
        pad += 1
    digits = []
    for byte in data[pad:]:
        carry = byte
        for i, digit in enumerate(digits):
            carry += digit << 8
            digits[i] = carry % 58
            carry //= 58
        while carry:
            digits.append(carry % 58)
            carry //= 58
    return "1" * pad + "".join(_B58_ALPHABET[d] for d in reversed(digits))


def _base32_lower(data: bytes) -> str:
    return base64.b32encode(data).decode("ascii").lower().rstrip("=")


@dataclass(frozen=True)
class Cid:
    version: int
    codec: int
    hash_fn: int
    digest: bytes

    def binary(self) -> bytes:
        if self.version == 0:
            return bytes([self.hash_fn, len(self.digest)]) + self.digest
        return bytes([self.version, self.codec, self.hash_fn, len(self.digest)]) + self.digest

    def text(self) -> str:
        if self.version == 0:
            return _base58btc(self.binary())
        return "b" + _base32_lower(self.binary())


def make_cid(digest: bytes, version: int = 0) -> Cid:
    if len(digest) != DIGEST_LENGTH:
        raise BadDigestLength(f"need a {DIGEST_LENGTH}-byte digest, got {len(digest)}")
    if version not in (0, 1):
        raise ValueError(f"CID version must be 0 or 1, got {version}")
    codec = DAG_PB_CODEC if version == 0 else RAW_CODEC
    return Cid(version=version, codec=codec, hash_fn=SHA2_256_CODE, digest=bytes(digest))


def identifier_bytes(tree: ChunkTree, cid_version: int = 0) -> bytes:
    """The exact bytes a contract would anchor for this tree's root."""
    if tree.platform is Platform.IPFS:
        return make_cid(tree.root_id, cid_version).binary()
    return tree.root_id


def identifier_text(tree: ChunkTree, cid_version: int = 0) -> str:
    """Display form: hex for addresses, multibase for CIDs."""
    if tree.platform is Platform.IPFS:
        return make_cid(tree.root_id, cid_version).text()
    return tree.root_id.hex()
