"""Chunkers, tree shapes, and identifier forms."""

import hashlib
import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import content_ref
import keccak_ref
from gasledger.chunking import (
    BMT_CHUNK,
    ChunkerConfig,
    IPFS_CONFIG,
    Platform,
    SWARM_CONFIG,
    bmt_address,
    build_tree,
    identifier_bytes,
    identifier_text,
    make_cid,
    split,
)
from gasledger.errors import BadDigestLength, ChunkTooLarge

FIXTURES = Path(__file__).parent / "fixtures"


def _ascii(n: int) -> bytes:
    return bytes(33 + i % 94 for i in range(n))


def _counted_levels(chunks: int, fanout: int):
    depth, nodes, level = 1, chunks, chunks
    while level > 1:
        level = -(-level // fanout)
        nodes += level
        depth += 1
    return depth, nodes


def test_split_counts_match_the_size_ratio():
    assert len(split(b"\x01" * 262144, IPFS_CONFIG)) == 1
    assert len(split(b"\x01" * 262144, SWARM_CONFIG)) == 64
    assert len(split(b"\x01", SWARM_CONFIG)) == 1


def test_split_preserves_order_and_content():
    data = _ascii(10_000)
    chunks = split(data, SWARM_CONFIG)
    assert all(len(c) == 4096 for c in chunks[:-1])
    assert b"".join(chunks) == data


def test_empty_input_is_one_empty_chunk():
    assert split(b"", SWARM_CONFIG) == [b""]
    tree = build_tree(b"", Platform.SWARM)
    assert (tree.chunk_count, tree.node_count, tree.depth) == (1, 1, 1)
    assert tree.root_id == content_ref.bmt_address(b"", 0)


def test_chunk_address_fixtures():
    doc = json.loads((FIXTURES / "bmt_vectors.json").read_text())
    assert len(doc["addresses"]) >= 5
    lengths = {len(vec["chunk"]) // 2 for vec in doc["addresses"]}
    assert 0 in lengths and 1 in lengths
    for vec in doc["addresses"]:
        got = bmt_address(bytes.fromhex(vec["chunk"]), vec["span"])
        assert got.hex() == vec["address"]


def test_chunk_addressing_is_deterministic_and_content_sensitive():
    chunk = _ascii(1000)
    assert bmt_address(chunk, 1000) == bmt_address(bytes(chunk), 1000)
    tweaked = bytearray(chunk)
    tweaked[500] ^= 1
    assert bmt_address(bytes(tweaked), 1000) != bmt_address(chunk, 1000)


def test_span_prefix_reaches_the_address():
    chunk = _ascii(64)
    assert bmt_address(chunk, 64) != bmt_address(chunk, 65)


def test_oversized_chunk_is_rejected():
    with pytest.raises(ChunkTooLarge):
        bmt_address(bytes(BMT_CHUNK + 1), BMT_CHUNK + 1)


def test_tree_root_fixtures():
    doc = json.loads((FIXTURES / "bmt_vectors.json").read_text())
    for vec in doc["roots"]:
        tree = build_tree(_ascii(vec["data_len"]), Platform.SWARM)
        assert tree.root_id.hex() == vec["root"]


def test_tree_root_matches_reference_on_fresh_input():
    data = bytes((7 * i + 3) % 256 for i in range(5000))
    tree = build_tree(data, Platform.SWARM)
    assert tree.root_id == content_ref.swarm_root(data)


def test_single_chunk_root_is_the_chunk_address():
    data = _ascii(100)
    tree = build_tree(data, Platform.SWARM)
    assert tree.depth == 1
    assert tree.root_id == bmt_address(data, 100)


def test_tree_counts_sixteen_megabytes():
    tree = build_tree(_ascii(16 * 1024 * 1024), Platform.SWARM)
    assert (tree.chunk_count, tree.depth) == (4096, 3)
    assert tree.node_count == 4096 + 32 + 1
    ipfs = build_tree(_ascii(16 * 1024 * 1024), Platform.IPFS)
    assert (ipfs.chunk_count, ipfs.depth, ipfs.node_count) == (64, 2, 65)


def test_tree_shape_matches_the_level_oracle():
    for size in (1, 4096, 4097, 40_000, 600_000):
        for platform, cfg in ((Platform.SWARM, SWARM_CONFIG), (Platform.IPFS, IPFS_CONFIG)):
            tree = build_tree(_ascii(size), platform, cfg)
            assert tree.chunk_count == -(-size // cfg.chunk_size)
            depth, nodes = _counted_levels(tree.chunk_count, cfg.fanout)
            assert (tree.depth, tree.node_count) == (depth, nodes)


def test_smaller_chunks_never_shrink_the_tree():
    data = _ascii(300_000)
    coarse = build_tree(data, Platform.IPFS, ChunkerConfig(262144, 174))
    fine = build_tree(data, Platform.IPFS, ChunkerConfig(4096, 174))
    assert fine.node_count >= coarse.node_count
    assert fine.chunk_count > coarse.chunk_count


def test_encrypted_reference_appends_a_derived_key():
    data = _ascii(9000)
    plain = build_tree(data, Platform.SWARM)
    sealed = build_tree(data, Platform.SWARM_ENCRYPTED)
    assert len(sealed.root_id) == 64
    assert sealed.root_id[:32] == plain.root_id
    assert sealed.root_id[32:] == keccak_ref.keccak256(plain.root_id)
    assert (sealed.chunk_count, sealed.node_count, sealed.depth) == (
        plain.chunk_count, plain.node_count, plain.depth,
    )


def test_ipfs_roots_recompute_with_plain_sha256():
    small = _ascii(1000)
    assert build_tree(small, Platform.IPFS).root_id == hashlib.sha256(small).digest()
    big = _ascii(600_000)
    leaf = [hashlib.sha256(c).digest() for c in split(big, IPFS_CONFIG)]
    assert build_tree(big, Platform.IPFS).root_id == hashlib.sha256(b"".join(leaf)).digest()


def test_cid_fixtures():
    vectors = json.loads((FIXTURES / "cid_vectors.json").read_text())
    assert len(vectors) >= 5
    for vec in vectors:
        digest = bytes.fromhex(vec["digest"])
        assert make_cid(digest, 0).text() == vec["v0"]
        assert make_cid(digest, 1).text() == vec["v1"]


def test_cid_binary_forms():
    digest = hashlib.sha256(b"x").digest()
    v0 = make_cid(digest, 0)
    v1 = make_cid(digest, 1)
    assert v0.binary() == b"\x12\x20" + digest and len(v0.binary()) == 34
    assert v1.binary() == b"\x01\x55\x12\x20" + digest and len(v1.binary()) == 36


@settings(max_examples=80, deadline=None)
@given(st.binary(min_size=32, max_size=32))
def test_cid_text_shapes(digest):
    v0 = make_cid(digest, 0).text()
    v1 = make_cid(digest, 1).text()
    assert len(v0) == 46 and v0.startswith("Qm")
    assert len(v1) == 59 and v1.startswith("b")
    assert v0 == content_ref.cid_v0(digest)
    assert v1 == content_ref.cid_v1_raw(digest)


def test_digest_length_is_enforced():
    with pytest.raises(BadDigestLength):
        make_cid(b"\x00" * 31, 0)
    with pytest.raises(BadDigestLength):
        make_cid(b"\x00" * 33, 1)
    with pytest.raises(ValueError):
        make_cid(b"\x00" * 32, 2)


def test_identifier_bytes_by_platform():
    data = _ascii(5000)
    assert len(identifier_bytes(build_tree(data, Platform.SWARM))) == 32
    assert len(identifier_bytes(build_tree(data, Platform.SWARM_ENCRYPTED))) == 64
    ipfs = build_tree(data, Platform.IPFS)
    assert len(identifier_bytes(ipfs, 0)) == 34
    assert len(identifier_bytes(ipfs, 1)) == 36


def test_identifier_text_forms():
    data = _ascii(5000)
    swarm = build_tree(data, Platform.SWARM)
    assert identifier_text(swarm) == swarm.root_id.hex()
    ipfs = build_tree(data, Platform.IPFS)
    assert identifier_text(ipfs, 0).startswith("Qm")
    assert identifier_text(ipfs, 1).startswith("b")


def test_config_validation():
    with pytest.raises(ValueError):
        ChunkerConfig(0, 128)
    with pytest.raises(ValueError):
        ChunkerConfig(4096, 1)
    with pytest.raises(ChunkTooLarge):
        build_tree(b"x" * 9000, Platform.SWARM, ChunkerConfig(8192, 128))
    with pytest.raises(ChunkTooLarge):
        build_tree(b"x" * 9000, Platform.SWARM, ChunkerConfig(64, 200))
