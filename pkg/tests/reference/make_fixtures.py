"""Regenerate the frozen oracle fixtures in tests/fixtures/.

Run from this directory:  python make_fixtures.py

Every value is produced by the reference implementations in this directory,
never by the package under test.
"""

import hashlib
import json
from pathlib import Path

import abi_ref
import content_ref
import keccak_ref

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# sha256 of the empty UnixFS file node; its CIDv0 is the well-known
# QmbFMke1... string, an external anchor for the multihash assembly.
UNIXFS_EMPTY_NODE = bytes.fromhex("0a0408021800")


def keccak_fixture() -> dict:
    messages = [
        b"",
        b"\x00",
        b"abc",
        b"transfer(address,uint256)",
        b"store(string)",
        b"The quick brown fox jumps over the lazy dog",
        b"a" * 135,  # pad byte 0x81 case
        b"a" * 136,  # full extra padding block
        b"a" * 137,
        bytes(range(256)) * 4,
    ]
    return {m.hex(): keccak_ref.keccak256(m).hex() for m in messages}


def abi_fixture() -> dict:
    cases = [
        (["bool"], [True]),
        (["bool"], [False]),
        (["uint256"], [1]),
        (["uint256"], [2**256 - 1]),
        (["address"], ["0x" + "11" * 10 + "22" * 10]),
        (["string"], ["abc"]),
        (["string"], [""]),
        (["bytes"], [b"\xde\xad\xbe\xef"]),
        (["uint256", "string"], [7, "hello world"]),
        (["string", "uint256", "bool"], ["xyz", 42, True]),
        (["uint256", "string", "bytes"], [3, "a" * 33, b"\x00" * 5]),
        ([], []),
    ]
    encodings = []
    for types, values in cases:
        ser = [v.hex() if isinstance(v, bytes) else v for v in values]
        encodings.append(
            {"types": types, "values": ser, "encoded": abi_ref.encode(types, values).hex()}
        )
    selectors = {
        sig: abi_ref.selector(sig).hex()
        for sig in [
            "transfer(address,uint256)",
            "store(string)",
            "retrieve()",
            "reset()",
            "store(bytes)",
            "deposit(uint256,bool,address)",
        ]
    }
    calls = [
        {
            "signature": "store(string)",
            "values": ["abc"],
            "encoded": abi_ref.encode_call("store(string)", ["abc"]).hex(),
        },
        {
            "signature": "transfer(address,uint256)",
            "values": ["0x" + "aa" * 20, 1000],
            "encoded": abi_ref.encode_call("transfer(address,uint256)", ["0x" + "aa" * 20, 1000]).hex(),
        },
    ]
    return {"encodings": encodings, "selectors": selectors, "calls": calls}


def bmt_fixture() -> dict:
    chunks = [
        (b"", 0),
        (b"\x00", 1),
        (b"\x5a", 1),
        (b"hello world", 11),
        (b"\x00" * 4096, 4096),
        (b"\x5a" * 4096, 4096),
        (bytes((33 + i % 94) for i in range(100)), 100),
    ]
    addresses = [
        {"chunk": c.hex(), "span": span, "address": content_ref.bmt_address(c, span).hex()}
        for c, span in chunks
    ]
    tree_inputs = [
        bytes((33 + i % 94) for i in range(4097)),   # 2 chunks
        bytes((33 + i % 94) for i in range(8193)),   # 3 chunks
        bytes((33 + i % 94) for i in range(12288)),  # 3 full chunks
    ]
    roots = [
        {"data_len": len(d), "root": content_ref.swarm_root(d).hex()} for d in tree_inputs
    ]
    return {"addresses": addresses, "roots": roots}


def cid_fixture() -> dict:
    digests = [
        hashlib.sha256(b"").digest(),
        hashlib.sha256(b"\x00").digest(),
        hashlib.sha256(b"hello world").digest(),
        hashlib.sha256(b"\x5a" * 4096).digest(),
        hashlib.sha256(bytes((33 + i % 94) for i in range(100))).digest(),
        hashlib.sha256(UNIXFS_EMPTY_NODE).digest(),
        bytes(32),  # all-zero digest, exercises base58 digit loop edge
    ]
    return [
        {
            "digest": d.hex(),
            "v0": content_ref.cid_v0(d),
            "v1": content_ref.cid_v1_raw(d),
        }
        for d in digests
    ]


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    out = {
        "keccak_vectors.json": keccak_fixture(),
        "abi_vectors.json": abi_fixture(),
        "bmt_vectors.json": bmt_fixture(),
        "cid_vectors.json": cid_fixture(),
    }
    for name, payload in out.items():
        path = FIXTURES / name
        path.write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
