"""Compare the two keccak batch backends on the chunk-hashing workload.

Times the raw batch kernel (the shape the chunk tree builder hits hardest)
and a full tree build, once per backend, and checks both produce identical
digests. Run as a script:

    python3 benchmarks/bench_backends.py --size 16mb --repeats 5
"""

import argparse
import sys
import time

import numpy as np

from gasledger import chunking
from gasledger.chunking import Platform, build_tree
from gasledger.keccak import active_backend, keccak256_fixed, set_backend

MB = 1024 * 1024

BACKENDS = ("numba", "numpy")


def parse_size(text: str) -> int:
    body = text.strip().lower()
    for suffix, scale in (("mb", MB), ("kb", 1024), ("b", 1)):
        if body.endswith(suffix):
            return int(body[: -len(suffix)]) * scale
    return int(body)


def available_backends():
    names = []
    for name in BACKENDS:
        try:
            set_backend(name)
        except Exception:
            continue
        names.append(name)
    set_backend(None)
    return names


def bench_kernel(rows: int, repeats: int):
    """Median seconds per keccak256_fixed call on (rows, 64) random input."""
    rng = np.random.default_rng(7)
    batch = rng.integers(0, 256, size=(rows, 64), dtype=np.uint8)
    results = {}
    digests = {}
    for name in available_backends():
        set_backend(name)
        keccak256_fixed(batch[:64])  # warm-up; lets numba compile off the clock
        timings = []
        for _ in range(repeats):
            start = time.perf_counter()
            out = keccak256_fixed(batch)
            timings.append(time.perf_counter() - start)
        results[name] = sorted(timings)[len(timings) // 2]
        digests[name] = out.tobytes()
    set_backend(None)
    return results, digests


def bench_tree(size: int, repeats: int):
    """Median seconds per full chunk-tree build over `size` random bytes."""
    rng = np.random.default_rng(11)
    data = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
    results = {}
    roots = {}
    for name in available_backends():
        set_backend(name)
        timings = []
        for _ in range(repeats):
            # the builder memoizes identical inputs; drop that between runs
            # so every repeat (and every backend) really does the work
            chunking._tree_cached.cache_clear()
            start = time.perf_counter()
            tree = build_tree(data, Platform.SWARM)
            timings.append(time.perf_counter() - start)
        results[name] = sorted(timings)[len(timings) // 2]
        roots[name] = tree.root_id
    set_backend(None)
    return results, roots


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=parse_size, default=16 * MB,
                        help="tree input size (default 16mb)")
    parser.add_argument("--rows", type=int, default=200_000,
                        help="batch rows for the kernel microbenchmark")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args(argv)

    names = available_backends()
    print(f"backends available: {', '.join(names)} (default: {active_backend()})")
    if len(names) < 2:
        print("only one backend importable; timing it alone, no cross-check")

    kernel, digests = bench_kernel(args.rows, args.repeats)
    print(f"\nbatch kernel, {args.rows} x 64-byte messages, median of {args.repeats}:")
    for name, seconds in kernel.items():
        rate = args.rows / seconds / 1e6
        print(f"  {name:6s} {seconds * 1e3:9.2f} ms   {rate:6.2f} M hashes/s")

    tree, roots = bench_tree(args.size, args.repeats)
    print(f"\nchunk tree over {args.size / MB:.1f} MB, median of {args.repeats}:")
    for name, seconds in tree.items():
        rate = args.size / seconds / MB
        print(f"  {name:6s} {seconds * 1e3:9.2f} ms   {rate:6.1f} MB/s")

    ok = len(set(digests.values())) == 1 and len(set(roots.values())) == 1
    print(f"\nbackends agree: {'yes' if ok else 'NO - digests differ'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
