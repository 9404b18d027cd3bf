#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--words N] [--max-len L] [--radius R]

Times the three kernel primitives on a random word corpus over the
pentagon graph, plus a full ball enumeration driven through each backend.
"""

from __future__ import annotations

import argparse
import random
import time

from coxrank import _kernel_py
from coxrank.graphs import DefiningGraph

try:
    from coxrank import _kernel
except ImportError:
    _kernel = None

C5 = DefiningGraph("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])


def _corpus(n_words, max_len, seed=12345):
    rng = random.Random(seed)
    return [
        bytes(rng.randrange(C5.n) for _ in range(rng.randint(0, max_len)))
        for _ in range(n_words)
    ]


def _time(fn):
    t0 = time.perf_counter()
    result = fn()
    return time.perf_counter() - t0, result


def _ball(backend, radius):
    comm = C5.comm_masks
    gens = [bytes([i]) for i in range(C5.n)]
    seen = {b""}
    frontier = [b""]
    for r in range(1, radius + 1):
        grown = set()
        for w in frontier:
            for s in gens:
                v = backend.normal_form(w + s, comm)
                if len(v) == r and v not in seen:
                    seen.add(v)
                    grown.add(v)
        frontier = sorted(grown)
    return len(seen)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--words", type=int, default=20_000)
    parser.add_argument("--max-len", type=int, default=40)
    parser.add_argument("--radius", type=int, default=8)
    args = parser.parse_args()

    corpus = _corpus(args.words, args.max_len)
    comm = C5.comm_masks
    backends = [("python", _kernel_py)]
    if _kernel is not None:
        backends.insert(0, ("compiled", _kernel))
    else:
        print("compiled kernel not built; timing the fallback only\n")

    print(f"corpus: {args.words} random words of length <= {args.max_len} on the pentagon")
    header = f"{'op':<22}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    rows = [
        ("is_reduced", lambda b: [b.is_reduced(w, comm) for w in corpus]),
        ("reduce_word", lambda b: [b.reduce_word(w, comm) for w in corpus]),
        ("normal_form", lambda b: [b.normal_form(w, comm) for w in corpus]),
        (f"ball(radius {args.radius})", lambda b: _ball(b, args.radius)),
    ]
    for label, run in rows:
        times = []
        results = []
        for _name, backend in backends:
            elapsed, result = _time(lambda b=backend: run(b))
            times.append(elapsed)
            results.append(result)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backend mismatch in {label}!")
        line = f"{label:<22}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[1] / times[0]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
