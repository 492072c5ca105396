"""Timing comparison of the compiled kernels against the pure-numpy
fallback.

    python3 benchmarks/bench_backends.py

Each workload runs on both backends with identical inputs; the agree
column confirms the outputs matched, so this doubles as a smoke test.
"""

import time

import numpy as np

import rvckit as rk
from rvckit import _kernels_numba as knb
from rvckit import _kernels_numpy as knp


def _adj(g):
    return rk.adjacency_bits(g).astype(np.int64)


PETERSEN = rk.build_graph(10, [
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (6, 8), (8, 10), (7, 10), (7, 9), (6, 9),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
])
ADJ_PET = _adj(PETERSEN)
COLS_PET = np.array([0, 1, 2, 0, 1, 2, 0, 1, 2, 0], dtype=np.int64)
PAIRS_PET = np.array(
    [(u, v) for u in range(10) for v in range(u + 1, 10)], dtype=np.int64
)

CYCLE8 = rk.build_graph(8, [(v, v % 8 + 1) for v in range(1, 9)])
ADJ_C8 = _adj(CYCLE8)
PAIRS_C8 = np.array(
    [(u, v) for u in range(8) for v in range(u + 1, 8) if min((v - u) % 8, (u - v) % 8) >= 3],
    dtype=np.int64,
)
NO_DIFFS = np.empty((0, 2), dtype=np.int64)
FREE_C8 = np.arange(8, dtype=np.int64)

# every sign pattern over three variables: unsatisfiable, so the model
# scan walks all 2^18 assignments
SCAN_VARS = 18
SCAN_POS = np.zeros(8, dtype=np.int64)
SCAN_NEG = np.zeros(8, dtype=np.int64)
for signs in range(8):
    for j in range(3):
        bit = 1 << (SCAN_VARS - (j + 1))
        if (signs >> j) & 1:
            SCAN_NEG[signs] |= bit
        else:
            SCAN_POS[signs] |= bit


def w_splitmix(kern):
    return int(kern.splitmix_stream(42, 300_000)[-1])


def w_sat_scan(kern):
    return int(kern.sat_first_model(SCAN_POS, SCAN_NEG, SCAN_VARS))


def w_connected(kern):
    masks = kern.connected_masks(6)
    return (len(masks), int(masks[-1]))


def w_pairs(kern):
    out = 0
    for _ in range(50):
        out = int(kern.rainbow_pairs_ok(ADJ_PET, COLS_PET, 3, PAIRS_PET))
    return out


def w_decide(kern):
    colors = np.zeros(8, dtype=np.int64)
    found = int(kern.decide_first_witness(ADJ_C8, 2, PAIRS_C8, NO_DIFFS, FREE_C8, colors, True))
    return (found, colors.tolist())


def w_oracle(kern):
    return int(kern.oracle_compare_batch(ADJ_PET, 3, 300, 7))


WORKLOADS = [
    ("splitmix_stream 300k draws", w_splitmix),
    ("sat_first_model 2^18 scan", w_sat_scan),
    ("connected_masks order 6", w_connected),
    ("rainbow_pairs_ok petersen x50", w_pairs),
    ("decide_first_witness cycle 8", w_decide),
    ("oracle_compare_batch 300", w_oracle),
]


def best_of(fn, kern, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(kern)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    print(f"{'workload':32s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}  agree")
    for name, fn in WORKLOADS:
        fn(knb)  # warm the jit so compile time stays out of the numbers
        tb, outb = best_of(fn, knb)
        tp, outp = best_of(fn, knp)
        agree = outb == outp
        print(f"{name:32s} {tb * 1e3:8.2f}ms {tp * 1e3:8.2f}ms {tp / tb:7.1f}x  {agree}")


if __name__ == "__main__":
    main()
