"""Compare the compiled and pure-Python Bareiss kernels on real R(d; g, n) matrices.

    python3 benchmarks/bench_kernels.py [--repeat N]

Matrices are built once (integer rows, denominators cleared); only the
elimination is timed.  Both kernels must return the same rank.
"""

import argparse
import random
import sys
import timeit

from kapparing import _bareiss_py
from kapparing.pairing import _integer_rows, pairing_matrix

try:
    from kapparing import _bareiss
except ImportError:
    sys.exit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

CELLS = [(8, 2, 7), (9, 2, 8), (10, 2, 9), (11, 2, 10), (9, 3, 5), (10, 3, 6)]


def random_rows(rng, r, c, bits):
    return [[rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(c)] for _ in range(r)]


def bench(label, rows, repeat):
    ry = _bareiss_py.rank_int(rows)
    rc = _bareiss.rank_int(rows)
    if ry != rc:
        raise SystemExit(f"rank mismatch on {label}: python {ry}, cython {rc}")
    tp = min(timeit.repeat(lambda: _bareiss_py.rank_int(rows), number=1, repeat=repeat))
    tc = min(timeit.repeat(lambda: _bareiss.rank_int(rows), number=1, repeat=repeat))
    shape = f"{len(rows)}x{len(rows[0])}"
    print(f"{label:<18} {shape:>8} {rc:>5} {tp * 1e3:>11.2f} {tc * 1e3:>11.2f} {tp / tc:>8.2f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'matrix':<18} {'shape':>8} {'rank':>5} {'python ms':>11} {'cython ms':>11} {'speedup':>8}")
    for d, g, n in CELLS:
        bench(f"R({d};{g},{n})", _integer_rows(pairing_matrix(d, g, n).entries), args.repeat)
    rng = random.Random(0)
    for size, bits in [(40, 16), (80, 8), (120, 4)]:
        bench(f"random {bits}-bit", random_rows(rng, size, size, bits), args.repeat)


if __name__ == "__main__":
    main()
