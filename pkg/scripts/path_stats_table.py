#!/usr/bin/env python3
"""Tabulate Dyck-path statistics against the closed form.

For each n the table lists, per k, the number of Dyck words of length 2n
ending with exactly k falls and the number with exactly k factors; both
columns must equal k(2n-k-1)!/(n!(n-k)!), which is also the quotient
dimension in degree n-k.
"""

import sys

from qsymq.combinat import dn_k, path_statistics
from qsymq.oracle import hilbert_series


def main(top=8):
    for n in range(1, top + 1):
        stats = path_statistics(n)
        series = hilbert_series(n, "formula").coefficients
        print(f"n = {n}")
        print(f"  {'k':>2} {'falls':>8} {'factors':>8} {'formula':>8} {'dim^(n-k)':>10}")
        for k in range(1, n + 1):
            falls, factors = stats[k]
            expected = dn_k(n, k)
            dim = series[n - k] if n - k < len(series) else 0
            assert falls == factors == expected == dim
            print(f"  {k:>2} {falls:>8} {factors:>8} {expected:>8} {dim:>10}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
