#!/usr/bin/env python3
"""Golden per-degree orders of coker and ker of the boundary on each slice.

Independent of the C++ code: elementary divisors are found by local Smith
elimination modulo p^K with K larger than the log-order of the relation
lattice, and small slices are cross-checked by enumerating the whole module.

usage: e01_golden.py OUTDIR
"""

import itertools
import json
import os
import sys
from math import comb

CASES = [
    (2, 2, 2, 24),
    (3, 2, 2, 16),
    (2, 2, 1, 24),
    (2, 3, 1, 24),
    (3, 2, 1, 16),
    (3, 3, 1, 16),
]


def slice_basis(delta):
    return [(delta + 1 - i - j, i, j)
            for i in range(1, delta + 1)
            for j in range(1, delta + 2 - i)]


def matrices(p, t, n, delta):
    basis = slice_basis(delta)
    idx = {x: q for q, x in enumerate(basis)}
    size = len(basis)
    d = [[0] * size for _ in range(size)]
    r = [[0] * size for _ in range(size)]
    pt, pn = p ** t, p ** n
    for s, (m, i, j) in enumerate(basis):
        for k in range(min(pt, i)):
            d[idx[(m + k, i - k, j)]][s] += comb(pt, k + 1)
        r[s][s] = pn
        for k in range(1, min(pn, j)):
            r[idx[(m + k, i, j - k)]][s] += comb(pn, k + 1)
    return basis, idx, d, r


def vp(x, p):
    if x == 0:
        return None
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def local_log_order(rows, p, big):
    """log_p of |Z^N / column span| computed modulo p^big."""
    mod = p ** big
    a = [[x % mod for x in row] for row in rows]
    nrows, ncols = len(a), len(a[0])
    total = 0
    for t in range(nrows):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = vp(a[i][j], p)
                if v is not None and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            raise ValueError("cokernel is not finite")
        e, bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        pe = p ** e
        unit_inv = pow(a[t][t] // pe, -1, mod)
        a[t] = [(x * unit_inv) % mod for x in a[t]]
        for i in range(t + 1, nrows):
            f = a[i][t] // pe
            if f:
                a[i] = [(x - f * y) % mod for x, y in zip(a[i], a[t])]
        total += e
    if total >= big:
        raise ValueError("modulus too small")
    return total


def transpose(m):
    return [list(col) for col in zip(*m)]


def hconcat(a, b):
    return [ra + rb for ra, rb in zip(a, b)]


def brute_ker_log(p, t, n, delta):
    """Enumerates the slice module through its normal forms."""
    basis, idx, d, _ = matrices(p, t, n, delta)
    size = len(basis)
    pn = p ** n
    order = sorted(range(size), key=lambda q: (-basis[q][2], -basis[q][0], -basis[q][1]))

    def normalize(vec):
        v = list(vec)
        for q in order:
            quo, v[q] = divmod(v[q], pn)
            if quo:
                m, i, j = basis[q]
                for k in range(1, min(pn, j)):
                    v[idx[(m + k, i, j - k)]] -= quo * comb(pn, k + 1)
        return v

    zeros = 0
    for x in itertools.product(range(pn), repeat=size):
        image = [sum(d[r][c] * x[c] for c in range(size)) for r in range(size)]
        if not any(normalize(image)):
            zeros += 1
    log = 0
    while zeros > 1:
        assert zeros % p == 0
        zeros //= p
        log += 1
    return log


def case_table(p, t, n, degree_max):
    slices = []
    for delta in range(1, degree_max // 2 + 1):
        _, _, d, r = matrices(p, t, n, delta)
        big = n * len(d) + 1
        coker = local_log_order(hconcat(d, r), p, big)
        ker = local_log_order(hconcat(transpose(d), transpose(r)), p, big)
        if p ** (n * len(d)) <= 5000:
            brute = brute_ker_log(p, t, n, delta)
            assert brute == ker == coker, (p, t, n, delta, brute, ker, coker)
        slices.append({"degree": 2 * delta, "coker_log": coker, "ker_log": ker})
    return {"p": p, "t": t, "n": n, "degree_max": degree_max, "slices": slices}


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    outdir = sys.argv[1]
    os.makedirs(outdir, exist_ok=True)
    for p, t, n, dmax in CASES:
        table = case_table(p, t, n, dmax)
        path = os.path.join(outdir, f"e01_p{p}_t{t}_n{n}.json")
        with open(path, "w") as f:
            json.dump(table, f, indent=1)
            f.write("\n")
        print(path)


if __name__ == "__main__":
    main()
