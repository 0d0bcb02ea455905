from __future__ import annotations

import itertools

from mcgx.words import mul


def all_words(rank: int, max_len: int):
    """Every freely reduced word over ``rank`` letters with length at most ``max_len``."""
    letters = [x for k in range(1, rank + 1) for x in (k, -k)]
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if not w or w[-1] != -x:
                    nxt.append(w + (x,))
        out += nxt
        frontier = nxt
    return out


def brute_force_conjugate(u, v, rank: int, max_len: int) -> bool:
    """Is there a word ``t`` of length at most ``max_len`` with ``t u t^-1 = v``?"""
    from mcgx.words import inv

    for t in all_words(rank, max_len):
        if mul(t, u, inv(t)) == tuple(v):
            return True
    return False


def pairs(seq):
    return itertools.combinations(seq, 2)


def bareiss_det(m) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinantal_factors(m) -> list[int]:
    """Invariant factors from gcds of k x k minors: ``d_k = D_k / D_(k-1)``."""
    from math import gcd

    rows, cols = len(m), len(m[0]) if m else 0
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in itertools.combinations(range(rows), k):
            for c in itertools.combinations(range(cols), k):
                g = gcd(g, bareiss_det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            out += [0] * (min(rows, cols) - k + 1)
            break
        out.append(g // prev)
        prev = g
    return out
