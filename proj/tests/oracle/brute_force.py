#!/usr/bin/env python3
"""Naive reference values for the portrait divergence tests.

Distances come from Floyd-Warshall on an adjacency matrix, portraits from
direct counting, and the divergence from the textbook JSD formula. Nothing
here shares code with the C++ library.
"""
import math
from fractions import Fraction

INF = float("inf")


def distances(n, edges, directed=False, weights=None):
    d = [[INF] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0
    for idx, (u, v) in enumerate(edges):
        w = 1 if weights is None else weights[idx]
        d[u][v] = min(d[u][v], w)
        if not directed:
            d[v][u] = min(d[v][u], w)
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def portrait(n, edges, directed=False):
    d = distances(n, edges, directed)
    diam = max(x for row in d for x in row if x != INF)
    B = [[0] * (n + 1) for _ in range(diam + 1)]
    for i in range(n):
        for l in range(diam + 1):
            k = sum(1 for j in range(n) if d[i][j] == l)
            B[l][k] += 1
    return B


def joint(B):
    S = sum(k * c for row in B for k, c in enumerate(row))
    return {(l, k): Fraction(k * c, S)
            for l, row in enumerate(B) for k, c in enumerate(row) if k and c}


def kl(p, q):
    return sum(float(v) * math.log2(float(v) / float(q[key])) for key, v in p.items())


def jsd(P, Q):
    keys = set(P) | set(Q)
    M = {key: (P.get(key, 0) + Q.get(key, 0)) / 2 for key in keys}
    return 0.5 * kl(P, M) + 0.5 * kl(Q, M), kl(P, M), kl(Q, M)


def legacy_delta(B1, B2, n1, n2):
    rows = max(len(B1), len(B2))
    cols = max(n1, n2) + 1
    def pad(B, n):
        B = [row + [0] * (cols - len(row)) for row in B]
        while len(B) < rows:
            B.append([n] + [0] * (cols - 1))
        return B
    B1, B2 = pad(B1, n1), pad(B2, n2)
    num = Fraction(0)
    den = Fraction(0)
    for l in range(rows):
        c1 = [Fraction(sum(B1[l][:k + 1]), sum(B1[l])) for k in range(cols)]
        c2 = [Fraction(sum(B2[l][:k + 1]), sum(B2[l])) for k in range(cols)]
        K = max(abs(a - b) for a, b in zip(c1, c2))
        alpha = sum(B1[l][1:]) + sum(B2[l][1:])
        num += alpha * K
        den += alpha
    return num / den


if __name__ == "__main__":
    p3 = (3, [(0, 1), (1, 2)])
    k3 = (3, [(0, 1), (1, 2), (0, 2)])
    Bp, Bk = portrait(*p3), portrait(*k3)
    print("P3 portrait", Bp)
    print("K3 portrait", Bk)
    P, Q = joint(Bp), joint(Bk)
    print("P3 joint", P)
    print("K3 joint", Q)
    d, klp, klq = jsd(P, Q)
    print("D_JS(P3,K3) = %.17g  KL(P||M) = %.17g  KL(Q||M) = %.17g" % (d, klp, klq))
    print("Delta(P3,K3) =", legacy_delta(Bp, Bk, 3, 3), float(legacy_delta(Bp, Bk, 3, 3)))
    print("joint(edge + isolated)", joint(portrait(3, [(0, 1)])))

    # Weighted P3 (w=1,2) vs weighted K3 (unit), identity transform, b=3.
    dp = distances(3, [(0, 1), (1, 2)], weights=[1.0, 2.0])
    dk = distances(3, [(0, 1), (1, 2), (0, 2)], weights=[1.0, 1.0, 1.0])
    L = sorted({x for D in (dp, dk) for i, row in enumerate(D)
                for j, x in enumerate(row) if i != j and x != INF})
    b = 3
    lower = sorted({L[min(math.ceil(i * len(L) / b), len(L) - 1)] for i in range(b)})
    top = L[-1]
    print("pooled lengths", L, "lower edges", lower, "top", top)
    def wportrait(D, n):
        rows = [[0] * (n + 1) for _ in range(len(lower) + 1)]
        for i in range(n):
            rows[0][1] += 1
            for bi, lo in enumerate(lower):
                hi = lower[bi + 1] if bi + 1 < len(lower) else None
                k = sum(1 for j in range(n) if j != i and D[i][j] != INF and D[i][j] >= lo
                        and (D[i][j] < hi if hi is not None else D[i][j] <= top))
                rows[bi + 1][k] += 1
        return rows
    Wp, Wk = wportrait(dp, 3), wportrait(dk, 3)
    print("weighted P3 portrait", Wp)
    print("weighted K3 portrait", Wk)
    d, klp, klq = jsd(joint(Wp), joint(Wk))
    print("weighted D_JS = %.17g  KL(P||M) = %.17g  KL(Q||M) = %.17g" % (d, klp, klq))
