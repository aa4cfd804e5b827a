#!/usr/bin/env python3
"""Independent reference computations; the printed values are frozen into the C++ tests.

Plain sympy rational functions, FZ exchange matrices, principal coefficients.
"""
import itertools
import sympy as sp


def mutate_matrix(B, k):
    n = B.shape[0]
    R = B.copy()
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                R[i, j] = -B[i, j]
            else:
                R[i, j] = B[i, j] + (abs(B[i, k]) * B[k, j] + B[i, k] * abs(B[k, j])) // 2
    return R


def principal_cluster(B, path):
    n = B.shape[0]
    x = list(sp.symbols(f"x1:{n + 1}"))
    p = sp.symbols(f"p1:{n + 1}")
    # extended matrix: bottom block identity
    E = sp.zeros(2 * n, n)
    E[:n, :] = B
    E[n:, :] = sp.eye(n)
    ext = list(x) + list(p)
    for k in path:
        pos = sp.Integer(1)
        neg = sp.Integer(1)
        for i in range(2 * n):
            b = E[i, k]
            if b > 0:
                pos *= ext[i] ** b
            elif b < 0:
                neg *= ext[i] ** (-b)
        ext[k] = sp.factor(sp.cancel((pos + neg) / ext[k]))
        # mutate the 2n x n matrix
        R = E.copy()
        for i in range(2 * n):
            for j in range(n):
                if i == k or j == k:
                    R[i, j] = -E[i, j]
                else:
                    R[i, j] = E[i, j] + (abs(E[i, k]) * E[k, j] + E[i, k] * abs(E[k, j])) // 2
        E = R
    return ext[:n], E, x, p


def g_vectors(B, path):
    n = B.shape[0]
    xs, E, x, p = principal_cluster(B, path)
    cols = []
    for f in xs:
        num, den = sp.fraction(sp.together(f))
        def deg(poly):
            poly = sp.Poly(sp.expand(poly), *x, *p)
            degs = set()
            for mon in poly.monoms():
                d = [mon[i] for i in range(n)]
                for j in range(n):
                    for i in range(n):
                        d[i] -= B[i, j] * mon[n + j]
                degs.add(tuple(d))
            assert len(degs) == 1, degs
            return degs.pop()
        dn, dd = deg(num), deg(den)
        cols.append(tuple(a - b for a, b in zip(dn, dd)))
    return cols, E[n:, :]


def f_polys(B, path):
    n = B.shape[0]
    xs, _, x, p = principal_cluster(B, path)
    return [sp.expand(sp.cancel(f.subs({xi: 1 for xi in x}))) for f in xs]


def count_clusters(B, depth=30):
    n = B.shape[0]
    seen = set()
    frontier = [()]
    while frontier:
        nxt = []
        for path in frontier:
            g, _ = g_vectors(B, list(path))
            key = frozenset(g)
            if key in seen:
                continue
            seen.add(key)
            for k in range(n):
                if not path or path[-1] != k:
                    nxt.append(path + (k,))
        frontier = nxt
        if len(frontier) and len(frontier[0]) > depth:
            break
    return len(seen)


def show(label, value):
    print(f"{label}: {value}")


if __name__ == "__main__":
    A2 = sp.Matrix([[0, 1], [-1, 0]])
    A3 = sp.Matrix([[0, -1, 0], [1, 0, -1], [0, 1, 0]])
    B2 = sp.Matrix([[0, -1], [2, 0]])

    show("B2 mutate k=1", mutate_matrix(B2, 0).tolist())
    g, C = g_vectors(A2, [1])
    show("A2 path (2) G columns", g)
    show("A2 path (2) C", C.tolist())
    show("A2 path (2,1) F", f_polys(A2, [1, 0]))
    g, C = g_vectors(A3, [0, 1, 2, 0])
    show("A3 path (1,2,3,1) G columns", g)
    show("A3 path (1,2,3,1) C", C.tolist())
    show("A3 path (1,2,3,1) F", f_polys(A3, [0, 1, 2, 0]))
    g, C = g_vectors(B2, [0, 1, 0])
    show("B2 path (1,2,1) G columns (degree route)", g)
    show("B2 path (1,2,1) C", C.tolist())
    show("B2 path (1,2,1) F", f_polys(B2, [0, 1, 0]))
    show("A3 cluster count", count_clusters(A3, 12))
    show("B2 cluster count", count_clusters(B2, 12))
    show("A2 cluster count", count_clusters(A2, 12))
