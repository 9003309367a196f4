#!/usr/bin/env python3
"""Regenerates the SU(4)_6 conformal-inclusion graph shipped in nimrep_graphs.hpp.

The graph is the fusion graph of right multiplication by the fundamental
weight (1,0,0) on the irreducible M-N sectors of the SU(4)_6 < SU(10)_1
conformal inclusion.  Steps:

  1. SU(4)_6 fusion rules from the Weyl-determinant S-matrix and Verlinde.
  2. Theta = <theta lambda, mu> with theta = (000)+(060)+(202)+(222).
  3. The enlarged Gram matrix <tau_j iota lam, tau_j' iota mu> over the Z_10
     translates is factorised as V^T V over non-negative integers; the rows
     of V are the 32 irreducible M-N sectors.
  4. G = V N V^+ for the fundamental weight and the induced Z_10 action.

Output is printed as C++ initializer text.  Only numpy is required.
"""
import itertools
import sys

import numpy as np

RANK = 3
LEVEL = 6
HEIGHT = LEVEL + RANK + 1  # k + n


def weights():
    out = []
    for p in range(LEVEL + 1):
        for q in range(LEVEL + 1 - p):
            for r in range(LEVEL + 1 - p - q):
                out.append((p, q, r))
    return out


def ortho(w):
    # Dynkin labels -> traceless orthogonal coordinates
    lam = [w[0] + 1, w[1] + 1, w[2] + 1]
    parts = [lam[0] + lam[1] + lam[2], lam[1] + lam[2], lam[2], 0]
    mean = sum(parts) / 4.0
    return np.array([x - mean for x in parts])


def s_matrix(ws):
    perms = list(itertools.permutations(range(4)))
    signs = []
    for p in perms:
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
        signs.append(-1 if inv % 2 else 1)
    xs = [ortho(w) for w in ws]
    m = len(ws)
    s = np.zeros((m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            acc = 0
            for p, sg in zip(perms, signs):
                acc += sg * np.exp(-2j * np.pi * np.dot(xs[a][list(p)], xs[b]) / HEIGHT)
            s[a, b] = acc
    s /= np.linalg.norm(s[0])
    if s[0, 0].real < 0:
        s = -s
    phase = s[0, 0] / abs(s[0, 0])
    s /= phase
    return s


def fusion(s):
    m = s.shape[0]
    ratio = s / s[0][None, :]
    n = np.einsum("lr,mr,nr->lmn", ratio, s, s.conj())
    ni = np.rint(n.real).astype(int)
    assert np.max(np.abs(n - ni)) < 1e-8
    assert ni.min() >= 0
    return ni


def peel_sectors(gram, block):
    """Non-negative integer rows u with sum u u^T == gram.

    Any diagonal entry equal to one in the remainder forces a new row; each
    row is closed under the Z_10 shift of the column blocks.
    """
    rows = []

    def add(u):
        for _ in range(10):
            if not any(np.array_equal(u, r) for r in rows):
                rows.append(u.copy())
            u = np.roll(u, block)

    while True:
        rest = gram - sum(np.outer(r, r) for r in rows) if rows else gram.copy()
        assert rest.min() >= 0
        ones = [i for i in range(len(gram)) if rest[i, i] == 1]
        if not ones:
            break
        add(rest[ones[0]].copy())
    assert not rest.any(), "Gram matrix not exhausted"
    return np.array(rows)


TABLE = {
    0: [(0, 0, 0), (0, 6, 0), (2, 0, 2), (2, 2, 2)],
    1: [(0, 0, 2), (2, 4, 0), (2, 1, 2)],
    2: [(0, 1, 2), (2, 3, 0), (3, 0, 3)],
    3: [(1, 0, 3), (3, 2, 1), (0, 3, 0)],
    4: [(0, 0, 4), (4, 2, 0), (1, 2, 1)],
    5: [(0, 0, 6), (6, 0, 0), (0, 2, 2), (2, 2, 0)],
    6: [(4, 0, 0), (0, 2, 4), (1, 2, 1)],
    7: [(3, 0, 1), (1, 2, 3), (0, 3, 0)],
    8: [(0, 3, 2), (2, 1, 0), (3, 0, 3)],
    9: [(2, 0, 0), (0, 4, 2), (2, 1, 2)],
}


def main():
    ws = weights()
    m = len(ws)
    idx = {w: i for i, w in enumerate(ws)}
    n = fusion(s_matrix(ws))
    b = np.zeros((10, m), dtype=int)
    for j, row in TABLE.items():
        for w in row:
            b[j, idx[w]] += 1
    # <tau_k iota lam, iota mu> = sum_nu b[k, nu] N_{nu mu}^lam
    restricted = [sum(b[k, nu] * n[nu] for nu in range(m)) for k in range(10)]
    gram = np.zeros((10 * m, 10 * m), dtype=int)
    for j in range(10):
        for j2 in range(10):
            gram[j * m:(j + 1) * m, j2 * m:(j2 + 1) * m] = restricted[(j2 - j) % 10].T
    v = peel_sectors(gram, m)
    assert v.shape[0] == 32 and np.linalg.matrix_rank(v) == 32
    # order: vacuum first, then by first occurrence in iota lam over BFS weights
    order, seen, head = [0], {0}, 0
    gens = [idx[(1, 0, 0)], idx[(0, 0, 1)]]
    while head < len(order):
        a = order[head]
        head += 1
        for g in gens:
            for c in np.nonzero(n[g][a])[0]:
                if c not in seen:
                    seen.add(c)
                    order.append(int(c))
    rank = {lab: i for i, lab in enumerate(order)}
    def key(r):
        first = min((rank[l] for l in range(m) if v[r, l] > 0))
        return (first, tuple(-v[r]))
    v = v[sorted(range(32), key=key)]
    pinv = np.linalg.pinv(v.astype(float))
    conj = [idx[(w[2], w[1], w[0])] for w in ws]
    def graph_of(label):
        bar = n[conj[idx[label]]]
        blockdiag = np.kron(np.eye(10, dtype=int), bar)
        g = v @ blockdiag @ pinv
        gi = np.rint(g).astype(int)
        assert np.max(np.abs(g - gi)) < 1e-8 and gi.min() >= 0
        assert np.array_equal(gi @ v, v @ blockdiag)
        return gi
    g1 = graph_of((1, 0, 0))
    shifted = [np.roll(v[r], m) for r in range(32)]
    t1 = [next(i for i in range(32) if np.array_equal(v[i], u)) for u in shifted]
    t2 = [t1[t1[x]] for x in range(32)]
    pm = np.eye(32, dtype=int)[:, t2]
    assert np.array_equal(pm @ g1, g1 @ pm)
    names, quad = [], []
    for y in range(32):
        first = min((l for l in range(m) if v[y, l] > 0), key=lambda l: rank[l])
        p, q, r = ws[first]
        names.append("%d%d%d" % (p, q, r))
        quad.append((p + 2 * q + 3 * r) % 4)
    for nm in set(names):
        hits = [y for y in range(32) if names[y] == nm]
        if len(hits) > 1:
            for k, y in enumerate(hits):
                names[y] = nm + chr(ord("a") + k)
    print("// names")
    print(", ".join('"%s"' % x for x in names))
    print("// four-ality")
    print(", ".join(str(x) for x in quad))
    print("// adjacency rows (right multiplication by (1,0,0))")
    for row in g1:
        print('"' + "".join(str(x) for x in row) + '",')
    print("// Z_5 translation tau_2")
    print(", ".join(str(x) for x in t2))


if __name__ == "__main__":
    main()
