"""Compiled kernels. Loop bodies mirror :mod:`._numpy` exactly, including tie order."""

import numpy as np
from numba import njit

INF_DIST = np.int64(2**62)


@njit(cache=True, nogil=True)
def switch_counts(bits, order):
    rows, cols = bits.shape
    out = np.zeros(cols, dtype=np.int64)
    for i in range(len(order) - 1):
        a = order[i]
        b = order[i + 1]
        for j in range(cols):
            if bits[a, j] != bits[b, j]:
                out[j] += 1
    return out


@njit(cache=True, nogil=True)
def bellman_ford(num_nodes, src, dst, weight, source):
    dist = np.full(num_nodes, INF_DIST, dtype=np.int64)
    dist[source] = 0
    for _ in range(num_nodes - 1):
        changed = False
        for e in range(len(src)):
            du = dist[src[e]]
            if du == INF_DIST:
                continue
            cand = du + weight[e]
            if cand < dist[dst[e]]:
                dist[dst[e]] = cand
                changed = True
        if not changed:
            return True, dist
    for e in range(len(src)):
        du = dist[src[e]]
        if du != INF_DIST and du + weight[e] < dist[dst[e]]:
            return False, dist
    return True, dist


@njit(cache=True, nogil=True)
def cc_tables(rho, k, egalitarian):
    n, m = rho.shape
    inf = np.inf
    unit = -inf if egalitarian else 0.0
    dyp = np.full((n + 1, n + 1, k + 1), inf)
    dyp2 = np.full((n + 1, n + 1, k + 1, m), inf)
    best_c = np.full((n + 1, n + 1, k + 1), -1, dtype=np.int64)
    best_w = np.full((n + 1, n + 1, k + 1, m), -1, dtype=np.int64)
    best_t0 = np.full((n + 1, n + 1, k + 1, m), -1, dtype=np.int64)
    best_br = np.zeros((n + 1, n + 1, k + 1, m), dtype=np.int8)
    for l in range(n + 1):
        for t in range(k + 1):
            dyp[l, l, t] = unit

    for length in range(1, n + 1):
        for l in range(n - length + 1):
            e = l + length
            for t in range(1, k + 1):
                for c in range(m):
                    best = inf
                    bw = -1
                    bt0 = -1
                    bbr = 0
                    for w in range(l, e):
                        r_wc = rho[w, c]
                        for t0 in range(t):
                            left = dyp[l, w, t0]
                            if left == inf:
                                continue
                            opt1 = dyp[w + 1, e, t - t0 - 1]
                            opt2 = dyp2[w + 1, e, t - t0, c]
                            if opt2 < opt1:
                                right = opt2
                                br = 1
                            else:
                                right = opt1
                                br = 0
                            if egalitarian:
                                total = max(max(left, r_wc), right)
                            else:
                                total = left + r_wc + right
                            if total < best:
                                best = total
                                bw = w
                                bt0 = t0
                                bbr = br
                    dyp2[l, e, t, c] = best
                    best_w[l, e, t, c] = bw
                    best_t0[l, e, t, c] = bt0
                    best_br[l, e, t, c] = bbr
                bc = -1
                bv = inf
                for c in range(m):
                    if dyp2[l, e, t, c] < bv:
                        bv = dyp2[l, e, t, c]
                        bc = c
                dyp[l, e, t] = bv
                best_c[l, e, t] = bc
    return dyp, dyp2, best_c, best_w, best_t0, best_br
