"""Pure-numpy kernels, vectorized over the innermost loops of the compiled versions."""

import numpy as np

INF_DIST = np.int64(2**62)


def switch_counts(bits, order):
    seq = bits[order]
    if len(seq) < 2:
        return np.zeros(bits.shape[1], dtype=np.int64)
    return np.count_nonzero(seq[1:] != seq[:-1], axis=0).astype(np.int64)


def bellman_ford(num_nodes, src, dst, weight, source):
    dist = np.full(num_nodes, INF_DIST, dtype=np.int64)
    dist[source] = 0
    for _ in range(num_nodes - 1):
        reach = dist[src] != INF_DIST
        new = dist.copy()
        np.minimum.at(new, dst[reach], dist[src[reach]] + weight[reach])
        if np.array_equal(new, dist):
            return True, dist
        dist = new
    reach = dist[src] != INF_DIST
    if np.any(dist[src[reach]] + weight[reach] < dist[dst[reach]]):
        return False, dist
    return True, dist


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
    idx = np.arange(n + 1)
    dyp[idx, idx, :] = unit
    cols = np.arange(m)

    for length in range(1, n + 1):
        for l in range(n - length + 1):
            e = l + length
            rho_seg = rho[l:e, :]
            for t in range(1, k + 1):
                # axes: (w - l, t0, c)
                left = dyp[l, l:e, :t]
                opt1 = dyp[l + 1:e + 1, e, :t][:, ::-1]
                opt2 = dyp2[l + 1:e + 1, e, 1:t + 1, :][:, ::-1, :]
                take2 = opt2 < opt1[:, :, None]
                right = np.where(take2, opt2, opt1[:, :, None])
                if egalitarian:
                    total = np.maximum(np.maximum(left[:, :, None], rho_seg[:, None, :]), right)
                else:
                    total = left[:, :, None] + rho_seg[:, None, :] + right
                flat = total.reshape(length * t, m)
                pick = np.argmin(flat, axis=0)
                vals = flat[pick, cols]
                ok = vals < inf
                pw, pt0 = np.divmod(pick, t)
                dyp2[l, e, t, :] = vals
                best_w[l, e, t, :] = np.where(ok, pw + l, -1)
                best_t0[l, e, t, :] = np.where(ok, pt0, -1)
                best_br[l, e, t, :] = np.where(ok, take2[pw, pt0, cols], 0)
                c = int(np.argmin(vals))
                dyp[l, e, t] = vals[c]
                best_c[l, e, t] = c if vals[c] < inf else -1
    return dyp, dyp2, best_c, best_w, best_t0, best_br
