"""Pure-numpy fallback kernels.

Mirrors _kernels_numba function by function. The model scan and the
connected-subgraph filter are vectorized; the state-space searches are
plain python loops over numpy inputs, which is fast enough for the desk
scales these guards allow.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"

_U64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _splitmix(seed: int, counter: int) -> int:
    z = (seed + (counter + 1) * _GOLDEN) & _U64
    z = ((z ^ (z >> 30)) * _MIX1) & _U64
    z = ((z ^ (z >> 27)) * _MIX2) & _U64
    return z ^ (z >> 31)


def splitmix_stream(seed, count):
    out = np.empty(count, dtype=np.uint64)
    s = int(seed)
    for i in range(count):
        out[i] = _splitmix(s, i)
    return out


def sat_first_model(pos, neg, n):
    total = 1 << n
    chunk = 1 << 16
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        a = np.arange(start, stop, dtype=np.int64)
        ok = np.ones(stop - start, dtype=bool)
        for ci in range(pos.shape[0]):
            ok &= ((a & pos[ci]) != 0) | ((~a & neg[ci]) != 0)
            if not ok.any():
                break
        hits = np.nonzero(ok)[0]
        if hits.size:
            return np.int64(start + hits[0])
    return np.int64(-1)


def connected_masks(n):
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    nslots = len(slots)
    total = 1 << nslots
    full = (1 << n) - 1
    found = []
    chunk = 1 << 16
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        masks = np.arange(start, stop, dtype=np.int64)
        adj = np.zeros((stop - start, n), dtype=np.int64)
        for s, (u, v) in enumerate(slots):
            has = ((masks >> s) & 1).astype(bool)
            adj[has, u] |= 1 << v
            adj[has, v] |= 1 << u
        reach = np.ones(stop - start, dtype=np.int64)
        while True:
            nxt = reach.copy()
            for v in range(n):
                on = ((reach >> v) & 1).astype(bool)
                nxt[on] |= adj[on, v]
            if np.array_equal(nxt, reach):
                break
            reach = nxt
        found.append(masks[reach == full])
    return np.concatenate(found) if found else np.empty(0, dtype=np.int64)


def _pair_bfs(adj, colors, k, s, t, visited, queue, stamp):
    n = adj.shape[0]
    nb = int(adj[s])
    if (nb >> t) & 1:
        return True
    head = 0
    tail = 0
    for w in range(n):
        if (nb >> w) & 1 and w != t:
            st = w << k
            if visited[st] != stamp:
                visited[st] = stamp
                queue[tail] = st
                tail += 1
    kmask = (1 << k) - 1
    while head < tail:
        st = int(queue[head])
        head += 1
        v = st >> k
        m = st & kmask
        cb = 1 << int(colors[v])
        if m & cb:
            continue
        nm = m | cb
        nbv = int(adj[v])
        for w in range(n):
            if (nbv >> w) & 1:
                if w == t:
                    return True
                ns = (w << k) | nm
                if visited[ns] != stamp:
                    visited[ns] = stamp
                    queue[tail] = ns
                    tail += 1
    return False


def rainbow_pairs_ok(adj, colors, k, pairs):
    n = adj.shape[0]
    size = n << k
    visited = np.zeros(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    for pi in range(pairs.shape[0]):
        if not _pair_bfs(adj, colors, k, int(pairs[pi, 0]), int(pairs[pi, 1]), visited, queue, pi + 1):
            return pi
    return -1


def decide_first_witness(adj, k, pairs, diffs, free, colors, use_rgs):
    n = adj.shape[0]
    r = free.shape[0]
    size = n << k
    visited = np.zeros(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    pm = np.zeros(r, dtype=np.int64)
    stamp = 0
    while True:
        ok = True
        for di in range(diffs.shape[0]):
            if colors[diffs[di, 0]] == colors[diffs[di, 1]]:
                ok = False
                break
        if ok:
            good = True
            for pi in range(pairs.shape[0]):
                stamp += 1
                if not _pair_bfs(adj, colors, k, int(pairs[pi, 0]), int(pairs[pi, 1]), visited, queue, stamp):
                    good = False
                    break
            if good:
                return 1
        j = r - 1
        advanced = False
        while j >= 0:
            # prefix max over the whole string: pinned positions hold 0,
            # so a pinned predecessor lifts the floor to 0
            if j > 0:
                prev = int(pm[j - 1])
            elif free[j] > 0:
                prev = 0
            else:
                prev = -1
            if use_rgs:
                cap = min(prev + 1, k - 1)
            else:
                cap = k - 1
            aj = int(colors[free[j]])
            if aj < cap:
                aj += 1
                colors[free[j]] = aj
                pm[j] = max(aj, prev)
                for j2 in range(j + 1, r):
                    colors[free[j2]] = 0
                    pm[j2] = pm[j2 - 1]
                advanced = True
                break
            j -= 1
        if not advanced:
            return 0


def oracle_compare_batch(adj, k, count, seed):
    n = adj.shape[0]
    size = n << k
    visited = np.zeros(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    colors = np.zeros(n, dtype=np.int64)
    sd = int(seed)
    for ci in range(count):
        base = ci * (n + 2)
        for v in range(n):
            colors[v] = _splitmix(sd, base + v) % k
        s = _splitmix(sd, base + n) % n
        t = _splitmix(sd, base + n + 1) % (n - 1)
        if t >= s:
            t += 1
        bfs_holds = _pair_bfs(adj, colors, k, s, t, visited, queue, ci + 1)
        dfs_holds = False
        stack_v = [s]
        cursor = [0]
        maskst = [0]
        onpath = 1 << s
        while stack_v:
            d = len(stack_v) - 1
            if cursor[d] >= n:
                onpath &= ~(1 << stack_v[d])
                stack_v.pop()
                cursor.pop()
                maskst.pop()
                continue
            w = cursor[d]
            cursor[d] += 1
            v = stack_v[d]
            if not (int(adj[v]) >> w) & 1:
                continue
            if (onpath >> w) & 1:
                continue
            if w == t:
                dfs_holds = True
                break
            cb = 1 << int(colors[w])
            if maskst[d] & cb:
                continue
            stack_v.append(w)
            cursor.append(0)
            maskst.append(maskst[d] | cb)
            onpath |= 1 << w
        if bfs_holds != dfs_holds:
            return ci
    return -1
