"""numba-compiled hot kernels.

Same function surface as _kernels_numpy; the backend module picks one.
All vertex/color values are 0-based int64 here; adjacency rows are int64
bitmasks (so at most 62 vertices on kernel paths; the pure-python code in
the API layer handles anything larger).
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


@njit(cache=True)
def _splitmix(seed, counter):
    # counter-based splitmix64: the i-th draw depends only on (seed, i)
    z = seed + (counter + np.uint64(1)) * _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


@njit(cache=True)
def splitmix_stream(seed, count):
    out = np.empty(count, dtype=np.uint64)
    s = np.uint64(seed)
    for i in range(count):
        out[i] = _splitmix(s, np.uint64(i))
    return out


@njit(cache=True)
def sat_first_model(pos, neg, n):
    m = pos.shape[0]
    for a in range(1 << n):
        ok = True
        for ci in range(m):
            if (a & pos[ci]) == 0 and ((~a) & neg[ci]) == 0:
                ok = False
                break
        if ok:
            return a
    return -1


@njit(cache=True)
def connected_masks(n):
    # edge slot order: (0,1),(0,2),...,(0,n-1),(1,2),... ascending
    nslots = n * (n - 1) // 2
    us = np.empty(nslots, dtype=np.int64)
    vs = np.empty(nslots, dtype=np.int64)
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            us[idx] = u
            vs[idx] = v
            idx += 1
    out = np.empty(1 << nslots, dtype=np.int64)
    count = 0
    full = (1 << n) - 1
    adj = np.zeros(n, dtype=np.int64)
    for mask in range(1 << nslots):
        for v in range(n):
            adj[v] = 0
        for s in range(nslots):
            if (mask >> s) & 1:
                adj[us[s]] |= 1 << vs[s]
                adj[vs[s]] |= 1 << us[s]
        reach = 1
        while True:
            nxt = reach
            for v in range(n):
                if (reach >> v) & 1:
                    nxt |= adj[v]
            if nxt == reach:
                break
            reach = nxt
        if reach == full:
            out[count] = mask
            count += 1
    return out[:count].copy()


@njit(cache=True)
def _pair_bfs(adj, colors, k, s, t, visited, queue, stamp):
    # exact reachability over (vertex, internal-color-set) states; a state
    # expands only if the current vertex's color is not yet consumed
    n = adj.shape[0]
    nb = adj[s]
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
        st = queue[head]
        head += 1
        v = st >> k
        m = st & kmask
        cb = 1 << colors[v]
        if m & cb:
            continue
        nm = m | cb
        nbv = adj[v]
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


@njit(cache=True)
def rainbow_pairs_ok(adj, colors, k, pairs):
    n = adj.shape[0]
    size = n << k
    visited = np.zeros(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    for pi in range(pairs.shape[0]):
        if not _pair_bfs(adj, colors, k, pairs[pi, 0], pairs[pi, 1], visited, queue, pi + 1):
            return pi
    return -1


@njit(cache=True)
def decide_first_witness(adj, k, pairs, diffs, free, colors, use_rgs):
    # enumerate candidate colorings over the free positions in canonical
    # order (restricted growth when use_rgs, else a plain base-k odometer),
    # mutating `colors` in place; on success it holds the witness
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
                if not _pair_bfs(adj, colors, k, pairs[pi, 0], pairs[pi, 1], visited, queue, stamp):
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
                prev = pm[j - 1]
            elif free[j] > 0:
                prev = 0
            else:
                prev = -1
            if use_rgs:
                cap = prev + 1
                if cap > k - 1:
                    cap = k - 1
            else:
                cap = k - 1
            aj = colors[free[j]]
            if aj < cap:
                aj += 1
                colors[free[j]] = aj
                pm[j] = aj if aj > prev else prev
                for j2 in range(j + 1, r):
                    colors[free[j2]] = 0
                    pm[j2] = pm[j2 - 1]
                advanced = True
                break
            j -= 1
        if not advanced:
            return 0


@njit(cache=True)
def oracle_compare_batch(adj, k, count, seed):
    # per sample: a splitmix-derived random coloring and vertex pair,
    # checked by two independent algorithms (state BFS vs exhaustive DFS
    # over simple paths); returns the first disagreeing sample index
    n = adj.shape[0]
    size = n << k
    visited = np.zeros(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    colors = np.zeros(n, dtype=np.int64)
    stack_v = np.zeros(n + 1, dtype=np.int64)
    cursor = np.zeros(n + 1, dtype=np.int64)
    maskst = np.zeros(n + 1, dtype=np.int64)
    sd = np.uint64(seed)
    ku = np.uint64(k)
    for ci in range(count):
        base = np.uint64(ci) * np.uint64(n + 2)
        for v in range(n):
            colors[v] = np.int64(_splitmix(sd, base + np.uint64(v)) % ku)
        s = np.int64(_splitmix(sd, base + np.uint64(n)) % np.uint64(n))
        t = np.int64(_splitmix(sd, base + np.uint64(n + 1)) % np.uint64(n - 1))
        if t >= s:
            t += 1
        bfs_holds = _pair_bfs(adj, colors, k, s, t, visited, queue, ci + 1)
        # independent oracle: DFS over all simple s-t paths, pruning any
        # prefix whose internal colors already repeat
        dfs_holds = False
        d = 0
        stack_v[0] = s
        cursor[0] = 0
        maskst[0] = 0
        onpath = 1 << s
        while d >= 0:
            if cursor[d] >= n:
                onpath &= ~(1 << stack_v[d])
                d -= 1
                continue
            w = cursor[d]
            cursor[d] += 1
            v = stack_v[d]
            if not (adj[v] >> w) & 1:
                continue
            if (onpath >> w) & 1:
                continue
            if w == t:
                dfs_holds = True
                break
            cb = 1 << colors[w]
            if maskst[d] & cb:
                continue
            d += 1
            stack_v[d] = w
            cursor[d] = 0
            maskst[d] = maskst[d - 1] | cb
            onpath |= 1 << w
        if bfs_holds != dfs_holds:
            return ci
    return -1
