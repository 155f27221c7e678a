"""Maximum matching on general graphs and minimum edge cover.

Edmonds' blossom-contraction algorithm over adjacency arrays.  Output is
deterministic for a fixed vertex count and edge ordering: vertices are
scanned in index order and blossoms are handled via base pointers.
"""

from __future__ import annotations

from .errors import HasIsolatedVertex


def _check_edges(n, edges):
    clean = []
    seen = set()
    for (u, v) in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) references an invalid vertex")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        clean.append(key)
    return clean


def maximum_matching(n: int, edges) -> list[tuple[int, int]]:
    """A maximum-cardinality matching, as a sorted list of vertex pairs."""
    edges = _check_edges(n, edges)
    adj = [[] for _ in range(n)]
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()

    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a, b):
        used = [False] * n
        x = a
        while True:
            x = base[x]
            used[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if used[y]:
                return y
            y = parent[match[y]]

    def mark_path(x, b, child, blossom):
        while base[x] != b:
            blossom[base[x]] = True
            blossom[base[match[x]]] = True
            parent[x] = child
            child = match[x]
            x = parent[match[x]]

    def find_path(root):
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augmenting path found: flip it
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)

    return sorted((v, match[v]) for v in range(n) if match[v] > v)


def minimum_edge_cover(n: int, edges) -> list[tuple[int, int]]:
    """Minimum edge cover: a maximum matching greedily extended to uncovered
    vertices.  Size is always n - |maximum matching|."""
    edges = _check_edges(n, edges)
    adj = [[] for _ in range(n)]
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in range(n):
        if not adj[v]:
            raise HasIsolatedVertex(v)
    mm = maximum_matching(n, edges)
    covered = set()
    for (u, v) in mm:
        covered.add(u)
        covered.add(v)
    cover = list(mm)
    for v in range(n):
        if v not in covered:
            u = min(adj[v])
            cover.append((min(u, v), max(u, v)))
            covered.add(v)
    return sorted(cover)
