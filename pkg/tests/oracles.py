"""Naive reference implementations.  Nothing here imports the package's
detectors, canonical forms or search code."""

from itertools import combinations, permutations, product


def edge_set(p, edges):
    return {frozenset(e) for e in edges}


def has_clique(p, edges, k):
    es = edge_set(p, edges)
    return any(all(frozenset((a, b)) in es for a, b in combinations(sub, 2))
               for sub in combinations(range(p), k))


def has_cycle(p, edges, n):
    """Subset dynamic program: a path from the least vertex of a set through
    all of it, closing back to the start."""
    adj = [set() for _ in range(p)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for s in range(p):
        # reach[(mask, end)]: simple path from s covering mask, ending at end
        layer = {(1 << s, s)}
        for _ in range(n - 1):
            nxt = set()
            for mask, end in layer:
                for w in adj[end]:
                    if w > s and not mask >> w & 1:
                        nxt.add((mask | 1 << w, w))
            layer = nxt
        if any(s in adj[end] for _, end in layer):
            return True
    return False


def has_subgraph(p, edges, k, pattern_edges):
    es = edge_set(p, edges)
    for image in permutations(range(p), k):
        if all(frozenset((image[a], image[b])) in es for a, b in pattern_edges):
            return True
    return False


def pairs(p):
    return [(u, v) for v in range(p) for u in range(v)]


def class_edges(p, colors, i):
    return [e for e, c in zip(pairs(p), colors) if c == i]


def contains_target(p, edges, target):
    kind, size = target
    if kind == "K":
        return has_clique(p, edges, size)
    if kind == "C":
        return has_cycle(p, edges, size)
    if kind == "P":
        return has_subgraph(p, edges, size, [(i, i + 1) for i in range(size - 1)])
    raise ValueError(kind)


def forced_full(p, targets):
    """Plain enumeration of every coloring of K_p."""
    r = len(targets)
    for colors in product(range(r), repeat=len(pairs(p))):
        if not any(contains_target(p, class_edges(p, colors, i), t) for i, t in enumerate(targets)):
            return False, colors
    return True, None


def _copy_through(adj, u, v, target, p):
    """Copy of ``target`` in ``adj`` using edge uv, by plain enumeration."""
    kind, size = target
    others = [w for w in range(p) if w not in (u, v)]
    if kind == "K":
        return any(all(b in adj[a] for a in sub + (u, v) for b in sub + (u, v) if a != b)
                   for sub in combinations(others, size - 2))
    if kind == "C":
        # path from v back to u through size-2 other vertices
        for mid in permutations(others, size - 2):
            walk = (u, v) + mid
            if all(walk[i + 1] in adj[walk[i]] for i in range(size - 1)) and u in adj[walk[-1]]:
                return True
        return False
    if kind == "P":
        for a in range(size - 1):
            for mid in permutations(others, size - 2):
                walk = mid[:a] + (u, v) + mid[a:]
                if all(walk[i + 1] in adj[walk[i]] for i in range(size - 1)):
                    return True
                walk = mid[:a] + (v, u) + mid[a:]
                if all(walk[i + 1] in adj[walk[i]] for i in range(size - 1)):
                    return True
        return False
    raise ValueError(kind)


def forced_backtrack(p, targets):
    """Edge-by-edge enumeration of labeled colorings with early cutoff only.

    No isomorph rejection and no symmetry breaking.  Returns ``(forced,
    avoiding colorings visited at full size)``.
    """
    r = len(targets)
    order = pairs(p)
    adjs = [[set() for _ in range(p)] for _ in range(r)]

    def rec(idx):
        if idx == len(order):
            return False
        u, v = order[idx]
        for c in range(r):
            adjs[c][u].add(v)
            adjs[c][v].add(u)
            ok = not _copy_through(adjs[c], u, v, targets[c], p)
            if ok and not rec(idx + 1):
                adjs[c][u].discard(v)
                adjs[c][v].discard(u)
                return False
            adjs[c][u].discard(v)
            adjs[c][v].discard(u)
        return True

    return rec(0)


def ramsey_naive(targets, p_max):
    for p in range(1, p_max + 1):
        if forced_backtrack(p, targets):
            return p
    return None
