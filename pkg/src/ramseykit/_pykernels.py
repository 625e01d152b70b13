"""Pure-Python kernels.  Used when the compiled extension is unavailable."""

from __future__ import annotations


def _matrix(tri: bytes, p: int) -> list[bytes]:
    m = [bytearray(p) for _ in range(p)]
    k = 0
    for v in range(p):
        for u in range(v):
            m[u][v] = m[v][u] = tri[k]
            k += 1
    return [bytes(row) for row in m]


def _twin_reps(m: list[bytes], p: int) -> list[int]:
    # u, w are twins when swapping them is an automorphism
    rep = list(range(p))
    for w in range(p):
        if rep[w] != w:
            continue
        mw = m[w]
        for x in range(w + 1, p):
            if rep[x] != x:
                continue
            mx = m[x]
            if all(mw[y] == mx[y] for y in range(p) if y != w and y != x):
                rep[x] = w
    return rep


def canonical_form(tri: bytes, p: int) -> tuple[bytes, list[int]]:
    """Least triangular string over all vertex orders, plus one such order.

    Orders are grown one position at a time.  Position ``k`` contributes the
    row of classes from the vertex placed there back to positions ``0..k-1``;
    only extensions whose row is globally least survive.  Among candidates
    that are twins of each other a single one is kept.
    """
    if p <= 1:
        return bytes(tri), list(range(p))
    m = _matrix(tri, p)
    rep = _twin_reps(m, p)
    full = (1 << p) - 1
    # frontier entries: (order, used_mask)
    frontier = [((), 0)]
    out = bytearray()
    for k in range(p):
        best = None
        nxt = []
        for order, used in frontier:
            seen_rep = 0
            for x in range(p):
                if used >> x & 1:
                    continue
                r = rep[x]
                if seen_rep >> r & 1:
                    continue
                seen_rep |= 1 << r
                mx = m[x]
                row = bytes(mx[y] for y in order)
                if best is None or row < best:
                    best = row
                    nxt = [(order + (x,), used | 1 << x)]
                elif row == best:
                    nxt.append((order + (x,), used | 1 << x))
        out += best
        frontier = nxt
    order, used = frontier[0]
    assert used == full
    return bytes(out), list(order)
