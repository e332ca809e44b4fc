"""Dynamic programs for trees and for grids P_n x P_m with few rows.

Every private-neighbour status depends only on membership in U and on the
number of U-neighbours capped at 2, so both programs carry per-vertex states
(member?, capped count) and add a vertex's contribution once all of its
neighbours' memberships are fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from pnmax.exact import SolveResult
from pnmax.graph import Graph, GraphError, vertex_set
from pnmax.kinds import ParameterKind

NEG = -(10**9)
MAX_GRID_ROWS = 6


def _table(kind: ParameterKind) -> list[list[int]]:
    s, i, e = kind.mask
    return [[0, int(e), 0], [int(s), int(i), 0]]


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

def _rooted_children(t: Graph) -> tuple[list[int], list[list[int]]]:
    """Preorder from vertex 0 and the children lists, children in index order."""
    parent = [-1] * t.order
    children: list[list[int]] = [[] for _ in range(t.order)]
    order = [0]
    seen = {0}
    for v in order:
        for w in t.neighbors(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                children[v].append(w)
                order.append(w)
    return order, children


def solve_pn_tree(t: Graph, kind: ParameterKind, witness: bool = True) -> SolveResult:
    if not kind.is_pn:
        raise ValueError(f"{kind} is not a private-neighbour kind")
    if not t.is_tree():
        raise GraphError("input is not a tree")
    table = _table(kind)
    order, children = _rooted_children(t)
    # dp[v][in][k]: best total over v's subtree, v's own term excluded,
    # k = U-neighbours of v among its children (capped at 2)
    dp: list[list[list[int]] | None] = [None] * t.order
    back: list[list[dict]] = [[] for _ in range(t.order)]
    for v in reversed(order):
        cur = [[0, NEG, NEG], [0, NEG, NEG]]
        for c in children[v]:
            dc = dp[c]
            nxt = [[NEG] * 3 for _ in range(2)]
            choice: dict = {}
            for in_v in (0, 1):
                for k in range(3):
                    base = cur[in_v][k]
                    if base == NEG:
                        continue
                    for in_c in (0, 1):
                        k2 = min(2, k + in_c)
                        for kc in range(3):
                            if dc[in_c][kc] == NEG:
                                continue
                            val = base + dc[in_c][kc] + table[in_c][min(2, kc + in_v)]
                            if val > nxt[in_v][k2]:
                                nxt[in_v][k2] = val
                                choice[in_v, k2] = (k, in_c, kc)
            cur = nxt
            if witness:
                back[v].append(choice)
            dp[c] = None
        dp[v] = cur
    root = dp[0]
    best, state = NEG, (0, 0)
    for in_r in (0, 1):
        for k in range(3):
            if root[in_r][k] != NEG and root[in_r][k] + table[in_r][k] > best:
                best = root[in_r][k] + table[in_r][k]
                state = (in_r, k)
    mask = None
    if witness:
        chosen = []
        stack = [(0, state)]
        while stack:
            v, (in_v, k) = stack.pop()
            if in_v:
                chosen.append(v)
            for j in range(len(children[v]) - 1, -1, -1):
                k_prev, in_c, kc = back[v][j][in_v, k]
                stack.append((children[v][j], (in_c, kc)))
                k = k_prev
        mask = vertex_set(chosen)
    return SolveResult(kind, best, mask, t.order, "tree_dp")


@dataclass(frozen=True)
class TreeBoundReport:
    order: int
    ipn: int
    bound: int
    holds: bool
    tight: bool


def verify_tree_lower_bound(t: Graph) -> TreeBoundReport:
    """Compare IPN(t) against half the order; ``tight`` means 2*IPN == n."""
    if not t.is_tree():
        raise GraphError("input is not a tree")
    if t.order < 2:
        raise GraphError("tree must have at least two vertices")
    ipn = solve_pn_tree(t, ParameterKind.IPN, witness=False).value
    n = t.order
    return TreeBoundReport(n, ipn, math.ceil(n / 2), 2 * ipn >= n, 2 * ipn == n)


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

class _GridTables:
    """Transition tables for one (rows, kind) pair, shared across columns."""

    def __init__(self, m: int, kind: ParameterKind):
        self.m = m
        nb, nc = 1 << m, 3 ** m
        table = np.array(_table(kind), dtype=np.int32)
        bits = np.array([[b >> r & 1 for r in range(m)] for b in range(nb)], dtype=np.int64)
        vert = np.zeros_like(bits)
        if m > 1:
            vert[:, 1:] += bits[:, :-1]
            vert[:, :-1] += bits[:, 1:]
        digits = np.array([[c // 3**r % 3 for r in range(m)] for c in range(nc)], dtype=np.int64)
        pow3 = 3 ** np.arange(m)
        # counts of a fresh column b preceded by column mp: horizontal + vertical
        fresh = np.minimum(2, bits[:, None, :] + vert[None, :, :])
        self.newcode = (fresh * pow3).sum(axis=2)                       # [mp, b]
        self.initcode = (np.minimum(2, vert) * pow3).sum(axis=1)        # [b]
        # contribution of column mp with partial counts c once the next column is b
        final = np.minimum(2, digits[None, :, None, :] + bits[None, None, :, :])
        self.contrib = table[bits[:, None, None, :], final].sum(axis=3).astype(np.int32)


def solve_pn_grid(n: int, m: int, kind: ParameterKind, witness: bool | None = None) -> SolveResult:
    """Column-by-column DP over P_n x P_m (n columns, m rows).

    Vertex (column i, row r) is ``i*m + r``, matching ``grid(n, m)``. Witness
    reconstruction is on by default when ``n*m <= 64``.
    """
    if not kind.is_pn:
        raise ValueError(f"{kind} is not a private-neighbour kind")
    if not 1 <= m <= MAX_GRID_ROWS:
        raise GraphError(f"grid DP supports 1 <= m <= {MAX_GRID_ROWS} rows, got {m}")
    if n < 1:
        raise GraphError("grid needs at least one column")
    if witness is None:
        witness = n * m <= 64
    tb = _GridTables(m, kind)
    nb, nc = 1 << m, 3 ** m
    val = np.full((nb, nc), NEG, dtype=np.int64)
    val[np.arange(nb), tb.initcode] = 0
    history = []
    mp_idx = np.repeat(np.arange(nb), nb)
    b_idx = np.tile(np.arange(nb), nb)
    targets = (b_idx * nc + tb.newcode.ravel()).astype(np.int64)
    for _ in range(n - 1):
        total = val[:, :, None] + tb.contrib                     # [mp, c, b]
        best_c = total.argmax(axis=1)                            # [mp, b]
        cand = np.take_along_axis(total, best_c[:, None, :], axis=1)[:, 0, :].ravel()
        order = np.lexsort((mp_idx, -cand, targets))
        tsorted = targets[order]
        first = np.ones(len(order), dtype=bool)
        first[1:] = tsorted[1:] != tsorted[:-1]
        keep = order[first]
        new_val = np.full(nb * nc, NEG, dtype=np.int64)
        new_val[targets[keep]] = cand[keep]
        new_val = np.maximum(new_val, NEG)
        if witness:
            bp_mp = np.full(nb * nc, -1, dtype=np.int64)
            bp_mp[targets[keep]] = mp_idx[keep]
            history.append((best_c, bp_mp))
        val = new_val.reshape(nb, nc)
    final = val + tb.contrib[:, :, 0]
    flat = int(final.argmax())
    best = int(final.ravel()[flat])
    mask = None
    if witness:
        mp, c = divmod(flat, nc)
        cols = [mp]
        for best_c, bp_mp in reversed(history):
            prev = int(bp_mp[mp * nc + c])
            c = int(best_c[prev, mp])
            mp = prev
            cols.append(mp)
        cols.reverse()
        mask = vertex_set(i * m + r for i, b in enumerate(cols) for r in range(m) if b >> r & 1)
    return SolveResult(kind, best, mask, n * nb * nc, "grid_dp")
