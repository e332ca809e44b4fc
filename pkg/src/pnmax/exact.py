"""Exact solvers over all vertex subsets.

Subsets are enumerated as integer masks in increasing order, in chunks of
``2**CHUNK_BITS`` consecutive masks sharing their high bits. Chunks are dealt
to shards in contiguous ranges and the per-shard optima are merged with the
ordering (value desc, mask asc), so the outcome never depends on the number
of shards.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from pnmax.graph import Graph, VertexSet, members
from pnmax.kinds import PN_KINDS, REDUCTION_TARGET, ParameterKind
from pnmax.pn import _private_flags, pn_score, set_class_predicate

K = ParameterKind

CHUNK_BITS = 16
WIDTH_LIMIT = 63


class SolverLimitError(ValueError):
    """The graph is too large for subset enumeration."""


@dataclass
class SolveOptions:
    max_width: int = 26
    parallel_shards: int = 1
    use_bounds: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.max_width <= WIDTH_LIMIT:
            raise ValueError(f"max_width must lie in [0, {WIDTH_LIMIT}]")
        if self.parallel_shards < 1:
            raise ValueError("parallel_shards must be positive")


@dataclass(frozen=True)
class SolveResult:
    kind: ParameterKind
    value: int | None
    witness: VertexSet | None
    explored: int
    method: str
    exists: bool = True
    only_trivial: bool | None = None

    @property
    def witness_list(self) -> list[int] | None:
        return None if self.witness is None else members(self.witness)


def _check_width(g: Graph, opts: SolveOptions) -> None:
    if g.order > opts.max_width:
        raise SolverLimitError(
            f"order {g.order} exceeds enumeration width {opts.max_width}; "
            "use the tree or grid solvers")


def _chunks(n: int) -> tuple[int, int]:
    low = min(n, CHUNK_BITS)
    return low, 1 << (n - low)


def _shard_ranges(nchunks: int, shards: int) -> list[range]:
    shards = min(shards, nchunks)
    step = math.ceil(nchunks / shards)
    return [range(s, min(s + step, nchunks)) for s in range(0, nchunks, step)]


def _run_shards(nchunks: int, shards: int, work: Callable[[range], tuple]) -> list[tuple]:
    ranges = _shard_ranges(nchunks, shards)
    if len(ranges) == 1:
        return [work(ranges[0])]
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        return list(pool.map(work, ranges))


# ---------------------------------------------------------------------------
# PN maximisation
# ---------------------------------------------------------------------------

def _contribution_table(kind: ParameterKind) -> np.ndarray:
    """table[in_u, min(count, 2)] = contribution of one vertex to the score."""
    s, i, e = kind.mask
    t = np.zeros((2, 3), dtype=np.int16)
    t[1, 0] = s
    t[1, 1] = i
    t[0, 1] = e
    return t


def _pn_enumerate(g: Graph, kind: ParameterKind, opts: SolveOptions) -> SolveResult:
    n = g.order
    low, nchunks = _chunks(n)
    lowmask = (1 << low) - 1
    span = np.arange(1 << low, dtype=np.uint64)
    table = _contribution_table(kind)
    # per low vertex: code = in_bit*4 + min(low count, 3)
    low_codes = []
    high_low_counts = []
    for v in range(n):
        cnt = np.minimum(np.bitwise_count(span & np.uint64(g.adjacency[v] & lowmask)), 3)
        if v < low:
            inbit = (span >> np.uint64(v)) & np.uint64(1)
            low_codes.append((inbit * 4 + cnt).astype(np.intp))
        else:
            high_low_counts.append(cnt.astype(np.intp))
    # luts[k][in_bit*4 + c]: contribution when the high bits add k more U-neighbours
    luts = {}
    for k in range(n + 1):
        luts[k] = np.array([table[inbit, min(c + k, 2)] for inbit in (0, 1) for c in range(4)],
                           dtype=np.int16)
    high_luts = {}
    for inbit in (0, 1):
        for k in range(n + 1):
            high_luts[inbit, k] = np.array([table[inbit, min(c + k, 2)] for c in range(4)],
                                           dtype=np.int16)

    def work(chunk_ids: range) -> tuple[int, int]:
        best_val, best_mask = -1, -1
        score = np.empty(1 << low, dtype=np.int16)
        for ch in chunk_ids:
            base = ch << low
            score.fill(0)
            for v in range(n):
                k = (g.adjacency[v] & base).bit_count()
                if v < low:
                    score += luts[min(k, n)][low_codes[v]]
                else:
                    score += high_luts[base >> v & 1, min(k, n)][high_low_counts[v - low]]
            idx = int(np.argmax(score))
            val = int(score[idx])
            if val > best_val:
                best_val, best_mask = val, base | idx
        return best_val, best_mask

    results = _run_shards(nchunks, opts.parallel_shards, work)
    value, witness = min(results, key=lambda r: (-r[0], r[1]))
    return SolveResult(kind, value, witness, 1 << n, "enumeration")


def _pn_branch_and_bound(g: Graph, kind: ParameterKind) -> SolveResult:
    """Depth-first search deciding vertices n-1 down to 0, excluding before including.

    That order visits masks in increasing integer order, so keeping only strict
    improvements yields the least optimal mask.
    """
    n = g.order
    table = _contribution_table(kind).tolist()
    adj = g.adjacency
    # vertices whose closed neighbourhood is fully decided once vertex i is decided
    low_end = [min(members(g.closed(w))) for w in range(n)]
    finalize_at = [[w for w in range(n) if low_end[w] == i] for i in range(n)]
    counts = [0] * n
    best = [-1, 0]
    explored = 0

    def contrib(w: int, mask: int) -> int:
        return table[mask >> w & 1][min(counts[w], 2)]

    def rec(i: int, mask: int, fixed: int, open_live: int) -> None:
        nonlocal explored
        explored += 1
        if fixed + open_live <= best[0]:
            return
        if i < 0:
            best[0], best[1] = fixed, mask
            return
        for take in (0, 1):
            new_mask = mask
            touched = []
            if take:
                new_mask |= 1 << i
                for w in members(adj[i]):
                    counts[w] += 1
                    touched.append(w)
            gained = 0
            live = 0
            for w in range(i):
                if counts[w] < 2:
                    live += 1
            for w in finalize_at[i]:
                gained += contrib(w, new_mask)
            # vertices >= i not yet final and still able to contribute
            for w in range(i, n):
                if low_end[w] < i and counts[w] < 2:
                    live += 1
            rec(i - 1, new_mask, fixed + gained, live)
            for w in touched:
                counts[w] -= 1

    rec(n - 1, 0, 0, n)
    if n == 0:
        best = [0, 0]
    return SolveResult(kind, best[0], best[1], explored, "branch_and_bound")


def solve_pn(g: Graph, kind: ParameterKind, opts: SolveOptions | None = None) -> SolveResult:
    """Maximum of the kind's private-neighbour score over all subsets of V(g)."""
    opts = opts or SolveOptions()
    if not kind.is_pn:
        raise ValueError(f"{kind} is not a private-neighbour kind")
    _check_width(g, opts)
    if g.order == 0:
        return SolveResult(kind, 0, 0, 1, "enumeration")
    if opts.use_bounds:
        return _pn_branch_and_bound(g, kind)
    return _pn_enumerate(g, kind, opts)


# ---------------------------------------------------------------------------
# Set classes and domination parameters
# ---------------------------------------------------------------------------

class _Counts:
    """U-neighbour counts and membership bits for an array of masks."""

    def __init__(self, g: Graph, masks: np.ndarray):
        self.masks = masks
        self.inb = [((masks >> np.uint64(v)) & np.uint64(1)).astype(bool) for v in range(g.order)]
        self.hits = [masks & np.uint64(row) for row in g.adjacency]
        self.cnt = [np.bitwise_count(h) for h in self.hits]

    def owners(self, inside: bool) -> np.ndarray:
        """Mask of members of U that own a private neighbour inside / outside U."""
        out = np.zeros_like(self.masks)
        for inb, h, c in zip(self.inb, self.hits, self.cnt):
            sel = (c == 1) & (inb if inside else ~inb)
            out |= np.where(sel, h, np.uint64(0))
        return out

    def selfs(self) -> np.ndarray:
        out = np.zeros_like(self.masks)
        for v, (inb, c) in enumerate(zip(self.inb, self.cnt)):
            out |= np.where(inb & (c == 0), np.uint64(1 << v), np.uint64(0))
        return out

    def all_of(self, per_vertex) -> np.ndarray:
        ok = np.ones(self.masks.shape, dtype=bool)
        for v, (inb, c) in enumerate(zip(self.inb, self.cnt)):
            ok &= per_vertex(inb, c)
        return ok


def _predicate(g: Graph, kind: ParameterKind, masks: np.ndarray) -> np.ndarray:
    if kind is K.UPPER_GAMMA:
        return _minimal(g, K.GAMMA, masks)
    if kind is K.UPPER_GAMMA_PVT:
        return _minimal(g, K.GAMMA_PVT, masks)
    c = _Counts(g, masks)
    if kind is K.ALPHA:
        return c.all_of(lambda inb, k: ~inb | (k == 0))
    if kind is K.ALPHA_STAR:
        return c.all_of(lambda inb, k: ~inb | (k == 1))
    if kind is K.ALPHA1:
        return c.all_of(lambda inb, k: ~inb | (k <= 1))
    if kind in (K.OIR, K.IR, K.OOIR, K.COIR, K.GAMMA_PVT):
        have = c.owners(inside=False)
        if kind in (K.IR, K.COIR):
            have |= c.selfs()
        if kind in (K.OOIR, K.COIR):
            have |= c.owners(inside=True)
        ok = (have & masks) == masks
        if kind is K.GAMMA_PVT:
            ok &= c.all_of(lambda inb, k: inb | (k >= 1))
        return ok
    if kind is K.GAMMA:
        return c.all_of(lambda inb, k: inb | (k >= 1))
    if kind in (K.GAMMA_P, K.UPPER_GAMMA_P):
        return c.all_of(lambda inb, k: inb | (k == 1))
    if kind in (K.GAMMA_TP, K.UPPER_GAMMA_TP):
        return c.all_of(lambda inb, k: k == 1)
    raise ValueError(f"{kind} is not a set-class or domination kind")


def _minimal(g: Graph, base: ParameterKind, masks: np.ndarray) -> np.ndarray:
    ok = _predicate(g, base, masks)
    for v in range(g.order):
        bit = np.uint64(1 << v)
        has = (masks & bit) != 0
        if not has.any():
            continue
        ok &= ~(has & _predicate(g, base, masks & ~bit))
    return ok


def solve_set_class(g: Graph, kind: ParameterKind, opts: SolveOptions | None = None) -> SolveResult:
    """Optimal cardinality of a set satisfying the kind's defining predicate.

    Lower parameters (gamma variants) minimise, everything else maximises.
    ALPHA_STAR reports edges of the strong matching, i.e. half the set size.
    When no set qualifies the result has ``exists=False`` and ``value=None``.
    """
    opts = opts or SolveOptions()
    if kind.is_pn:
        raise ValueError(f"{kind} is a private-neighbour kind; use solve_pn")
    _check_width(g, opts)
    n = g.order
    low, nchunks = _chunks(n)
    span = np.arange(1 << low, dtype=np.uint64)
    sizes_low = np.bitwise_count(span).astype(np.int16)

    def work(chunk_ids: range) -> tuple:
        best_min = (10**6, -1)
        best_max = (-1, -1)
        for ch in chunk_ids:
            base = ch << low
            masks = span | np.uint64(base)
            ok = _predicate(g, kind, masks)
            if not ok.any():
                continue
            sizes = sizes_low + base.bit_count()
            i_max = int(np.argmax(np.where(ok, sizes, -1)))
            i_min = int(np.argmin(np.where(ok, sizes, 10**4)))
            cand_max = (int(sizes[i_max]), base | i_max)
            cand_min = (int(sizes[i_min]), base | i_min)
            if cand_max[0] > best_max[0]:
                best_max = cand_max
            if cand_min[0] < best_min[0]:
                best_min = cand_min
        return best_min, best_max

    results = _run_shards(nchunks, opts.parallel_shards, work)
    best_min = min((r[0] for r in results), key=lambda t: (t[0], t[1]))
    best_max = min((r[1] for r in results), key=lambda t: (-t[0], t[1]))
    if best_max[1] < 0:
        return SolveResult(kind, None, None, 1 << n, "enumeration", exists=False)
    size, witness = best_min if kind.minimizes else best_max
    value = size // 2 if kind is K.ALPHA_STAR else size
    only_trivial = None
    if kind in (K.GAMMA_P, K.UPPER_GAMMA_P):
        only_trivial = best_min[0] == n
    return SolveResult(kind, value, witness, 1 << n, "enumeration", only_trivial=only_trivial)


def solve(g: Graph, kind: ParameterKind, opts: SolveOptions | None = None) -> SolveResult:
    if kind.is_pn:
        return solve_pn(g, kind, opts)
    return solve_set_class(g, kind, opts)


# ---------------------------------------------------------------------------
# Reductions to irredundance-type sets
# ---------------------------------------------------------------------------

def _violators(g: Graph, a: VertexSet, kind: ParameterKind) -> VertexSet:
    if kind is K.ISPN:
        return sum(1 << v for v in members(a) if (g.adjacency[v] & a).bit_count() >= 2)
    ext, internal, self_ = _private_flags(g, a)
    keep = {
        K.EPN: ext,
        K.ESPN: ext | self_,
        K.EIPN: ext | internal,
        K.EISPN: ext | internal | self_,
    }[kind]
    return a & ~keep


def reduce_to_class(g: Graph, a: VertexSet, kind: ParameterKind) -> VertexSet:
    """Delete the least violating vertex of ``a`` until none remains.

    The result is a subset of ``a`` in the set class paired with ``kind``
    (OIR, IR, OOIR, 1-dependent, COIR) whose score is at least that of ``a``.
    """
    if kind not in REDUCTION_TARGET:
        raise ValueError(f"no reduction for {kind}")
    while True:
        bad = _violators(g, a, kind)
        if not bad:
            return a
        a &= ~(bad & -bad)


__all__ = [
    "SolveOptions", "SolveResult", "SolverLimitError", "solve", "solve_pn",
    "solve_set_class", "reduce_to_class", "PN_KINDS", "pn_score", "set_class_predicate",
]
