"""Slow reference implementations built on networkx and Python sets.

Nothing here touches the bitmask code paths, so these serve as independent
oracles for the package's solvers.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from pnmax.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def gap_graph() -> Graph:
    """Order-10 graph with 2*alpha_star = 4 < IPN = 6.

    u=0, x1..x3=1..3, a=4, b=5, y1..y3=6..8, v=9.
    """
    edges = [(4, 1), (4, 2), (4, 3), (5, 6), (5, 7), (5, 8), (0, 1), (0, 3), (9, 6), (9, 8), (4, 5)]
    return build_graph(10, edges, "gap10")


def N(h: nx.Graph, v) -> set:
    return set(h[v])


def N_closed(h: nx.Graph, v) -> set:
    return set(h[v]) | {v}


def N_set(h: nx.Graph, U) -> set:
    out = set()
    for v in U:
        out |= N(h, v)
    return out


def N_set_closed(h: nx.Graph, U) -> set:
    return N_set(h, U) | set(U)


def triple(h: nx.Graph, U: set) -> tuple[int, int, int]:
    s = sum(1 for w in U if not (N(h, w) & U))
    i = sum(1 for w in U if len(N(h, w) & U) == 1)
    e = sum(1 for w in set(h) - U if len(N(h, w) & U) == 1)
    return s, i, e


MASKS = {
    "SPN": (1, 0, 0), "IPN": (0, 1, 0), "EPN": (0, 0, 1), "ESPN": (1, 0, 1),
    "EIPN": (0, 1, 1), "ISPN": (1, 1, 0), "EISPN": (1, 1, 1),
}


def score(h: nx.Graph, U: set, kind: str) -> int:
    return sum(a * b for a, b in zip(MASKS[kind], triple(h, U)))


def all_subsets(h: nx.Graph):
    nodes = sorted(h)
    for r in range(len(nodes) + 1):
        for c in combinations(nodes, r):
            yield set(c)


def to_mask(U) -> int:
    return sum(1 << v for v in U)


def brute_pn(g: Graph, kind: str) -> tuple[int, int]:
    """(optimum, least optimal mask)."""
    h = to_nx(g)
    best = (-1, 0)
    for U in all_subsets(h):
        val = score(h, U, kind)
        key = (val, -to_mask(U))
        if key > (best[0], -best[1]):
            best = (val, to_mask(U))
    return best


# set-builder formulations of the set classes
def set_builder(h: nx.Graph, U: set, kind: str) -> bool:
    def rest(v):
        return U - {v}
    if kind == "ALPHA":
        return all(not (N(h, v) & U) for v in U)
    if kind == "ALPHA_STAR":
        return all(len(N(h, v) & U) == 1 for v in U)
    if kind == "ALPHA1":
        return all(len(N(h, v) & U) <= 1 for v in U)
    if kind == "OIR":
        return all(len(N(h, v) - N_set_closed(h, rest(v))) >= 1 for v in U)
    if kind == "IR":
        return all(len(N_closed(h, v) - N_set_closed(h, rest(v))) >= 1 for v in U)
    if kind == "OOIR":
        return all(len(N(h, v) - N_set(h, rest(v))) >= 1 for v in U)
    if kind == "COIR":
        return all(len(N_closed(h, v) - N_set(h, rest(v))) >= 1 for v in U)
    dominating = N_set_closed(h, U) == set(h)
    if kind == "GAMMA":
        return dominating
    if kind == "UPPER_GAMMA":
        return dominating and all(N_set_closed(h, rest(v)) != set(h) for v in U)
    if kind in ("GAMMA_P", "UPPER_GAMMA_P"):
        return all(len(N(h, v) & U) == 1 for v in set(h) - U)
    if kind in ("GAMMA_TP", "UPPER_GAMMA_TP"):
        return all(len(N(h, v) & U) == 1 for v in h)

    def pvt(W):
        return (N_set_closed(h, W) == set(h)
                and all(len(N(h, v) - N_set_closed(h, W - {v})) >= 1 for v in W))
    if kind == "GAMMA_PVT":
        return pvt(U)
    if kind == "UPPER_GAMMA_PVT":
        return pvt(U) and not any(pvt(U - {v}) for v in U)
    raise ValueError(kind)


MINIMIZE = {"GAMMA", "GAMMA_P", "GAMMA_TP", "GAMMA_PVT"}


def brute_set_class(g: Graph, kind: str) -> tuple[int | None, int | None]:
    """(value, least mask among optimal-cardinality sets); (None, None) if no set qualifies."""
    h = to_nx(g)
    sizes = [(len(U), to_mask(U)) for U in all_subsets(h) if set_builder(h, U, kind)]
    if not sizes:
        return None, None
    if kind in MINIMIZE:
        size, mask = min(sizes, key=lambda t: (t[0], t[1]))
    else:
        size, mask = min(sizes, key=lambda t: (-t[0], t[1]))
    return (size // 2 if kind == "ALPHA_STAR" else size), mask


@st.composite
def graphs(draw, max_n=12):
    """Hypothesis strategy: arbitrary simple graphs on at most ``max_n`` vertices."""
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)
