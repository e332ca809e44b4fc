"""Seeded and exhaustive graph streams for verification sweeps and searches."""

from __future__ import annotations

import random
from typing import Iterator

import networkx as nx

from pnmax.graph import Graph, build_graph

ATLAS_MAX_ORDER = 7


def from_networkx(g: nx.Graph, label: str = "") -> Graph:
    index = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return build_graph(len(index), [(index[a], index[b]) for a, b in g.edges()], label)


def free_trees(n: int) -> Iterator[Graph]:
    """All non-isomorphic trees of order ``n``."""
    if n == 1:
        yield build_graph(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield from_networkx(t)


def atlas_graphs(max_n: int, connected: bool = True) -> Iterator[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > ATLAS_MAX_ORDER:
        raise ValueError(f"exhaustive corpus only covers orders <= {ATLAS_MAX_ORDER}")
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(g):
            continue
        yield from_networkx(g)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return from_networkx(nx.from_prufer_sequence(seq))


def random_connected_graph(n: int, rng: random.Random, extra_p: float | None = None) -> Graph:
    """A random spanning tree plus each remaining pair independently with probability ``extra_p``."""
    tree = random_tree(n, rng)
    if extra_p is None:
        extra_p = rng.uniform(0.05, 0.6)
    edges = set(tree.edges())
    for u in range(n):
        for w in range(u + 1, n):
            if (u, w) not in edges and rng.random() < extra_p:
                edges.add((u, w))
    return build_graph(n, sorted(edges))


def random_trees(count: int, min_n: int, max_n: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_tree(rng.randint(min_n, max_n), rng)


def random_connected_graphs(count: int, min_n: int, max_n: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_connected_graph(rng.randint(min_n, max_n), rng)
