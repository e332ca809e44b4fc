"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` whose bit ``v`` is set
when ``v`` belongs to the set; the helpers :func:`vertex_set` and
:func:`members` convert between masks and vertex lists.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_ORDER = 128

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range family parameters."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Sorted list of the vertices in ``mask``."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.order:
            raise GraphError("adjacency rows do not match order")
        if self.order > MAX_ORDER:
            raise GraphError(f"order {self.order} exceeds {MAX_ORDER}")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for w in members(row):
                if not self.adjacency[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> list[int]:
        return members(self.adjacency[v])

    def closed(self, v: int) -> VertexSet:
        return self.adjacency[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.order) for w in members(self.adjacency[u]) if u < w]

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adjacency[u] >> w & 1)

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.adjacency[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.all_vertices

    def is_tree(self) -> bool:
        return self.order >= 1 and self.size == self.order - 1 and self.is_connected()

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.adjacency)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.order, [(perm[u], perm[w]) for u, w in self.edges()], self.label)

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph{tag} n={self.order} m={self.size}>"


def build_graph(order: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
    if order < 0:
        raise GraphError("order must be nonnegative")
    if order > MAX_ORDER:
        raise GraphError(f"order {order} exceeds {MAX_ORDER}")
    adj = [0] * order
    for u, w in edges:
        if not (0 <= u < order and 0 <= w < order):
            raise GraphError(f"edge ({u}, {w}) has an endpoint out of range for order {order}")
        if u == w:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << w
        adj[w] |= 1 << u
    return Graph(order, tuple(adj), label)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def path(n: int) -> Graph:
    _check(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], f"path:{n}")


def cycle(n: int) -> Graph:
    _check(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def star(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0, leaves 1..leaves."""
    _check(leaves >= 1, "star needs at least one leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], f"star:{leaves}")


def double_star(p: int, q: int) -> Graph:
    """S(p, q): centres 0 and 1; leaves of 0 are 2..p+1, leaves of 1 follow."""
    _check(p >= 1 and q >= 1, "double_star needs p, q >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return build_graph(p + q + 2, edges, f"double_star:{p},{q}")


def complete(n: int) -> Graph:
    _check(n >= 1, "complete needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"complete:{n}")


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: part A is 0..p-1, part B is p..p+q-1."""
    _check(p >= 1 and q >= 1, "complete_bipartite needs p, q >= 1")
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)],
                       f"complete_bipartite:{p},{q}")


def grid(n: int, m: int) -> Graph:
    """P_n x P_m with n columns of m rows; vertex (i, r) is ``i*m + r``."""
    _check(n >= 1 and m >= 1, "grid needs n, m >= 1")
    edges = [(i * m + r, i * m + r + 1) for i in range(n) for r in range(m - 1)]
    edges += [(i * m + r, (i + 1) * m + r) for i in range(n - 1) for r in range(m)]
    return build_graph(n * m, edges, f"grid:{n},{m}")


def corona_path(m: int) -> Graph:
    """P_m with a pendant leaf on every vertex; spine u_i = 2i, leaf v_i = 2i+1."""
    _check(m >= 1, "corona_path needs m >= 1")
    edges = [(2 * i, 2 * i + 1) for i in range(m)]
    edges += [(2 * i, 2 * i + 2) for i in range(m - 1)]
    return build_graph(2 * m, edges, f"corona_path:{m}")


def espn_tree(k: int) -> Graph:
    """Spine P_k; each spine vertex gets two leaves and a pendant path of two more vertices.

    Block ``i`` occupies ``5i..5i+4``: spine, leaf, leaf, then the pendant path
    ``5i - 5i+3 - 5i+4``.
    """
    _check(k >= 2, "espn_tree needs k >= 2")
    edges = []
    for i in range(k):
        s = 5 * i
        edges += [(s, s + 1), (s, s + 2), (s, s + 3), (s + 3, s + 4)]
        if i + 1 < k:
            edges.append((s, s + 5))
    return build_graph(5 * k, edges, f"espn_tree:{k}")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G x H with vertex (a, x) numbered ``a * n(H) + x``."""
    n = g.order * h.order
    if n > MAX_ORDER:
        raise GraphError(f"product order {n} exceeds {MAX_ORDER}")
    if n > 26:
        warnings.warn(f"product has {n} vertices; too large for subset enumeration",
                      stacklevel=2)
    nh = h.order
    edges = []
    for a in range(g.order):
        for x, y in h.edges():
            edges.append((a * nh + x, a * nh + y))
    for a, b in g.edges():
        for x in range(nh):
            edges.append((a * nh + x, b * nh + x))
    label = f"cartesian:({g.label})*({h.label})" if g.label and h.label else ""
    return build_graph(n, edges, label)


def _check(ok: bool, msg: str) -> None:
    if not ok:
        raise GraphError(msg)


# ---------------------------------------------------------------------------
# Family spec strings: "grid:8,3", "double_star:3,4", "cartesian:(path:3)*(cycle:4)"
# ---------------------------------------------------------------------------

_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "double_star": (double_star, 2),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "grid": (grid, 2),
    "corona_path": (corona_path, 1),
    "espn_tree": (espn_tree, 1),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    factors: tuple[FamilySpec, ...] = ()

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        text = text.strip()
        if text.startswith("(") and _matching_paren(text, 0) == len(text) - 1:
            return cls.parse(text[1:-1])
        name, sep, rest = text.partition(":")
        name = name.strip()
        if not sep:
            raise GraphError(f"family spec {text!r} lacks ':'")
        if name == "cartesian":
            left, right = _split_product(rest)
            return cls("cartesian", (), (cls.parse(left), cls.parse(right)))
        if name not in _FAMILIES:
            raise GraphError(f"unknown family {name!r}")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise GraphError(f"bad parameters in {text!r}") from None
        if len(params) != _FAMILIES[name][1]:
            raise GraphError(f"{name} takes {_FAMILIES[name][1]} parameter(s)")
        return cls(name, params)

    def __str__(self) -> str:
        if self.family == "cartesian":
            return f"cartesian:({self.factors[0]})*({self.factors[1]})"
        return f"{self.family}:{','.join(map(str, self.params))}"


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise GraphError(f"unbalanced parentheses in {text!r}")


def _split_product(text: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            return text[:i], text[i + 1:]
    raise GraphError(f"cartesian spec {text!r} needs '<spec>*<spec>'")


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if spec.family == "cartesian":
        g = cartesian_product(generate(spec.factors[0]), generate(spec.factors[1]))
        return Graph(g.order, g.adjacency, str(spec))
    if spec.family not in _FAMILIES:
        raise GraphError(f"unknown family {spec.family!r}")
    fn, arity = _FAMILIES[spec.family]
    if len(spec.params) != arity:
        raise GraphError(f"{spec.family} takes {arity} parameter(s)")
    return fn(*spec.params)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <order>`` followed by ``u v`` lines; ``#`` starts a comment line."""
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected header 'n <order>'")
            order = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, w = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: malformed edge {line!r}") from None
        if not (0 <= u < order and 0 <= w < order):
            raise GraphError(f"line {lineno}: index out of range")
        edges.append((u, w))
    if order is None:
        raise GraphError("missing 'n <order>' header")
    return build_graph(order, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.order}"] + [f"{u} {w}" for u, w in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphError(f"bad graph6 character {ch!r}")
        data.append(c - 63)
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported or truncated graph6 order field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} chunks, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.order
    if n < 63:
        out = [n]
    else:
        out = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    bits = [g.adjacency[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(chunk)
    return "".join(chr(c + 63) for c in out)
