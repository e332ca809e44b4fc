"""Closed forms, efficiency classes, efficient-graph constructions and inequality checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

from pnmax.exact import SolveOptions, SolveResult, SolverLimitError, solve, solve_pn
from pnmax.graph import (Graph, GraphError, VertexSet, build_graph, complete_bipartite, cycle,
                         espn_tree, grid, members, path)
from pnmax.kinds import PN_KINDS, ParameterKind
from pnmax.structured import MAX_GRID_ROWS, solve_pn_grid, solve_pn_tree

K = ParameterKind


class UnsupportedFormula(ValueError):
    pass


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _path_formula(kind: ParameterKind, n: int, literal: bool) -> int:
    if kind is K.SPN:
        return ceil(n / 2)
    if kind is K.IPN:
        return 2 * ceil((n - 1) / 3)
    if kind is K.EPN:
        return 2 * (n // 3) + (1 if n % 3 == 2 else 0)
    if kind is K.EIPN:
        return 4 * (n // 4) if n % 4 in (0, 1) else n
    if kind in (K.ESPN, K.EISPN):
        return n
    if kind is K.ISPN:
        return 2 * ceil((n - 1) / 3) + (1 if n % 3 == 1 else 0)
    raise UnsupportedFormula(kind)


def _cycle_formula(kind: ParameterKind, n: int, literal: bool) -> int:
    if kind is K.SPN:
        return n // 2
    if kind in (K.IPN, K.EPN):
        return 2 * (n // 3)
    if kind is K.EIPN:
        return n - 1 if n % 4 == 3 else 4 * ceil((n - 2) / 4)
    if kind is K.ESPN:
        return n if n % 3 == 0 else n - 1
    if kind is K.ISPN:
        if n % 3 == 2:
            # as printed the first term is 2*ceil(n/3), which overshoots by 2
            return 2 * ceil(n / 3) + 1 if literal else 2 * (n // 3) + 1
        return 2 * (n // 3)
    if kind is K.EISPN:
        return 4 if n == 5 else n
    raise UnsupportedFormula(kind)


def _bipartite_formula(kind: ParameterKind, p: int, q: int, literal: bool) -> int:
    if kind is K.SPN:
        return q
    if kind in (K.IPN, K.ISPN):
        # K_{1,1} = P_2 has both vertices internal
        return 2 if (p == q == 1 and not literal) else q
    if kind is K.EPN:
        return q if p == 1 else p + q - 2
    if kind in (K.EIPN, K.EISPN):
        return p + q
    if kind is K.ESPN:
        if p == 1:
            return q + 1
        # one vertex of the smaller side alone gives S=1, E=q
        return max(1 + p, p + q - 2) if literal else max(1 + q, p + q - 2)
    raise UnsupportedFormula(kind)


def formula_value(family: str, kind: ParameterKind, *params: int, literal: bool = False) -> int:
    """Closed-form value of ``kind`` on a path, cycle, K_{p,q} or prism.

    ``literal=True`` evaluates the expressions exactly as originally printed,
    including the three cases that disagree with exhaustive search; see
    :data:`FORMULA_ERRATA`.
    """
    if family == "path":
        (n,) = params
        if n < 2:
            raise ValueError("path formulas need n >= 2")
        return _path_formula(kind, n, literal)
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("cycle formulas need n >= 3")
        return _cycle_formula(kind, n, literal)
    if family == "complete_bipartite":
        p, q = params
        if not 1 <= p <= q:
            raise ValueError("complete_bipartite formulas need 1 <= p <= q")
        return _bipartite_formula(kind, p, q, literal)
    if family == "prism_espn":
        (n,) = params
        if n < 2:
            raise ValueError("prism formula needs n >= 2")
        if kind is not K.ESPN:
            raise UnsupportedFormula(f"prism formula only covers ESPN, not {kind}")
        return 2 * n if n % 2 else 2 * n - 1
    raise UnsupportedFormula(f"no formula for family {family!r}")


FORMULA_ERRATA = (
    ("cycle", K.ISPN, "n = 2 mod 3", "2*ceil(n/3)+1", "2*floor(n/3)+1"),
    ("complete_bipartite", K.ESPN, "p >= 2", "max(1+p, p+q-2)", "max(1+q, p+q-2)"),
    ("complete_bipartite", K.IPN, "p = q = 1", "q", "2"),
    ("complete_bipartite", K.ISPN, "p = q = 1", "q", "2"),
)

FORMULA_KINDS = {
    "path": PN_KINDS,
    "cycle": PN_KINDS,
    "complete_bipartite": PN_KINDS,
    "prism_espn": (K.ESPN,),
}


def formula_instances(max_n: int, prism_max_n: int = 12):
    """Paths and cycles of order <= max_n, K_{p,q} with p+q <= max_n, prisms G_{n,2} with n <= prism_max_n."""
    for n in range(2, max_n + 1):
        yield "path", (n,), path(n)
    for n in range(3, max_n + 1):
        yield "cycle", (n,), cycle(n)
    for p in range(1, max_n):
        for q in range(p, max_n - p + 1):
            yield "complete_bipartite", (p, q), complete_bipartite(p, q)
    for n in range(2, prism_max_n + 1):
        yield "prism_espn", (n,), grid(n, 2)


@dataclass
class FormulaReport:
    checked: int = 0
    mismatches: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_formulas_against_oracle(max_n: int, opts: SolveOptions | None = None,
                                  prism_max_n: int = 12) -> FormulaReport:
    report = FormulaReport()
    for family, params, g in formula_instances(max_n, prism_max_n):
        for kind in FORMULA_KINDS[family]:
            expected = formula_value(family, kind, *params)
            got = solve_pn(g, kind, opts).value
            report.checked += 1
            if got != expected:
                report.mismatches.append((family, params, kind.value, expected, got))
    return report


# ---------------------------------------------------------------------------
# Efficiency classes
# ---------------------------------------------------------------------------

EFFICIENCY_CLASSES = ("ES", "EIS", "EI", "I", "S", "IS")


def _solve_routed(g: Graph, kind: ParameterKind, opts: SolveOptions | None) -> SolveResult:
    opts = opts or SolveOptions()
    if g.order <= opts.max_width:
        return solve_pn(g, kind, opts)
    if g.is_tree():
        return solve_pn_tree(g, kind)
    if g.label.startswith("grid:"):
        n, m = (int(x) for x in g.label[5:].split(","))
        if m <= MAX_GRID_ROWS:
            return solve_pn_grid(n, m, kind, witness=True)
        if n <= MAX_GRID_ROWS:
            raise SolverLimitError("transpose the grid so that it has at most 6 rows")
    raise SolverLimitError(f"no solver can handle {g!r}")


@dataclass
class EfficiencyClass:
    classes: frozenset[str]
    witnesses: dict[str, VertexSet]

    def __contains__(self, name: str) -> bool:
        return name in self.classes


def efficiency_classes(g: Graph, opts: SolveOptions | None = None) -> EfficiencyClass:
    n = g.order
    found: dict[str, VertexSet] = {}
    for name, kind in (("ES", K.ESPN), ("EIS", K.EISPN), ("EI", K.EIPN)):
        r = _solve_routed(g, kind, opts)
        if r.value == n:
            found[name] = r.witness
    degs = g.degrees()
    everything = g.all_vertices
    if all(d == 1 for d in degs):
        found["I"] = everything
    if all(d == 0 for d in degs):
        found["S"] = everything
    if all(d <= 1 for d in degs):
        found["IS"] = everything
    return EfficiencyClass(frozenset(found), found)


def closed_neighbourhood_partition(g: Graph, d: VertexSet) -> bool:
    """Whether the closed neighbourhoods of the vertices of ``d`` partition V(g)."""
    seen = 0
    for v in members(d):
        nb = g.closed(v)
        if nb & seen:
            return False
        seen |= nb
    return seen == g.all_vertices


# ---------------------------------------------------------------------------
# Constructions of connected EI- and EIS-efficient graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Part:
    """A building block: ``F1`` double star S(p, q); ``F2`` star with ``leaves >= 2``
    (centre and leaf 1 marked); ``F3`` star with ``leaves >= 1`` (centre marked)."""

    family: str
    params: tuple[int, ...]

    def layout(self) -> tuple[int, list[tuple[int, int]], list[int]]:
        """(order, local edges, marked local vertices)."""
        if self.family == "F1":
            p, q = self.params
            if p < 1 or q < 1:
                raise GraphError("F1 double star needs p, q >= 1")
            edges = [(0, 1)] + [(0, 2 + i) for i in range(p)] + [(1, 2 + p + i) for i in range(q)]
            return p + q + 2, edges, [0, 1]
        if self.family in ("F2", "F3"):
            (leaves,) = self.params
            if leaves < (2 if self.family == "F2" else 1):
                raise GraphError(f"{self.family} star has too few leaves")
            edges = [(0, i) for i in range(1, leaves + 1)]
            return leaves + 1, edges, ([0, 1] if self.family == "F2" else [0])
        raise GraphError(f"unknown part family {self.family!r}")


@dataclass(frozen=True)
class ConstructionSpec:
    parts: tuple[Part, ...]
    # each join is ((part, local vertex), (part, local vertex))
    joins: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = ()


@dataclass(frozen=True)
class Construction:
    graph: Graph
    marked: VertexSet
    blocks: tuple[VertexSet, ...]


def construct_efficient(spec: ConstructionSpec, mode: str) -> Construction:
    """Glue stars and double stars along leaf-to-leaf edges.

    The marked vertices form the witness set; ``blocks`` lists the closed
    neighbourhood of each part's marked vertices, which partition V.
    """
    if mode not in ("EI", "EIS"):
        raise ValueError("mode must be 'EI' or 'EIS'")
    if not spec.parts:
        raise GraphError("construction needs at least one part")
    offset = []
    edges: list[tuple[int, int]] = []
    marked: list[int] = []
    unmarked = set()
    n = 0
    for part in spec.parts:
        if part.family == "F3" and mode == "EI":
            raise GraphError("F3 parts are only allowed in EIS mode")
        order, local_edges, local_marked = part.layout()
        offset.append(n)
        edges += [(n + a, n + b) for a, b in local_edges]
        marked += [n + v for v in local_marked]
        unmarked.update(n + v for v in range(order) if v not in local_marked)
        n += order
    existing = {frozenset(e) for e in edges}
    for (pa, va), (pb, vb) in spec.joins:
        a, b = offset[pa] + va, offset[pb] + vb
        if va >= spec.parts[pa].layout()[0] or vb >= spec.parts[pb].layout()[0]:
            raise GraphError("join refers to a vertex outside its part")
        if a not in unmarked or b not in unmarked:
            raise GraphError("joins may only touch unmarked vertices")
        if a == b or frozenset((a, b)) in existing:
            raise GraphError(f"join ({a}, {b}) is a loop or repeats an edge")
        existing.add(frozenset((a, b)))
        edges.append((a, b))
    g = build_graph(n, edges, "construction")
    if not g.is_connected():
        raise GraphError("constructed graph is disconnected")
    blocks = []
    for i, part in enumerate(spec.parts):
        block = 0
        for v in part.layout()[2]:
            block |= g.closed(offset[i] + v)
        blocks.append(block)
    mask = 0
    for v in marked:
        mask |= 1 << v
    return Construction(g, mask, tuple(blocks))


# ---------------------------------------------------------------------------
# Inequality report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int
    relation: str  # "<=" or "=="

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs if self.relation == "<=" else self.lhs == self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class InequalityReport:
    values: dict[str, int | None]
    checks: list[Check]

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.holds]

    @property
    def ok(self) -> bool:
        return not self.violations


CHAIN_KINDS = (K.ALPHA, K.ALPHA_STAR, K.OIR, K.IR, K.OOIR, K.ALPHA1, K.COIR)


def verify_inequality_report(g: Graph, opts: SolveOptions | None = None,
                             include_domination: bool = True) -> InequalityReport:
    """Evaluate the private-neighbour inequality chains, their set-class lower
    bounds, and the perfect / private domination relations on ``g``."""
    v: dict[str, int | None] = {}
    for kind in PN_KINDS + CHAIN_KINDS:
        v[kind.value] = solve(g, kind, opts).value
    checks = []

    def le(a: str, b: str, lhs=None, rhs=None, name=None):
        checks.append(Check(name or f"{a} <= {b}", v[a] if lhs is None else lhs,
                            v[b] if rhs is None else rhs, "<="))

    for a, b, c in (("SPN", "ESPN", "EISPN"), ("SPN", "ISPN", "EISPN"), ("IPN", "ISPN", "EISPN"),
                    ("IPN", "EIPN", "EISPN"), ("EPN", "ESPN", "EISPN"), ("EPN", "EIPN", "EISPN")):
        le(a, b)
        le(b, c)
    checks.append(Check("ALPHA == SPN", v["ALPHA"], v["SPN"], "=="))
    le("ALPHA_STAR", "IPN", lhs=2 * v["ALPHA_STAR"], name="2*ALPHA_STAR <= IPN")
    le("OIR", "EPN")
    le("IR", "ESPN")
    le("OOIR", "EIPN")
    le("ALPHA1", "ISPN")
    le("COIR", "EISPN")
    if include_domination:
        n = g.order
        for kind in (K.GAMMA_P, K.GAMMA_TP):
            v[kind.value] = solve(g, kind, opts).value
        le("GAMMA_P", "EPN", lhs=n - v["GAMMA_P"], name="n - GAMMA_P <= EPN")
        if v["GAMMA_TP"] is not None:
            checks.append(Check("EIPN == n (total perfect set exists)", v["EIPN"], n, "=="))
        if n and not g.has_isolated_vertex():
            for kind in (K.GAMMA, K.GAMMA_PVT, K.UPPER_GAMMA_PVT):
                v[kind.value] = solve(g, kind, opts).value
            checks.append(Check("GAMMA == GAMMA_PVT", v["GAMMA"], v["GAMMA_PVT"], "=="))
            le("GAMMA_PVT", "UPPER_GAMMA_PVT")
            le("UPPER_GAMMA_PVT", "EPN")
    return InequalityReport(v, checks)


# ---------------------------------------------------------------------------
# The ESPN tree family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EspnTreeValue:
    graph: Graph
    espn: int | None
    ratio: float | None
    method: str | None


def espn_tree_family_value(k: int, verify: bool = True,
                           opts: SolveOptions | None = None) -> EspnTreeValue:
    """Build T_k (order 5k) and compute ESPN(T_k).

    Orders within the enumeration width go through subset enumeration, larger
    ones through the tree DP; ``verify=False`` skips the computation.
    """
    opts = opts or SolveOptions()
    t = espn_tree(k)
    if not verify:
        return EspnTreeValue(t, None, None, None)
    if t.order <= opts.max_width:
        r = solve_pn(t, K.ESPN, opts)
    else:
        r = solve_pn_tree(t, K.ESPN, witness=False)
    return EspnTreeValue(t, r.value, r.value / t.order, r.method)
