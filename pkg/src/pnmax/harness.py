"""Solver routing, run records, and the report builders behind the command line.

Every report is a list of text lines built in a fixed order, so identical
arguments give byte-identical output whatever the shard count.
"""

from __future__ import annotations

import ast
import hashlib
import json
import operator
import os
import random
import tempfile
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from pnmax import __version__
from pnmax.corpus import (atlas_graphs, free_trees, random_connected_graphs, random_trees)
from pnmax.exact import SolveOptions, SolveResult, SolverLimitError, reduce_to_class, solve
from pnmax.graph import FamilySpec, Graph, emit_graph6, generate, members, vertex_set
from pnmax.kinds import PN_KINDS, REDUCTION_TARGET, ParameterKind
from pnmax.reference_tables import TABLES, table_for_kind
from pnmax.pn import pn_score, set_class_predicate
from pnmax.structured import MAX_GRID_ROWS, solve_pn_grid, solve_pn_tree, verify_tree_lower_bound
from pnmax.theory import (ConstructionSpec, Part, check_formulas_against_oracle,
                          closed_neighbourhood_partition, construct_efficient,
                          efficiency_classes, espn_tree_family_value)

K = ParameterKind


# ---------------------------------------------------------------------------
# Routing
# ---------------------------------------------------------------------------

def grid_dims(spec: FamilySpec | None) -> tuple[int, int] | None:
    if spec is not None and spec.family == "grid":
        return spec.params[0], spec.params[1]
    return None


def route_solve(g: Graph, kind: ParameterKind, opts: SolveOptions | None = None,
                method: str = "auto", dims: tuple[int, int] | None = None) -> SolveResult:
    """Pick a solver: grid DP for grid specs, tree DP for trees, otherwise enumeration."""
    opts = opts or SolveOptions()
    if kind.is_pn and method in ("auto", "grid") and dims is not None:
        n, m = dims
        if m <= MAX_GRID_ROWS:
            return solve_pn_grid(n, m, kind)
        if n <= MAX_GRID_ROWS:
            r = solve_pn_grid(m, n, kind)
            w = None
            if r.witness is not None:
                # vertex (column j, row i) of P_m x P_n is vertex (column i, row j) here
                w = vertex_set(i * m + j for v in members(r.witness) for j, i in [divmod(v, n)])
            return SolveResult(kind, r.value, w, r.explored, r.method)
    if method == "grid":
        raise SolverLimitError("grid DP needs a grid family with at most 6 rows or columns")
    if kind.is_pn and method in ("auto", "tree") and g.is_tree():
        return solve_pn_tree(g, kind)
    if method == "tree":
        raise SolverLimitError("tree DP needs a tree and a private-neighbour kind")
    return solve(g, kind, opts)


# ---------------------------------------------------------------------------
# Run records and cache
# ---------------------------------------------------------------------------

@dataclass
class RunRecord:
    input: str
    kind: str
    value: int | None
    witness: list[int] | None
    method: str
    ms: float
    version: str = __version__
    # set only for GAMMA_P / UPPER_GAMMA_P: whether V itself is the sole perfect dominating set
    only_trivial: bool | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def csv_row(self) -> str:
        value = "none" if self.value is None else str(self.value)
        return f"{self.input},{self.kind},{value},{self.method},{self.ms:.3f}"


CSV_HEADER = "input,kind,value,method,ms"


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(emit_graph6(g).encode()).hexdigest()[:16]


class RecordCache:
    """One JSON file per (graph hash, kind); entries from other versions are ignored."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, g: Graph, kind: ParameterKind) -> Path:
        return self.root / f"{graph_hash(g)}-{kind.value}.json"

    def get(self, g: Graph, kind: ParameterKind) -> RunRecord | None:
        p = self._path(g, kind)
        if not p.exists():
            return None
        data = json.loads(p.read_text())
        if data.get("version") != __version__:
            return None
        return RunRecord(**data)

    def put(self, g: Graph, kind: ParameterKind, rec: RunRecord) -> None:
        p = self._path(g, kind)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(rec.to_json())
        os.replace(tmp, p)


def compute(g: Graph, descriptor: str, kinds: list[ParameterKind],
            opts: SolveOptions | None = None, method: str = "auto",
            dims: tuple[int, int] | None = None,
            cache: RecordCache | None = None) -> list[RunRecord]:
    records = []
    for kind in kinds:
        if cache is not None:
            hit = cache.get(g, kind)
            if hit is not None:
                records.append(hit)
                continue
        start = time.perf_counter()
        r = route_solve(g, kind, opts, method, dims)
        ms = (time.perf_counter() - start) * 1000
        rec = RunRecord(descriptor, kind.value, r.value, r.witness_list, r.method, round(ms, 3),
                        only_trivial=r.only_trivial)
        if cache is not None:
            cache.put(g, kind, rec)
        records.append(rec)
    return records


def render_records(records: list[RunRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"
    width = max((len(r.kind) for r in records), default=4)
    lines = []
    for r in records:
        value = "does not exist" if r.value is None else str(r.value)
        lines.append(f"{r.kind:<{width}}  {value:>6}  {r.method}")
    return "\n".join(lines) + "\n"


def reverify_record(g: Graph, rec: RunRecord) -> bool:
    """Check that a record's witness realises its value on ``g``."""
    kind = K(rec.kind)
    if rec.witness is None:
        return rec.value is None or not kind.is_pn
    w = vertex_set(rec.witness)
    if kind.is_pn:
        return pn_score(g, w, kind) == rec.value
    size = len(rec.witness)
    return set_class_predicate(g, w, kind) and (size // 2 if kind is K.ALPHA_STAR else size) == rec.value


# ---------------------------------------------------------------------------
# Grid tables
# ---------------------------------------------------------------------------

def parse_range(text: str) -> range:
    a, sep, b = text.partition("..")
    if not sep:
        return range(int(a), int(a) + 1)
    return range(int(a), int(b) + 1)


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def extend(self, other: Report) -> None:
        self.lines += other.lines
        self.failures += other.failures


def grid_values(kind: ParameterKind, ms: range, ns: range) -> dict[tuple[int, int], int]:
    return {(m, n): solve_pn_grid(n, m, kind, witness=False).value for m in ms for n in ns}


def table_report(kind: ParameterKind, ms: range, ns: range, paper_check: bool = False,
                 cross_check_max: int = 0, opts: SolveOptions | None = None,
                 blank_lower: bool = True) -> Report:
    """Rows m, columns n. Cells with n < m are left blank by symmetry when ``blank_lower``."""
    for m in ms:
        if not 1 <= m <= MAX_GRID_ROWS:
            raise ValueError(f"rows must lie in [1, {MAX_GRID_ROWS}]")
    values = grid_values(kind, ms, ns)
    rep = Report()
    rep.lines.append(f"{kind.value}(P_n x P_m)  rows m, columns n")
    rep.lines.append("m\\n " + "".join(f"{n:>5}" for n in ns))
    for m in ms:
        cells = "".join(f"{'':>5}" if (blank_lower and n < m) else f"{values[m, n]:>5}" for n in ns)
        rep.lines.append(f"{m:>3} " + cells)
    if paper_check:
        t = table_for_kind(kind)
        checked = diffs = 0
        if t is not None:
            for m in ms:
                for n in ns:
                    expected = TABLES[t].get(m, {}).get(n)
                    if expected is None:
                        continue
                    checked += 1
                    if expected != values[m, n]:
                        diffs += 1
                        rep.lines.append(f"DIFF table {t} m={m} n={n}: expected {expected}, computed {values[m, n]}")
        rep.failures += diffs
        rep.lines.append(f"paper-check table {t}: {checked} cells, {diffs} diffs")
    if cross_check_max:
        checked = bad = 0
        for (m, n), v in sorted(values.items()):
            if n * m <= cross_check_max:
                g = generate(FamilySpec("grid", (n, m)))
                checked += 1
                if solve(g, kind, opts).value != v:
                    bad += 1
                    rep.lines.append(f"MISMATCH enumeration vs grid DP at m={m} n={n}")
        rep.failures += bad
        rep.lines.append(f"enumeration cross-check: {checked} cells, {bad} mismatches")
    return rep


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------

@dataclass
class VerifyConfig:
    seed: int = 0
    max_n: int = 11
    graphs: int = 200
    trees: int = 500
    exhaustive_n: int = 6
    triples: int = 200
    opts: SolveOptions = field(default_factory=SolveOptions)


def _status(failures: int) -> str:
    return "PASS" if failures == 0 else "FAIL"


def verify_formulas(cfg: VerifyConfig) -> Report:
    r = check_formulas_against_oracle(min(cfg.max_n, 14), cfg.opts,
                                      prism_max_n=min(12, cfg.opts.max_width // 2))
    rep = Report(failures=len(r.mismatches))
    for fam, params, kind, expected, got in r.mismatches:
        rep.lines.append(f"  mismatch {fam}{params} {kind}: formula {expected}, solver {got}")
    rep.lines.insert(0, f"formulas: {r.checked} checks, {len(r.mismatches)} mismatches "
                        f"-> {_status(rep.failures)}")
    return rep


def _inequality_sweep(graphs, label: str, opts: SolveOptions) -> Report:
    from pnmax.theory import verify_inequality_report
    rep = Report()
    count = 0
    for g in graphs:
        count += 1
        ir = verify_inequality_report(g, opts)
        for c in ir.violations:
            rep.failures += 1
            rep.lines.append(f"  violation {c.name}: {c.lhs} vs {c.rhs} on {emit_graph6(g)}")
    rep.lines.insert(0, f"inequalities[{label}]: {count} graphs, {rep.failures} violations "
                        f"-> {_status(rep.failures)}")
    return rep


def verify_inequalities(cfg: VerifyConfig) -> Report:
    rep = Report()
    if cfg.exhaustive_n:
        rep.extend(_inequality_sweep(atlas_graphs(cfg.exhaustive_n), f"all connected n<={cfg.exhaustive_n}",
                                     cfg.opts))
    if cfg.graphs:
        rep.extend(_inequality_sweep(random_connected_graphs(cfg.graphs, 2, cfg.max_n, cfg.seed),
                                     f"{cfg.graphs} random n<={cfg.max_n} seed={cfg.seed}", cfg.opts))
    return rep


def verify_tree_bound(cfg: VerifyConfig) -> Report:
    rep = Report()
    checked = tight = 0
    exhaustive = min(cfg.max_n, 10)
    streams = [t for n in range(2, exhaustive + 1) for t in free_trees(n)]
    streams += list(random_trees(cfg.trees, 2, cfg.max_n, cfg.seed))
    for t in streams:
        br = verify_tree_lower_bound(t)
        checked += 1
        tight += br.tight
        if not br.holds:
            rep.failures += 1
            rep.lines.append(f"  violation IPN={br.ipn} < n/2 on {emit_graph6(t)}")
    rep.lines.insert(0, f"tree-bound: {checked} trees (all free trees n<={exhaustive}, "
                        f"{cfg.trees} random n<={cfg.max_n} seed={cfg.seed}), {tight} tight, "
                        f"{rep.failures} violations -> {_status(rep.failures)}")
    for m in (2, 4, 6, 8):
        br = verify_tree_lower_bound(generate(FamilySpec("corona_path", (m,))))
        ok = br.tight and br.ipn == m
        rep.failures += not ok
        rep.lines.append(f"  tight corona_path:{m}: order {br.order}, IPN {br.ipn} "
                         f"-> {'tight' if ok else 'NOT TIGHT'}")
    return rep


def efficiency_checks(opts: SolveOptions | None = None) -> list[tuple[str, bool]]:
    """Named efficiency-class facts, each paired with whether it held."""
    fam = lambda s: generate(FamilySpec.parse(s))  # noqa: E731
    out = []
    out.append(("C_n ES-efficient iff n = 0 mod 3, 3<=n<=12",
                all(("ES" in efficiency_classes(fam(f"cycle:{n}"), opts)) == (n % 3 == 0)
                    for n in range(3, 13))))
    out.append(("P_n ES-efficient when n = 0 mod 3, n<=15",
                all("ES" in efficiency_classes(fam(f"path:{n}"), opts) for n in range(3, 16, 3))))
    out.append(("C_n EIS-efficient except C_5, 3<=n<=12",
                all(("EIS" in efficiency_classes(fam(f"cycle:{n}"), opts)) == (n != 5)
                    for n in range(3, 13))))
    out.append(("P_n EI-efficient iff n mod 4 != 1, n<=13",
                all(("EI" in efficiency_classes(fam(f"path:{n}"), opts)) == (n % 4 != 1)
                    for n in range(1, 14))))
    out.append(("G_{n,2} EIS-efficient, n<=10",
                all("EIS" in efficiency_classes(fam(f"grid:{n},2"), opts) for n in range(1, 11))))
    out.append(("G_{n,2} ES-efficient iff n odd, n<=12",
                all(("ES" in efficiency_classes(fam(f"grid:{n},2"), opts)) == (n % 2 == 1)
                    for n in range(1, 13))))
    es_ok = True
    for spec in ("path:9", "cycle:9", "grid:5,2", "grid:7,2"):
        g = fam(spec)
        ec = efficiency_classes(g, opts)
        es_ok &= "ES" in ec and closed_neighbourhood_partition(g, ec.witnesses["ES"])
    out.append(("ES witnesses partition V by closed neighbourhoods", es_ok))
    rt = True
    for spec, mode in _construction_corpus():
        c = construct_efficient(spec, mode)
        rt &= mode in efficiency_classes(c.graph, opts)
    out.append(("constructed graphs are efficient in their mode", rt))
    return out


def _construction_corpus() -> list[tuple[ConstructionSpec, str]]:
    ds = lambda p, q: Part("F1", (p, q))  # noqa: E731
    st2 = lambda k: Part("F2", (k,))  # noqa: E731
    st3 = lambda k: Part("F3", (k,))  # noqa: E731
    return [
        (ConstructionSpec((ds(1, 2),)), "EIS"),
        (ConstructionSpec((st2(3),)), "EI"),
        (ConstructionSpec((st2(2), st2(3)), (((0, 2), (1, 2)),)), "EI"),
        (ConstructionSpec((ds(2, 2), st2(2)), (((0, 2), (1, 2)), ((0, 4), (1, 2)))), "EI"),
        (ConstructionSpec((st3(2), ds(1, 1), st2(2)),
                          (((0, 1), (1, 2)), ((1, 3), (2, 2)), ((0, 2), (2, 2)))), "EIS"),
        (ConstructionSpec((st3(1), st3(3)), (((0, 1), (1, 1)),)), "EIS"),
    ]


def verify_efficiency(cfg: VerifyConfig) -> Report:
    rep = Report()
    checks = efficiency_checks(cfg.opts)
    for name, ok in checks:
        rep.failures += not ok
        rep.lines.append(f"  {'ok  ' if ok else 'FAIL'} {name}")
    rep.lines.insert(0, f"efficiency: {len(checks)} checks, {rep.failures} failed "
                        f"-> {_status(rep.failures)}")
    return rep


def reduction_triples(count: int, max_n: int, seed: int):
    rng = random.Random(seed)
    kinds = list(REDUCTION_TARGET)
    for g in random_connected_graphs(count, 2, max_n, seed):
        a = rng.getrandbits(g.order)
        yield g, a, kinds[rng.randrange(len(kinds))]


def verify_reductions(cfg: VerifyConfig) -> Report:
    rep = Report()
    n_max = min(cfg.max_n, 12)
    for g, a, kind in reduction_triples(cfg.triples, n_max, cfg.seed):
        b = reduce_to_class(g, a, kind)
        target = REDUCTION_TARGET[kind]
        problems = []
        if b & ~a:
            problems.append("not a subset")
        if not set_class_predicate(g, b, target):
            problems.append(f"not {target.value}")
        if pn_score(g, b, kind) < pn_score(g, a, kind):
            problems.append("score decreased")
        if problems:
            rep.failures += 1
            rep.lines.append(f"  {kind.value} on {emit_graph6(g)} from {members(a)}: {', '.join(problems)}")
    rep.lines.insert(0, f"reductions: {cfg.triples} triples n<={n_max} seed={cfg.seed}, "
                        f"{rep.failures} violations -> {_status(rep.failures)}")
    return rep


SUITES = {
    "formulas": verify_formulas,
    "inequalities": verify_inequalities,
    "tree-bound": verify_tree_bound,
    "efficiency": verify_efficiency,
    "reductions": verify_reductions,
}


def verify(suite: str, cfg: VerifyConfig) -> Report:
    names = list(SUITES) if suite == "all" else [suite]
    rep = Report()
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        rep.extend(SUITES[name](cfg))
    rep.lines.append(f"overall: {_status(rep.failures)}")
    return rep


# ---------------------------------------------------------------------------
# Conjectures
# ---------------------------------------------------------------------------

CONJECTURES = {
    # name: (kind, rows, columns(i), conjectured value(i), label(i), default range)
    "C1": (K.EIPN, 2, lambda m: m, lambda m: 2 * m, "m", range(2, 41)),
    "C2a": (K.EISPN, 3, lambda k: 2 * k, lambda k: 6 * k, "k", range(1, 16)),
    "C2b": (K.EISPN, 4, lambda m: m, lambda m: 4 * m, "m", range(2, 21)),
}


def conjecture_report(which: str, span: range | None = None) -> Report:
    kind, rows, cols, rhs, var, default = CONJECTURES[which]
    span = span or default
    rep = Report()
    agree = 0
    for i in span:
        n = cols(i)
        got = solve_pn_grid(n, rows, kind, witness=False).value
        want = rhs(i)
        if got == want:
            agree += 1
            rep.lines.append(f"  {var}={i}: {kind.value}(P_{rows} x P_{n}) = {got} = conjectured {want}")
        else:
            rep.failures += 1
            w = solve_pn_grid(n, rows, kind, witness=True)
            rec = RunRecord(f"grid:{n},{rows}", kind.value, w.value, w.witness_list, w.method, 0.0)
            rep.lines.append(f"  {var}={i}: {kind.value}(P_{rows} x P_{n}) = {got} != conjectured {want}"
                             f"  COUNTEREXAMPLE {rec.to_json()}")
    rep.lines.insert(0, f"conjecture {which}: {var} in [{span.start}, {span.stop - 1}], "
                        f"{agree} agree, {rep.failures} disagree")
    return rep


def espn_family_report(ks=(2, 3, 4), opts: SolveOptions | None = None) -> Report:
    rep = Report()
    for k in ks:
        r = espn_tree_family_value(k, opts=opts)
        ok = r.espn == 4 * k
        rep.failures += not ok
        rep.lines.append(f"  espn_tree:{k}: order {r.graph.order}, ESPN {r.espn} ({r.method}), "
                         f"4k = {4 * k} -> {'agree' if ok else 'DISAGREE'}")
    rep.lines.insert(0, f"ESPN(T_k) = 4k: {len(ks) - rep.failures}/{len(ks)} agree")
    return rep


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv}
_CMPOPS = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt,
           ast.GtE: operator.ge, ast.Eq: operator.eq, ast.NotEq: operator.ne}


class Target:
    """A comparison between arithmetic expressions in kind names, ``n`` and ``m``."""

    def __init__(self, text: str):
        self.text = text
        tree = ast.parse(text, mode="eval").body
        if not (isinstance(tree, ast.Compare) and len(tree.ops) == 1):
            raise ValueError("target must be a single comparison, e.g. '2*ALPHA_STAR < IPN'")
        self.lhs, self.op, self.rhs = tree.left, type(tree.ops[0]), tree.comparators[0]
        if self.op not in _CMPOPS:
            raise ValueError("unsupported comparison")
        self.kinds: list[ParameterKind] = []
        for node in ast.walk(tree):
            if isinstance(node, ast.Name) and node.id not in ("n", "m"):
                kind = ParameterKind.parse(node.id)
                if kind not in self.kinds:
                    self.kinds.append(kind)

    def _eval(self, node, env) -> Fraction:
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return Fraction(env[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](self._eval(node.left, env), self._eval(node.right, env))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -self._eval(node.operand, env)
        raise ValueError(f"unsupported expression in target {self.text!r}")

    def evaluate(self, env: dict[str, int]) -> tuple[bool, Fraction, Fraction]:
        lhs = self._eval(self.lhs, env)
        rhs = self._eval(self.rhs, env)
        return _CMPOPS[self.op](lhs, rhs), lhs, rhs


def search_graphs(generator: str, budget: int, min_n: int, max_n: int, seed: int):
    if generator == "random-graph":
        return random_connected_graphs(budget, min_n, max_n, seed)
    if generator == "random-tree":
        return random_trees(budget, min_n, max_n, seed)
    if generator == "all-graphs":
        return (g for i, g in enumerate(atlas_graphs(max_n)) if i < budget and g.order >= min_n)
    raise ValueError(f"unknown generator {generator!r}")


def search(target_text: str, generator: str, budget: int, max_n: int, seed: int = 0,
           min_n: int = 2, opts: SolveOptions | None = None, out_dir: str | None = None,
           show: int = 10) -> Report:
    """Stream graphs, record every graph on which the target comparison holds."""
    target = Target(target_text)
    rep = Report()
    examined = 0
    hits: list[tuple[Graph, dict]] = []
    lo: tuple[Fraction, str] | None = None
    hi: tuple[Fraction, str] | None = None
    for g in search_graphs(generator, budget, min_n, max_n, seed):
        examined += 1
        env: dict[str, int] = {"n": g.order, "m": g.size}
        skip = False
        for kind in target.kinds:
            value = route_solve(g, kind, opts).value
            if value is None:
                skip = True
                break
            env[kind.value] = value
        if skip:
            continue
        holds, lhs, _ = target.evaluate(env)
        code = emit_graph6(g)
        if lo is None or lhs < lo[0]:
            lo = (lhs, code)
        if hi is None or lhs > hi[0]:
            hi = (lhs, code)
        if holds:
            hits.append((g, env))
    rep.failures = len(hits)
    lhs_text = ast.unparse(target.lhs)
    rep.lines.append(f"search '{target.text}' over {generator} (n<={max_n}, budget {budget}, seed {seed}): "
                     f"{examined} graphs, {len(hits)} hits")
    if lo is not None:
        rep.lines.append(f"  min {lhs_text} = {lo[0]} ({float(lo[0]):.6f}) on {lo[1]}")
        rep.lines.append(f"  max {lhs_text} = {hi[0]} ({float(hi[0]):.6f}) on {hi[1]}")
    for g, env in hits[:show]:
        vals = " ".join(f"{k}={v}" for k, v in env.items())
        rep.lines.append(f"  hit {emit_graph6(g)} {vals}")
    if out_dir and hits:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "hits.g6").write_text("".join(emit_graph6(g) + "\n" for g, _ in hits))
        with open(out / "hits.jsonl", "w") as fh:
            for g, env in hits:
                for kind in target.kinds:
                    r = route_solve(g, kind, opts)
                    rec = RunRecord(f"graph6:{emit_graph6(g)}", kind.value, r.value,
                                    r.witness_list, r.method, 0.0)
                    fh.write(rec.to_json() + "\n")
    return rep


__all__ = [
    "RunRecord", "RecordCache", "Report", "VerifyConfig", "compute", "render_records",
    "route_solve", "table_report", "verify", "conjecture_report", "espn_family_report",
    "search", "Target", "PN_KINDS",
]
