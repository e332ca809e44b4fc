"""Private-neighbour classification of the vertices of a graph relative to a set U.

A vertex ``w`` is a private neighbour with respect to ``U`` when it has exactly
one neighbour in ``U``. Members of ``U`` with no neighbour in ``U`` count as
self private neighbours.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from pnmax.graph import Graph, VertexSet, members
from pnmax.kinds import ParameterKind

K = ParameterKind


class VertexPNStatus(Enum):
    SELF = "SelfPN"
    INTERNAL = "InternalPN"
    EXTERNAL = "ExternalPN"
    INSIDE_UNCLASSIFIED = "InsideUnclassified"
    OUTSIDE_UNCLASSIFIED = "OutsideUnclassified"


class PNTriple(NamedTuple):
    self_count: int
    internal_count: int
    external_count: int

    def score(self, kind: ParameterKind) -> int:
        s, i, e = kind.mask
        return s * self.self_count + i * self.internal_count + e * self.external_count


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range for order {g.order}")


def _check_set(g: Graph, u: VertexSet) -> None:
    if u < 0 or u >> g.order:
        raise ValueError("vertex set contains vertices outside the graph")


def vertex_status(g: Graph, u: VertexSet, v: int) -> VertexPNStatus:
    _check_vertex(g, v)
    _check_set(g, u)
    k = (g.adjacency[v] & u).bit_count()
    if u >> v & 1:
        if k == 0:
            return VertexPNStatus.SELF
        return VertexPNStatus.INTERNAL if k == 1 else VertexPNStatus.INSIDE_UNCLASSIFIED
    return VertexPNStatus.EXTERNAL if k == 1 else VertexPNStatus.OUTSIDE_UNCLASSIFIED


def pn_triple(g: Graph, u: VertexSet) -> PNTriple:
    _check_set(g, u)
    s = i = e = 0
    for v, row in enumerate(g.adjacency):
        k = (row & u).bit_count()
        if u >> v & 1:
            if k == 0:
                s += 1
            elif k == 1:
                i += 1
        elif k == 1:
            e += 1
    return PNTriple(s, i, e)


def pn_score(g: Graph, u: VertexSet, kind: ParameterKind) -> int:
    if not kind.is_pn:
        raise ValueError(f"{kind} is not a private-neighbour kind")
    return pn_triple(g, u).score(kind)


def has_private_neighbor(g: Graph, u: VertexSet, v: int, flavor: str) -> tuple[bool, int | None]:
    """Whether ``v`` in ``u`` has a private neighbour of the given flavour.

    Returns ``(found, witness)`` with the least witness vertex; for ``"self"``
    the witness is ``v`` itself.
    """
    _check_vertex(g, v)
    if not u >> v & 1:
        raise ValueError(f"vertex {v} is not in the set")
    bit = 1 << v
    if flavor == "self":
        ok = not g.adjacency[v] & u
        return ok, (v if ok else None)
    if flavor == "external":
        pool = g.adjacency[v] & ~u
    elif flavor == "internal":
        pool = g.adjacency[v] & u
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    for w in members(pool):
        if g.adjacency[w] & u == bit:
            return True, w
    return False, None


def _private_flags(g: Graph, u: VertexSet) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Masks of members of ``u`` owning an external PN, owning an internal PN, being self PN."""
    ext = internal = self_ = 0
    for w, row in enumerate(g.adjacency):
        hits = row & u
        if hits.bit_count() == 1:
            if u >> w & 1:
                internal |= hits
            else:
                ext |= hits
        elif hits == 0 and u >> w & 1:
            self_ |= 1 << w
    return ext, internal, self_


def is_dominating(g: Graph, u: VertexSet) -> bool:
    covered = u
    for v in members(u):
        covered |= g.adjacency[v]
    return covered == g.all_vertices


def _is_perfect(g: Graph, u: VertexSet) -> bool:
    return all((g.adjacency[v] & u).bit_count() == 1 for v in range(g.order) if not u >> v & 1)


def _is_total_perfect(g: Graph, u: VertexSet) -> bool:
    return all((row & u).bit_count() == 1 for row in g.adjacency)


def _is_private_dominating(g: Graph, u: VertexSet) -> bool:
    if not is_dominating(g, u):
        return False
    ext, _, _ = _private_flags(g, u)
    return ext & u == u


def _is_minimal(g: Graph, u: VertexSet, prop) -> bool:
    return prop(g, u) and not any(prop(g, u & ~(1 << v)) for v in members(u))


def set_class_predicate(g: Graph, u: VertexSet, kind: ParameterKind) -> bool:
    if kind.is_pn:
        raise ValueError(f"{kind} is a private-neighbour kind, not a set class")
    _check_set(g, u)
    if kind is K.ALPHA1:
        return all((g.adjacency[v] & u).bit_count() <= 1 for v in members(u))
    if kind.is_set_class:
        ext, internal, self_ = _private_flags(g, u)
        need = {
            K.ALPHA: self_,
            K.ALPHA_STAR: internal,
            K.OIR: ext,
            K.IR: ext | self_,
            K.OOIR: ext | internal,
            K.COIR: ext | internal | self_,
        }[kind]
        return need & u == u
    if kind is K.GAMMA:
        return is_dominating(g, u)
    if kind is K.UPPER_GAMMA:
        return _is_minimal(g, u, is_dominating)
    if kind in (K.GAMMA_P, K.UPPER_GAMMA_P):
        return _is_perfect(g, u)
    if kind in (K.GAMMA_TP, K.UPPER_GAMMA_TP):
        return _is_total_perfect(g, u)
    if kind is K.GAMMA_PVT:
        return _is_private_dominating(g, u)
    if kind is K.UPPER_GAMMA_PVT:
        return _is_minimal(g, u, _is_private_dominating)
    raise ValueError(f"unhandled kind {kind}")
