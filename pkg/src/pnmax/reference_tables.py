"""Reference grid values X(P_n x P_m), keyed by table number, then m, then n.

Blank cells are absent rather than zero.
"""

from __future__ import annotations

from pnmax.kinds import ParameterKind

DATASET_VERSION = 1

TABLE_KINDS = {
    1: ParameterKind.IPN,
    2: ParameterKind.EPN,
    3: ParameterKind.EIPN,
    4: ParameterKind.ESPN,
    5: ParameterKind.ISPN,
    6: ParameterKind.EISPN,
}

# rows m -> {n: value}
TABLES: dict[int, dict[int, dict[int, int]]] = {
    1: {
        2: {2: 2, 3: 4, 4: 4, 5: 6, 6: 6, 7: 8, 8: 8, 9: 10},
        3: {3: 4, 4: 7, 5: 8, 6: 10, 7: 12, 8: 13, 9: 15},
        4: {4: 8, 5: 10, 6: 12, 7: 14, 8: 16, 9: 18},
    },
    2: {
        2: {2: 2, 3: 4, 4: 5, 5: 7, 6: 8, 7: 10, 8: 11, 9: 13},
        3: {3: 6, 4: 8, 5: 10, 6: 12, 7: 15, 8: 16, 9: 19},
        4: {4: 12, 5: 14, 6: 17, 7: 20},
    },
    3: {
        2: {2: 4, 3: 6, 4: 8, 5: 10, 6: 12, 7: 14, 8: 16, 9: 18},
        3: {3: 8, 4: 10, 5: 14, 6: 16, 7: 20, 8: 22, 9: 25},
        4: {4: 16, 5: 18, 6: 24, 7: 28},
    },
    4: {
        2: {2: 3, 3: 6, 4: 7, 5: 10, 6: 11, 7: 14, 8: 15, 9: 18},
        3: {3: 8, 4: 11, 5: 14, 6: 16, 7: 19, 8: 22, 9: 25},
        4: {4: 16, 5: 18, 6: 23, 7: 27},
    },
    5: {
        2: {2: 2, 3: 4, 4: 4, 5: 6, 6: 6, 7: 8, 8: 8, 9: 10},
        3: {3: 5, 4: 7, 5: 9, 6: 10, 7: 12, 8: 14, 9: 15},
        4: {4: 8, 5: 11, 6: 12, 7: 15},
    },
    6: {
        2: {2: 4, 3: 6, 4: 8, 5: 10, 6: 12, 7: 14, 8: 16, 9: 18},
        3: {3: 8, 4: 12, 5: 14, 6: 18, 7: 21, 8: 24, 9: 27},
        4: {4: 16, 5: 20, 6: 24, 7: 28},
    },
}


def reference_cells() -> list[tuple[int, ParameterKind, int, int, int]]:
    """All populated cells as (table, kind, m, n, value)."""
    return [(t, TABLE_KINDS[t], m, n, v)
            for t, rows in sorted(TABLES.items())
            for m, row in sorted(rows.items())
            for n, v in sorted(row.items())]


def table_for_kind(kind: ParameterKind) -> int | None:
    for t, k in TABLE_KINDS.items():
        if k is kind:
            return t
    return None
