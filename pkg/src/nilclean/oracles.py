"""All-subsets reference answers for small graphs (at most ``MAX_ORACLE_ORDER`` vertices).

Every subset of the vertex set is materialised as a bitmask, so these are
deliberately dumb and independent of the searches in ``invariants``.
"""

from __future__ import annotations

import numpy as np

MAX_ORACLE_ORDER = 20


def _subset_tables(g):
    n = g.order
    if n > MAX_ORACLE_ORDER:
        raise ValueError(f"brute force limited to {MAX_ORACLE_ORDER} vertices, got {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    popcount = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        popcount += (masks >> i) & 1
    return masks, popcount


def brute_force_clique_number(g):
    n = g.order
    masks, popcount = _subset_tables(g)
    is_clique = np.ones(1 << n, dtype=bool)
    for v in range(n):
        nbr = sum(1 << w for w in g.adjacency[v])
        # subsets containing v must avoid v's non-neighbours
        bad = ((1 << n) - 1) & ~nbr & ~(1 << v)
        has_v = (masks >> v) & 1 == 1
        is_clique &= ~has_v | ((masks & bad) == 0)
    return int(popcount[is_clique].max())


def brute_force_dominating_sets(g):
    """(gamma, sets) with sets as sorted index tuples in lexicographic order."""
    n = g.order
    masks, popcount = _subset_tables(g)
    covered = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        closed = sum(1 << w for w in g.adjacency[v]) | (1 << v)
        covered |= np.where((masks >> v) & 1 == 1, closed, 0)
    dominating = covered == (1 << n) - 1
    gamma = int(popcount[dominating].min())
    winners = masks[dominating & (popcount == gamma)]
    sets = sorted(tuple(i for i in range(n) if (int(m) >> i) & 1) for m in winners)
    return gamma, sets
