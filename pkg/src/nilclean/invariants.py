"""Exact graph invariants: distances, girth, cliques, domination, shape.

Distances and girth are ``math.inf`` when infinite; the diameter of a graph
with fewer than two vertices is ``None`` (undefined).
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass, field

INF = math.inf

DEFAULT_NODE_BUDGET = 20_000_000
DEFAULT_MAX_DOMINATING_SETS = 10_000


class SearchBudgetExceeded(RuntimeError):
    """An exact search gave up after its node budget."""


def degree(g, v):
    return len(g.adjacency[g.locate(v)])


def neighborhood(g, v):
    return {g.labels[j] for j in g.adjacency[g.locate(v)]}


def _bfs(g, src):
    dist = [-1] * g.order
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g, x, y):
    d = _bfs(g, g.locate(x))[g.locate(y)]
    return INF if d < 0 else d


def connected_components(g):
    """Vertex-index lists of the components, ordered by smallest member."""
    seen = [False] * g.order
    comps = []
    for s in range(g.order):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g):
    return len(connected_components(g)) <= 1


def diameter(g):
    if g.order < 2:
        return None
    best = 0
    for s in range(g.order):
        dist = _bfs(g, s)
        if min(dist) < 0:
            return INF
        best = max(best, max(dist))
    return best


def girth(g):
    """Shortest cycle length, from a BFS rooted at every vertex."""
    best = INF
    for s in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def _bitmasks(g):
    return [sum(1 << j for j in nbrs) for nbrs in g.adjacency]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximum_clique(g, budget=DEFAULT_NODE_BUDGET):
    """One maximum clique (sorted vertex indices) by branch and bound.

    Vertices are tried in descending degree (ties by canonical order) and
    each candidate set is bounded by a greedy colouring.
    """
    n = g.order
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-len(g.adjacency[v]), v))
    rank = {v: i for i, v in enumerate(order)}
    # relabel so bit i is the i-th vertex of the branching order
    nbr = [0] * n
    for v in range(n):
        for w in g.adjacency[v]:
            nbr[rank[v]] |= 1 << rank[w]

    best = [0]
    best_set = [0]
    nodes = [0]

    def colour_sort(cand):
        verts, colours = [], []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~nbr[v] & ~low
                uncoloured &= ~low
                verts.append(v)
                colours.append(colour)
        return verts, colours

    def expand(cand, size, current):
        nodes[0] += 1
        if nodes[0] > budget:
            raise SearchBudgetExceeded(f"clique search exceeded {budget} nodes")
        verts, colours = colour_sort(cand)
        for v, c in zip(reversed(verts), reversed(colours)):
            if size + c <= best[0]:
                return
            bit = 1 << v
            new = cand & nbr[v]
            if new:
                expand(new, size + 1, current | bit)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best_set[0] = current | bit
            cand &= ~bit

    expand((1 << n) - 1, 0, 0)
    return sorted(order[i] for i in _bits(best_set[0]))


def clique_number(g, budget=DEFAULT_NODE_BUDGET):
    return len(maximum_clique(g, budget))


def _closed_masks(g):
    return [m | (1 << v) for v, m in enumerate(_bitmasks(g))]


def _component_dominating_sets(closed, verts, budget, counter):
    """All minimum dominating sets of one component, as frozensets."""
    full = sum(1 << v for v in verts)
    biggest = max(closed[v].bit_count() for v in verts)
    k = 1
    while True:
        found = set()

        def search(chosen, covered, start_left):
            counter[0] += 1
            if counter[0] > budget:
                raise SearchBudgetExceeded(f"domination search exceeded {budget} nodes")
            missing = full & ~covered
            if not missing:
                found.add(frozenset(chosen))
                return
            if start_left == 0:
                return
            # each remaining pick covers at most `biggest` new vertices
            if missing.bit_count() > start_left * biggest:
                return
            u = (missing & -missing).bit_length() - 1
            for w in _bits(closed[u]):
                search(chosen + (w,), covered | closed[w], start_left - 1)

        search((), 0, k)
        if found:
            return sorted(tuple(sorted(s)) for s in found)
        k += 1


def _dominating_parts(g, budget):
    closed = _closed_masks(g)
    counter = [0]
    return [
        _component_dominating_sets(closed, comp, budget, counter)
        for comp in connected_components(g)
    ]


def domination_number(g, budget=DEFAULT_NODE_BUDGET):
    return sum(len(parts[0]) for parts in _dominating_parts(g, budget))


def minimum_dominating_sets(g, max_sets=DEFAULT_MAX_DOMINATING_SETS, budget=DEFAULT_NODE_BUDGET):
    """Return (gamma, sets) with every minimum dominating set listed.

    Each component is solved on its own and the answers are combined, so
    gamma is exact even when the number of sets is astronomical; in that
    case (more than ``max_sets``) ``sets`` is None.  Sets are sorted
    tuples of vertex indices, in lexicographic order.
    """
    parts = _dominating_parts(g, budget)
    gamma = sum(len(p[0]) for p in parts)
    count = math.prod(len(p) for p in parts)
    if count > max_sets:
        return gamma, None
    sets = sorted(tuple(sorted(itertools.chain.from_iterable(combo))) for combo in itertools.product(*parts))
    return gamma, sets


def dominating_set_count(g, budget=DEFAULT_NODE_BUDGET):
    return math.prod(len(p) for p in _dominating_parts(g, budget))


def is_dominating(g, vertices):
    covered = set(vertices)
    for v in vertices:
        covered.update(g.adjacency[v])
    return len(covered) == g.order


def is_bipartite(g):
    side = [-1] * g.order
    for s in range(g.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_complete(g):
    return g.size == g.order * (g.order - 1) // 2


def is_star(g, min_leaves=1):
    """K_{1,m} with m >= min_leaves: one centre joined to all, no other edges."""
    n = g.order
    if n < 2 or n - 1 < min_leaves or g.size != n - 1:
        return False
    return any(len(nbrs) == n - 1 for nbrs in g.adjacency)


def shape_predicates(g):
    return {
        "is_bipartite": is_bipartite(g),
        "is_complete": is_complete(g),
        "is_star": is_star(g),
    }


def render_extended(value):
    """JSON form of a distance-like value: inf -> "inf", undefined -> null."""
    if value is None:
        return None
    if value == INF:
        return "inf"
    return value


@dataclass
class InvariantReport:
    order: int
    size: int
    degree_map: dict
    components: int
    diameter: object
    girth: object
    clique_number: int
    min_dominating_sets: list | None
    domination_number: int
    bipartite: bool
    complete: bool
    star: bool
    labels: tuple = field(default=(), repr=False)

    def to_dict(self):
        sets = self.min_dominating_sets
        return {
            "order": self.order,
            "size": self.size,
            "degree_map": self.degree_map,
            "components": self.components,
            "diameter": render_extended(self.diameter),
            "girth": render_extended(self.girth),
            "clique_number": self.clique_number,
            "min_dominating_sets": None if sets is None else [[self.labels[v] for v in s] for s in sets],
            "domination_number": self.domination_number,
            "bipartite": self.bipartite,
            "complete": self.complete,
            "star": self.star,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def invariant_report(g, max_sets=DEFAULT_MAX_DOMINATING_SETS, budget=DEFAULT_NODE_BUDGET):
    gamma, sets = minimum_dominating_sets(g, max_sets=max_sets, budget=budget)
    return InvariantReport(
        order=g.order,
        size=g.size,
        degree_map={g.labels[v]: len(a) for v, a in enumerate(g.adjacency)},
        components=len(connected_components(g)),
        diameter=diameter(g),
        girth=girth(g),
        clique_number=clique_number(g, budget),
        min_dominating_sets=sets,
        domination_number=gamma,
        bipartite=is_bipartite(g),
        complete=is_complete(g),
        star=is_star(g),
        labels=g.labels,
    )
