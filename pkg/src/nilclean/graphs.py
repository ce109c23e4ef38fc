"""Divisor graphs of a classified ring and their DOT / JSON exports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

NIL_CLEAN = "nil_clean"
NILPOTENT_DIVISOR = "nilpotent_divisor"
ZERO_DIVISOR = "zero_divisor"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph whose vertices are ring elements.

    Vertices are numbered 0..order-1 in canonical element order;
    ``adjacency[i]`` is the sorted tuple of neighbours of vertex i.
    """

    ring: str
    kind: str
    elements: tuple
    labels: tuple
    adjacency: tuple

    @property
    def order(self):
        return len(self.labels)

    @cached_property
    def size(self):
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    yield i, j

    @cached_property
    def _positions(self):
        pos = {lab: i for i, lab in enumerate(self.labels)}
        pos.update({x: i for i, x in enumerate(self.elements)})
        return pos

    def locate(self, v):
        """Vertex index of a label string or ring element."""
        try:
            return self._positions[v]
        except (KeyError, TypeError):
            raise KeyError(f"{v!r} is not a vertex of this {self.kind} graph") from None

    def __contains__(self, v):
        try:
            self.locate(v)
        except KeyError:
            return False
        return True

    def edge_labels(self):
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.edges()}


def from_edges(n, edges, kind="plain"):
    """Abstract graph on vertices 0..n-1, labelled by their indices."""
    nbrs = [set() for _ in range(n)]
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at {i}")
        nbrs[i].add(j)
        nbrs[j].add(i)
    return Graph(
        ring="",
        kind=kind,
        elements=tuple(range(n)),
        labels=tuple(str(i) for i in range(n)),
        adjacency=tuple(tuple(sorted(s)) for s in nbrs),
    )


def _relation_graph(r, kind, candidates, related, member):
    """Keep the candidates that ``member`` admits; join distinct related pairs."""
    cand = list(candidates)
    nbrs = {x: [] for x in cand}
    for i, x in enumerate(cand):
        for y in cand[i + 1 :]:
            if related(x, y):
                nbrs[x].append(y)
                nbrs[y].append(x)
    verts = [x for x in cand if member(x, nbrs[x])]
    pos = {x: i for i, x in enumerate(verts)}
    adjacency = tuple(tuple(sorted(pos[y] for y in nbrs[x] if y in pos)) for x in verts)
    return Graph(
        ring=r.text,
        kind=kind,
        elements=tuple(verts),
        labels=tuple(r.render(x) for x in verts),
        adjacency=adjacency,
    )


def _nonzero(r):
    return [x for x in r.elements if x != r.zero]


def build_nil_clean_graph(r):
    """Vertices: nonzero x with some y != 0, x whose product with x is nil clean."""
    nc = r.nil_clean
    return _relation_graph(
        r,
        NIL_CLEAN,
        _nonzero(r),
        lambda x, y: r.mul(x, y) in nc,
        lambda x, partners: bool(partners),
    )


def build_nilpotent_divisor_graph(r):
    # membership allows the partner y = x; the edge set stays loop-free
    nil = r.nilpotents
    return _relation_graph(
        r,
        NILPOTENT_DIVISOR,
        _nonzero(r),
        lambda x, y: r.mul(x, y) in nil,
        lambda x, partners: bool(partners) or r.mul(x, x) in nil,
    )


def build_zero_divisor_graph(r):
    zero = r.zero
    return _relation_graph(
        r,
        ZERO_DIVISOR,
        _nonzero(r),
        lambda x, y: r.mul(x, y) == zero,
        lambda x, partners: bool(partners) or r.mul(x, x) == zero,
    )


def build_idempotent_divisor_graph(r, e):
    """Graph on {a : ab = e for some b}; 0 is a vertex when e = 0."""
    r.validate(e)
    if e not in r.idempotents:
        raise ValueError(f"{r.render(e)} is not idempotent in {r.text}")
    return _relation_graph(
        r,
        f"idempotent_divisor({r.render(e)})",
        r.elements,
        lambda a, b: r.mul(a, b) == e,
        lambda a, partners: bool(partners) or r.mul(a, a) == e,
    )


def build_graph(r, kind):
    """Dispatch on the CLI kind names nilclean, nilpotent, zerodiv, idem:<e>."""
    if kind == "nilclean":
        return build_nil_clean_graph(r)
    if kind == "nilpotent":
        return build_nilpotent_divisor_graph(r)
    if kind == "zerodiv":
        return build_zero_divisor_graph(r)
    if kind.startswith("idem:"):
        return build_idempotent_divisor_graph(r, r.parse_element(kind[5:]))
    raise ValueError(f"unknown graph kind {kind!r}; expected nilclean, nilpotent, zerodiv or idem:<element>")


def to_dot(g):
    """DOT text; every edge once, lower canonical endpoint first."""
    lines = ["graph G {"]
    lines += [f'  "{lab}";' for lab in g.labels]
    lines += [f'  "{g.labels[i]}" -- "{g.labels[j]}";' for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g):
    return {
        "ring": g.ring,
        "kind": g.kind,
        "vertices": list(g.labels),
        "edges": [[i, j] for i, j in g.edges()],
    }


def to_json(g):
    return json.dumps(to_json_dict(g), indent=2) + "\n"
