"""Ring-level claims about G_N(R): completeness, girth, connectivity, shape, cliques.

Every check recomputes both sides from the ring and its built graph.  The
ring-level oracle cross-checks (clique and domination brute force, CRT
decomposition) are registered here too since they run over the same rings.
"""

from __future__ import annotations

from .. import invariants as inv
from .. import oracles
from ..graphs import (
    build_idempotent_divisor_graph,
    build_nilpotent_divisor_graph,
    build_zero_divisor_graph,
)
from ..rings import make_ring, crt_decompose
from .core import Outcome, as_context, evaluate, fmt, merge, register, skip

FIGURE1_VERTICES = {"1", "2", "3", "4", "5"}
FIGURE1_EDGES = {("1", "3"), ("1", "4"), ("3", "4"), ("2", "3"), ("2", "5"), ("3", "5")}

CRT_ORACLE_MAX_ORDER = 100


def _has_nontrivial(r):
    idem = r.idempotents - {r.zero, r.one}
    nil = r.nilpotents - {r.zero}
    return bool(idem or nil)


@register("Fig1", "ring", "G_N(Z6) has vertices 1..5 and edges 1-3, 1-4, 3-4, 2-3, 2-5, 3-5")
def _fig1(ctx):
    if ctx.text != "Z6":
        return skip("Fig1", ctx, "ring is not Z6")
    out = Outcome("Fig1", ctx)
    g = ctx.graph
    out.expect(set(g.labels) == FIGURE1_VERTICES, f"vertices {sorted(g.labels)}")
    want = {frozenset(e) for e in FIGURE1_EDGES}
    got = g.edge_labels()
    for e in sorted(want - got, key=sorted):
        out.expect(False, f"missing edge {'-'.join(sorted(e))}")
    for e in sorted(got - want, key=sorted):
        out.expect(False, f"extra edge {'-'.join(sorted(e))}")
    return out.result()


@register("Fig2", "ring", "G_N(field) is the matching x -- x^-1 over units with x != x^-1")
def _fig2(ctx):
    r = ctx.ring
    if not r.is_field:
        return skip("Fig2", ctx, "ring is not a field")
    out = Outcome("Fig2", ctx)
    g = ctx.graph
    want = set()
    for x in r.elements:
        if x != r.zero:
            y = r.inverse(x)
            if y != x:
                want.add(frozenset((x, y)))
    got = {frozenset((g.elements[i], g.elements[j])) for i, j in g.edges()}
    for e in sorted(want ^ got, key=lambda e: sorted(e)):
        tag = "missing" if e in want else "extra"
        out.expect(False, f"{tag} edge {'-'.join(r.render(x) for x in sorted(e))}")
    want_v = set().union(*want) if want else set()
    out.expect(set(g.elements) == want_v, f"vertex set has {g.order} vertices, expected {len(want_v)}")
    return out.result()


@register("Gen", "ring", "nilpotent, zero and idempotent divisor graphs embed in G_N(R)")
def _generalisation(ctx):
    r = ctx.ring
    out = Outcome("Gen", ctx)

    def edge_set(g):
        return {frozenset((g.elements[i], g.elements[j])) for i, j in g.edges()}

    nc_edges = edge_set(ctx.graph)
    nil_edges = edge_set(build_nilpotent_divisor_graph(r))
    zero_edges = edge_set(build_zero_divisor_graph(r))
    for e in sorted(nil_edges - nc_edges, key=sorted):
        out.expect(False, f"nilpotent-divisor edge {'-'.join(map(r.render, sorted(e)))} not in G_N")
    for e in sorted(zero_edges - nil_edges, key=sorted):
        out.expect(False, f"zero-divisor edge {'-'.join(map(r.render, sorted(e)))} not nilpotent-divisor")
    for idem in sorted(r.idempotents):
        for e in sorted(edge_set(build_idempotent_divisor_graph(r, idem)), key=sorted):
            if r.zero not in e and e not in nc_edges:
                out.expect(
                    False,
                    f"idempotent-divisor({r.render(idem)}) edge {'-'.join(map(r.render, sorted(e)))} not in G_N",
                )
    return out.result()


@register("Thm2.2", "ring", "G_N(R) is complete iff R is a nil clean ring")
def _thm2_2(ctx):
    out = Outcome("Thm2.2", ctx)
    complete = inv.is_complete(ctx.graph)
    ncr = ctx.ring.is_nil_clean_ring
    out.expect(
        complete == ncr,
        f"complete={complete} (|V|={ctx.graph.order}, |E|={ctx.graph.size}) but nil clean ring={ncr}",
    )
    return out.result()


def _field_guard(claim_id, ctx):
    r = ctx.ring
    if not r.is_field or r.order <= 2:
        return skip(claim_id, ctx, "not a field of order > 2")
    return None


@register("Cor2.3.1", "ring", "for a field of order > 2, diam G_N(F) is infinite")
def _cor2_3_1(ctx):
    if s := _field_guard("Cor2.3.1", ctx):
        return s
    out = Outcome("Cor2.3.1", ctx)
    d = ctx.diameter
    out.expect(d == inv.INF, f"diameter {fmt(d)}, expected inf")
    return out.result()


@register("Cor2.3.2", "ring", "for a field of order > 2, girth is infinite and clique number is 2")
def _cor2_3_2(ctx):
    if s := _field_guard("Cor2.3.2", ctx):
        return s
    out = Outcome("Cor2.3.2", ctx)
    out.expect(ctx.girth == inv.INF, f"girth {fmt(ctx.girth)}, expected inf")
    out.expect(ctx.clique_number == 2, f"clique number {ctx.clique_number}, expected 2")
    return out.result()


@register("Cor2.3.3", "ring", "for a field of order n > 2, |V| = n - |{a : a = a^-1}| - 1")
def _cor2_3_3(ctx):
    if s := _field_guard("Cor2.3.3", ctx):
        return s
    r = ctx.ring
    out = Outcome("Cor2.3.3", ctx)
    self_inverse = [x for x in r.elements if x != r.zero and r.mul(x, x) == r.one]
    want = r.order - len(self_inverse) - 1
    out.expect(ctx.graph.order == want, f"|V|={ctx.graph.order}, expected {r.order}-{len(self_inverse)}-1={want}")
    return out.result()


@register("Thm2.4", "ring", "a nontrivial idempotent or nilpotent forces girth 3")
def _thm2_4(ctx):
    if not _has_nontrivial(ctx.ring):
        return skip("Thm2.4", ctx, "only trivial idempotents and nilpotents")
    out = Outcome("Thm2.4", ctx)
    out.expect(ctx.girth == 3, f"girth {fmt(ctx.girth)}, expected 3")
    return out.result()


@register("Thm2.5", "ring", "only trivial idempotents and nilpotents gives infinite girth (R is a field)")
def _thm2_5(ctx):
    if _has_nontrivial(ctx.ring):
        return skip("Thm2.5", ctx, "has a nontrivial idempotent or nilpotent")
    out = Outcome("Thm2.5", ctx)
    out.expect(ctx.girth == inv.INF, f"girth {fmt(ctx.girth)}, expected inf")
    out.expect(ctx.ring.is_field, "ring with trivial idempotents and nilpotents is not a field")
    return out.result()


@register("Thm2.6.1", "ring", "R is a field or G_N(R) is connected")
def _thm2_6_1(ctx):
    out = Outcome("Thm2.6.1", ctx)
    if not ctx.ring.is_field:
        out.expect(ctx.connected, f"non-field with {len(inv.connected_components(ctx.graph))} components")
    return out.result()


@register("Thm2.6.2", "ring", "diam G_N(R) is infinite or at most 3")
def _thm2_6_2(ctx):
    out = Outcome("Thm2.6.2", ctx)
    d = ctx.diameter
    out.expect(d is None or d == inv.INF or d <= 3, f"diameter {fmt(d)}")
    return out.result()


@register("Thm2.6.3", "ring", "gr G_N(R) is 3 or infinite")
def _thm2_6_3(ctx):
    out = Outcome("Thm2.6.3", ctx)
    out.expect(ctx.girth in (3, inv.INF), f"girth {fmt(ctx.girth)}")
    return out.result()


@register("Cor2.7", "ring", "R not reduced implies diam G_N(R) <= 2")
def _cor2_7(ctx):
    if ctx.ring.is_reduced:
        return skip("Cor2.7", ctx, "ring is reduced")
    out = Outcome("Cor2.7", ctx)
    d = ctx.diameter
    out.expect(d is not None and d != inv.INF and d <= 2, f"diameter {fmt(d)}, expected <= 2")
    return out.result()


@register("Cor2.8", "ring", "R is a field iff G_N(R) is bipartite")
def _cor2_8(ctx):
    out = Outcome("Cor2.8", ctx)
    bip = inv.is_bipartite(ctx.graph)
    out.expect(bip == ctx.ring.is_field, f"bipartite={bip} but field={ctx.ring.is_field}")
    return out.result()


def _is_z5(r):
    # every ring of order 5 is Z5
    return r.is_field and r.order == 5


def _star_claim(claim_id, ctx, min_leaves):
    out = Outcome(claim_id, ctx)
    star = inv.is_star(ctx.graph, min_leaves)
    z5 = _is_z5(ctx.ring)
    shape = f"|V|={ctx.graph.order}, |E|={ctx.graph.size}"
    out.expect(star == z5, f"star(K_1,m, m>={min_leaves})={star} ({shape}) but R = Z5 is {z5}")
    return out.result()


@register("Thm2.9.m1", "ring", "G_N(R) is a star K_1,m (m >= 1) iff R = Z5")
def _thm2_9_m1(ctx):
    return _star_claim("Thm2.9.m1", ctx, 1)


@register("Thm2.9.m2", "ring", "G_N(R) is a star K_1,m (m >= 2) iff R = Z5")
def _thm2_9_m2(ctx):
    return _star_claim("Thm2.9.m2", ctx, 2)


@register("Thm2.10", "ring", "clique number >= max(|Nil(R)|, |Idem(R)| - 1)")
def _thm2_10(ctx):
    r = ctx.ring
    out = Outcome("Thm2.10", ctx)
    bound = max(len(r.nilpotents), len(r.idempotents) - 1)
    out.expect(ctx.clique_number >= bound, f"clique number {ctx.clique_number} < {bound}")
    return out.result()


def _wnc_not_nc(r):
    return r.is_weakly_nil_clean_ring and not r.is_nil_clean_ring


@register("Thm2.11.1", "ring", "weakly nil clean, not nil clean: clique number >= floor(|R|/2)")
def _thm2_11_1(ctx):
    r = ctx.ring
    if not _wnc_not_nc(r):
        return skip("Thm2.11.1", ctx, "not weakly nil clean, or nil clean")
    out = Outcome("Thm2.11.1", ctx)
    out.expect(ctx.clique_number >= r.order // 2, f"clique number {ctx.clique_number} < {r.order // 2}")
    return out.result()


@register("Thm2.11.2", "ring", "weakly nil clean, not nil clean, |R| > 3 even: diam G_N(R) = 2")
def _thm2_11_2(ctx):
    r = ctx.ring
    if not _wnc_not_nc(r) or r.order % 2 or r.order <= 3:
        return skip("Thm2.11.2", ctx, "hypothesis unmet (weakly nil clean, not nil clean, even order > 3)")
    out = Outcome("Thm2.11.2", ctx)
    out.expect(ctx.diameter == 2, f"diameter {fmt(ctx.diameter)}, expected 2")
    return out.result()


@register("Oracle.clique", "ring", "branch and bound clique number equals all-subsets brute force")
def _oracle_clique(ctx):
    g = ctx.graph
    if g.order > oracles.MAX_ORACLE_ORDER:
        return skip("Oracle.clique", ctx, f"graph has more than {oracles.MAX_ORACLE_ORDER} vertices")
    out = Outcome("Oracle.clique", ctx)
    brute = oracles.brute_force_clique_number(g)
    clique = ctx.clique
    out.expect(len(clique) == brute, f"branch and bound {len(clique)} vs brute force {brute}")
    out.expect(
        all(b in g.adjacency[a] for i, a in enumerate(clique) for b in clique[i + 1 :]),
        "reported clique is not pairwise adjacent",
    )
    return out.result()


@register("Oracle.domination", "ring", "domination search equals all-subsets brute force")
def _oracle_domination(ctx):
    g = ctx.graph
    if g.order > oracles.MAX_ORACLE_ORDER:
        return skip("Oracle.domination", ctx, f"graph has more than {oracles.MAX_ORACLE_ORDER} vertices")
    out = Outcome("Oracle.domination", ctx)
    gamma, sets = inv.minimum_dominating_sets(g, max_sets=1 << 20, budget=ctx.budget)
    b_gamma, b_sets = oracles.brute_force_dominating_sets(g)
    out.expect(gamma == b_gamma, f"search gamma {gamma} vs brute force {b_gamma}")
    out.expect(sets == b_sets, f"search found {len(sets)} minimum sets vs brute force {len(b_sets)}")
    return out.result()


@register("Oracle.crt", "ring", "class sets agree with those of the CRT prime-power decomposition")
def _oracle_crt(ctx):
    r = ctx.ring
    if r.order > CRT_ORACLE_MAX_ORDER:
        return skip("Oracle.crt", ctx, f"ring order above {CRT_ORACLE_MAX_ORDER}")
    out = Outcome("Oracle.crt", ctx)
    target_spec, forward = crt_decompose(r.spec)
    t = make_ring(target_spec)
    image = [forward(x) for x in r.elements]
    out.expect(len(set(image)) == t.order == r.order, "CRT map is not a bijection")
    for name in ("idempotents", "nilpotents", "units", "nil_clean", "weakly_nil_clean"):
        mapped = {forward(x) for x in getattr(r, name)}
        out.expect(mapped == getattr(t, name), f"{name} differ under CRT ({len(mapped)} vs {len(getattr(t, name))})")
    for x, y in ((x, y) for x in r.elements[:12] for y in r.elements):
        if forward(r.mul(x, y)) != t.mul(forward(x), forward(y)):
            out.expect(False, f"CRT map not multiplicative at {r.render(x)}*{r.render(y)}")
            break
    return out.result()


# ---------------------------------------------------------------------------
# Grouped checks, one per theorem, over all of its parts


def _run(ids, ring):
    ctx = as_context(ring)
    return [evaluate(i, ctx) for i in ids]


def check_complete_iff_nil_clean(ring):
    return merge("Thm2.2", _run(["Thm2.2"], ring))


def check_field_corollary(ring):
    return merge("Cor2.3", _run(["Cor2.3.1", "Cor2.3.2", "Cor2.3.3"], ring))


def check_girth_trichotomy(ring):
    return merge("Thm2.4/2.5/2.6.3", _run(["Thm2.4", "Thm2.5", "Thm2.6.3"], ring))


def check_connectivity_diameter(ring):
    return merge("Thm2.6/Cor2.7", _run(["Thm2.6.1", "Thm2.6.2", "Cor2.7"], ring))


def check_bipartite_iff_field(ring):
    return merge("Cor2.8", _run(["Cor2.8"], ring))


def check_star_iff_Z5(ring):
    """Both star conventions; returns (m >= 1 result, m >= 2 result)."""
    return tuple(_run(["Thm2.9.m1", "Thm2.9.m2"], ring))


def check_clique_lower_bounds(ring):
    return merge("Thm2.10/2.11", _run(["Thm2.10", "Thm2.11.1", "Thm2.11.2"], ring))
