"""Claims about G_N(Z_2p) and G_N(Z_3p) for odd primes p.

Expected degrees and congruences are written as formulas in p and compared
against the graph built from ring arithmetic; the congruences are evaluated
with plain integer arithmetic, independently of the graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import isprime

from .core import RingContext, Outcome, evaluate, merge, register, skip


@dataclass(frozen=True)
class QuadrupleStructure:
    """Families found by the figure checks.

    For Z_2p each family is (a, b, c, d); for Z_3p it is (a, b, c, d, k, l).
    """

    p: int
    families: tuple
    special_vertices: tuple


def _need_odd_prime(claim_id, ctx, minimum=3):
    p = ctx.p
    if p is None or not isprime(p) or p < minimum:
        return skip(claim_id, ctx, f"needs a prime p >= {minimum}")
    return None


def _all_nonzero_are_vertices(out, ctx, n):
    got = {x[0] for x in ctx.graph.elements}
    out.expect(got == set(range(1, n)), f"vertex set misses {sorted(set(range(1, n)) - got)[:6]}")


def _handshake(out, ctx):
    total = sum(len(a) for a in ctx.graph.adjacency)
    out.expect(total == 2 * ctx.graph.size, f"degree sum {total} != 2|E| = {2 * ctx.graph.size}")


def _compare_degrees(out, ctx, expected):
    for v in sorted(expected):
        got = ctx.degree_of(v)
        out.expect(got == expected[v], f"deg({v}) = {got}, expected {expected[v]}")


# ---------------------------------------------------------------------------
# Z_2p


def _z2p_units(p):
    return {1: {p, p + 1}, p - 1: {p, 2 * p - 1}, p + 1: {1, p}, 2 * p - 1: {p - 1, p}}


@register("Lem3.1", "2p", "G_N(Z_2p): deg p = 2p-2, deg 2 on {1, p-1, p+1, 2p-1}, 3 elsewhere")
def _lem3_1(ctx):
    if s := _need_odd_prime("Lem3.1", ctx):
        return s
    p, n = ctx.p, 2 * ctx.p
    r = ctx.ring
    out = Outcome("Lem3.1", ctx)
    nc = sorted(x[0] for x in r.nil_clean)
    out.expect(nc == sorted({0, 1, p, p + 1}), f"NC = {nc}, expected {{0, 1, p, p+1}}")
    _all_nonzero_are_vertices(out, ctx, n)
    units = _z2p_units(p)
    expected = {a: 2 * p - 2 if a == p else 2 if a in units else 3 for a in range(1, n)}
    _compare_degrees(out, ctx, expected)
    for a, want in units.items():
        got = ctx.neighbours_of(a)
        out.expect(got == want, f"A_{a} = {sorted(got)}, expected {sorted(want)}")
    _handshake(out, ctx)
    return out.result()


@register("Rem3.2", "2p", "for even non-special a, the two solutions of ax = p+1 have opposite parity")
def _rem3_2(ctx):
    if s := _need_odd_prime("Rem3.2", ctx):
        return s
    p, n = ctx.p, 2 * ctx.p
    r = ctx.ring
    out = Outcome("Rem3.2", ctx)
    special = {0, 1, p - 1, p, p + 1, 2 * p - 1}
    target = r.element(p + 1)
    for a in range(2, n, 2):
        if a in special:
            continue
        ea = r.element(a)
        sols = [x for x in range(n) if r.mul(ea, r.element(x)) == target]
        if out.expect(len(sols) == 2, f"{a}x = p+1 has solutions {sols}, expected two"):
            out.expect(sols[0] % 2 != sols[1] % 2, f"{a}x = p+1 solutions {sols} share parity")
    return out.result()


def figure3_structure(p):
    """Pair the even non-special residues of Z_2p by a*b = p+1 and lift by +p."""
    n = 2 * p
    special = {0, 1, p - 1, p, p + 1, 2 * p - 1}
    evens = [a for a in range(2, n, 2) if a not in special]
    families, used = [], set()
    for a in evens:
        if a in used:
            continue
        partners = [b for b in evens if b != a and a * b % n == (p + 1) % n]
        if len(partners) != 1:
            raise ValueError(f"even residue {a} has partners {partners} for p={p}")
        b = partners[0]
        used.update((a, b))
        families.append((a, b, (a + p) % n, (b + p) % n))
    return QuadrupleStructure(p, tuple(families), (p, 1, p - 1, p + 1, 2 * p - 1))


@register("Fig3", "2p", "G_N(Z_2p): (p-3)/2 quadruples a,b,c=a+p,d=b+p with ab = p+1 hanging off p")
def _fig3(ctx):
    if s := _need_odd_prime("Fig3", ctx):
        return s
    p, n = ctx.p, 2 * ctx.p
    out = Outcome("Fig3", ctx)
    try:
        st = figure3_structure(p)
    except ValueError as exc:
        out.expect(False, str(exc))
        return out.result()
    out.expect(len(st.families) == (p - 3) // 2, f"{len(st.families)} quadruples, expected {(p - 3) // 2}")
    members = [v for fam in st.families for v in fam]
    others = set(range(1, n)) - set(st.special_vertices)
    out.expect(len(members) == len(set(members)), "quadruples overlap")
    out.expect(set(members) == others, "quadruples do not cover the non-special vertices")
    for a, b, c, d in st.families:
        out.expect(a % 2 == 0 and b % 2 == 0, f"a={a}, b={b} not both even")
        out.expect(a * b % n == p + 1, f"{a}*{b} = {a * b % n} mod {n}, expected p+1")
        # each member: p plus the two solutions of x*y = p+1 (or 1 for c*d)
        want = {a: {p, b, d}, b: {p, a, c}, c: {p, b, d}, d: {p, a, c}}
        for v, nb in want.items():
            got = ctx.neighbours_of(v)
            out.expect(got == nb, f"A_{v} = {sorted(got)}, expected {sorted(nb)}")
        out.expect(c * d % n == 1, f"c*d = {c}*{d} = {c * d % n}, expected 1")
    hub = ctx.neighbours_of(p)
    out.expect(hub == set(range(1, n)) - {p}, f"p is not adjacent to every other vertex")
    return out.result()


@register("Thm3.3", "2p", "G_N(Z_2p): clique 3, diameter 2, girth 3, {p} the unique minimum dominating set")
def _thm3_3(ctx):
    if s := _need_odd_prime("Thm3.3", ctx):
        return s
    p = ctx.p
    out = Outcome("Thm3.3", ctx)
    out.expect(ctx.clique_number == 3, f"clique number {ctx.clique_number}, expected 3")
    out.expect(ctx.diameter == 2, f"diameter {ctx.diameter}, expected 2")
    out.expect(ctx.girth == 3, f"girth {ctx.girth}, expected 3")
    gamma, sets = ctx.dominating
    out.expect(gamma == 1, f"domination number {gamma}, expected 1")
    values = ctx.values(sets) if sets is not None else None
    out.expect(values == [(p,)], f"minimum dominating sets {values}, expected [({p},)]")
    return out.result()


# ---------------------------------------------------------------------------
# Z_3p


def z3p_layout(p):
    """Named vertices of G_N(Z_3p) for p > 3, by residue of p mod 3."""
    n = 3 * p
    if p % 3 == 2:
        target = p + 1
        degree_two = (1, p - 1, 3 * p - 1, 2 * p + 1)
        exceptional = (p + 1, 2 * p - 1)
    else:
        target = 2 * p + 1
        degree_two = (1, p + 1, 3 * p - 1, 2 * p - 1)
        exceptional = (p - 1, 2 * p + 1)
    return {
        "n": n,
        "target": target,
        "degree_two": degree_two,
        "exceptional": exceptional,
        "multiples_of_3": tuple(range(3, n, 3)),
    }


def _z3p_guard(claim_id, ctx, residue):
    if s := _need_odd_prime(claim_id, ctx, minimum=5):
        return s
    if ctx.p % 3 != residue:
        return skip(claim_id, ctx, f"needs p = {residue} mod 3")
    return None


def _lemma_multiples(claim_id, ctx, residue):
    if s := _z3p_guard(claim_id, ctx, residue):
        return s
    lay = z3p_layout(ctx.p)
    out = Outcome(claim_id, ctx)
    _all_nonzero_are_vertices(out, ctx, lay["n"])
    expected = {m: 4 if m in lay["exceptional"] else 5 for m in lay["multiples_of_3"]}
    _compare_degrees(out, ctx, expected)
    return out.result()


def _lemma_rest(claim_id, ctx, residue):
    if s := _z3p_guard(claim_id, ctx, residue):
        return s
    p = ctx.p
    lay = z3p_layout(p)
    n = lay["n"]
    out = Outcome(claim_id, ctx)
    _all_nonzero_are_vertices(out, ctx, n)
    if residue == 2:
        nc = sorted(x[0] for x in ctx.ring.nil_clean)
        out.expect(nc == sorted({0, 1, p + 1, 2 * p}), f"NC = {nc}, expected {{0, 1, p+1, 2p}}")
    big = set(lay["multiples_of_3"]) | {p, 2 * p} | set(lay["degree_two"]) | set(lay["exceptional"])
    expected = {p: 2 * p - 2, 2 * p: 2 * p - 2}
    expected.update({x: 2 for x in lay["degree_two"]})
    expected.update({x: 3 for x in range(1, n) if x not in big})
    _compare_degrees(out, ctx, expected)
    _handshake(out, ctx)
    return out.result()


@register("Lem3.4", "3p", "G_N(Z_3p), p = 2 mod 3: deg 3k = 5 except deg(p+1) = deg(2p-1) = 4")
def _lem3_4(ctx):
    return _lemma_multiples("Lem3.4", ctx, 2)


@register("Lem3.5", "3p", "G_N(Z_3p), p = 2 mod 3: deg p = deg 2p = 2p-2, deg 2 on {1,p-1,3p-1,2p+1}, else 3")
def _lem3_5(ctx):
    return _lemma_rest("Lem3.5", ctx, 2)


@register("Lem3.7", "3p", "G_N(Z_3p), p = 1 mod 3: deg 3k = 5 except deg(p-1) = deg(2p+1) = 4")
def _lem3_7(ctx):
    return _lemma_multiples("Lem3.7", ctx, 1)


@register("Lem3.8", "3p", "G_N(Z_3p), p = 1 mod 3: deg p = deg 2p = 2p-2, deg 2 on {1,p+1,3p-1,2p-1}, else 3")
def _lem3_8(ctx):
    return _lemma_rest("Lem3.8", ctx, 1)


def _special_edges(p):
    """Edges among the six named units and multiples of 3, as drawn.

    The p = 1 mod 3 figure uses the same picture with relabelled positions.
    """
    edges = [
        (2 * p, p - 1), (2 * p, 1), (2 * p, 2 * p - 1), (2 * p, p + 1),
        (1, p + 1), (p + 1, p), (p, 2 * p - 1), (2 * p - 1, p - 1),
        (2 * p - 1, 3 * p - 1), (3 * p - 1, p), (p + 1, 2 * p + 1), (2 * p + 1, p),
    ]
    if p % 3 == 1:
        swap = {
            p - 1: p + 1, 1: 3 * p - 1, 2 * p - 1: 2 * p + 1,
            p + 1: p - 1, 3 * p - 1: 1, 2 * p + 1: 2 * p - 1,
        }
        edges = [(swap.get(u, u), swap.get(v, v)) for u, v in edges]
    return edges


def figure45_structure(ctx):
    """Read the six-vertex families off the built graph of Z_3p.

    For each unused non-exceptional multiple of 3, k (smallest first), l is
    its multiple-of-3 neighbour; a, b are k's unit neighbours attached to 2p
    and p respectively, and c, d the unit neighbours of l adjacent to a, b.
    """
    p = ctx.p
    lay = z3p_layout(p)
    n = lay["n"]
    named = {p, 2 * p} | set(lay["degree_two"]) | set(lay["exceptional"])
    m3 = set(lay["multiples_of_3"])
    families, used = [], set()
    for k in lay["multiples_of_3"]:
        if k in named or k in used:
            continue
        nb_k = ctx.neighbours_of(k)
        ls = sorted(nb_k & m3)
        if len(ls) != 1:
            raise ValueError(f"{k} has multiple-of-3 neighbours {ls}")
        l = ls[0]
        nb_l = ctx.neighbours_of(l)

        def unit_nbrs(nb):
            return sorted(v for v in nb if math.gcd(v, n) == 1)

        uk, ul = unit_nbrs(nb_k), unit_nbrs(nb_l)
        if len(uk) != 2 or len(ul) != 2:
            raise ValueError(f"family at {k}, {l}: unit neighbours {uk}, {ul}")
        on_2p = [u for u in uk if 2 * p in ctx.neighbours_of(u)]
        on_p = [u for u in uk if p in ctx.neighbours_of(u)]
        if len(on_2p) != 1 or len(on_p) != 1:
            raise ValueError(f"unit neighbours {uk} of {k} do not split between p and 2p")
        a, b = on_2p[0], on_p[0]
        cs = [u for u in ul if u in ctx.neighbours_of(a)]
        ds = [u for u in ul if u in ctx.neighbours_of(b)]
        if len(cs) != 1 or len(ds) != 1:
            raise ValueError(f"family at {k}, {l}: cannot match {ul} to {a}, {b}")
        used.update((k, l))
        families.append((a, b, cs[0], ds[0], k, l))
    special = (p, 2 * p) + lay["degree_two"] + lay["exceptional"]
    return QuadrupleStructure(p, tuple(families), special)


def _figure45(claim_id, ctx, residue):
    if s := _z3p_guard(claim_id, ctx, residue):
        return s
    p = ctx.p
    lay = z3p_layout(p)
    n, target = lay["n"], lay["target"]
    out = Outcome(claim_id, ctx)
    try:
        st = figure45_structure(ctx)
    except ValueError as exc:
        out.expect(False, str(exc))
        return out.result()
    out.expect(len(st.families) == (p - 3) // 2, f"{len(st.families)} families, expected {(p - 3) // 2}")
    members = [v for fam in st.families for v in fam]
    others = set(range(1, n)) - set(st.special_vertices)
    out.expect(len(members) == len(set(members)), "families overlap")
    out.expect(set(members) == others, "families do not cover the non-special vertices")
    # residue the drawing gives to a and c (both attached to 2p)
    a_residue = 1 if residue == 2 else 2
    for a, b, c, d, k, l in st.families:
        tag = f"family (a,b,c,d,k,l)=({a},{b},{c},{d},{k},{l})"
        out.expect(k % 3 == 0 and l % 3 == 0, f"{tag}: k, l not multiples of 3")
        out.expect(a * c % n == 1 and b * d % n == 1, f"{tag}: ac or bd is not 1 mod {n}")
        prods = [a * k % n, c * l % n, b * k % n, d * l % n]
        out.expect(all(x == target for x in prods), f"{tag}: ak, cl, bk, dl = {prods}, expected {target}")
        out.expect({a % 3, b % 3} == {1, 2}, f"{tag}: a, b residues mod 3 are not {{1, 2}}")
        out.expect(c % 3 == a % 3 and d % 3 == b % 3, f"{tag}: c, d residues differ from a, b")
        out.expect(a % 3 == a_residue, f"{tag}: a = {a % 3} mod 3, expected {a_residue}")
        fam = {a, b, c, d, k, l}
        inside = {
            frozenset((u, v)) for u in fam for v in ctx.neighbours_of(u) if v in fam
        }
        want = {frozenset(e) for e in ((a, c), (b, d), (a, k), (b, k), (c, l), (d, l), (k, l))}
        out.expect(inside == want, f"{tag}: induced edges {sorted(map(sorted, inside))}")
        for v, hubs in ((a, {2 * p}), (c, {2 * p}), (b, {p}), (d, {p}), (k, {p, 2 * p}), (l, {p, 2 * p})):
            got = ctx.neighbours_of(v) & {p, 2 * p}
            out.expect(got == hubs, f"{tag}: {v} attached to {sorted(got)}, expected {sorted(hubs)}")
    drawn = {}
    for u, v in _special_edges(p):
        drawn.setdefault(u, set()).add(v)
        drawn.setdefault(v, set()).add(u)
    for v in lay["degree_two"] + lay["exceptional"]:
        got = ctx.neighbours_of(v)
        out.expect(got == drawn[v], f"A_{v} = {sorted(got)}, drawn {sorted(drawn[v])}")
    out.expect(2 * p not in ctx.neighbours_of(p), "p and 2p are adjacent")
    return out.result()


@register("Fig4", "3p", "G_N(Z_3p), p = 2 mod 3: (p-3)/2 six-vertex families with products p+1")
def _fig4(ctx):
    return _figure45("Fig4", ctx, 2)


@register("Fig5", "3p", "G_N(Z_3p), p = 1 mod 3: (p-3)/2 six-vertex families with products 2p+1")
def _fig5(ctx):
    return _figure45("Fig5", ctx, 1)


def _z3p_invariants(claim_id, ctx, residue):
    if s := _z3p_guard(claim_id, ctx, residue):
        return s
    p = ctx.p
    out = Outcome(claim_id, ctx)
    out.expect(ctx.girth == 3, f"girth {ctx.girth}, expected 3")
    out.expect(ctx.clique_number == 3, f"clique number {ctx.clique_number}, expected 3")
    out.expect(ctx.diameter == 3, f"diameter {ctx.diameter}, expected 3")
    gamma, sets = ctx.dominating
    out.expect(gamma == 2, f"domination number {gamma}, expected 2")
    values = ctx.values(sets) if sets is not None else None
    out.expect(values == [(p, 2 * p)], f"minimum dominating sets {values}, expected [({p}, {2 * p})]")
    return out.result()


@register("Thm3.6", "3p", "G_N(Z_3p), p = 2 mod 3: girth 3, clique 3, diameter 3, {p, 2p} unique minimum dominating set")
def _thm3_6(ctx):
    return _z3p_invariants("Thm3.6", ctx, 2)


@register("Thm3.9", "3p", "G_N(Z_3p), p = 1 mod 3: girth 3, clique 3, diameter 3, {p, 2p} unique minimum dominating set")
def _thm3_9(ctx):
    return _z3p_invariants("Thm3.9", ctx, 1)


# ---------------------------------------------------------------------------
# Grouped checks by prime


def _z2p(p):
    return RingContext(f"Z{2 * p}", p=p)


def _z3p(p):
    return RingContext(f"Z{3 * p}", p=p)


def check_degree_profile_2p(p, ctx=None):
    ctx = ctx or _z2p(p)
    return merge("Lem3.1+Rem3.2", [evaluate("Lem3.1", ctx), evaluate("Rem3.2", ctx)])


def check_figure3_structure(p, ctx=None):
    return evaluate("Fig3", ctx or _z2p(p))


def check_Z2p_invariants(p, ctx=None):
    return evaluate("Thm3.3", ctx or _z2p(p))


def check_degree_profile_3p(p, ctx=None):
    ctx = ctx or _z3p(p)
    if p % 3 == 1:
        return merge("Lem3.7+Lem3.8", [evaluate("Lem3.7", ctx), evaluate("Lem3.8", ctx)])
    return merge("Lem3.4+Lem3.5", [evaluate("Lem3.4", ctx), evaluate("Lem3.5", ctx)])


def check_figure45_structure(p, ctx=None):
    ctx = ctx or _z3p(p)
    return evaluate("Fig5" if p % 3 == 1 else "Fig4", ctx)


def check_Z3p_invariants(p, ctx=None):
    ctx = ctx or _z3p(p)
    return evaluate("Thm3.9" if p % 3 == 1 else "Thm3.6", ctx)
