from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .. import invariants as inv
from ..graphs import build_nil_clean_graph
from ..rings import ClassifiedRing, make_ring

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class CheckResult:
    claim_id: str
    ring: str
    status: str
    witness: str | None = None
    note: str | None = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError("a FAIL needs a witness")

    def to_dict(self):
        return {
            "claim": self.claim_id,
            "ring": self.ring,
            "status": self.status,
            "witness": self.witness,
            "note": self.note,
        }


class RingContext:
    """A ring, its nil clean divisor graph, and lazily computed invariants.

    Claims evaluated on the same ring share one context.  ``p`` is set for
    the Z_2p / Z_3p families.
    """

    def __init__(self, ring, p=None, budget=inv.DEFAULT_NODE_BUDGET):
        if isinstance(ring, ClassifiedRing):
            self.ring = ring
        else:
            self.ring = make_ring(ring)
        self.text = self.ring.text
        self.p = p
        self.budget = budget

    @cached_property
    def graph(self):
        return build_nil_clean_graph(self.ring)

    @cached_property
    def diameter(self):
        return inv.diameter(self.graph)

    @cached_property
    def girth(self):
        return inv.girth(self.graph)

    @cached_property
    def connected(self):
        return inv.is_connected(self.graph)

    @cached_property
    def clique(self):
        return inv.maximum_clique(self.graph, self.budget)

    @property
    def clique_number(self):
        return len(self.clique)

    @cached_property
    def dominating(self):
        return inv.minimum_dominating_sets(self.graph, budget=self.budget)

    def degree_of(self, value):
        """Degree of the Z_n vertex with integer value ``value``."""
        return len(self.graph.adjacency[self.graph.locate((value,))])

    def neighbours_of(self, value):
        """Neighbour values of a Z_n vertex, as plain integers."""
        g = self.graph
        return {g.elements[j][0] for j in g.adjacency[g.locate((value,))]}

    def values(self, sets):
        g = self.graph
        return [tuple(g.elements[v][0] for v in s) for s in sets]


def as_context(ring, p=None):
    return ring if isinstance(ring, RingContext) else RingContext(ring, p=p)


def fmt(value):
    """Short rendering of invariant values for witnesses."""
    if value is None:
        return "undefined"
    if value == inv.INF:
        return "inf"
    return str(value)


class Outcome:
    """Collects mismatches for one claim and turns them into a CheckResult."""

    def __init__(self, claim_id, ctx):
        self.claim_id = claim_id
        self.ring = ctx.text
        self.problems = []

    def expect(self, ok, message):
        if not ok:
            self.problems.append(message)
        return ok

    def result(self, limit=8):
        if not self.problems:
            return CheckResult(self.claim_id, self.ring, PASS)
        shown = "; ".join(self.problems[:limit])
        if len(self.problems) > limit:
            shown += f"; ... ({len(self.problems)} mismatches)"
        return CheckResult(self.claim_id, self.ring, FAIL, witness=shown)


def skip(claim_id, ctx, reason):
    return CheckResult(claim_id, ctx.text, SKIP, note=reason)


def merge(claim_id, results):
    """Fold several part results into one: any FAIL wins, then any PASS."""
    results = list(results)
    ring = results[0].ring if results else ""
    fails = [r for r in results if r.status == FAIL]
    if fails:
        witness = " | ".join(f"{r.claim_id}: {r.witness}" for r in fails)
        return CheckResult(claim_id, ring, FAIL, witness=witness)
    if any(r.status == PASS for r in results):
        return CheckResult(claim_id, ring, PASS)
    note = "; ".join(f"{r.claim_id}: {r.note}" for r in results if r.note)
    return CheckResult(claim_id, ring, SKIP, note=note or None)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    target: str  # "ring", "2p" or "3p"
    check: object
    summary: str


CLAIMS: dict[str, Claim] = {}


def register(claim_id, target, summary):
    def wrap(fn):
        if claim_id in CLAIMS:
            raise ValueError(f"duplicate claim id {claim_id}")
        CLAIMS[claim_id] = Claim(claim_id, target, fn, summary)
        return fn

    return wrap


def evaluate(claim_id, ctx):
    """Run one claim on one context; budget overruns become SKIPs."""
    try:
        return CLAIMS[claim_id].check(ctx)
    except inv.SearchBudgetExceeded as exc:
        return skip(claim_id, ctx, f"resource budget exceeded: {exc}")
