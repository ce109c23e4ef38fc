"""Run claims over rings and primes and aggregate the results."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from sympy import primerange

from .. import invariants as inv
from .core import CLAIMS, FAIL, PASS, SKIP, CheckResult, RingContext, evaluate

CURATED_RINGS = ("Z2xZ2", "Z2xZ3", "Z3xZ3", "Z4xZ2", "GF2^2", "GF2^3", "GF3^2")
DEFAULT_PRIMES_TO = 97
DEFAULT_MAX_N = 200

EXIT_CLEAN = 0
EXIT_UNEXPECTED = 1
EXIT_KNOWN_ONLY = 10


def load_known_discrepancies():
    """{(claim_id, ring): reason} shipped with the package."""
    text = resources.files(__package__).joinpath("known_discrepancies.json").read_text()
    return {(d["claim"], d["ring"]): d["reason"] for d in json.loads(text)}


def select_claims(spec):
    """Resolve a comma separated filter to claim ids in registry order.

    ``all`` selects everything, ``none`` nothing; otherwise each item is a
    claim id or a dotted prefix of ids (``Cor2.3`` selects its three parts).
    """
    if spec is None or spec.strip() == "all":
        return list(CLAIMS)
    if spec.strip() in ("none", ""):
        return []
    chosen = set()
    for item in (s.strip() for s in spec.split(",")):
        hits = [c for c in CLAIMS if c == item or c.startswith(item + ".")]
        if not hits:
            raise KeyError(item)
        chosen.update(hits)
    return [c for c in CLAIMS if c in chosen]


def default_rings(max_n=DEFAULT_MAX_N, extra=CURATED_RINGS):
    rings = [f"Z{n}" for n in range(2, max_n + 1)]
    return rings + [r for r in extra if r not in rings]


def odd_primes(bound):
    return [int(p) for p in primerange(3, bound + 1)]


@dataclass
class SweepReport:
    description: str
    claims: list
    results: list = field(default_factory=list)
    known: dict = field(default_factory=dict)

    def counts(self):
        table = {c: {PASS: 0, FAIL: 0, SKIP: 0} for c in self.claims}
        for r in self.results:
            table[r.claim_id][r.status] += 1
        return table

    @property
    def failures(self):
        return [r for r in self.results if r.status == FAIL]

    @property
    def unexpected_failures(self):
        return [r for r in self.failures if (r.claim_id, r.ring) not in self.known]

    @property
    def exit_code(self):
        if not self.failures:
            return EXIT_CLEAN
        return EXIT_UNEXPECTED if self.unexpected_failures else EXIT_KNOWN_ONLY

    def to_dict(self):
        return {
            "description": self.description,
            "claims": self.claims,
            "counts": self.counts(),
            "results": [r.to_dict() for r in self.results],
            "failures": [r.to_dict() for r in self.failures],
            "unexpected_failures": [r.to_dict() for r in self.unexpected_failures],
            "exit_code": self.exit_code,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self):
        counts = self.counts()
        width = max([len(c) for c in self.claims] + [5])
        lines = [self.description, "", f"{'claim':<{width}}  {'PASS':>5} {'FAIL':>5} {'SKIP':>5}"]
        for c in self.claims:
            row = counts[c]
            lines.append(f"{c:<{width}}  {row[PASS]:>5} {row[FAIL]:>5} {row[SKIP]:>5}")
        if self.failures:
            lines += ["", "failures:"]
            for r in self.failures:
                tag = "known" if (r.claim_id, r.ring) in self.known else "UNEXPECTED"
                lines.append(f"  [{tag}] {r.claim_id} on {r.ring}: {r.witness}")
                if r.note:
                    lines.append(f"          {r.note}")
        lines += ["", f"exit status {self.exit_code}"]
        return "\n".join(lines) + "\n"


def _run_group(task):
    ring, p, claim_ids, budget = task
    ctx = RingContext(ring, p=p, budget=budget)
    return [evaluate(c, ctx) for c in claim_ids]


def _tasks(claims, rings, primes, budget):
    ring_claims = [c for c in claims if CLAIMS[c].target == "ring"]
    two = [c for c in claims if CLAIMS[c].target == "2p"]
    three = [c for c in claims if CLAIMS[c].target == "3p"]
    tasks = []
    if ring_claims:
        tasks += [(ring, None, ring_claims, budget) for ring in rings]
    for p in primes:
        if two:
            tasks.append((f"Z{2 * p}", p, two, budget))
        if three:
            tasks.append((f"Z{3 * p}", p, three, budget))
    return tasks


def run_sweep(
    claims,
    rings=(),
    primes=(),
    jobs=1,
    budget=inv.DEFAULT_NODE_BUDGET,
    description=None,
):
    """Evaluate every applicable (claim, ring) pair.

    Ring-level claims run on each of ``rings``; the Z_2p / Z_3p claims run
    for each prime in ``primes``.  Results are ordered by claim (registry
    order) and then by the order the rings were generated, whatever the
    number of worker processes.
    """
    claims = [c for c in CLAIMS if c in set(claims)]
    tasks = _tasks(claims, list(rings), list(primes), budget)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            grouped = list(pool.map(_run_group, tasks, chunksize=4))
    else:
        grouped = [_run_group(t) for t in tasks]

    position = {c: i for i, c in enumerate(claims)}
    flat = [(position[r.claim_id], ti, r) for ti, results in enumerate(grouped) for r in results]
    flat.sort(key=lambda item: item[:2])
    known = load_known_discrepancies()
    results = []
    for _, _, r in flat:
        if r.status == FAIL and (r.claim_id, r.ring) in known:
            r = CheckResult(r.claim_id, r.ring, r.status, r.witness, f"known discrepancy: {known[(r.claim_id, r.ring)]}")
        results.append(r)
    if description is None:
        description = f"{len(claims)} claims over {len(list(rings))} rings and {len(list(primes))} primes"
    return SweepReport(description, claims, results, known)
