"""Finite commutative rings as direct products of Z_n and GF(p^k).

Elements are tuples with one entry per component: an ``int`` in ``[0, n)``
for a cyclic component, a coefficient tuple of length k for a field
component.  ``make_ring`` enumerates every element and precomputes the
idempotent, nilpotent, unit, nil clean and weakly nil clean sets.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property

from sympy import factorint

from .gfpoly import GaloisField, check_field_params

# whole-ring unit search is quadratic; above this order only the
# per-component closed forms are used
UNIT_CROSSCHECK_LIMIT = 2500


class RingSpecError(ValueError):
    pass


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise RingSpecError(f"Z{self.n}: modulus must be an integer >= 2")

    @property
    def order(self):
        return self.n

    @property
    def text(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Field:
    p: int
    k: int = 1
    poly: tuple | None = None

    def __post_init__(self):
        try:
            poly = check_field_params(self.p, self.k, self.poly)
        except ValueError as exc:
            raise RingSpecError(f"GF{self.p}^{self.k}: {exc}") from None
        object.__setattr__(self, "poly", poly)

    @property
    def order(self):
        return self.p**self.k

    @property
    def text(self):
        return f"GF{self.p}^{self.k}"


@dataclass(frozen=True)
class RingSpec:
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise RingSpecError("a ring needs at least one component")
        for c in comps:
            if not isinstance(c, (Cyclic, Field)):
                raise RingSpecError(f"unknown component {c!r}")
        object.__setattr__(self, "components", comps)

    @property
    def order(self):
        return math.prod(c.order for c in self.components)

    @property
    def text(self):
        return "x".join(c.text for c in self.components)

    def __str__(self):
        return self.text

    @classmethod
    def parse(cls, text):
        """Parse ``Z<n>``, ``GF<p>^<k>`` (or ``GF<p>``) joined by ``x``."""
        text = text.strip()
        if not text:
            raise RingSpecError("empty ring spec")
        comps = []
        for token in text.split("x"):
            if m := re.fullmatch(r"Z(\d+)", token):
                comps.append(Cyclic(int(m[1])))
            elif m := re.fullmatch(r"GF(\d+)(?:\^(\d+))?", token):
                comps.append(Field(int(m[1]), int(m[2] or 1)))
            else:
                raise RingSpecError(f"cannot parse ring component {token!r} in {text!r}")
        return cls(tuple(comps))


def as_spec(spec):
    if isinstance(spec, RingSpec):
        return spec
    if isinstance(spec, (Cyclic, Field)):
        return RingSpec((spec,))
    return RingSpec.parse(spec)


class _CyclicArith:
    def __init__(self, n):
        self.n = n
        self.order = n
        self.elements = tuple(range(n))
        self.zero = 0
        self.one = 1 % n
        self.radical = math.prod(factorint(n))

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def nilpotent_fast(self, a):
        return a % self.radical == 0

    def unit_fast(self, a):
        return math.gcd(a, self.n) == 1

    def check(self, a):
        return isinstance(a, int) and 0 <= a < self.n

    @staticmethod
    def render(a):
        return str(a)


class _FieldArith(GaloisField):
    def nilpotent_fast(self, a):
        return a == self.zero

    def unit_fast(self, a):
        return a != self.zero

    def check(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.k
            and all(isinstance(c, int) and 0 <= c < self.p for c in a)
        )

    @staticmethod
    def render(a):
        return "(" + ",".join(map(str, a)) + ")"


def _arith(comp):
    if isinstance(comp, Cyclic):
        return _CyclicArith(comp.n)
    return _FieldArith(comp.p, comp.k, comp.poly)


class ClassifiedRing:
    """An enumerated ring with its element classes; immutable once built."""

    def __init__(self, spec):
        self.spec = as_spec(spec)
        self.text = self.spec.text
        self._comps = tuple(_arith(c) for c in self.spec.components)
        self.elements = tuple(itertools.product(*(c.elements for c in self._comps)))
        self.order = len(self.elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.zero = tuple(c.zero for c in self._comps)
        self.one = tuple(c.one for c in self._comps)
        self._classify()

    def __repr__(self):
        return f"ClassifiedRing({self.text!r})"

    # arithmetic

    def validate(self, x):
        if not isinstance(x, tuple) or len(x) != len(self._comps):
            raise ValueError(f"{x!r} does not have arity {len(self._comps)} for {self.text}")
        for c, v in zip(self._comps, x):
            if not c.check(v):
                raise ValueError(f"{x!r} is not a canonical element of {self.text}")
        return x

    def add(self, x, y):
        return tuple(c.add(a, b) for c, a, b in zip(self._comps, x, y))

    def neg(self, x):
        return tuple(c.neg(a) for c, a in zip(self._comps, x))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        return tuple(c.mul(a, b) for c, a, b in zip(self._comps, x, y))

    def power(self, x, e):
        result, base = self.one, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # classification

    def _classify(self):
        els, zero = self.elements, self.zero
        self.idempotents = frozenset(x for x in els if self.mul(x, x) == x)
        # a nilpotent's powers are distinct until they hit 0, so x^order = 0
        self.nilpotents = frozenset(x for x in els if self.power(x, self.order) == zero)
        fast_nil = frozenset(
            x for x in els if all(c.nilpotent_fast(a) for c, a in zip(self._comps, x))
        )
        if fast_nil != self.nilpotents:
            raise AssertionError(f"{self.text}: nilpotent closed form disagrees with powers")

        self.units = frozenset(
            x for x in els if all(c.unit_fast(a) for c, a in zip(self._comps, x))
        )
        if self.order <= UNIT_CROSSCHECK_LIMIT:
            searched = frozenset(x for x in els if any(self.mul(x, y) == self.one for y in els))
            if searched != self.units:
                raise AssertionError(f"{self.text}: unit closed form disagrees with search")

        self.nil_clean = frozenset(
            self.add(e, n) for e in self.idempotents for n in self.nilpotents
        )
        self.weakly_nil_clean = self.nil_clean | frozenset(
            self.sub(n, e) for e in self.idempotents for n in self.nilpotents
        )

    def is_nil_clean(self, x):
        """True iff x - e is nilpotent for some idempotent e."""
        return any(self.sub(x, e) in self.nilpotents for e in self.idempotents)

    @property
    def is_nil_clean_ring(self):
        return len(self.nil_clean) == self.order

    @property
    def is_weakly_nil_clean_ring(self):
        return len(self.weakly_nil_clean) == self.order

    @property
    def is_reduced(self):
        return self.nilpotents == {self.zero}

    @property
    def is_field(self):
        return len(self.units) == self.order - 1

    def ring_predicates(self):
        return {
            "is_nil_clean_ring": self.is_nil_clean_ring,
            "is_weakly_nil_clean_ring": self.is_weakly_nil_clean_ring,
            "is_reduced": self.is_reduced,
            "is_field": self.is_field,
        }

    def inverse(self, x):
        for y in self.elements:
            if self.mul(x, y) == self.one:
                return y
        raise ZeroDivisionError(f"{self.render(x)} is not a unit of {self.text}")

    # text

    def render(self, x):
        parts = [c.render(a) for c, a in zip(self._comps, x)]
        return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"

    @cached_property
    def _by_label(self):
        return {self.render(x): x for x in self.elements}

    def parse_element(self, text):
        label = re.sub(r"\s+", "", text)
        try:
            return self._by_label[label]
        except KeyError:
            raise ValueError(f"{text!r} is not an element of {self.text}") from None

    def element(self, *values):
        """Build an element from per-component values, reducing integers.

        ``r.element(7)`` in Z6 gives ``(1,)``; field components take
        coefficient sequences.
        """
        if len(values) != len(self._comps):
            raise ValueError(f"expected {len(self._comps)} component values")
        out = []
        for c, v in zip(self._comps, values):
            if isinstance(c, _CyclicArith):
                out.append(v % c.n)
            else:
                out.append(c.pad(tuple(int(a) % c.p for a in v)))
        return self.validate(tuple(out))


def make_ring(spec):
    """Construct and classify a ring from a RingSpec, component, or spec text."""
    return ClassifiedRing(spec)


def crt_decompose(spec):
    """Split every cyclic component into prime-power factors.

    Returns the decomposed spec and a function mapping elements of ``spec``
    to elements of the decomposed ring by taking residues.
    """
    spec = as_spec(spec)
    parts, plan = [], []
    for comp in spec.components:
        if isinstance(comp, Cyclic):
            moduli = [q**e for q, e in sorted(factorint(comp.n).items())]
            parts.extend(Cyclic(m) for m in moduli)
            plan.append(moduli)
        else:
            parts.append(comp)
            plan.append(None)
    target = RingSpec(tuple(parts))

    def forward(x):
        out = []
        for v, moduli in zip(x, plan):
            if moduli is None:
                out.append(v)
            else:
                out.extend(v % m for m in moduli)
        return tuple(out)

    return target, forward
