"""Hyperfield core: elements, set-valued sums, and the axiom checker.

A hyperfield is a field whose addition is multi-valued: ``a + b`` is a
nonempty subset of the carrier rather than a single element.  Everything
here is exact -- integers, :class:`fractions.Fraction`, a symbolic
infinity -- and immutable, so instances and values can be shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence


class DomainError(ValueError):
    """An operation was applied outside its domain."""


class NonEnumerableError(DomainError):
    """The requested enumeration is infinite."""


class ParseError(ValueError):
    """A field spec, element, or polynomial string failed to parse."""


class _Infinity:
    """Symbolic infinity: the tropical additive-neutral value.

    Compares strictly above every rational and equals only itself, so it can
    live in sorted containers next to exact ``Fraction`` values without any
    floating point sneaking in.
    """

    _singleton = None

    def __new__(cls):
        if cls._singleton is None:
            cls._singleton = super().__new__(cls)
        return cls._singleton

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True, slots=True)
class Element:
    """A value tagged with the hyperfield it belongs to.

    Carrying the owning instance makes cross-instance misuse a checked
    error instead of silent nonsense.
    """

    field: "Hyperfield"
    value: Any

    def __mul__(self, other: "Element") -> "Element":
        return self.field.mul(self, other)

    def __neg__(self) -> "Element":
        return self.field.neg(self)

    def __repr__(self) -> str:
        return f"{self.field.name}:{self.field.format_value(self.value)}"


class HyperSet:
    """Result of a hyperoperation: a subset of one hyperfield's carrier."""

    field: "Hyperfield"

    def contains(self, x: Element) -> bool:
        raise NotImplementedError

    def enumerate(self) -> list[Element]:
        raise NotImplementedError

    def is_finite(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class FiniteSet(HyperSet):
    """A finite set of carrier values."""

    field: "Hyperfield"
    values: frozenset

    def contains(self, x: Element) -> bool:
        self.field.check_member(x)
        return x.value in self.values

    def enumerate(self) -> list[Element]:
        ordered = sorted(self.values, key=self.field.sort_key)
        return [Element(self.field, v) for v in ordered]

    def is_finite(self) -> bool:
        return True

    def __repr__(self) -> str:
        inner = ", ".join(self.field.format_value(v)
                          for v in sorted(self.values, key=self.field.sort_key))
        return "{" + inner + "}"


@dataclass(frozen=True)
class TropicalRay(HyperSet):
    """The tropical set ``{x : x >= lower} ∪ {inf}``."""

    field: "Hyperfield"
    lower: Fraction

    def contains(self, x: Element) -> bool:
        self.field.check_member(x)
        return x.value is INF or x.value >= self.lower

    def enumerate(self) -> list[Element]:
        raise NonEnumerableError(f"tropical ray [{self.lower}, inf] is infinite")

    def is_finite(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"[{self.lower}, inf]"


@dataclass(frozen=True)
class PhaseUnion(HyperSet):
    """A union of open arcs and isolated points on the unit circle.

    Angles are exact rationals in units of pi, reduced to [0, 2).  An arc
    ``(lo, hi)`` means the open arc swept counterclockwise from ``lo`` to
    ``hi``; ``hi`` may exceed 2 when the arc wraps.  The stored form is
    canonical: arcs are pairwise disjoint, each shorter than pi, and points
    never sit inside an arc, so structural equality is set equality.
    """

    field: "Hyperfield"
    has_zero: bool
    arcs: tuple  # ((lo, hi), ...) with 0 <= lo < 2 and lo < hi < lo + 1
    points: frozenset  # angles in [0, 2)

    def contains(self, x: Element) -> bool:
        self.field.check_member(x)
        if x.value is None:
            return self.has_zero
        q = x.value
        if q in self.points:
            return True
        return any(0 < (q - lo) % 2 < hi - lo for lo, hi in self.arcs)

    def enumerate(self) -> list[Element]:
        raise NonEnumerableError("phase arcs are infinite")

    def is_finite(self) -> bool:
        return False

    def __repr__(self) -> str:
        parts = [f"({lo},{hi % 2})" for lo, hi in self.arcs]
        parts += sorted(f"pt {q}" for q in self.points)
        if self.has_zero:
            parts.insert(0, "zero")
        return "{" + ", ".join(parts) + "}"


def set_contains(s: HyperSet, x: Element) -> bool:
    """Exact membership test, decidable for every variant."""
    return s.contains(x)


def set_enumerate(s: HyperSet) -> list[Element]:
    """List a finite hyperset in canonical order; error on infinite variants."""
    return s.enumerate()


class Hyperfield:
    """Base class for hyperfield instances.

    Subclasses provide the carrier conventions and the raw-value operations;
    the base class wraps them in the element-level API and supplies the
    generic recursive hypersum.
    """

    name: str
    # whether every hypersum of elements is a finite, enumerable set
    enumerable_sums = True

    # -- carrier ----------------------------------------------------------

    def is_finite(self) -> bool:
        raise NotImplementedError

    def carrier_values(self) -> list:
        """All raw values, for finite instances only."""
        raise NonEnumerableError(f"{self.name} has an infinite carrier")

    def sample_values(self) -> list:
        """Deterministic grid used by the axiom checker on infinite carriers."""
        return self.carrier_values()

    def zero_value(self):
        raise NotImplementedError

    def one_value(self):
        raise NotImplementedError

    def validate_value(self, v):
        """Return the canonical form of ``v`` or raise :class:`DomainError`."""
        raise NotImplementedError

    # -- raw-value operations ---------------------------------------------

    def mul_values(self, x, y):
        raise NotImplementedError

    def neg_value(self, x):
        raise NotImplementedError

    def inv_value(self, x):
        raise NotImplementedError

    def hyperadd_values(self, x, y) -> HyperSet:
        raise NotImplementedError

    def add_set_value(self, s: HyperSet, c) -> HyperSet:
        """Union of ``x + c`` over ``x`` in ``s``; default needs ``s`` finite."""
        if not isinstance(s, FiniteSet):
            raise NonEnumerableError(f"{self.name}: cannot union over {s!r}")
        values = set()
        for x in s.values:
            r = self.hyperadd_values(x, c)
            if not isinstance(r, FiniteSet):
                raise DomainError(f"{self.name}: cannot union infinite summands")
            values |= r.values
        return FiniteSet(self, frozenset(values))

    def scale_set_value(self, a, s: HyperSet) -> HyperSet:
        """The set ``a * s``, elementwise; default needs ``s`` finite."""
        if not isinstance(s, FiniteSet):
            raise NonEnumerableError(f"{self.name}: cannot scale {s!r}")
        return FiniteSet(self, frozenset(self.mul_values(a, x)
                                         for x in s.values))

    # -- presentation -------------------------------------------------------

    def format_value(self, v) -> str:
        return str(v)

    def parse_value(self, text: str):
        raise NotImplementedError

    def sort_key(self, v):
        return v

    # -- element-level API --------------------------------------------------

    def element(self, v) -> Element:
        return Element(self, self.validate_value(v))

    def zero(self) -> Element:
        return Element(self, self.zero_value())

    def one(self) -> Element:
        return Element(self, self.one_value())

    def elements(self) -> list[Element]:
        return [Element(self, v) for v in self.carrier_values()]

    def sample_elements(self) -> list[Element]:
        return [Element(self, v) for v in self.sample_values()]

    def check_member(self, a: Element) -> None:
        if not isinstance(a, Element) or a.field != self:
            raise DomainError(f"element {a!r} does not belong to {self.name}")

    def hyperadd(self, a: Element, b: Element) -> HyperSet:
        self.check_member(a)
        self.check_member(b)
        return self.hyperadd_values(a.value, b.value)

    def mul(self, a: Element, b: Element) -> Element:
        self.check_member(a)
        self.check_member(b)
        return Element(self, self.mul_values(a.value, b.value))

    def neg(self, a: Element) -> Element:
        self.check_member(a)
        return Element(self, self.neg_value(a.value))

    def inv(self, a: Element) -> Element:
        self.check_member(a)
        if a.value == self.zero_value():
            raise DomainError(f"{self.name}: zero has no multiplicative inverse")
        return Element(self, self.inv_value(a.value))

    def add_set(self, s: HyperSet, c: Element) -> HyperSet:
        self.check_member(c)
        if s.field != self:
            raise DomainError("hyperset belongs to a different instance")
        return self.add_set_value(s, c.value)

    def scale_set(self, a: Element, s: HyperSet) -> HyperSet:
        self.check_member(a)
        if a.value == self.zero_value():
            return FiniteSet(self, frozenset({self.zero_value()}))
        return self.scale_set_value(a.value, s)

    def hypersum(self, terms: Sequence[Element]) -> HyperSet:
        """n-ary hypersum, the union over all partial-sum choices.

        The empty sum is ``{0}``.  Associativity of the binary operation
        makes the result independent of the term order.
        """
        return self.hypersum_recursive(terms)

    def hypersum_recursive(self, terms: Sequence[Element]) -> HyperSet:
        acc: HyperSet = FiniteSet(self, frozenset({self.zero_value()}))
        for t in terms:
            self.check_member(t)
            acc = self.add_set_value(acc, t.value)
        return acc

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Hyperfield) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<hyperfield {self.name}>"


class FiniteHyperfield(Hyperfield):
    """A hyperfield given by explicit multiplication and hyperaddition tables.

    ``add_table`` maps ordered pairs of values to frozensets of values; only
    one orientation of each pair is required, the other is filled in by
    commutativity.  The tables are kept accessible so tests can build
    deliberately broken variants for the axiom checker.
    """

    def __init__(self, name, values, zero, one, mul_table, add_table):
        self.name = name
        self._values = list(values)
        self._zero = zero
        self._one = one
        self.mul_table = dict(mul_table)
        self.add_table = {}
        for (x, y), s in add_table.items():
            fs = frozenset(s)
            self.add_table[(x, y)] = fs
            self.add_table.setdefault((y, x), fs)
        for (x, y), v in list(self.mul_table.items()):
            self.mul_table.setdefault((y, x), v)
        self._neg_cache = {}
        self._sum_cache = {}

    def is_finite(self) -> bool:
        return True

    def carrier_values(self) -> list:
        return list(self._values)

    def zero_value(self):
        return self._zero

    def one_value(self):
        return self._one

    def validate_value(self, v):
        if v in self._values:
            return v
        raise DomainError(f"{v!r} is not an element of {self.name}")

    def mul_values(self, x, y):
        return self.mul_table[(x, y)]

    def neg_value(self, x):
        # HG2: the unique y with 0 in x + y.
        hit = self._neg_cache.get(x)
        if hit is not None:
            return hit
        candidates = [y for y in self._values
                      if self._zero in self.add_table[(x, y)]]
        if len(candidates) != 1:
            raise DomainError(f"{self.name}: no unique hyperinverse for {x!r}")
        self._neg_cache[x] = candidates[0]
        return candidates[0]

    def inv_value(self, x):
        for y in self._values:
            if y != self._zero and self.mul_table[(x, y)] == self._one:
                return y
        raise DomainError(f"{self.name}: {x!r} has no multiplicative inverse")

    def hyperadd_values(self, x, y) -> HyperSet:
        hit = self._sum_cache.get((x, y))
        if hit is None:
            hit = FiniteSet(self, self.add_table[(x, y)])
            self._sum_cache[(x, y)] = hit
        return hit

    def add_set_value(self, s: HyperSet, c) -> HyperSet:
        # singleton unions collapse to a cached table lookup
        if isinstance(s, FiniteSet) and len(s.values) == 1:
            (x,) = s.values
            return self.hyperadd_values(x, c)
        return super().add_set_value(s, c)

    def parse_value(self, text: str):
        text = text.strip()
        try:
            v = int(text)
        except ValueError:
            raise ParseError(f"{self.name}: cannot parse element {text!r}") from None
        try:
            return self.validate_value(v)
        except DomainError as exc:
            raise ParseError(str(exc)) from None


# -- axiom checking -----------------------------------------------------------


@dataclass
class AxiomCheck:
    axiom: str
    passed: bool
    witness: str | None = None


@dataclass
class AxiomReport:
    field_name: str
    exhaustive: bool
    checks: list
    notes: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        scope = "exhaustive" if self.exhaustive else "sampled"
        out = [f"axioms {self.field_name} ({scope})"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            line = f"  {c.axiom}: {status}"
            if c.witness:
                line += f"  [{c.witness}]"
            out.append(line)
        for n in self.notes:
            out.append(f"  note: {n}")
        return out


def _hypersets_equal(s: HyperSet, t: HyperSet) -> bool:
    return s == t


def check_axioms(F: Hyperfield) -> AxiomReport:
    """Check the hypergroup and hyperfield axioms on ``F``.

    Finite carriers are checked exhaustively.  Infinite instances are checked
    on their fixed deterministic sample grid, which hits every rule branch of
    the instances shipped here.  Each check reports a counterexample triple
    on failure.
    """
    exhaustive = F.is_finite()
    vals = F.carrier_values() if exhaustive else F.sample_values()
    zero = F.zero_value()
    fmt = F.format_value
    checks = []

    def member(s: HyperSet, v) -> bool:
        if isinstance(s, FiniteSet):
            return v in s.values
        return s.contains(Element(F, v))

    def run(axiom, gen):
        for witness in gen:
            checks.append(AxiomCheck(axiom, False, witness))
            return
        checks.append(AxiomCheck(axiom, True))

    def gen_nonempty():
        for a, b in itertools.product(vals, repeat=2):
            s = F.hyperadd_values(a, b)
            if isinstance(s, FiniteSet) and not s.values:
                yield f"a={fmt(a)}, b={fmt(b)}: empty hypersum"

    def gen_commutative():
        for a, b in itertools.product(vals, repeat=2):
            if not _hypersets_equal(F.hyperadd_values(a, b),
                                    F.hyperadd_values(b, a)):
                yield f"a={fmt(a)}, b={fmt(b)}"

    def gen_associative():
        for a, b, c in itertools.product(vals, repeat=3):
            left = F.add_set_value(F.hyperadd_values(b, c), a)
            right = F.add_set_value(F.hyperadd_values(a, b), c)
            if not _hypersets_equal(left, right):
                yield f"a={fmt(a)}, b={fmt(b)}, c={fmt(c)}"

    def gen_neutral():
        for a in vals:
            s = F.hyperadd_values(zero, a)
            if not (isinstance(s, FiniteSet) and s.values == frozenset({a})):
                yield f"a={fmt(a)}: 0+a = {s!r}"

    def gen_inverse():
        for a in vals:
            try:
                na = F.neg_value(a)
            except DomainError:
                yield f"a={fmt(a)}: no hyperinverse"
                return
            if not member(F.hyperadd_values(a, na), zero):
                yield f"a={fmt(a)}: 0 not in a+(-a)"
                return
            others = [x for x in vals
                      if x != na and member(F.hyperadd_values(a, x), zero)]
            if others:
                yield f"a={fmt(a)}: second inverse {fmt(others[0])}"

    def gen_reversible():
        for a, b, c in itertools.product(vals, repeat=3):
            try:
                lhs = member(F.hyperadd_values(b, c), a)
                rhs = member(F.hyperadd_values(F.neg_value(a), c),
                             F.neg_value(b))
            except DomainError:
                yield f"a={fmt(a)}, b={fmt(b)}, c={fmt(c)}: hyperinverse undefined"
                return
            if lhs != rhs:
                yield f"a={fmt(a)}, b={fmt(b)}, c={fmt(c)}"

    def gen_zero_absorbs():
        for a in vals:
            if F.mul_values(zero, a) != zero:
                yield f"a={fmt(a)}"

    def gen_distributive():
        for a, b, c in itertools.product(vals, repeat=3):
            bc = F.hyperadd_values(b, c)
            if a == zero:
                left: HyperSet = FiniteSet(F, frozenset({zero}))
            else:
                left = F.scale_set_value(a, bc)
            right = F.hyperadd_values(F.mul_values(a, b), F.mul_values(a, c))
            if not _hypersets_equal(left, right):
                yield f"a={fmt(a)}, b={fmt(b)}, c={fmt(c)}"

    run("nonempty", gen_nonempty())
    run("commutativity", gen_commutative())
    run("associativity", gen_associative())
    run("neutral element", gen_neutral())
    run("unique inverse", gen_inverse())
    run("reversibility", gen_reversible())
    run("zero absorbs", gen_zero_absorbs())
    run("distributivity", gen_distributive())

    notes = list(getattr(F, "axiom_notes", ()))
    return AxiomReport(F.name, exhaustive, checks, notes)
