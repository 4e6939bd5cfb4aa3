"""Well-founded relations as executable values.

A relation is bundled with a decision procedure producing *evidence* (a
concrete witness that one element lies below another), an optional finite
predecessor enumeration, and a recursion operator ``wfrec``.  A step
function may only recurse through the callback it is handed, and must
present evidence for every recursive call; evaluation always terminates
when the relation is genuinely well-founded.

Evidence values are ordinary data.  In release mode recursion never
inspects them; turning on validation (``set_evidence_validation``) makes
every recursive call re-check its evidence against ``decide``.
"""

from __future__ import annotations

import os
import random
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Mapping, Optional, Sequence

Decide = Callable[[Any, Any], Any]
Rec = Callable[[Any, Any], Any]
StepFunction = Callable[[Any, Rec], Any]

DEFAULT_RECURSION_BUDGET = 2000
_STACK_FRAME_CEILING = 15000  # deeper segfaults CPython on this platform


class WellFoundedError(Exception):
    """Base class for errors raised by this package."""


class EvidenceError(WellFoundedError):
    """Evidence presented for a recursive call does not certify descent."""


class RecursionBudgetError(WellFoundedError):
    """A recursion exceeded the configured depth budget."""


class DescentBudgetError(WellFoundedError):
    """A descending walk failed to bottom out within its step budget."""


class UndecidableError(WellFoundedError):
    """The requested comparison cannot be decided with the data at hand."""


class IncomparableError(WellFoundedError):
    """Two elements that must be related by the carrier order are not."""


@dataclass(frozen=True)
class EqualWitness:
    """Unit witness standing in for a host-equality proof."""

    def __repr__(self) -> str:
        return "EQUAL"


EQUAL = EqualWitness()


def recursion_budget() -> int:
    """Logical depth budget for recursion operators (env ``WFREC_DEPTH``)."""
    raw = os.environ.get("WFREC_DEPTH")
    if raw is None:
        return DEFAULT_RECURSION_BUDGET
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_RECURSION_BUDGET
    return value if value > 0 else DEFAULT_RECURSION_BUDGET


def _ensure_stack(logical_depth: int) -> None:
    # every logical level costs a handful of Python frames
    needed = min(8 * logical_depth + 500, _STACK_FRAME_CEILING)
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


_VALIDATE_EVIDENCE = False


def set_evidence_validation(enabled: bool) -> bool:
    """Toggle evidence re-checking on recursive calls; returns the old flag."""
    global _VALIDATE_EVIDENCE
    previous = _VALIDATE_EVIDENCE
    _VALIDATE_EVIDENCE = bool(enabled)
    return previous


def evidence_validation_enabled() -> bool:
    return _VALIDATE_EVIDENCE


@contextmanager
def validated_evidence(enabled: bool = True):
    previous = set_evidence_validation(enabled)
    try:
        yield
    finally:
        set_evidence_validation(previous)


@dataclass(frozen=True)
class WFRelation:
    """A decidable well-founded relation packaged with its recursion operator.

    ``decide(lower, upper)`` returns evidence when ``lower`` lies strictly
    below ``upper`` and ``None`` otherwise; it must be irreflexive and
    asymmetric.  ``predecessors``, when present, enumerates every
    ``(element, evidence)`` pair strictly below its argument and must agree
    with ``decide``.  ``recursor`` implements the recursion operator; when
    absent a generic unfolding evaluator is used.
    """

    carrier: str
    decide: Decide
    predecessors: Optional[Callable[[Any], Sequence]] = None
    recursor: Optional[Callable[[StepFunction, Any], Any]] = None

    def wfrec(self, step: StepFunction, a: Any) -> Any:
        if self.recursor is not None:
            return self.recursor(step, a)
        return _unfold(step, a)

    def __repr__(self) -> str:
        return f"WFRelation({self.carrier})"


def _unfold(step: StepFunction, a: Any) -> Any:
    # reference evaluator: unfold the recursion equation directly
    budget = recursion_budget()
    _ensure_stack(budget)

    def go(x, depth):
        if depth > budget:
            raise RecursionBudgetError(
                f"descent deeper than {budget} (override with WFREC_DEPTH)"
            )

        def rec(x_next, _evidence):
            return go(x_next, depth + 1)

        return step(x, rec)

    return go(a, 0)


def _validating_step(rel: WFRelation, step: StepFunction) -> StepFunction:
    def wrapped(x, rec):
        def checked(x_next, evidence):
            if rel.decide(x_next, x) is None:
                raise EvidenceError(
                    f"no descent from {x!r} to {x_next!r} in {rel.carrier}"
                )
            return rec(x_next, evidence)

        return step(x, checked)

    return wrapped


def wfrec(rel: WFRelation, step: StepFunction, a: Any) -> Any:
    """Evaluate ``step`` by recursion over ``rel``.

    The result satisfies ``wfrec(rel, step, a) ==
    step(a, lambda x, e: wfrec(rel, step, x))`` and evaluation terminates.
    """
    if _VALIDATE_EVIDENCE:
        step = _validating_step(rel, step)
    return rel.wfrec(step, a)


# ---------------------------------------------------------------------------
# The ordering < on the natural numbers.

@dataclass(frozen=True)
class NatLessEvidence:
    """Witness that ``m < n`` built from ``m < n+1 = (m = n) + (m < n)``.

    A leaf (``rest is None``) is the left injection carrying an equality
    witness; otherwise the right injection wraps evidence for ``m < n - 1``.
    The chain for ``m < n`` has exactly ``n - m - 1`` wrappers.
    """

    rest: Optional["NatLessEvidence"] = None

    @property
    def equality(self) -> Optional[EqualWitness]:
        return EQUAL if self.rest is None else None

    def depth(self) -> int:
        count, node = 0, self
        while node.rest is not None:
            count, node = count + 1, node.rest
        return count

    def __repr__(self) -> str:
        return "inr(" + repr(self.rest) + ")" if self.rest else "inl(eq)"


def nat_less_decide(m: int, n: int) -> Optional[NatLessEvidence]:
    """Decide ``m < n``, returning the definitional evidence chain."""
    if not 0 <= m < n:
        return None
    evidence = NatLessEvidence()
    for _ in range(n - m - 1):
        evidence = NatLessEvidence(rest=evidence)
    return evidence


def _nat_predecessors(n: int):
    return tuple((m, nat_less_decide(m, n)) for m in range(n))


def nat_less() -> WFRelation:
    """The relation ``<`` on the naturals (generic recursion operator)."""
    return WFRelation(
        carrier="nat",
        decide=nat_less_decide,
        predecessors=_nat_predecessors,
    )


def nat_wfrec(step: StepFunction, n: int) -> Any:
    """Course-of-values recursion on the naturals.

    Implemented by structural recursion on the bound: the handler for
    evidence ``m < k`` peels right injections down to the equality leaf and
    restarts the step there, so computation is driven by the evidence
    itself.  Step results are cached per bound; the step must be
    deterministic, which the recursion-equation contract already requires.
    """
    values: dict[int, Any] = {}

    def at(k):
        if k not in values:
            values[k] = step(k, handler(k))
        return values[k]

    def handler(k):
        def rec(_m, evidence):
            if evidence is None:
                raise EvidenceError("missing evidence for course-of-values call")
            bound, node = k, evidence
            while node.rest is not None:
                bound, node = bound - 1, node.rest
            if bound <= 0:
                raise EvidenceError("nothing lies below 0")
            return at(bound - 1)

        return rec

    return at(n)


def empty_relation(carrier: str = "unit") -> WFRelation:
    """The relation with no descents at all; every element is minimal."""

    def recursor(step, a):
        def rec(_x, _evidence):
            raise EvidenceError("the empty relation admits no recursive calls")

        return step(a, rec)

    return WFRelation(
        carrier=carrier,
        decide=lambda _lower, _upper: None,
        predecessors=lambda _x: (),
        recursor=recursor,
    )


# ---------------------------------------------------------------------------
# Test harnesses.

@dataclass
class RecursionReport:
    """Outcome of checking the recursion equation over a sample set."""

    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __repr__(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failed"
        return f"RecursionReport({self.total} samples, {status})"


def check_recursion_equation(rel: WFRelation, step: StepFunction, samples) -> RecursionReport:
    """Check ``wfrec(step, a) == step(a, (x, e) -> wfrec(step, x))`` on samples."""
    report = RecursionReport()
    for a in samples:
        report.total += 1
        recursed = wfrec(rel, step, a)
        unfolded = step(a, lambda x, _e: wfrec(rel, step, x))
        if recursed != unfolded:
            report.failures.append((a, recursed, unfolded))
    return report


def check_unique_solution(rel: WFRelation, step: StepFunction, candidate, elements) -> bool:
    """True iff ``candidate`` solves the recursion equation on a finite carrier.

    A candidate that solves the equation pointwise must coincide with the
    recursion operator everywhere; that is re-checked and a violation raises,
    since it would mean the relation is not actually well-founded.
    """
    elements = tuple(elements)
    look = candidate.__getitem__ if isinstance(candidate, Mapping) else candidate
    for a in elements:
        if look(a) != step(a, lambda x, _e: look(x)):
            return False
    for a in elements:
        expected = wfrec(rel, step, a)
        if look(a) != expected:
            raise AssertionError(
                f"solution table satisfies the equation but differs from wfrec at {a!r}"
            )
    return True


def with_enumerated_predecessors(rel: WFRelation, elements) -> WFRelation:
    """Equip a relation over a finite carrier with an explicit enumeration.

    Predecessors are found by filtering ``decide`` over ``elements``, so the
    decide/predecessors coherence law holds by construction.
    """
    pool = tuple(elements)

    def predecessors(upper):
        found = []
        for element in pool:
            evidence = rel.decide(element, upper)
            if evidence is not None:
                found.append((element, evidence))
        return tuple(found)

    return replace(rel, predecessors=predecessors)


def fuzz_descent(rel: WFRelation, start, max_steps: int = 10000, seed: int = 0) -> list:
    """Walk a seeded random strictly-descending chain from ``start``.

    Returns the chain (including ``start``) once an element with no
    predecessors is reached.  Raises ``DescentBudgetError`` if the chain
    would exceed ``max_steps`` elements, which signals either a budget too
    small or a relation that is not well-founded.
    """
    if rel.predecessors is None:
        raise UndecidableError(f"{rel.carrier} has no predecessor enumeration")
    rng = random.Random(seed)
    chain = [start]
    current = start
    while True:
        below = tuple(rel.predecessors(current))
        if not below:
            return chain
        if len(chain) >= max_steps:
            raise DescentBudgetError(
                f"no minimal element within {max_steps} steps from {start!r} in {rel.carrier}"
            )
        current = rng.choice(below)[0]
        chain.append(current)
