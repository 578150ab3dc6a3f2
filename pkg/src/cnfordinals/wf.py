"""Well-founded recursion over CNF ordinals and descending-sequence analysis.

The recursion combinators take the place of transfinite induction: every
recursive call is checked at run time to be on a strictly smaller ordinal,
and well-foundedness of ``<`` below ε₀ is what guarantees termination.
"""
from __future__ import annotations

import dataclasses
from typing import Callable, Generator, Sequence, TypeVar, Union

from ._config import limits
from .cnf import CnfOrdinal, gt, lt
from .errors import DepthExceeded, PreconditionViolation

R = TypeVar("R")
OrdinalSequence = Callable[[int], CnfOrdinal]


@dataclasses.dataclass(frozen=True)
class ZeroTailAt:
    """The sequence is zero from index ``n`` on, and ``n`` is the least such index."""

    n: int


@dataclasses.dataclass(frozen=True)
class Violation:
    """Consecutive values ``prev = f(i)``, ``next = f(i+1)`` break the descent rule."""

    i: int
    prev: CnfOrdinal
    next: CnfOrdinal


DescentReport = Union[ZeroTailAt, Violation]


def wf_recurse(step: Callable[[CnfOrdinal, Callable[[CnfOrdinal], R]], R], x: CnfOrdinal) -> R:
    """Run ``step(x, rec)`` where ``rec(y)`` recurses and requires ``y < x``.

    Raises :class:`PreconditionViolation` when ``step`` recurses on an
    argument that is not strictly smaller, and :class:`DepthExceeded` when the
    nesting passes ``Limits.max_depth`` or the Python stack runs out.
    """
    cap = limits().max_depth

    def run(arg, depth):
        if depth > cap:
            raise DepthExceeded(f"recursion depth exceeds {cap}")

        def rec(y):
            if not lt(y, arg):
                raise PreconditionViolation(y, arg)
            return run(y, depth + 1)

        return step(arg, rec)

    try:
        return run(x, 0)
    except RecursionError:
        raise DepthExceeded("Python stack exhausted during wf_recurse") from None


def wf_iterate(step: Callable[[CnfOrdinal], Generator[CnfOrdinal, R, R]], x: CnfOrdinal) -> R:
    """Stack-free variant of :func:`wf_recurse`.

    ``step(x)`` is a generator: ``value = yield y`` requests the result for
    ``y`` (which must be below ``x``) and ``return value`` finishes.  Frames are
    kept on an explicit stack, so deep chains do not touch the Python stack.
    """
    cap = limits().max_depth
    stack = [(x, step(x))]
    value = None
    while True:
        arg, gen = stack[-1]
        try:
            y = gen.send(value)
        except StopIteration as stop:
            stack.pop()
            if not stack:
                return stop.value
            value = stop.value
            continue
        if not lt(y, arg):
            gen.close()
            raise PreconditionViolation(y, arg)
        if len(stack) > cap:
            raise DepthExceeded(f"recursion depth exceeds {cap}")
        stack.append((y, step(y)))
        value = None


def _is_pseudo_step(a: CnfOrdinal, b: CnfOrdinal) -> bool:
    return gt(a, b) or (a.is_zero() and b.is_zero())


def pseudo_prefix_check(f: OrdinalSequence, n: int) -> Violation | None:
    """Check the pseudo-descent rule for every ``i < n``; ``None`` means it holds."""
    prev = f(0) if n > 0 else None
    for i in range(n):
        nxt = f(i + 1)
        if not _is_pseudo_step(prev, nxt):
            return Violation(i, prev, nxt)
        prev = nxt
    return None


def zero_tail(f: OrdinalSequence, confirm: int = 1) -> DescentReport:
    """Find the least ``n`` with ``f(n) = 0`` for a pseudo-descending ``f``.

    Values are scanned in order; each non-zero step must strictly descend,
    and the recursion is on ``f(i)`` so it terminates by well-foundedness.
    After the zero point, ``confirm`` further values are checked to be zero
    (a restart there is a violation).  Evaluating ``f`` more than
    ``Limits.step_budget`` times raises :class:`DepthExceeded`.
    """
    budget = limits().step_budget
    cache: dict[int, CnfOrdinal] = {}

    def at(i: int) -> CnfOrdinal:
        if i not in cache:
            if len(cache) >= budget:
                raise DepthExceeded(f"sequence evaluation budget {budget} exhausted")
            cache[i] = f(i)
        return cache[i]

    index = 0

    def step(x):
        nonlocal index
        i = index
        if x.is_zero():
            for j in range(i, i + confirm):
                if not at(j + 1).is_zero():
                    return Violation(j, at(j), at(j + 1))
            return ZeroTailAt(i)
        nxt = at(i + 1)
        if not gt(x, nxt):
            return Violation(i, x, nxt)
        index = i + 1
        # the tail's zero point is already an absolute index
        return (yield nxt)

    return wf_iterate(step, at(0))


def check_strict_trace(trace: Sequence[CnfOrdinal]) -> Violation | None:
    """``None`` iff every element is strictly greater than the next."""
    for i in range(len(trace) - 1):
        if not gt(trace[i], trace[i + 1]):
            return Violation(i, trace[i], trace[i + 1])
    return None


def sequence_from_prefix(values: Sequence[CnfOrdinal]) -> OrdinalSequence:
    """Total sequence from a finite prefix; the last value repeats forever."""
    if not values:
        raise ValueError("a sequence needs at least one value")
    values = tuple(values)
    return lambda i: values[min(i, len(values) - 1)]
