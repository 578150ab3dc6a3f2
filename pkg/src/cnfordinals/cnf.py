"""Ordinals below ε₀ in Cantor normal form, with the order built in.

A :class:`CnfOrdinal` is zero or ``ω^exp + rest`` where ``exp`` is at least
the leading exponent of ``rest``.  The guard is re-checked whenever a value
is assembled, so every reachable instance is in normal form.  Internally a
value stores its exponents as a non-increasing tuple; ``exp`` and ``rest``
give the head/tail view.
"""
from __future__ import annotations

import enum
from typing import Iterable

from ._config import limits
from .errors import DepthExceeded, GuardViolation, NumeralTooLarge, TermTooLarge


class Ordering3(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def flip(self) -> "Ordering3":
        return Ordering3(-self.value)


class CnfOrdinal:
    __slots__ = ("_exps", "_hash", "height")

    def __new__(cls, *args, **kwargs):
        raise TypeError("build CnfOrdinal values with omega_plus, omega_pow or from_nat")

    @classmethod
    def _make(cls, exps: tuple) -> "CnfOrdinal":
        obj = object.__new__(cls)
        height = 1 + max((e.height for e in exps), default=-1) if exps else 0
        if height > limits().max_depth:
            raise DepthExceeded(f"exponent nesting {height} exceeds {limits().max_depth}")
        if len(exps) > limits().max_terms:
            raise TermTooLarge(f"{len(exps)} summands exceeds {limits().max_terms}")
        object.__setattr__(obj, "_exps", exps)
        object.__setattr__(obj, "_hash", hash(exps))
        object.__setattr__(obj, "height", height)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CnfOrdinal is immutable")

    def __reduce__(self):
        return (_from_exponents, (self._exps,))

    @property
    def exponents(self) -> tuple["CnfOrdinal", ...]:
        """The CNF exponents, largest first."""
        return self._exps

    def is_zero(self) -> bool:
        return not self._exps

    @property
    def exp(self) -> "CnfOrdinal":
        if not self._exps:
            raise ValueError("zero has no exponent")
        return self._exps[0]

    @property
    def rest(self) -> "CnfOrdinal":
        if not self._exps:
            raise ValueError("zero has no tail")
        return CnfOrdinal._make(self._exps[1:])

    def __len__(self):
        return len(self._exps)

    def __eq__(self, other):
        if not isinstance(other, CnfOrdinal):
            return NotImplemented
        return self is other or (self._hash == other._hash and self._exps == other._exps)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, CnfOrdinal):
            return NotImplemented
        return compare3(self, other) is Ordering3.LESS

    def __le__(self, other):
        if not isinstance(other, CnfOrdinal):
            return NotImplemented
        return compare3(self, other) is not Ordering3.GREATER

    def __gt__(self, other):
        if not isinstance(other, CnfOrdinal):
            return NotImplemented
        return compare3(self, other) is Ordering3.GREATER

    def __ge__(self, other):
        if not isinstance(other, CnfOrdinal):
            return NotImplemented
        return compare3(self, other) is not Ordering3.LESS

    def __add__(self, other):
        from .arith import add
        return add(self, other) if isinstance(other, CnfOrdinal) else NotImplemented

    def __mul__(self, other):
        from .arith import mul
        return mul(self, other) if isinstance(other, CnfOrdinal) else NotImplemented

    def __repr__(self):
        from .syntax import print_canonical
        return f"CnfOrdinal({print_canonical(self)!r})"


ZERO = CnfOrdinal._make(())


def compare3(a: CnfOrdinal, b: CnfOrdinal) -> Ordering3:
    """Three-way lexicographic comparison.

    Zero is below every non-zero term; otherwise compare leading exponents,
    and on a tie compare the tails.  The tail step is a loop.
    """
    xs, ys = a._exps, b._exps
    if xs is ys:
        return Ordering3.EQUAL
    for x, y in zip(xs, ys):
        if x is y:
            continue
        c = compare3(x, y)
        if c is not Ordering3.EQUAL:
            return c
    if len(xs) == len(ys):
        return Ordering3.EQUAL
    return Ordering3.LESS if len(xs) < len(ys) else Ordering3.GREATER


def lt(a: CnfOrdinal, b: CnfOrdinal) -> bool:
    return compare3(a, b) is Ordering3.LESS


def leq(a: CnfOrdinal, b: CnfOrdinal) -> bool:
    return compare3(a, b) is not Ordering3.GREATER


def gt(a: CnfOrdinal, b: CnfOrdinal) -> bool:
    return compare3(a, b) is Ordering3.GREATER


def geq(a: CnfOrdinal, b: CnfOrdinal) -> bool:
    return not lt(a, b)


def first_exp(a: CnfOrdinal) -> CnfOrdinal:
    """Leading exponent, with ``first_exp(ZERO) == ZERO``."""
    return a._exps[0] if a._exps else ZERO


def omega_plus(e: CnfOrdinal, r: CnfOrdinal) -> CnfOrdinal:
    """``ω^e + r``; raises :class:`GuardViolation` if ``e < first_exp(r)``."""
    if lt(e, first_exp(r)):
        raise GuardViolation(e, r)
    return CnfOrdinal._make((e,) + r._exps)


def _from_exponents(exps: Iterable[CnfOrdinal]) -> CnfOrdinal:
    """Assemble from an exponent list, checking every adjacent guard."""
    exps = tuple(exps)
    for i in range(len(exps) - 1):
        if lt(exps[i], exps[i + 1]):
            raise GuardViolation(exps[i], CnfOrdinal._make(exps[i + 1:]))
    return CnfOrdinal._make(exps)


def omega_pow(a: CnfOrdinal) -> CnfOrdinal:
    return CnfOrdinal._make((a,))


def from_nat(n: int) -> CnfOrdinal:
    """The finite ordinal ``n`` as ``ω^0 + ... + ω^0``."""
    if n < 0:
        raise ValueError("natural numbers are non-negative")
    cap = limits().max_numeral
    if n > cap:
        raise NumeralTooLarge(f"numeral {n} exceeds the cap {cap}")
    return CnfOrdinal._make((ZERO,) * n)


def audit(a: CnfOrdinal) -> bool:
    """Walk the whole structure and confirm the guard holds everywhere."""
    exps = a._exps
    return all(geq(exps[i], exps[i + 1]) for i in range(len(exps) - 1)) and all(
        audit(e) for e in exps
    )


ONE = omega_pow(ZERO)
OMEGA = omega_pow(ONE)
