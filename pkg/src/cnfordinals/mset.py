"""Finite hereditary multisets in canonical (sorted) form.

An :class:`HMultiset` is a multiset of hereditary multisets; the empty one
stands for zero and ``{a1, ..., an}`` for ``ω^a1 ⊕ ... ⊕ ω^an``.  Children
are kept sorted non-increasing, so two multisets that differ only by the
order of insertion are the same object up to ``==``.
"""
from __future__ import annotations

import functools
import itertools
from typing import Callable, Iterable, TypeVar

from .cnf import Ordering3

T = TypeVar("T")


def mset_compare(a: "HMultiset", b: "HMultiset") -> Ordering3:
    """Lexicographic comparison of the (sorted) child sequences."""
    xs, ys = a.children, b.children
    if xs is ys:
        return Ordering3.EQUAL
    for x, y in zip(xs, ys):
        if x is y:
            continue
        c = mset_compare(x, y)
        if c is not Ordering3.EQUAL:
            return c
    if len(xs) == len(ys):
        return Ordering3.EQUAL
    return Ordering3.LESS if len(xs) < len(ys) else Ordering3.GREATER


_sort_key = functools.cmp_to_key(lambda a, b: int(mset_compare(a, b)))


class HMultiset:
    __slots__ = ("children", "_hash")

    def __init__(self, children: Iterable["HMultiset"] = ()):
        children = tuple(children)
        if not all(isinstance(c, HMultiset) for c in children):
            raise TypeError("children must be HMultiset values")
        self._set(tuple(sorted(children, key=_sort_key, reverse=True)))

    @classmethod
    def _canonical(cls, children: tuple) -> "HMultiset":
        obj = object.__new__(cls)
        obj._set(children)
        return obj

    def _set(self, children):
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_hash", hash(("H", children)))

    def __setattr__(self, name, value):
        raise AttributeError("HMultiset is immutable")

    def __reduce__(self):
        return (HMultiset, (self.children,))

    def is_empty(self) -> bool:
        return not self.children

    def __len__(self):
        return len(self.children)

    def __iter__(self):
        return iter(self.children)

    def __eq__(self, other):
        if not isinstance(other, HMultiset):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.children == other.children)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, HMultiset):
            return NotImplemented
        return mset_compare(self, other) is Ordering3.LESS

    def __le__(self, other):
        if not isinstance(other, HMultiset):
            return NotImplemented
        return mset_compare(self, other) is not Ordering3.GREATER

    def __gt__(self, other):
        if not isinstance(other, HMultiset):
            return NotImplemented
        return mset_compare(self, other) is Ordering3.GREATER

    def __ge__(self, other):
        if not isinstance(other, HMultiset):
            return NotImplemented
        return mset_compare(self, other) is not Ordering3.LESS

    def __repr__(self):
        return f"HMultiset({render_mset(self)})"


EMPTY = HMultiset._canonical(())


def render_mset(x: HMultiset) -> str:
    """Nested-brace rendering, e.g. ``{{{}}, {}}`` for ω + 1."""
    return "{" + ", ".join(render_mset(c) for c in x.children) + "}"


def mset_cons(a: HMultiset, b: HMultiset) -> HMultiset:
    """Add ``a`` as one more element of ``b``."""
    kids = b.children
    i = 0
    while i < len(kids) and mset_compare(kids[i], a) is not Ordering3.LESS:
        i += 1
    return HMultiset._canonical(kids[:i] + (a,) + kids[i:])


def mset_decompose(x: HMultiset):
    """``None`` for the empty multiset, else ``(largest child, remainder)``."""
    if not x.children:
        return None
    return x.children[0], HMultiset._canonical(x.children[1:])


def mset_eq(a: HMultiset, b: HMultiset) -> bool:
    return a == b


def mset_fold(z: T, star: Callable[[T, T], T], x: HMultiset) -> T:
    """Hereditary fold: ``fold({}) = z`` and ``fold(cons(a, b)) = star(fold(a), fold(b))``.

    ``star`` must be left-commutative, ``star(x, star(y, z)) == star(y, star(x, z))``;
    otherwise the result depends on which representative is stored.  See
    :func:`left_commutativity_counterexample`.
    """
    acc = z
    for child in reversed(x.children):
        acc = star(mset_fold(z, star, child), acc)
    return acc


def left_commutativity_counterexample(star: Callable, values: Iterable):
    """First ``(x, y, z)`` among ``values`` where ``star`` is not left-commutative, or ``None``."""
    values = list(values)
    for x, y, z in itertools.product(values, repeat=3):
        if star(x, star(y, z)) != star(y, star(x, z)):
            return x, y, z
    return None
