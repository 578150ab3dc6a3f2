"""Conversions between trees, CNF ordinals and hereditary multisets.

All four maps are total: the invariant of the source type is exactly what
the target type needs.  Round-trip and order-preservation laws are covered
by the test suite.
"""
from __future__ import annotations

from .cnf import ZERO, CnfOrdinal, _from_exponents, lt
from .mset import HMultiset, mset_fold
from .tree import ZERO as TREE_ZERO
from .tree import CnfTree, OmegaPlus, Tree


def _tree_to_cnf(t: Tree) -> CnfOrdinal:
    exps = []
    while isinstance(t, OmegaPlus):
        exps.append(_tree_to_cnf(t.exp))
        t = t.rest
    return _from_exponents(exps)


def t2m(ct: CnfTree) -> CnfOrdinal:
    if not isinstance(ct, CnfTree):
        raise TypeError("t2m expects a validated CnfTree")
    return _tree_to_cnf(ct.term)


def _cnf_to_tree(x: CnfOrdinal) -> Tree:
    node = TREE_ZERO
    for e in reversed(x.exponents):
        node = OmegaPlus(_cnf_to_tree(e), node)
    return node


def m2t(x: CnfOrdinal) -> CnfTree:
    return CnfTree._trusted(_cnf_to_tree(x))


def insert(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Insert ``ω^a`` into ``b`` at its ordered position (list insertion)."""
    exps = b.exponents
    i = 0
    while i < len(exps) and lt(a, exps[i]):
        i += 1
    # exps[i-1] > a >= exps[i], so the guard holds on both sides of a.
    return CnfOrdinal._make(exps[:i] + (a,) + exps[i:])


def m2h(x: CnfOrdinal) -> HMultiset:
    """Forget the order: the exponents are already non-increasing."""
    return HMultiset._canonical(tuple(m2h(e) for e in x.exponents))


def h2m(x: HMultiset) -> CnfOrdinal:
    """Inverse of :func:`m2h`.

    Equal to ``mset_fold(ZERO, insert, x)``; since canonical children are
    already sorted, every insert lands at the front, so the exponents are
    read off directly instead of paying for repeated tuple copies.
    """
    return CnfOrdinal._make(tuple(h2m(c) for c in x.children))


def h2m_by_insertion(x: HMultiset) -> CnfOrdinal:
    """:func:`h2m` as the literal fold of :func:`insert` (quadratic)."""
    return mset_fold(ZERO, insert, x)


__all__ = ["t2m", "m2t", "insert", "m2h", "h2m", "h2m_by_insertion"]
