"""Ordinal and Hessenberg arithmetic.

Ordinary ``add``/``mul`` work on :class:`CnfOrdinal` by comparing heads;
Hessenberg ``hsum``/``hmul`` work on :class:`HMultiset` where order plays no
role.  Each operation is carried to the other representation by composing
with the conversions (``hsum_cnf``, ``hmul_cnf``, ``add_mset``, ``mul_mset``).
"""
from __future__ import annotations

from ._config import limits
from .cnf import ZERO, CnfOrdinal, Ordering3, geq, lt
from .errors import TermTooLarge
from .convert import h2m, m2h
from .mset import EMPTY, HMultiset, mset_compare


def add(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Ordinal sum.

    Summands of ``a`` whose exponent is below the leading exponent of ``b``
    are absorbed (``γ + ω^β = ω^β`` for ``γ < ω^β``).
    """
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    head = b.exp
    xs = a.exponents
    k = 0
    while k < len(xs) and not lt(xs[k], head):
        k += 1
    assert k == 0 or geq(xs[k - 1], head)
    return CnfOrdinal._make(xs[:k] + b.exponents)


def mul(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Ordinal product, distributing ``a`` over the summands of ``b`` from the right.

    A summand ``ω^0`` of ``b`` contributes ``a`` itself; a summand ``ω^e`` with
    ``e > 0`` contributes ``ω^(first_exp(a) + e)``.  The ``ω^0`` case has to
    be tested first.
    """
    if a.is_zero() or b.is_zero():
        return ZERO
    lead = a.exp
    cap = limits().max_terms
    # acc = contribution + acc, with acc's exponents kept reversed so that
    # each step appends instead of copying
    acc_rev: list[CnfOrdinal] = []
    for e in reversed(b.exponents):
        contribution = a.exponents if e.is_zero() else (add(lead, e),)
        k = len(contribution)
        if acc_rev:
            head = acc_rev[-1]
            k = 0
            while k < len(contribution) and not lt(contribution[k], head):
                k += 1
        acc_rev.extend(reversed(contribution[:k]))
        if len(acc_rev) > cap:
            raise TermTooLarge(f"product has more than {cap} summands")
    return CnfOrdinal._make(tuple(reversed(acc_rev)))


def hsum(a: HMultiset, b: HMultiset) -> HMultiset:
    """Hessenberg (natural) sum: multiset union, as a merge of sorted children."""
    if a.is_empty():
        return b
    if b.is_empty():
        return a
    xs, ys = a.children, b.children
    out = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        if mset_compare(xs[i], ys[j]) is Ordering3.LESS:
            out.append(ys[j])
            j += 1
        else:
            out.append(xs[i])
            i += 1
    out.extend(xs[i:])
    out.extend(ys[j:])
    return HMultiset._canonical(tuple(out))


def dot_plus(a: HMultiset, b: HMultiset) -> HMultiset:
    """Replace every element ``x`` of ``a`` by ``x ⊕ b``."""
    return HMultiset(hsum(x, b) for x in a.children)


def hmul(a: HMultiset, b: HMultiset) -> HMultiset:
    """Hessenberg (natural) product: ``a ⊗ {e1, ..., en} = (a ⊕̇ e1) ⊕ ... ⊕ (a ⊕̇ en)``."""
    acc = EMPTY
    for e in reversed(b.children):
        acc = hsum(dot_plus(a, e), acc)
    return acc


def hsum_cnf(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    return h2m(hsum(m2h(a), m2h(b)))


def hmul_cnf(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    return h2m(hmul(m2h(a), m2h(b)))


def add_mset(a: HMultiset, b: HMultiset) -> HMultiset:
    return m2h(add(h2m(a), h2m(b)))


def mul_mset(a: HMultiset, b: HMultiset) -> HMultiset:
    return m2h(mul(h2m(a), h2m(b)))
