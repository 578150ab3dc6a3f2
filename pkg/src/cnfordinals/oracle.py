"""Reference arithmetic for ordinals below ω^ω.

An ordinal ``ω^k1·c1 + ... + ω^kn·cn`` (k1 > ... > kn) is stored as the
coefficient map ``{k: c}``.  The operations use textbook truncation and
distributivity identities rather than the head-comparison recursion of
:mod:`cnfordinals.arith`, so agreement between the two is real evidence.
"""
from __future__ import annotations

from collections import Counter
from typing import Mapping

from .cnf import ZERO, CnfOrdinal, _from_exponents, from_nat
from .errors import CoefficientOverflow, OutOfRange

# Coefficients and degrees are unsigned 64-bit machine naturals.
MAX_NATURAL = 2**64 - 1


def _checked(n: int) -> int:
    if n > MAX_NATURAL:
        raise CoefficientOverflow(f"{n} does not fit in a machine natural")
    return n


class CoeffVector:
    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        terms = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(k, int) or not isinstance(c, int) or k < 0 or c < 0:
                raise ValueError("degrees and coefficients must be natural numbers")
            if c:
                terms[_checked(k)] = _checked(c)
        object.__setattr__(self, "_terms", tuple(sorted(terms.items(), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("CoeffVector is immutable")

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """``(degree, coefficient)`` pairs, highest degree first."""
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def get(self, degree: int) -> int:
        return dict(self._terms).get(degree, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def leading_degree(self) -> int:
        return self._terms[0][0]

    def __eq__(self, other):
        if not isinstance(other, CoeffVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"CoeffVector({self.as_dict()})"


def cnf_to_cv(a: CnfOrdinal) -> CoeffVector:
    counts: Counter[int] = Counter()
    for e in a.exponents:
        if any(not x.is_zero() for x in e.exponents):
            raise OutOfRange("exponent is not a natural number; ordinal is not below ω^ω")
        counts[len(e)] += 1
    return CoeffVector(counts)


def cv_to_cnf(v: CoeffVector) -> CnfOrdinal:
    exps = []
    for k, c in v.terms:
        exps.extend([from_nat(k)] * c)
    return _from_exponents(exps) if exps else ZERO


def cv_add(a: CoeffVector, b: CoeffVector) -> CoeffVector:
    """Terms of ``a`` above the lead of ``b`` survive, the lead degree adds up, ``b`` supplies the rest."""
    if b.is_zero():
        return a
    j = b.leading_degree
    out = {k: c for k, c in a.terms if k > j}
    out.update(b.as_dict())
    out[j] = _checked(a.get(j) + b.get(j))
    return CoeffVector(out)


def _times_monomial(a: CoeffVector, j: int, c: int) -> CoeffVector:
    # a · (ω^j · c), with a ≠ 0 and c > 0
    k, ck = a.terms[0]
    if j >= 1:
        return CoeffVector({_checked(k + j): c})
    out = dict(a.terms[1:])
    out[k] = _checked(ck * c)
    return CoeffVector(out)


def cv_mul(a: CoeffVector, b: CoeffVector) -> CoeffVector:
    """Left distributivity over the monomials of ``b``."""
    if a.is_zero() or b.is_zero():
        return CoeffVector()
    acc = CoeffVector()
    for j, c in b.terms:
        acc = cv_add(acc, _times_monomial(a, j, c))
    return acc


def cv_hsum(a: CoeffVector, b: CoeffVector) -> CoeffVector:
    out = a.as_dict()
    for k, c in b.terms:
        out[k] = _checked(out.get(k, 0) + c)
    return CoeffVector(out)


def cv_hmul(a: CoeffVector, b: CoeffVector) -> CoeffVector:
    """Polynomial convolution: degrees add, coefficients multiply."""
    out: dict[int, int] = {}
    for i, ci in a.terms:
        for j, cj in b.terms:
            d = _checked(i + j)
            out[d] = _checked(out.get(d, 0) + ci * cj)
    return CoeffVector(out)
