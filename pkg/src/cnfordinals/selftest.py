"""The worked examples from the literature on this construction, as executable checks."""
from __future__ import annotations

from typing import Callable

from .arith import add, add_mset, hmul_cnf, hsum, hsum_cnf, mul, mul_mset
from .cnf import ONE, OMEGA, ZERO, compare3, from_nat, gt, lt, omega_pow, Ordering3
from .convert import m2h
from .mset import EMPTY, HMultiset, mset_cons


def _h(*children):
    return HMultiset(children)


def _swap_three() -> bool:
    a, b, c = m2h(ONE), m2h(OMEGA), m2h(omega_pow(OMEGA))
    left = mset_cons(a, mset_cons(b, mset_cons(c, EMPTY)))
    right = mset_cons(c, mset_cons(b, mset_cons(a, EMPTY)))
    return left == right


def _decidable_order() -> bool:
    two = from_nat(2)
    results = (
        lt(ZERO, ZERO),
        lt(OMEGA, hmul_cnf(two, OMEGA)),
        lt(omega_pow(OMEGA), omega_pow(add(ONE, OMEGA))),
        lt(omega_pow(OMEGA), omega_pow(hsum_cnf(ONE, OMEGA))),
    )
    return results == (False, True, False, True)


def _hessenberg_concat() -> bool:
    h0, h1 = _h(), _h(_h())
    total = hsum(hsum(m2h(ONE), m2h(omega_pow(OMEGA))), m2h(OMEGA))
    return total == _h(m2h(OMEGA), h1, h0)


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("1 + w = w", lambda: add(ONE, OMEGA) == OMEGA),
    ("w + 1 > w", lambda: gt(add(OMEGA, ONE), OMEGA)),
    ("addition is not commutative", lambda: add(ONE, OMEGA) != add(OMEGA, ONE)),
    ("2 * w = w", lambda: mul(from_nat(2), OMEGA) == OMEGA),
    ("w < w + w", lambda: lt(OMEGA, add(OMEGA, OMEGA))),
    ("w * 2 = w + w", lambda: mul(OMEGA, from_nat(2)) == add(OMEGA, OMEGA)),
    ("1 (+) w = w + 1", lambda: hsum_cnf(ONE, OMEGA) == add(OMEGA, ONE)),
    ("2 (*) w = w + w", lambda: hmul_cnf(from_nat(2), OMEGA) == add(OMEGA, OMEGA)),
    ("1 + w on multisets = {1}", lambda: add_mset(m2h(ONE), m2h(OMEGA)) == _h(_h(_h()))),
    (
        "w * (1 + 1) on multisets = {1, 1}",
        lambda: mul_mset(m2h(OMEGA), add_mset(m2h(ONE), m2h(ONE))) == _h(_h(_h()), _h(_h())),
    ),
    ("1 (+) w^w (+) w = {w, 1, 0}", _hessenberg_concat),
    ("decidable order: false, true, false, true", _decidable_order),
    ("three-element swap", _swap_three),
    ("0 < 0 is false", lambda: compare3(ZERO, ZERO) is Ordering3.EQUAL),
]


def run_selftest() -> list[tuple[str, bool]]:
    results = []
    for name, check in CHECKS:
        try:
            ok = bool(check())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
