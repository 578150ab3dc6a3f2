"""Exit criteria for the package, one marker per criterion.

Random inputs come from fixed seeds so every run checks the same instances.
"""
import itertools
import random
import time

import pytest

from cnfordinals import (
    EMPTY,
    ONE,
    OMEGA,
    ZERO,
    HMultiset,
    Ordering3,
    ZeroTailAt,
    Violation,
    add,
    add_mset,
    cnf_to_cv,
    compare3,
    cv_add,
    cv_hmul,
    cv_hsum,
    cv_mul,
    first_exp,
    from_json,
    from_nat,
    geq,
    gt,
    h2m,
    hmul_cnf,
    hsum,
    hsum_cnf,
    insert,
    lt,
    m2h,
    m2t,
    mset_cons,
    mul,
    mul_mset,
    omega_plus,
    omega_pow,
    sequence_from_prefix,
    t2m,
    to_json,
    validate,
    wf_recurse,
    zero_tail,
)
from cnfordinals.cli import run_command
from cnfordinals.selftest import run_selftest
from cnfordinals.syntax import evaluate, print_canonical
from cnfordinals.tree import tree_lt

from .ordgen import SMALL, SMALL_COEFFS, all_cnf_trees, rand_cnf
from .wfgen import as_sequence, pseudo_descending, smaller

N_RANDOM = 10_000


def random_terms(seed, n=N_RANDOM, depth=6):
    rng = random.Random(seed)
    return [rand_cnf(rng, depth) for _ in range(n)]


def random_triples(seed, n=N_RANDOM, depth=6):
    rng = random.Random(seed)
    return [tuple(rand_cnf(rng, depth) for _ in range(3)) for _ in range(n)]


SMALL_H = [m2h(x) for x in SMALL]


# --- criterion 1 -----------------------------------------------------------

c1 = pytest.mark.criterion(1, "worked examples, exact, under 1 s")


@c1
def test_c1_worked_examples():
    start = time.perf_counter()
    two = from_nat(2)
    w_plus_1 = add(OMEGA, ONE)
    w_plus_w = add(OMEGA, OMEGA)
    h_one = HMultiset([EMPTY])

    assert add(ONE, OMEGA) == OMEGA
    assert gt(w_plus_1, OMEGA)
    assert mul(two, OMEGA) == OMEGA
    assert mul(OMEGA, two) == w_plus_w
    assert hsum_cnf(ONE, OMEGA) == w_plus_1
    assert hmul_cnf(two, OMEGA) == w_plus_w
    assert add_mset(m2h(ONE), m2h(OMEGA)) == m2h(OMEGA)
    assert mul_mset(m2h(OMEGA), m2h(two)) == HMultiset([h_one, h_one])
    concat = hsum(hsum(m2h(ONE), m2h(omega_pow(OMEGA))), m2h(OMEGA))
    assert concat == HMultiset([m2h(OMEGA), h_one, EMPTY])
    comparisons = (
        lt(ZERO, ZERO),
        lt(OMEGA, hmul_cnf(two, OMEGA)),
        lt(omega_pow(OMEGA), omega_pow(add(ONE, OMEGA))),
        lt(omega_pow(OMEGA), omega_pow(hsum_cnf(ONE, OMEGA))),
    )
    assert comparisons == (False, True, False, True)
    a, b, c = m2h(ONE), m2h(OMEGA), m2h(omega_pow(OMEGA))
    assert mset_cons(a, mset_cons(b, mset_cons(c, EMPTY))) == mset_cons(
        c, mset_cons(b, mset_cons(a, EMPTY))
    )
    assert all(ok for _, ok in run_selftest())
    assert time.perf_counter() - start < 1.0


# --- criterion 2 -----------------------------------------------------------

c2 = pytest.mark.criterion(2, "conversion round trips and order transfer")


@c2
def test_c2_round_trips_exhaustive_depth_3():
    # 26 trees of depth <= 3; the two shaped ω^0 + ω^1 + ... are not in normal form
    trees = all_cnf_trees(3)
    assert len(trees) == 24
    for t in trees:
        ct = validate(t)
        x = t2m(ct)
        assert m2t(x) == ct
        assert t2m(m2t(x)) == x
        assert h2m(m2h(x)) == x
        h = m2h(x)
        assert m2h(h2m(h)) == h


@c2
def test_c2_round_trips_random_depth_6():
    for x in random_terms(21):
        ct = m2t(x)
        assert t2m(ct) == x
        assert m2t(t2m(ct)) == ct
        h = m2h(x)
        assert h2m(h) == x
        assert m2h(h2m(h)) == h


@c2
def test_c2_order_preserved_and_reflected():
    rng = random.Random(22)
    for _ in range(N_RANDOM):
        a, b = rand_cnf(rng, 6), rand_cnf(rng, 6)
        ta, tb = m2t(a).term, m2t(b).term
        assert lt(a, b) == tree_lt(ta, tb)
        assert lt(b, a) == tree_lt(tb, ta)
        assert lt(t2m(validate(ta)), t2m(validate(tb))) == tree_lt(ta, tb)


# --- criterion 3 -----------------------------------------------------------

c3 = pytest.mark.criterion(3, "order laws of compare3")


@c3
def test_c3_random_triples():
    for a, b, c in random_triples(31):
        for x in (a, b, c):
            assert compare3(x, x) is Ordering3.EQUAL and not lt(x, x)
        for x, y in ((a, b), (b, c), (a, c)):
            assert [lt(x, y), x == y, lt(y, x)].count(True) == 1
            assert compare3(x, y) is compare3(y, x).flip()
        for x, y, z in itertools.permutations((a, b, c)):
            if lt(x, y) and lt(y, z):
                assert lt(x, z)


@c3
def test_c3_exhaustive_small_range():
    order = {}
    for (ca, a), (cb, b) in itertools.product(zip(SMALL_COEFFS, SMALL), repeat=2):
        c = compare3(a, b)
        assert c is Ordering3((ca > cb) - (ca < cb))
        assert [c is Ordering3.LESS, a == b, lt(b, a)].count(True) == 1
        order[a, b] = c is Ordering3.LESS
    for a, b, c in itertools.product(SMALL, repeat=3):
        if order[a, b] and order[b, c]:
            assert order[a, c]


# --- criterion 4 -----------------------------------------------------------

c4 = pytest.mark.criterion(4, "algebraic laws")


@c4
def test_c4_add_associative():
    for a, b, c in random_triples(41):
        assert add(a, add(b, c)) == add(add(a, b), c)
    for a, b, c in itertools.product(SMALL, repeat=3):
        assert add(a, add(b, c)) == add(add(a, b), c)


@c4
def test_c4_hessenberg_sum_laws():
    for a, b, c in random_triples(42):
        ha, hb, hc = m2h(a), m2h(b), m2h(c)
        assert hsum(ha, hb) == hsum(hb, ha)
        assert hsum(ha, hsum(hb, hc)) == hsum(hsum(ha, hb), hc)
        assert hsum(ha, EMPTY) == ha
        assert hsum(ha, hsum(hb, hc)) == hsum(hb, hsum(ha, hc))
    for ha, hb in itertools.product(SMALL_H, repeat=2):
        assert hsum(ha, hb) == hsum(hb, ha)
        assert hsum(ha, EMPTY) == ha
    for ha, hb, hc in itertools.product(SMALL_H, repeat=3):
        left = hsum(ha, hsum(hb, hc))
        assert left == hsum(hsum(ha, hb), hc)
        assert left == hsum(hb, hsum(ha, hc))


@c4
def test_c4_insert_laws():
    for x, y, z in random_triples(43):
        assert insert(x, insert(y, z)) == insert(y, insert(x, z))
        for a, b in ((x, y), (y, z), (x, z)):
            if geq(a, first_exp(b)):
                assert insert(a, b) == omega_plus(a, b)
    for x, y, z in itertools.product(SMALL, repeat=3):
        assert insert(x, insert(y, z)) == insert(y, insert(x, z))
    for a, b in itertools.product(SMALL, repeat=2):
        if geq(a, first_exp(b)):
            assert insert(a, b) == omega_plus(a, b)


@c4
def test_c4_additive_principality():
    rng = random.Random(44)
    hits = 0
    while hits < N_RANDOM:
        beta, gamma = rand_cnf(rng, 5), rand_cnf(rng, 6)
        if lt(gamma, omega_pow(beta)):
            hits += 1
            assert add(gamma, omega_pow(beta)) == omega_pow(beta)
    for gamma, beta in itertools.product(SMALL, repeat=2):
        if lt(gamma, omega_pow(beta)):
            assert add(gamma, omega_pow(beta)) == omega_pow(beta)


@c4
def test_c4_non_commutativity_witnesses():
    two = from_nat(2)
    assert add(ONE, OMEGA) != add(OMEGA, ONE)
    assert mul(two, OMEGA) != mul(OMEGA, two)
    assert hsum_cnf(ONE, OMEGA) == hsum_cnf(OMEGA, ONE)
    assert hmul_cnf(two, OMEGA) == hmul_cnf(OMEGA, two)


# --- criterion 5 -----------------------------------------------------------

c5 = pytest.mark.criterion(5, "oracle differential below w^3, under 5 s")


@c5
def test_c5_oracle_agreement():
    start = time.perf_counter()
    vectors = [cnf_to_cv(x) for x in SMALL]
    assert len(SMALL) == 64
    for (a, va), (b, vb) in itertools.product(zip(SMALL, vectors), repeat=2):
        assert cnf_to_cv(add(a, b)) == cv_add(va, vb)
        assert cnf_to_cv(mul(a, b)) == cv_mul(va, vb)
        assert cnf_to_cv(hsum_cnf(a, b)) == cv_hsum(va, vb)
        assert cnf_to_cv(hmul_cnf(a, b)) == cv_hmul(va, vb)
    assert time.perf_counter() - start < 5.0


# --- criterion 6 -----------------------------------------------------------

c6 = pytest.mark.criterion(6, "well-founded recursion and zero-tail search")


@c6
def test_c6_random_descending_computations():
    rng = random.Random(61)
    observed = []

    def step(x, rec):
        size = 1
        for _ in range(rng.randint(0, 2)):
            if x.is_zero() or len(observed) > budget:
                break
            y = smaller(rng, x)
            observed.append((y, x))
            size += rec(y)
        return size

    runs = 0
    for _ in range(1000):
        budget = len(observed) + 300
        assert wf_recurse(step, rand_cnf(rng, 5)) >= 1
        runs += 1
    assert runs == 1000 and observed
    assert all(lt(y, x) for y, x in observed)


@c6
def test_c6_zero_tail_specified_sequences():
    assert zero_tail(lambda i: ZERO) == ZeroTailAt(0)
    assert zero_tail(sequence_from_prefix([OMEGA, ONE, ZERO])) == ZeroTailAt(2)
    assert zero_tail(lambda i: from_nat(max(3 - i, 0))) == ZeroTailAt(3)
    report = zero_tail(sequence_from_prefix([OMEGA, ZERO, from_nat(5), ZERO]))
    assert isinstance(report, Violation) and report.i == 1


@c6
def test_c6_generated_sequences_minimal_index():
    rng = random.Random(62)
    for _ in range(1000):
        values = pseudo_descending(rng, rand_cnf(rng, 5))
        assert zero_tail(as_sequence(values)) == ZeroTailAt(len(values) - 1)


# --- criterion 7 -----------------------------------------------------------

c7 = pytest.mark.criterion(7, "CLI golden tests")


@c7
def test_c7_grammar_round_trip():
    for x in random_terms(71, n=1000):
        assert evaluate(print_canonical(x)) == x


@c7
def test_c7_json_round_trip():
    for x in random_terms(72, n=1000):
        assert from_json(to_json(x)) == x


@c7
def test_c7_cli_round_trip_through_commands(capsys):
    for x in random_terms(73, n=50, depth=5):
        assert run_command(["convert", "--from", "json", "--to", "text", to_json(x)]) == 0
        text = capsys.readouterr().out.strip()
        assert run_command(["eval", text, "--json"]) == 0
        assert from_json(capsys.readouterr().out) == x


@c7
@pytest.mark.parametrize(
    "argv, code",
    [
        (["cmp", "w^w", "w^(1 (+) w)"], 0),
        (["eval", "1 + "], 1),
        (["convert", "--from", "json", "--to", "text", "[[]"], 1),
        (["convert", "--from", "json", "--to", "text", "[[],[[]]]"], 2),
        (["eval", "65537"], 4),
        (["eval", "(" * 3000 + "w" + ")" * 3000], 4),
    ],
)
def test_c7_exit_codes(capsys, argv, code):
    assert run_command(argv) == code


@c7
def test_c7_trace_commands(capsys, tmp_path):
    trace = tmp_path / "desc.txt"
    trace.write_text("w+1\nw\n1\n0\n", encoding="utf-8")
    assert run_command(["check-desc", str(trace)]) == 0
    seq = tmp_path / "seq.txt"
    seq.write_text("w\n1\n0\n", encoding="utf-8")
    capsys.readouterr()
    assert run_command(["zero-tail", str(seq)]) == 0
    assert capsys.readouterr().out == "2\n"
    bad = tmp_path / "bad.txt"
    bad.write_text("1\n1\n", encoding="utf-8")
    assert run_command(["check-desc", str(bad)]) == 3
    assert capsys.readouterr().out == "0\n"


@c7
def test_c7_selftest(capsys):
    assert run_command(["selftest"]) == 0
    assert "FAIL" not in capsys.readouterr().out
