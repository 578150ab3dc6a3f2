"""Ordinal notations below ε₀: CNF terms, hereditary multisets and raw trees.

Three interconvertible representations, ordinary and Hessenberg arithmetic,
a decidable total order, well-founded recursion and descent analysis.
"""
from ._config import Limits, limits, using_limits
from .arith import add, add_mset, dot_plus, hmul, hmul_cnf, hsum, hsum_cnf, mul, mul_mset
from .cnf import (
    ONE,
    OMEGA,
    ZERO,
    CnfOrdinal,
    Ordering3,
    audit,
    compare3,
    first_exp,
    from_nat,
    geq,
    gt,
    leq,
    lt,
    omega_plus,
    omega_pow,
)
from .convert import h2m, insert, m2h, m2t, t2m
from .errors import (
    CoefficientOverflow,
    DepthExceeded,
    GuardViolation,
    InvariantError,
    JsonError,
    NotInNormalForm,
    NumeralTooLarge,
    OrdinalError,
    OutOfRange,
    ParseError,
    PreconditionViolation,
    ResourceLimit,
    TermTooLarge,
)
from .mset import (
    EMPTY,
    HMultiset,
    left_commutativity_counterexample,
    mset_compare,
    mset_cons,
    mset_decompose,
    mset_eq,
    mset_fold,
)
from .oracle import CoeffVector, cnf_to_cv, cv_add, cv_hmul, cv_hsum, cv_mul, cv_to_cnf
from .syntax import eval_expr, evaluate, from_json, parse_expr, print_canonical, to_json
from .tree import CnfTree, Tree, is_cnf, tree_fst, tree_lt, validate
from .wf import (
    Violation,
    ZeroTailAt,
    check_strict_trace,
    pseudo_prefix_check,
    sequence_from_prefix,
    wf_iterate,
    wf_recurse,
    zero_tail,
)

__version__ = "0.1.0"
