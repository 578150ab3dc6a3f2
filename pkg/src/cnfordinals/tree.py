"""Free ordinal terms, their lexicographic order, and the normal-form check.

A :class:`Tree` is either :class:`Zero` or ``OmegaPlus(exp, rest)``, read as
``ω^exp + rest``.  Nothing forces the exponents to be non-increasing; the
:func:`is_cnf` predicate says when they are, and :func:`validate` turns a
tree into a :class:`CnfTree`, which can only exist for normal-form terms.

Long sums are walked iteratively along ``rest``; only exponent nesting uses
the Python stack.
"""
from __future__ import annotations

from .errors import NotInNormalForm


class Tree:
    __slots__ = ()

    def is_zero(self) -> bool:
        return isinstance(self, Zero)


class Zero(Tree):
    __slots__ = ()
    __match_args__ = ()

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return isinstance(other, Zero)

    def __hash__(self):
        return 0x5A

    def __repr__(self):
        return "Zero()"


class OmegaPlus(Tree):
    __slots__ = ("exp", "rest", "_hash")
    __match_args__ = ("exp", "rest")

    def __init__(self, exp: Tree, rest: Tree):
        if not isinstance(exp, Tree) or not isinstance(rest, Tree):
            raise TypeError("OmegaPlus takes two Tree arguments")
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "rest", rest)
        object.__setattr__(self, "_hash", hash((hash(exp), hash(rest))))

    def __setattr__(self, name, value):
        raise AttributeError("Tree values are immutable")

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        a, b = self, other
        while isinstance(a, OmegaPlus) and isinstance(b, OmegaPlus):
            if a is b:
                return True
            if a._hash != b._hash or a.exp != b.exp:
                return False
            a, b = a.rest, b.rest
        return isinstance(a, Zero) and isinstance(b, Zero)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        parts = []
        node = self
        while isinstance(node, OmegaPlus):
            parts.append(repr(node.exp))
            node = node.rest
        return "".join(f"OmegaPlus({p}, " for p in parts) + "Zero()" + ")" * len(parts)


ZERO = Zero()


def tree_lt(a: Tree, b: Tree) -> bool:
    """Strict lexicographic order: zero is least, then exponents, then tails."""
    while True:
        if isinstance(a, Zero):
            return isinstance(b, OmegaPlus)
        if isinstance(b, Zero):
            return False
        if tree_lt(a.exp, b.exp):
            return True
        if a.exp != b.exp:
            return False
        a, b = a.rest, b.rest


def tree_geq(a: Tree, b: Tree) -> bool:
    """``a ≥ b`` read literally as ``b < a or a = b`` (no trichotomy assumed)."""
    return tree_lt(b, a) or a == b


def tree_fst(a: Tree) -> Tree:
    """Leading exponent; zero for the zero tree."""
    return a.exp if isinstance(a, OmegaPlus) else ZERO


def _first_violation(a: Tree, path: tuple[str, ...]):
    node = a
    while isinstance(node, OmegaPlus):
        bad = _first_violation(node.exp, path + ("exp",))
        if bad is not None:
            return bad
        if not tree_geq(node.exp, tree_fst(node.rest)):
            return path
        node = node.rest
        path = path + ("rest",)
    return None


def is_cnf(a: Tree) -> bool:
    """True iff every exponent is at least the leading exponent of its tail."""
    return _first_violation(a, ()) is None


class CnfTree:
    """A tree known to be in Cantor normal form.

    Constructing one runs the check; there is no unchecked public path.
    """

    __slots__ = ("term",)

    def __init__(self, term: Tree):
        path = _first_violation(term, ())
        if path is not None:
            where = ".".join(path) or "root"
            raise NotInNormalForm(f"exponents increase at {where}", path)
        object.__setattr__(self, "term", term)

    @classmethod
    def _trusted(cls, term: Tree) -> "CnfTree":
        obj = object.__new__(cls)
        object.__setattr__(obj, "term", term)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CnfTree is immutable")

    def __eq__(self, other):
        if not isinstance(other, CnfTree):
            return NotImplemented
        return self.term == other.term

    def __hash__(self):
        return hash(("CnfTree", self.term))

    def __repr__(self):
        return f"CnfTree({self.term!r})"


def validate(a: Tree) -> CnfTree:
    """Return ``CnfTree(a)``; raises :class:`NotInNormalForm` otherwise."""
    return CnfTree(a)
