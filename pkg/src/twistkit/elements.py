"""Normal-ordered noncommutative polynomials and their tensor powers.

An Element is a finite sum of (coefficient, word) terms over a Presentation's
generator alphabet; words are stored as tuples of generator ranks in the
presentation's total order and are always in PBW normal form.  Coefficients
are Gaussian rationals keyed additionally by their parameter monomial, so a
single word may appear with several distinct parameter monomials (that is
still "one word per term" in the spec's sense: terms are keyed by the pair).

TensorElement is the rank-2/3 analogue with a tuple of words per term; the
coefficient (including its parameter monomial) is global to the term, and
multiplication is factorwise.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .scalars import EMPTY, Pair, Params, Scalar, cmul, pmul

Word = Tuple[int, ...]
Terms = Dict[Tuple[Word, Params], Pair]

_ONE = (Fraction(1), Fraction(0))


def _acc(target: Terms, key, pair: Pair) -> None:
    old = target.get(key)
    if old is None:
        target[key] = pair
    else:
        re = old[0] + pair[0]
        im = old[1] + pair[1]
        if re or im:
            target[key] = (re, im)
        else:
            del target[key]


class Element:
    """Immutable-by-convention normal-ordered polynomial."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms: Terms):
        self.pres = pres
        self.terms = terms

    # -- inspection ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Element) and self.pres is other.pres
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.pres), tuple(sorted(self.terms.items()))))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def coefficient(self, word: Word, params: Params = EMPTY) -> Scalar:
        pair = self.terms.get((word, params), (Fraction(0), Fraction(0)))
        return Scalar(pair[0], pair[1], params)

    def max_param_exponent(self, axis: str) -> int:
        worst = 0
        for (_, params) in self.terms:
            for a, e in params:
                if a == axis and e > worst:
                    worst = e
        return worst

    def min_param_exponent(self, axis: str) -> int:
        best = 0
        for (_, params) in self.terms:
            e = dict(params).get(axis, 0)
            if e < best:
                best = e
        return best

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "Element") -> "Element":
        self.pres._check_same(other.pres)
        acc = dict(self.terms)
        for key, pair in other.terms.items():
            _acc(acc, key, pair)
        return Element(self.pres, acc)

    def __neg__(self) -> "Element":
        return Element(self.pres, {k: (-r, -i) for k, (r, i) in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other: "Element") -> "Element":
        return self.pres.multiply(self, other)

    def scaled(self, s: Scalar) -> "Element":
        if s.is_zero():
            return self.pres.zero()
        allows = self.pres.policy.allows
        pair = s.pair()
        acc: Terms = {}
        for (word, params), c in self.terms.items():
            np_ = pmul(params, s.params)
            if not allows(np_):
                continue
            _acc(acc, (word, np_), cmul(c, pair))
        return Element(self.pres, acc)

    def truncated(self, policy) -> "Element":
        return Element(self.pres, {
            (w, p): c for (w, p), c in self.terms.items() if policy.allows(p)})

    def without_param(self, axis: str) -> "Element":
        """Set a deformation parameter to zero (drop terms carrying it)."""
        return Element(self.pres, {
            (w, p): c for (w, p), c in self.terms.items()
            if all(a != axis for a, _ in p)})

    def map_params(self, fn) -> "Element":
        """Apply ``fn(params) -> (params, Pair multiplier) | None`` termwise."""
        acc: Terms = {}
        for (word, params), c in self.terms.items():
            out = fn(params)
            if out is None:
                continue
            np_, mult = out
            _acc(acc, (word, np_), cmul(c, mult))
        return Element(self.pres, acc)


class TensorElement:
    """Sum of coefficient * (word_1 (x) ... (x) word_rank) terms."""

    __slots__ = ("pres", "rank", "terms")

    def __init__(self, pres, rank: int, terms):
        if rank not in (2, 3):
            raise ValueError("tensor rank must be 2 or 3")
        self.pres = pres
        self.rank = rank
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.pres is other.pres
                and self.rank == other.rank and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.pres), self.rank,
                     tuple(sorted(self.terms.items()))))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        acc = dict(self.terms)
        for key, pair in other.terms.items():
            _acc(acc, key, pair)
        return TensorElement(self.pres, self.rank, acc)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.pres, self.rank,
                             {k: (-r, -i) for k, (r, i) in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def _check(self, other):
        if self.pres is not other.pres or self.rank != other.rank:
            raise ValueError("tensor operands over different presentations "
                             "or ranks")

    def scaled(self, s: Scalar) -> "TensorElement":
        if s.is_zero():
            return TensorElement(self.pres, self.rank, {})
        allows = self.pres.policy.allows
        pair = s.pair()
        acc = {}
        for (words, params), c in self.terms.items():
            np_ = pmul(params, s.params)
            if not allows(np_):
                continue
            _acc(acc, (words, np_), cmul(c, pair))
        return TensorElement(self.pres, self.rank, acc)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        pres = self.pres
        allows = pres.policy.allows
        normal = pres._normal_word
        acc = {}
        for (ws1, p1), c1 in self.terms.items():
            for (ws2, p2), c2 in other.terms.items():
                base_p = pmul(p1, p2)
                if not allows(base_p):
                    continue
                base_c = cmul(c1, c2)
                legs = [normal(w1 + w2) for w1, w2 in zip(ws1, ws2)]
                for combo in itertools.product(*(leg.items() for leg in legs)):
                    params = base_p
                    coef = base_c
                    ok = True
                    for (_, p), c in combo:
                        params = pmul(params, p)
                        if not allows(params):
                            ok = False
                            break
                        coef = cmul(coef, c)
                    if not ok:
                        continue
                    key = (tuple(w for (w, _), _ in combo), params)
                    _acc(acc, key, coef)
        return TensorElement(pres, self.rank, acc)

    def commutator(self, other: "TensorElement") -> "TensorElement":
        return self * other - other * self

    def truncated(self, policy) -> "TensorElement":
        return TensorElement(self.pres, self.rank, {
            (w, p): c for (w, p), c in self.terms.items() if policy.allows(p)})

    def without_param(self, axis: str) -> "TensorElement":
        return TensorElement(self.pres, self.rank, {
            (w, p): c for (w, p), c in self.terms.items()
            if all(a != axis for a, _ in p)})

    def map_params(self, fn) -> "TensorElement":
        acc = {}
        for (words, params), c in self.terms.items():
            out = fn(params)
            if out is None:
                continue
            np_, mult = out
            _acc(acc, (words, np_), cmul(c, mult))
        return TensorElement(self.pres, self.rank, acc)

    def legs(self, key_index: int) -> Element:
        """Collapse to the Element living on one leg of a rank-2 unit tensor.

        Only valid when every other leg is the empty word; used by counit
        contractions.
        """
        acc: Terms = {}
        for (words, params), c in self.terms.items():
            for k, w in enumerate(words):
                if k != key_index and w != ():
                    raise ValueError("non-unit companion legs")
            _acc(acc, (words[key_index], params), c)
        return Element(self.pres, acc)
