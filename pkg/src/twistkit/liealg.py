"""Wedge algebra over the classical Poincare Lie algebra; Schouten brackets.

Bivectors and trivectors are stored by canonical component: a WedgeBivector
holds w[(A, B)] coefficients with basis ranks A < B meaning
sum w^{AB} T_A ^ T_B with a ^ b = a (x) b - b (x) a (the paper's
normalization, no 1/2), and similarly for trivectors with the six-term
antisymmetrized wedge.

The Schouten bracket [[r, s]] is computed two independent ways: by embedding
leg placements r_12, s_13, ... into the rank-3 tensor algebra over the
classical presentation and commuting there, and by direct structure-constant
contraction.  Both must agree exactly; the first is the published route, the
second its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .elements import TensorElement
from .generators import ETA, Generator, M, P
from .hopf import HopfPresentation
from .presentation import Presentation
from .scalars import EMPTY, Pair, Params, Scalar, cmul, pmul

_ZERO = (Fraction(0), Fraction(0))


def _accum(d, key, pair):
    old = d.get(key, _ZERO)
    re, im = old[0] + pair[0], old[1] + pair[1]
    if re or im:
        d[key] = (re, im)
    else:
        d.pop(key, None)


class LieAlgebra:
    """Basis labels plus exact structure constants, Jacobi-checked at load."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.basis = pres.generators
        self.dim = len(self.basis)
        # f[(a, b)] -> list of (c, pair, params); a > b, antisymmetric fill
        self._f: Dict[Tuple[int, int], List] = {}
        for a in range(self.dim):
            for b in range(a):
                entry = []
                val = pres.commutator_entry(self.basis[a], self.basis[b])
                for (word, params), pair in val.terms.items():
                    if len(word) != 1:
                        raise ValueError(
                            "structure constants need a linear bracket; "
                            f"[{self.basis[a]},{self.basis[b]}] is not")
                    entry.append((word[0], pair, params))
                self._f[(a, b)] = entry
        self._check_jacobi()

    def bracket(self, a: int, b: int) -> List:
        if a == b:
            return []
        if a > b:
            return self._f[(a, b)]
        return [(c, (-p[0], -p[1]), q) for c, p, q in self._f[(b, a)]]

    def _check_jacobi(self):
        for a in range(self.dim):
            for b in range(a):
                for c in range(b):
                    acc: Dict = {}
                    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                        for e, pair, params in self.bracket(y, z):
                            for g, pair2, params2 in self.bracket(x, e):
                                _accum(acc, (g, pmul(params, params2)),
                                       cmul(pair, pair2))
                    if acc:
                        raise ValueError(
                            f"structure constants fail Jacobi on basis triple "
                            f"({self.basis[a]}, {self.basis[b]}, {self.basis[c]})")


@dataclass
class WedgeBivector:
    """Antisymmetric coefficients over canonical basis pairs A < B."""

    algebra: LieAlgebra
    comps: Dict[Tuple[int, int, Params], Pair]

    @staticmethod
    def build(algebra: LieAlgebra, entries) -> "WedgeBivector":
        comps: Dict = {}
        for a, b, scalar in entries:
            if scalar.is_zero():
                continue
            if a == b:
                continue
            if a < b:
                _accum(comps, (a, b, scalar.params), scalar.pair())
            else:
                _accum(comps, (b, a, scalar.params), (-scalar.re, -scalar.im))
        return WedgeBivector(algebra, comps)

    def is_zero(self) -> bool:
        return not self.comps

    def __add__(self, other: "WedgeBivector") -> "WedgeBivector":
        if other.algebra is not self.algebra:
            raise ValueError("bivectors over different algebras")
        acc = dict(self.comps)
        for k, v in other.comps.items():
            _accum(acc, k, v)
        return WedgeBivector(self.algebra, acc)

    def scaled(self, s: Scalar) -> "WedgeBivector":
        acc = {}
        for (a, b, params), pair in self.comps.items():
            _accum(acc, (a, b, pmul(params, s.params)), cmul(pair, s.pair()))
        return WedgeBivector(self.algebra, acc)

    def oriented(self):
        """Yield (A, B, params, pair) over both orientations."""
        for (a, b, params), pair in self.comps.items():
            yield a, b, params, pair
            yield b, a, params, (-pair[0], -pair[1])

    def as_tensor(self) -> TensorElement:
        pres = self.algebra.pres
        acc = {}
        for a, b, params, pair in self.oriented():
            _accum(acc, (((a,), (b,)), params), pair)
        return TensorElement(pres, 2, acc)


@dataclass
class WedgeTrivector:
    """Totally antisymmetric coefficients over triples A < B < C."""

    algebra: LieAlgebra
    comps: Dict[Tuple[int, int, int, Params], Pair]

    def is_zero(self) -> bool:
        return not self.comps

    def __sub__(self, other: "WedgeTrivector") -> "WedgeTrivector":
        if other.algebra is not self.algebra:
            raise ValueError("trivectors over different algebras")
        acc = dict(self.comps)
        for k, (re, im) in other.comps.items():
            _accum(acc, k, (-re, -im))
        return WedgeTrivector(self.algebra, acc)

    @staticmethod
    def build(algebra: LieAlgebra, entries) -> "WedgeTrivector":
        comps: Dict = {}
        for a, b, c, scalar in entries:
            ranks = (a, b, c)
            if len(set(ranks)) != 3:
                continue
            order = tuple(sorted(ranks))
            sgn = _perm_sign(ranks)
            pair = (sgn * scalar.re, sgn * scalar.im)
            _accum(comps, order + (scalar.params,), pair)
        return WedgeTrivector(algebra, comps)


def _perm_sign(t) -> int:
    sgn = 1
    lst = list(t)
    for i in range(len(lst)):
        for j in range(i + 1, len(lst)):
            if lst[i] > lst[j]:
                sgn = -sgn
    return sgn


def _tensor_to_trivector(algebra: LieAlgebra, t: TensorElement,
                         require_antisymmetric: bool = True) -> WedgeTrivector:
    """Read a rank-3 tensor with single-letter legs as Lambda^3 components."""
    raw: Dict[Tuple[int, int, int, Params], Pair] = {}
    for (ws, params), pair in t.terms.items():
        ranks = []
        for w in ws:
            if len(w) != 1:
                raise ValueError("trivector legs must be single letters")
            ranks.append(w[0])
        _accum(raw, (ranks[0], ranks[1], ranks[2], params), pair)
    comps: Dict = {}
    for (a, b, c, params), pair in raw.items():
        if a < b < c:
            comps[(a, b, c, params)] = pair
    if require_antisymmetric:
        for (a, b, c, params), pair in raw.items():
            order = tuple(sorted((a, b, c)))
            if len({a, b, c}) != 3:
                raise ValueError("trivector with repeated legs")
            sgn = _perm_sign((a, b, c))
            want = comps.get(order + (params,), _ZERO)
            if (sgn * want[0], sgn * want[1]) != pair:
                raise ValueError("Schouten output is not totally antisymmetric")
    return WedgeTrivector(algebra, comps)


# --------------------------------------------------------------------------
# Schouten bracket, two routes

_PLACEMENTS = ((0, 1), (0, 2), (1, 2))


def _leg_embed(t: TensorElement, legs: Tuple[int, int]) -> TensorElement:
    out = {}
    for (ws, params), pair in t.terms.items():
        words = [(), (), ()]
        words[legs[0]] = ws[0]
        words[legs[1]] = ws[1]
        _accum(out, (tuple(words), params), pair)
    return TensorElement(t.pres, 3, out)


def schouten(r1: WedgeBivector, r2: WedgeBivector) -> WedgeTrivector:
    """[[r1, r2]]: graded-symmetric Schouten bracket valued in Lambda^3.

    Normalization: the bilinear extension
    [[r, s]] = [r12, s13] + [r12, s23] + [r13, s23] + (r <-> s),
    over *real* structure constants ([T,T] = i f T, the bracket contracts f).
    This is the unique choice under which the kappa r-matrix satisfies the
    modified Yang-Baxter identity exactly as displayed,
    [[r_k, r_k]] = (1/kappa^2) M_{mu nu} ^ P^mu ^ P^nu; the paper's
    *definitional* display (no r <-> s sum) is half of this on the diagonal.
    """
    if r1.algebra is not r2.algebra:
        raise ValueError("bivectors over different algebras")
    algebra = r1.algebra
    t1 = r1.as_tensor()
    t2 = r2.as_tensor()
    acc = None

    def add(t):
        nonlocal acc
        acc = t if acc is None else acc + t

    for x, y in ((t1, t2), (t2, t1)):
        x12 = _leg_embed(x, _PLACEMENTS[0])
        x13 = _leg_embed(x, _PLACEMENTS[1])
        y13 = _leg_embed(y, _PLACEMENTS[1])
        y23 = _leg_embed(y, _PLACEMENTS[2])
        add(x12.commutator(y13))
        add(x12.commutator(y23))
        add(x13.commutator(y23))
    # divide by i: commutators carry i * (real structure constants)
    return _tensor_to_trivector(algebra, acc.scaled(Scalar.imaginary(-1)))


def schouten_components(r1: WedgeBivector, r2: WedgeBivector) -> WedgeTrivector:
    """Structure-constant contraction oracle for the Schouten bracket.

    Same normalization as :func:`schouten`; assembled as a raw rank-3
    coefficient array and reduced to canonical components, with the total
    antisymmetry of the raw array verified on the way.
    """
    if r1.algebra is not r2.algebra:
        raise ValueError("bivectors over different algebras")
    algebra = r1.algebra
    raw: Dict[Tuple[int, int, int, Params], Pair] = {}
    minus_i = (Fraction(0), Fraction(-1))

    def put(a, b, c, pair, params):
        _accum(raw, (a, b, c, params), cmul(pair, minus_i))

    def contract(x: WedgeBivector, y: WedgeBivector):
        for a, b, pa, ca in x.oriented():
            for c, d, pb, cb in y.oriented():
                base_p = pmul(pa, pb)
                base_c = cmul(ca, cb)
                for e, fpair, fparams in algebra.bracket(a, c):
                    put(e, b, d, cmul(base_c, fpair), pmul(base_p, fparams))
                for e, fpair, fparams in algebra.bracket(b, c):
                    put(a, e, d, cmul(base_c, fpair), pmul(base_p, fparams))
                for e, fpair, fparams in algebra.bracket(b, d):
                    put(a, c, e, cmul(base_c, fpair), pmul(base_p, fparams))

    contract(r1, r2)
    contract(r2, r1)
    comps: Dict = {}
    for (a, b, c, params), pair in raw.items():
        if len({a, b, c}) != 3:
            raise ValueError("Schouten component with repeated legs")
        if a < b < c:
            comps[(a, b, c, params)] = pair
    for (a, b, c, params), pair in raw.items():
        order = tuple(sorted((a, b, c)))
        sgn = _perm_sign((a, b, c))
        want = comps.get(order + (params,), _ZERO)
        if (sgn * want[0], sgn * want[1]) != pair:
            raise ValueError("component-route output is not antisymmetric")
    return WedgeTrivector(algebra, comps)


def _scalar(pair: Pair, fpair: Pair, params: Params) -> Scalar:
    re, im = cmul(pair, fpair)
    return Scalar(re, im, params)


# --------------------------------------------------------------------------
# Yang-Baxter checks

@dataclass
class YBEResult:
    name: str
    passed: bool
    residual: WedgeTrivector


def check_cybe(r: WedgeBivector, name: str = "cybe") -> YBEResult:
    res = schouten(r, r)
    return YBEResult(name, res.is_zero(), res)


def check_mybe(r: WedgeBivector, rhs: WedgeTrivector,
               name: str = "mybe") -> YBEResult:
    res = schouten(r, r) - rhs
    return YBEResult(name, res.is_zero(), res)


# --------------------------------------------------------------------------
# the paper's r-matrices over the classical algebra

def classical_lie_algebra(classical: HopfPresentation) -> LieAlgebra:
    return LieAlgebra(classical.pres)


def _rank(alg: LieAlgebra, g: Generator) -> int:
    return alg.pres.rank(g)


def r_kappa(alg: LieAlgebra) -> WedgeBivector:
    """r_kappa from its component form, cross-checked against (1/k) M_{0mu}^P^mu.

    r^{mu nu; alpha} = (1/2kappa)(d^mu_0 eta^{nu alpha} - d^nu_0 eta^{mu alpha}),
    summed against M_{mu nu} ^ P_alpha with metric lowering of the M legs.
    """
    entries = []
    kinv = Scalar.param("kinv", 1)
    for mu in range(4):
        for nu in range(4):
            if mu == nu:
                continue
            for alpha in range(4):
                coeff = Fraction(0)
                if mu == 0 and nu == alpha:
                    coeff += Fraction(1, 2) * ETA[nu]
                if nu == 0 and mu == alpha:
                    coeff -= Fraction(1, 2) * ETA[mu]
                if not coeff:
                    continue
                swap, gen = M(mu, nu)
                lowered = ETA[mu] * ETA[nu] * swap
                s = Scalar.rational(coeff * lowered) * kinv
                entries.append((_rank(alg, gen), _rank(alg, P(alpha)), s))
    r = WedgeBivector.build(alg, entries)
    expect = WedgeBivector.build(alg, [
        (_rank(alg, M(0, i)[1]), _rank(alg, P(i)),
         Scalar.param("kinv", 1, -1)) for i in (1, 2, 3)])
    if (r + expect.scaled(Scalar.rational(-1))).comps:
        raise AssertionError(
            "r_kappa component form does not re-sum to (1/kappa) M_{0mu} ^ P^mu")
    return r


def r_hat(alg: LieAlgebra) -> WedgeBivector:
    """r_khat = (1/2khat) M_12 ^ P_0."""
    s = Scalar.param("khinv", 1, Fraction(1, 2))
    return WedgeBivector.build(
        alg, [(_rank(alg, M(1, 2)[1]), _rank(alg, P(0)), s)])


def r_xi(alg: LieAlgebra) -> WedgeBivector:
    """r_xi = (xi/2) P_3 ^ P_0."""
    s = Scalar.param("xi", 1, Fraction(1, 2))
    return WedgeBivector.build(
        alg, [(_rank(alg, P(3)), _rank(alg, P(0)), s)])


def mybe_rhs(alg: LieAlgebra) -> WedgeTrivector:
    """(1/kappa^2) M_{mu nu} ^ P^mu ^ P^nu = 2/kappa^2 sum_{a<b} M^{ab}^P_a^P_b."""
    entries = []
    s = Scalar.param("kinv", 2, 2)
    for a in range(4):
        for b in range(a + 1, 4):
            entries.append((_rank(alg, M(a, b)[1]), _rank(alg, P(a)),
                            _rank(alg, P(b)), s))
    return WedgeTrivector.build(alg, entries)
