"""Sklyanin brackets on Poincare group functions and their quantization.

GroupFunction is a commutative polynomial in the 16 matrix entries
Lambda^mu_nu (symbol ("L", mu, nu)) and 4 translations a^mu (symbol
("a", mu)); the contracted Galilei group reuses the type with symbols
("R", i, j), ("v", i), ("b", i) and ("tau",).

The invariant vector fields are the paper's displays, with the metric
raising/lowering made explicit; the field attached to a basis element is
normalized by the group-algebra duality pairings (checked at identity in the
tests).  The bracket is

    {f, g} = sum_{A,B} rho^{AB} (X^R_A f X^R_B g - X^L_A f X^L_B g)

summed over the full antisymmetric component array rho of the r-matrix with
no extra prefactor: that normalization is pinned by the kappa-group table
and the xi sector of the extended group relations, both reproduced exactly.
Quantization replaces {.,.} by (1/i)[.,.], i.e. the table stores i*{f,g}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .generators import ETA, Generator
from .liealg import LieAlgebra, WedgeBivector
from .scalars import EMPTY, Pair, Params, Scalar, cmul, pmul

Symbol = Tuple
Mono = Tuple[Symbol, ...]

_ZERO = (Fraction(0), Fraction(0))


def _accum(d, key, pair):
    old = d.get(key, _ZERO)
    re, im = old[0] + pair[0], old[1] + pair[1]
    if re or im:
        d[key] = (re, im)
    else:
        d.pop(key, None)


def L(mu: int, nu: int) -> Symbol:
    return ("L", mu, nu)


def A(mu: int) -> Symbol:
    return ("a", mu)


class GroupFunction:
    """Commutative polynomial over group coordinate symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Tuple[Mono, Params], Pair]] = None):
        self.terms = terms or {}

    @staticmethod
    def symbol(sym: Symbol, scalar: Optional[Scalar] = None) -> "GroupFunction":
        s = scalar or Scalar.rational(1)
        if s.is_zero():
            return GroupFunction()
        return GroupFunction({((sym,), s.params): s.pair()})

    @staticmethod
    def constant(scalar: Scalar) -> "GroupFunction":
        if scalar.is_zero():
            return GroupFunction()
        return GroupFunction({((), scalar.params): scalar.pair()})

    @staticmethod
    def one() -> "GroupFunction":
        return GroupFunction.constant(Scalar.rational(1))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, GroupFunction) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        acc = dict(self.terms)
        for k, v in other.terms.items():
            _accum(acc, k, v)
        return GroupFunction(acc)

    def __neg__(self):
        return GroupFunction({k: (-r, -i) for k, (r, i) in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        acc: Dict = {}
        for (m1, p1), c1 in self.terms.items():
            for (m2, p2), c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                _accum(acc, (mono, pmul(p1, p2)), cmul(c1, c2))
        return GroupFunction(acc)

    def scaled(self, s: Scalar):
        if s.is_zero():
            return GroupFunction()
        acc = {}
        for (m, p), c in self.terms.items():
            _accum(acc, (m, pmul(p, s.params)), cmul(c, s.pair()))
        return GroupFunction(acc)

    def derivative(self, sym: Symbol) -> "GroupFunction":
        acc: Dict = {}
        for (mono, params), c in self.terms.items():
            n = mono.count(sym)
            if not n:
                continue
            rest = list(mono)
            rest.remove(sym)
            _accum(acc, (tuple(rest), params),
                   (c[0] * n, c[1] * n))
        return GroupFunction(acc)

    def substitute(self, images: Dict[Symbol, "GroupFunction"]) -> "GroupFunction":
        out = GroupFunction()
        for (mono, params), c in self.terms.items():
            term = GroupFunction.constant(Scalar(c[0], c[1], params))
            for sym in mono:
                img = images.get(sym)
                if img is None:
                    img = GroupFunction.symbol(sym)
                term = term * img
            out = out + term
        return out

    def map_params(self, fn) -> "GroupFunction":
        acc: Dict = {}
        for (mono, params), c in self.terms.items():
            got = fn(params)
            if got is None:
                continue
            np_, mult = got
            _accum(acc, (mono, np_), cmul(c, mult))
        return GroupFunction(acc)

    def without_param(self, axis: str) -> "GroupFunction":
        return GroupFunction({
            (m, p): c for (m, p), c in self.terms.items()
            if all(a != axis for a, _ in p)})

    def sorted_terms(self):
        return sorted(self.terms.items())


@dataclass
class InvariantVectorField:
    """First-order derivation sum_k coeff_k d/d(sym_k)."""

    label: str
    parts: Tuple[Tuple[GroupFunction, Symbol], ...]

    def __call__(self, f: GroupFunction) -> GroupFunction:
        out = GroupFunction()
        for coeff, sym in self.parts:
            out = out + coeff * f.derivative(sym)
        return out


def apply_field(x: InvariantVectorField, f: GroupFunction) -> GroupFunction:
    return x(f)


# --------------------------------------------------------------------------
# the Poincare group fields (sec. 5 displays, metric made explicit)

def _lam(mu, nu):
    return GroupFunction.symbol(L(mu, nu))


def _gf(scalar: Scalar) -> GroupFunction:
    return GroupFunction.constant(scalar)


def poincare_fields() -> Dict[Tuple[str, Tuple[int, ...]], InvariantVectorField]:
    """Left/right invariant fields keyed by (chirality, basis label indices).

    Keys: ("L"/"R", (a, b)) for the field of M^{ab} (a < b) and
    ("L"/"R", (mu,)) for the field of P_mu (label already lowered).
    """
    fields: Dict = {}
    for a in range(4):
        for b in range(a + 1, 4):
            parts_l = []
            parts_r = []
            for mu in range(4):
                # X^{ab}_L = Lam^{mu a} d/dLam^mu_b - Lam^{mu b} d/dLam^mu_a
                parts_l.append((_lam(mu, a).scaled(Scalar.rational(ETA[a])),
                                L(mu, b)))
                parts_l.append((_lam(mu, b).scaled(Scalar.rational(-ETA[b])),
                                L(mu, a)))
                # X^{ab}_R = Lam^b_nu d/dLam_{a nu} - Lam^a_nu d/dLam_{b nu} + a-part
                parts_r.append((_lam(b, mu).scaled(Scalar.rational(ETA[a])),
                                L(a, mu)))
                parts_r.append((_lam(a, mu).scaled(Scalar.rational(-ETA[b])),
                                L(b, mu)))
            parts_r.append((GroupFunction.symbol(A(b)).scaled(
                Scalar.rational(ETA[a])), A(a)))
            parts_r.append((GroupFunction.symbol(A(a)).scaled(
                Scalar.rational(-ETA[b])), A(b)))
            fields[("L", (a, b))] = InvariantVectorField(
                f"X^({a}{b})_L", tuple(parts_l))
            fields[("R", (a, b))] = InvariantVectorField(
                f"X^({a}{b})_R", tuple(parts_r))
    for mu in range(4):
        # field of P_mu (lowered label): X_{L,mu} = Lam^nu_mu d/da^nu,
        # X_{R,mu} = d/da^mu
        parts_l = tuple((_lam(nu, mu), A(nu)) for nu in range(4))
        fields[("L", (mu,))] = InvariantVectorField(f"X_({mu})_L", parts_l)
        fields[("R", (mu,))] = InvariantVectorField(
            f"X_({mu})_R", ((GroupFunction.one(), A(mu)),))
    return fields


def _field_key(g: Generator) -> Tuple[str, ...]:
    if g.family == "M":
        return g.indices
    if g.family == "P":
        return g.indices
    raise ValueError(f"no field realization for {g}")


def sklyanin_bracket(f: GroupFunction, g: GroupFunction, r: WedgeBivector,
                     fields=None) -> GroupFunction:
    """{f, g} = sum rho^{AB}(X^R_A f X^R_B g - X^L_A f X^L_B g)."""
    if fields is None:
        fields = poincare_fields()
    basis = r.algebra.basis
    out = GroupFunction()
    for arank, brank, params, pair in r.oriented():
        ga, gb = basis[arank], basis[brank]
        try:
            xra = fields[("R", _field_key(ga))]
            xrb = fields[("R", _field_key(gb))]
            xla = fields[("L", _field_key(ga))]
            xlb = fields[("L", _field_key(gb))]
        except KeyError:
            raise ValueError(f"r-matrix leg {ga}/{gb} has no registered field")
        piece = xra(f) * xrb(g) - xla(f) * xlb(g)
        out = out + piece.scaled(Scalar(pair[0], pair[1], params))
    return out


# --------------------------------------------------------------------------
# quantized tables

GROUP_GENERATORS: Tuple[Symbol, ...] = tuple(
    [L(mu, nu) for mu in range(4) for nu in range(4)] +
    [A(mu) for mu in range(4)])


@dataclass
class CommutatorTable:
    """[x, y] = i {x, y} for all generator pairs; antisymmetric by build."""

    entries: Dict[Tuple[Symbol, Symbol], GroupFunction]

    def get(self, x: Symbol, y: Symbol) -> GroupFunction:
        got = self.entries.get((x, y))
        if got is not None:
            return got
        rev = self.entries.get((y, x))
        if rev is not None:
            return -rev
        return GroupFunction()


def quantize_bracket_table(r: WedgeBivector, fields=None,
                           generators=GROUP_GENERATORS) -> CommutatorTable:
    if fields is None:
        fields = poincare_fields()
    i_unit = Scalar.imaginary(1)
    entries = {}
    for n, x in enumerate(generators):
        for y in generators[n + 1:]:
            fx = GroupFunction.symbol(x)
            fy = GroupFunction.symbol(y)
            entries[(x, y)] = sklyanin_bracket(fx, fy, r, fields).scaled(i_unit)
    return CommutatorTable(entries)


# --------------------------------------------------------------------------
# orthogonality reduction

def reduce_orthogonality(f: GroupFunction) -> GroupFunction:
    """Normal form modulo Lambda^T eta Lambda = eta and Lambda eta Lambda^T = eta.

    Rewrites, to a fixed point, any product of two row-0 entries
    Lam^0_al Lam^0_be -> sum_i Lam^i_al Lam^i_be - eta_{al be} and any
    product of two column-0 entries Lam^al_0 Lam^be_0 ->
    sum_i Lam^al_i Lam^be_i - eta^{al be}.  Each step removes two 0-indexed
    entries, so the rewriting terminates; confluence of the fixed scan order
    is exercised by tests.
    """
    work = dict(f.terms)
    out: Dict = {}
    guard = 0
    while work:
        guard += 1
        if guard > 100000:
            raise RuntimeError("orthogonality reduction did not terminate")
        (mono, params), pair = work.popitem()
        red = _reduce_step(mono)
        if red is None:
            _accum(out, (mono, params), pair)
            continue
        for factor, mono2 in red:
            _accum(work, (mono2, params), (pair[0] * factor, pair[1] * factor))
    return GroupFunction(out)


def _reduce_step(mono: Mono):
    row0 = [k for k, s in enumerate(mono) if s[0] == "L" and s[1] == 0]
    if len(row0) >= 2:
        k1, k2 = row0[0], row0[1]
        al, be = mono[k1][2], mono[k2][2]
        rest = tuple(s for k, s in enumerate(mono) if k not in (k1, k2))
        outs = []
        for i in (1, 2, 3):
            outs.append((Fraction(1), tuple(sorted(rest + (L(i, al), L(i, be))))))
        eta = Fraction(-1) if al == be == 0 else (
            Fraction(1) if al == be else Fraction(0))
        if eta:
            outs.append((-eta, rest))
        return outs
    col0 = [k for k, s in enumerate(mono) if s[0] == "L" and s[2] == 0]
    if len(col0) >= 2:
        k1, k2 = col0[0], col0[1]
        al, be = mono[k1][1], mono[k2][1]
        rest = tuple(s for k, s in enumerate(mono) if k not in (k1, k2))
        outs = []
        for i in (1, 2, 3):
            outs.append((Fraction(1), tuple(sorted(rest + (L(al, i), L(be, i))))))
        eta = Fraction(-1) if al == be == 0 else (
            Fraction(1) if al == be else Fraction(0))
        if eta:
            outs.append((-eta, rest))
        return outs
    return None


def reduced_equal(f: GroupFunction, g: GroupFunction) -> bool:
    return reduce_orthogonality(f - g).is_zero()
