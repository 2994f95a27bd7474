"""Named algebras, twists and r-matrices.

Builds, for a given truncation policy:

* ``poincare-classical`` -- the undeformed Poincare Hopf algebra;
* ``kappa-poincare``     -- the bicrossproduct kappa-deformation, with the
  boost-momentum sector expanded as a series in kinv = 1/kappa;
* ``kappa-poincare-xi``  -- coproducts/antipodes generated by conjugating
  with the canonical twist F-xi-kappa (tables are computed, not typed in);
* ``kappa-poincare-hat`` -- generated from the Lie-algebraic twist F-hat-kappa;

plus the two registered twists and both Casimir variants.  The contracted
Galilei presentations live in :mod:`twistkit.contraction`; the r-matrices and
the classical structure constants in :mod:`twistkit.liealg`.

Generator conventions: the stored Lorentz generators are M[mu,nu] with
mu < nu; the paper's boosts are M^{i0} = -M[0,i].  Helpers below accept the
paper's index order and absorb the sign.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict

from .elements import Element, TensorElement
from .generators import ETA, Generator, M, P, SPATIAL
from .hopf import HopfPresentation, TwistElement, compute_u, twisted_antipode, \
    twisted_coproduct
from .presentation import Presentation
from .scalars import Scalar, TruncationPolicy


def lorentz_mm_terms(a: int, b: int, c: int, d: int):
    """[(sign Scalar, Generator)] for [M^{ab}, M^{cd}].

    [M^{ab}, M^{cd}] = i(eta^{ad} M^{bc} - eta^{bd} M^{ac}
                        + eta^{bc} M^{ad} - eta^{ac} M^{bd}).

    The right-hand generators are read with upper indices: the mixed-index
    variant fails the Jacobi identity against the momentum sector, the
    all-upper one passes (and makes the coproduct a homomorphism).
    """
    out = []
    for eta_pair, (x, y), sgn in (
            ((a, d), (b, c), 1), ((b, d), (a, c), -1),
            ((b, c), (a, d), 1), ((a, c), (b, d), -1)):
        if eta_pair[0] != eta_pair[1]:
            continue
        eta = ETA[eta_pair[0]]
        if x == y:
            continue
        swap, gen = M(x, y)
        coeff = Scalar.imaginary(sgn * eta * swap)
        out.append((coeff, gen))
    return out


def _mgen(pres: Presentation, mu: int, nu: int) -> Element:
    """Element for the paper's M^{mu nu} (any index order)."""
    sign, g = M(mu, nu)
    return pres.gen(g, Scalar.rational(sign))


def _pvec_squared(pres: Presentation) -> Element:
    out = pres.zero()
    for i in SPATIAL:
        out = out + pres.word([P(i), P(i)])
    return out


def _boost_momentum_value(pres: Presentation, i: int, j: int,
                          deformed: bool) -> Element:
    """[M^{i0}, P_j] from the kappa-Poincare table (classical if not deformed)."""
    out = pres.zero()
    if i == j:
        if deformed:
            # kappa/2 (1 - e^{-2P0/kappa}) + (1/2kappa) Pvec^2
            bracket = pres.exp_series(P(0), Fraction(-2), "kinv",
                                      kappa_power=1, subtract_one=True)
            out = out + bracket.scaled(Scalar.imaginary(-1, 2))
            out = out + _pvec_squared(pres).scaled(
                Scalar.param("kinv", 1, 1) * Scalar.imaginary(1, 2))
        else:
            out = out + pres.gen(P(0), Scalar.imaginary(1))
    if deformed:
        out = out + pres.word([P(min(i, j)), P(max(i, j))],
                              Scalar.param("kinv", 1) * Scalar.imaginary(-1))
    return out


def _build_poincare(name: str, policy: TruncationPolicy,
                    deformed: bool) -> Presentation:
    gens = [M(a, b)[1] for a in range(4) for b in range(a + 1, 4)]
    gens += [P(mu) for mu in range(4)]
    pres = Presentation(name, gens, policy)

    mpairs = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    # Lorentz sector: table wants [later, earlier]
    for hi in range(len(mpairs)):
        for lo in range(hi):
            a, b = mpairs[hi]
            c, d = mpairs[lo]
            val = pres.zero()
            for coeff, g in lorentz_mm_terms(a, b, c, d):
                val = val + pres.gen(g, coeff)
            pres.set_commutator(Generator("M", (a, b)), Generator("M", (c, d)),
                                val)
    # momentum sector commutes
    for mu in range(4):
        for nu in range(mu):
            pres.set_commutator(P(mu), P(nu), pres.zero())
    # [P, M] = -[M, P]
    for mu in range(4):
        for (a, b) in mpairs:
            if a == 0:
                i = b
                if mu == 0:
                    # [M^{i0}, P_0] = i P_i  ->  [P_0, M^{0i}] = i P_i
                    val = pres.gen(P(i), Scalar.imaginary(1))
                else:
                    # [P_j, M^{0i}] = [M^{i0}, P_j]... sign: M^{0i} = -M^{i0}
                    val = _boost_momentum_value(pres, i, mu, deformed)
            else:
                # rotations: [M^{ij}, P_k] = i(d^j_k P_i - d^i_k P_j)
                if mu == 0:
                    val = pres.zero()
                else:
                    val = pres.zero()
                    if mu == b:
                        val = val + pres.gen(P(a), Scalar.imaginary(-1))
                    if mu == a:
                        val = val + pres.gen(P(b), Scalar.imaginary(1))
            pres.set_commutator(P(mu), Generator("M", (a, b)), val)
    return pres.freeze()


def _poincare_coproducts(pres: Presentation, deformed: bool):
    e_minus = (pres.exp_series(P(0), Fraction(-1), "kinv")
               if deformed else pres.one())
    deltas: Dict[Generator, TensorElement] = {}
    antipodes: Dict[Generator, Element] = {}
    one = pres.one()

    deltas[P(0)] = pres.tensor(pres.gen(P(0)), one) + pres.tensor(one, pres.gen(P(0)))
    antipodes[P(0)] = pres.gen(P(0), Scalar.rational(-1))
    e_plus = (pres.exp_series(P(0), Fraction(1), "kinv")
              if deformed else pres.one())
    for i in SPATIAL:
        pi = pres.gen(P(i))
        deltas[P(i)] = pres.tensor(pi, e_minus) + pres.tensor(one, pi)
        antipodes[P(i)] = -(pi * e_plus)
    for a in range(4):
        for b in range(a + 1, 4):
            g = Generator("M", (a, b))
            ge = pres.gen(g)
            if a > 0:
                # rotations are primitive and classical
                deltas[g] = pres.tensor(ge, one) + pres.tensor(one, ge)
                antipodes[g] = -ge
            else:
                i = b
                if not deformed:
                    deltas[g] = pres.tensor(ge, one) + pres.tensor(one, ge)
                    antipodes[g] = -ge
                    continue
                # Delta(M^{0i}) = M^{0i} (x) e^{-P0/k} + 1 (x) M^{0i}
                #                 + (1/k) sum_j M^{ij} (x) P_j
                d = pres.tensor(ge, e_minus) + pres.tensor(one, ge)
                for j in SPATIAL:
                    if j == i:
                        continue
                    d = d + pres.tensor(
                        _mgen(pres, i, j).scaled(Scalar.param("kinv", 1)),
                        pres.gen(P(j)))
                deltas[g] = d
                # S(M^{0i}) = (-M^{0i} + (1/k) sum_j M^{ij} P_j) e^{P0/k}
                s = -ge
                for j in SPATIAL:
                    if j == i:
                        continue
                    s = s + (_mgen(pres, i, j) * pres.gen(P(j))).scaled(
                        Scalar.param("kinv", 1))
                antipodes[g] = s * e_plus
    return deltas, antipodes


def classical_poincare(policy: TruncationPolicy) -> HopfPresentation:
    pres = _build_poincare("poincare-classical", policy, deformed=False)
    deltas, antipodes = _poincare_coproducts(pres, deformed=False)
    return HopfPresentation("poincare-classical", pres, deltas, antipodes)


def kappa_poincare(policy: TruncationPolicy) -> HopfPresentation:
    pres = _build_poincare("kappa-poincare", policy, deformed=True)
    deltas, antipodes = _poincare_coproducts(pres, deformed=True)
    return HopfPresentation("kappa-poincare", pres, deltas, antipodes)


# --------------------------------------------------------------------------
# twists

def twist_xi_kappa(h: HopfPresentation) -> TwistElement:
    """F_{xi,kappa} = exp(i kappa (xi/2) P_3 (x) (e^{-P0/kappa} - 1))."""
    pres = h.pres
    bracket = pres.exp_series(P(0), Fraction(-1), "kinv", kappa_power=1,
                              subtract_one=True)
    t = pres.tensor(pres.gen(P(3), Scalar.imaginary(1, 2) * Scalar.param("xi", 1)),
                    bracket)
    return TwistElement("F-xi-kappa", h, t)


def twist_hat_kappa(h: HopfPresentation) -> TwistElement:
    """F_{khat,kappa} = exp((i/2khat) M_12 ^ P_0), wedge = (x) - reversed."""
    pres = h.pres
    m12 = _mgen(pres, 1, 2)
    p0 = pres.gen(P(0))
    coeff = Scalar.imaginary(1, 2) * Scalar.param("khinv", 1)
    t = (pres.tensor(m12, p0) - pres.tensor(p0, m12)).scaled(coeff)
    return TwistElement("F-hat-kappa", h, t)


def flat_canonical_twist(h: HopfPresentation) -> TwistElement:
    """The kappa -> infinity twist exp(-i (xi/2) P_3 (x) P_0).

    Solves the cocycle condition for the classical coproduct only; against
    Delta_kappa it is the verify suite's negative control.
    """
    pres = h.pres
    t = pres.tensor(pres.gen(P(3), Scalar.imaginary(-1, 2) * Scalar.param("xi", 1)),
                    pres.gen(P(0)))
    return TwistElement("F-xi-flat", h, t)


def twisted_presentation(h: HopfPresentation, f: TwistElement,
                         name: str) -> HopfPresentation:
    """Same algebra, conjugated coproducts, u-conjugated antipodes."""
    pres = h.pres
    u = compute_u(h, f)
    deltas = {g: twisted_coproduct(h, f, g) for g in pres.generators}
    antipodes = {g: twisted_antipode(h, f, g, u=u) for g in pres.generators}
    return HopfPresentation(name, pres, deltas, antipodes)


# --------------------------------------------------------------------------
# Casimirs

def mass_casimir(pres: Presentation, half_argument: bool) -> Element:
    """(2 kappa sinh(P0/(2kappa)))^2 - Pvec^2 e^{P0/kappa} (half_argument=True)
    or the paper's printed variant with sinh(P0/kappa) (half_argument=False).

    Expanded via 4 kappa^2 sinh^2(x/2) = 2 kappa^2 (cosh(x) - 1) so only
    nonpositive kappa powers appear.
    """
    rate = Fraction(1) if half_argument else Fraction(2)
    # 2 kappa^2 (cosh(rate * P0/kappa) - 1)
    order = pres.policy.bound("kinv") + 2
    coeffs = []
    for n in range(order + 1):
        if n % 2 or n == 0:
            coeffs.append(None)
            continue
        coeffs.append(Scalar(Fraction(2 * rate ** n, factorial(n)), Fraction(0),
                             (("kinv", n - 2),) if n != 2 else ()))
    csh = pres.power_series(P(0), coeffs)
    return csh - _pvec_squared(pres) * pres.exp_series(P(0), Fraction(1), "kinv")


# --------------------------------------------------------------------------
# registry facade

class Registry:
    """Lazy, per-policy store of named presentations and twists."""

    def __init__(self, policy: TruncationPolicy = None):
        self.policy = policy or TruncationPolicy.default()
        self._cache: Dict[str, object] = {}

    def algebra(self, name: str) -> HopfPresentation:
        got = self._cache.get(name)
        if got is not None:
            return got
        if name == "poincare-classical":
            out = classical_poincare(self.policy)
        elif name == "kappa-poincare":
            out = kappa_poincare(self.policy)
        elif name == "kappa-poincare-xi":
            out = twisted_presentation(self.algebra("kappa-poincare"),
                                       self.twist("F-xi-kappa"), name)
        elif name == "kappa-poincare-hat":
            out = twisted_presentation(self.algebra("kappa-poincare"),
                                       self.twist("F-hat-kappa"), name)
        elif name in ("kappa-galilei", "kappa-galilei-xi", "kappa-galilei-hat"):
            from . import contraction
            out = contraction.contracted_algebra(self, name)
        else:
            raise KeyError(f"unknown algebra {name!r}")
        self._cache[name] = out
        return out

    def twist(self, name: str) -> TwistElement:
        got = self._cache.get(name)
        if got is not None:
            return got
        h = self.algebra("kappa-poincare")
        if name == "F-xi-kappa":
            out = twist_xi_kappa(h)
        elif name == "F-hat-kappa":
            out = twist_hat_kappa(h)
        elif name == "F-xi-flat":
            out = flat_canonical_twist(h)
        else:
            raise KeyError(f"unknown twist {name!r}")
        self._cache[name] = out
        return out

    ALGEBRAS = ("poincare-classical", "kappa-poincare", "kappa-poincare-xi",
                "kappa-poincare-hat", "kappa-galilei-xi", "kappa-galilei-hat")
    TWISTS = ("F-xi-kappa", "F-hat-kappa", "F-xi-flat")
