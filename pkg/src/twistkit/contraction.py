"""Inonu-Wigner nonrelativistic contraction: rescale, expand, take c -> oo.

Algebra side: P_0 = Pi_0/c, P_i = Pi_i, M_ij = K_ij, M_i0 = c V_i, with
kappa = kbar/c, xi = xibar*c, khat = khbar/c.  Every table entry is rewritten
over the Galilei alphabet with explicit integer powers of c, and the limit
keeps the c^0 part; a surviving positive power is always an error
(DivergentLimit), never a warning.

Group side: the boost block of Lambda is parametrized by (R, v) with the
binomial series for (1 + vbar^2/c^2)^{1/2} expanded to the minimal order the
entry needs (determined by counting the positive c-powers first), and
a^0 = c*tau, a^i = b^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .elements import Element, TensorElement
from .generators import Generator, K, M, P, Pi, SPATIAL, V
from .hopf import HopfPresentation
from .poisson import A, CommutatorTable, GroupFunction, L
from .presentation import Presentation, PresentationError
from .scalars import (EMPTY, Pair, Params, Scalar, TruncationPolicy,
                      binomial_half_coeffs, cmul, pmul)


class DivergentLimit(PresentationError):
    """Positive powers of c survive the would-be limit."""

    def __init__(self, what: str, offenders):
        self.offenders = offenders
        super().__init__(f"divergent contraction limit in {what}: "
                         f"{len(offenders)} term(s) carry positive powers of c")


def _c_exponent(params: Params) -> int:
    for axis, exp in params:
        if axis == "c":
            return exp
    return 0


def _drop_c(params: Params) -> Params:
    return tuple((a, e) for a, e in params if a != "c")


def take_c_limit_terms(terms, what: str):
    """Keep c^0 terms, drop c^{<0}, raise on c^{>0}."""
    offenders = [k for k in terms if _c_exponent(k[1]) > 0]
    if offenders:
        raise DivergentLimit(what, offenders)
    return {(key[0], _drop_c(key[1])): pair
            for key, pair in terms.items() if _c_exponent(key[1]) == 0}


# --------------------------------------------------------------------------
# algebra-side contraction

@dataclass
class ContractionSpec:
    """Generator and parameter rescalings from a source to a target algebra."""

    name: str
    source: Presentation
    target: Presentation
    gen_map: Dict[Generator, Element]          # source generator images
    scale_map: Dict[Generator, Scalar]         # target g = scale * source g
    src_of: Dict[Generator, Generator]         # target generator -> source
    param_map: Dict[str, Scalar]               # axis -> target Scalar image


def galilei_presentation(policy: TruncationPolicy,
                         name: str = "kappa-galilei") -> Presentation:
    gens = [K(i, j)[1] for i in SPATIAL for j in SPATIAL if i < j]
    gens += [V(i) for i in SPATIAL]
    gens += [Pi(mu) for mu in range(4)]
    return Presentation(name, gens, policy)


def poincare_to_galilei(source: Presentation,
                        target: Presentation) -> ContractionSpec:
    """The standard redefinition P0 = Pi0/c, Pi = Pii, Mij = Kij, Mi0 = cVi."""
    c = Scalar.param("c", 1)
    cinv = Scalar.param("c", -1)
    gen_map: Dict[Generator, Element] = {}
    scale_map: Dict[Generator, Scalar] = {}
    src_of: Dict[Generator, Generator] = {}

    gen_map[P(0)] = target.gen(Pi(0), cinv)
    scale_map[Pi(0)] = c
    src_of[Pi(0)] = P(0)
    for i in SPATIAL:
        gen_map[P(i)] = target.gen(Pi(i))
        scale_map[Pi(i)] = Scalar.rational(1)
        src_of[Pi(i)] = P(i)
        # M^{0i} = -M^{i0} = -c V_i
        gen_map[M(0, i)[1]] = target.gen(V(i), -c)
        scale_map[V(i)] = -cinv
        src_of[V(i)] = M(0, i)[1]
    for i in SPATIAL:
        for j in SPATIAL:
            if i < j:
                gen_map[M(i, j)[1]] = target.gen(K(i, j)[1])
                scale_map[K(i, j)[1]] = Scalar.rational(1)
                src_of[K(i, j)[1]] = M(i, j)[1]

    param_map = {
        "kinv": Scalar.param("c", 1) * Scalar.param("kbar_inv", 1),
        "khinv": Scalar.param("c", 1) * Scalar.param("khbar_inv", 1),
        "xi": Scalar.param("c", 1) * Scalar.param("xibar", 1),
    }
    return ContractionSpec("poincare->galilei", source, target, gen_map,
                           scale_map, src_of, param_map)


def contract_expression(e: Element, spec: ContractionSpec,
                        what: str = "expression",
                        scale: Optional[Scalar] = None) -> Element:
    """Substitute, expand, then take the c -> oo limit of ``scale * e``."""
    img = spec.source.substitute(e, spec.gen_map, spec.target,
                                 param_map=spec.param_map)
    if scale is not None:
        img = img.scaled(scale)
    return Element(spec.target, take_c_limit_terms(img.terms, what))


def _contract_tensor(t: TensorElement, spec: ContractionSpec, what: str,
                     scale: Optional[Scalar] = None) -> TensorElement:
    target = spec.target
    acc: Dict = {}
    allows = target.policy.allows
    for (ws, params), pair in t.terms.items():
        base = Scalar(pair[0], pair[1])
        for axis, exp in params:
            image = spec.param_map.get(axis)
            if image is None:
                base = base * Scalar.param(axis, exp)
            else:
                if exp < 0:
                    raise PresentationError(
                        f"negative source power of {axis} in contraction")
                for _ in range(exp):
                    base = base * image
        if scale is not None:
            base = base * scale
        legs = []
        for w in ws:
            leg = target.one()
            for r in w:
                leg = leg * spec.gen_map[spec.source.generators[r]]
            legs.append(leg)
        for combo_key, combo_pair in target.tensor(*legs).terms.items():
            p = pmul(combo_key[1], base.params)
            _acc_pair = cmul(combo_pair, base.pair())
            if not allows(_drop_c(p)):
                continue
            key = (combo_key[0], p)
            old = acc.get(key)
            if old is None:
                acc[key] = _acc_pair
            else:
                s = (old[0] + _acc_pair[0], old[1] + _acc_pair[1])
                if s[0] or s[1]:
                    acc[key] = s
                else:
                    del acc[key]
    return TensorElement(target, t.rank, take_c_limit_terms(acc, what))


def contract_commutators(spec: ContractionSpec) -> Presentation:
    """Fill the target commutation table by contracting the source's."""
    target = spec.target
    src = spec.source
    n = len(target.generators)
    for hi in range(n):
        for lo in range(hi):
            thi, tlo = target.generators[hi], target.generators[lo]
            shi, slo = spec.src_of[thi], spec.src_of[tlo]
            scale = spec.scale_map[thi] * spec.scale_map[tlo]
            entry = contract_expression(
                src.commutator_entry(shi, slo), spec,
                what=f"[{thi.label()},{tlo.label()}]", scale=scale)
            target.set_commutator(thi, tlo, entry)
    return target.freeze()


def contract_presentation(h: HopfPresentation, spec: ContractionSpec,
                          name: str) -> HopfPresentation:
    """Contract commutation, coproduct and antipode tables entrywise.

    The target presentation may be shared between contractions of different
    twisted sources (the algebra sector is twist-independent); its table is
    filled on first use.
    """
    if h.pres is not spec.source:
        raise PresentationError("contraction spec does not match the source")
    if not spec.target._frozen:
        contract_commutators(spec)
    target = spec.target
    deltas = {}
    antipodes = {}
    for tg in target.generators:
        sg = spec.src_of[tg]
        scale = spec.scale_map[tg]
        deltas[tg] = _contract_tensor(h.coproduct_of(sg), spec,
                                      what=f"Delta({tg.label()})", scale=scale)
        antipodes[tg] = contract_expression(h.antipode_of(sg), spec,
                                            what=f"S({tg.label()})",
                                            scale=scale)
    return HopfPresentation(name, target, deltas, antipodes)


def galilei_target(reg) -> Presentation:
    """The shared Galilei presentation of a registry (tables contracted
    once from the kappa-Poincare algebra sector)."""
    got = reg._cache.get("__galilei-pres__")
    if got is not None:
        return got
    target = galilei_presentation(reg.policy, "kappa-galilei")
    spec = poincare_to_galilei(reg.algebra("kappa-poincare").pres, target)
    contract_commutators(spec)
    reg._cache["__galilei-pres__"] = target
    return target


def contracted_algebra(reg, name: str) -> HopfPresentation:
    """Registry hook: the contracted Galilei presentations."""
    sources = {
        "kappa-galilei": "kappa-poincare",
        "kappa-galilei-xi": "kappa-poincare-xi",
        "kappa-galilei-hat": "kappa-poincare-hat",
    }
    try:
        src_name = sources[name]
    except KeyError:
        raise KeyError(f"unknown contracted algebra {name!r}")
    src = reg.algebra(src_name)
    spec = poincare_to_galilei(src.pres, galilei_target(reg))
    return contract_presentation(src, spec, name)


# --------------------------------------------------------------------------
# group-side contraction

def R(i: int, j: int):
    return ("R", i, j)


def v(i: int):
    return ("v", i)


def b(i: int):
    return ("b", i)


TAU = ("tau",)

GALILEI_GROUP_GENERATORS = tuple(
    [R(i, j) for i in SPATIAL for j in SPATIAL] +
    [v(i) for i in SPATIAL] + [TAU] + [b(i) for i in SPATIAL])


def _vbar_squared() -> GroupFunction:
    out = GroupFunction()
    for i in SPATIAL:
        out = out + GroupFunction.symbol(v(i)) * GroupFunction.symbol(v(i))
    return out


def _sqrt_series(order: int) -> GroupFunction:
    """(1 + vbar^2/c^2)^{1/2} to the given order in c^{-2}."""
    coeffs = binomial_half_coeffs(order)
    out = GroupFunction()
    v2 = _vbar_squared()
    power = GroupFunction.one()
    for k, ck in enumerate(coeffs):
        if k:
            power = power * v2
        out = out + power.scaled(Scalar(ck, Fraction(0), (("c", -2 * k),)))
    return out


def lambda_parametrization(order: int) -> Dict:
    """Images of Lambda^mu_nu and a^mu over the Galilei group symbols."""
    images: Dict = {}
    sq = _sqrt_series(order)
    cinv = Scalar.param("c", -1)
    images[L(0, 0)] = sq
    for i in SPATIAL:
        images[L(i, 0)] = GroupFunction.symbol(v(i), cinv)
        col = GroupFunction()
        for k in SPATIAL:
            col = col + (GroupFunction.symbol(v(k)) *
                         GroupFunction.symbol(R(k, i))).scaled(cinv)
        images[L(0, i)] = col
    # Lambda^k_i = (delta^k_l + (sq - 1) v^k v^l / vbar^2) R^l_i;
    # (sq - 1)/vbar^2 is itself a clean series in c^{-2}
    ratio = GroupFunction()
    coeffs = binomial_half_coeffs(order)
    v2 = _vbar_squared()
    power = GroupFunction.one()
    for k in range(1, order + 1):
        if k > 1:
            power = power * v2
        ratio = ratio + power.scaled(Scalar(coeffs[k], Fraction(0),
                                            (("c", -2 * k),)))
    for k in SPATIAL:
        for i in SPATIAL:
            img = GroupFunction.symbol(R(k, i))
            for l in SPATIAL:
                img = img + ratio * GroupFunction.symbol(v(k)) * \
                    GroupFunction.symbol(v(l)) * GroupFunction.symbol(R(l, i))
            images[L(k, i)] = img
    images[A(0)] = GroupFunction.symbol(TAU, Scalar.param("c", 1))
    for i in SPATIAL:
        images[A(i)] = GroupFunction.symbol(b(i))
    return images


#: Galilei generator -> (leading Lambda/a symbol, scale with target = scale*source)
GROUP_SCALE = {}
for _i in SPATIAL:
    for _j in SPATIAL:
        GROUP_SCALE[R(_i, _j)] = (L(_i, _j), Scalar.rational(1))
    GROUP_SCALE[v(_i)] = (L(_i, 0), Scalar.param("c", 1))
    GROUP_SCALE[b(_i)] = (A(_i), Scalar.rational(1))
GROUP_SCALE[TAU] = (A(0), Scalar.param("c", -1))


def _group_param_sub(params: Params, param_map: Dict[str, Scalar]) -> Scalar:
    base = Scalar.rational(1)
    for axis, exp in params:
        image = param_map.get(axis)
        if image is None:
            base = base * Scalar.param(axis, exp)
        else:
            for _ in range(exp):
                base = base * image
    return base


def reduce_r_orthogonality(f: GroupFunction) -> GroupFunction:
    """Normal form modulo R R^T = R^T R = 1 (the contracted Lorentz
    orthogonality).  Row pairs R^i_3 R^j_3 rewrite to
    d^{ij} - R^i_1 R^j_1 - R^i_2 R^j_2 and column pairs R^3_i R^3_j
    analogously; each step removes two 3-indexed entries, so it terminates.
    """
    work = dict(f.terms)
    out: Dict = {}
    guard = 0
    while work:
        guard += 1
        if guard > 200000:
            raise RuntimeError("R-orthogonality reduction did not terminate")
        (mono, params), pair = work.popitem()
        red = _r_reduce_step(mono)
        if red is None:
            _accum_gf(out, (mono, params), pair)
            continue
        for factor, mono2 in red:
            _accum_gf(work, (mono2, params),
                      (pair[0] * factor, pair[1] * factor))
    return GroupFunction(out)


def _accum_gf(d, key, pair):
    old = d.get(key)
    if old is None:
        if pair[0] or pair[1]:
            d[key] = pair
        return
    s = (old[0] + pair[0], old[1] + pair[1])
    if s[0] or s[1]:
        d[key] = s
    else:
        del d[key]


def _r_reduce_step(mono):
    col3 = [k for k, s in enumerate(mono) if s[0] == "R" and s[2] == 3]
    if len(col3) >= 2:
        k1, k2 = col3[0], col3[1]
        i, j = mono[k1][1], mono[k2][1]
        rest = tuple(s for k, s in enumerate(mono) if k not in (k1, k2))
        outs = [(Fraction(-1), tuple(sorted(rest + (R(i, m), R(j, m)))))
                for m in (1, 2)]
        if i == j:
            outs.append((Fraction(1), rest))
        return outs
    row3 = [k for k, s in enumerate(mono) if s[0] == "R" and s[1] == 3]
    if len(row3) >= 2:
        k1, k2 = row3[0], row3[1]
        i, j = mono[k1][2], mono[k2][2]
        rest = tuple(s for k, s in enumerate(mono) if k not in (k1, k2))
        outs = [(Fraction(-1), tuple(sorted(rest + (R(m, i), R(m, j)))))
                for m in (1, 2)]
        if i == j:
            outs.append((Fraction(1), rest))
        return outs
    return None


def contract_group_function(f: GroupFunction, param_map: Dict[str, Scalar],
                            what: str, scale: Optional[Scalar] = None,
                            images: Optional[Dict] = None) -> GroupFunction:
    """Parametrize, rescale parameters, expand the sqrt, take the limit.

    The binomial order is found by a dry pass with the sqrt replaced by 1
    (every other image carries its exact c-power), then the real pass uses
    order = max positive c-exponent / 2 + 1.  Positive powers of c cancel
    only modulo the contracted orthogonality R R^T = 1 (the pre-limit entry
    presupposes Lambda in the Lorentz group), so the substituted value is
    reduced before the limit is asserted.
    """
    dry = f.substitute(images or lambda_parametrization(0))

    # fold parameter rescalings in, tracking c-powers
    def fold(g: GroupFunction) -> GroupFunction:
        acc = GroupFunction()
        for (mono, params), pair in g.terms.items():
            s = _group_param_sub(params, param_map)
            acc = acc + GroupFunction({(mono, EMPTY): pair}).scaled(s)
        return acc

    maxpos = 0
    for (_, params) in fold(dry).terms:
        maxpos = max(maxpos, _c_exponent(params))
    order = maxpos // 2 + 1
    full = fold(f.substitute(lambda_parametrization(order)))
    if scale is not None:
        full = full.scaled(scale)
    full = reduce_r_orthogonality(full)
    return GroupFunction(take_c_limit_terms(full.terms, what))


def contract_group_table(table: CommutatorTable, param_map: Dict[str, Scalar],
                         generators=GALILEI_GROUP_GENERATORS) -> CommutatorTable:
    """Galilei-group commutator table from the Poincare-group one.

    Each target entry is the limit of the substituted source entry for the
    leading Lambda/a symbols; the parametrization's subleading corrections
    enter commutators at O(c^{-1}) and drop out of the limit (exercised by a
    dedicated test).
    """
    entries = {}
    for n, x in enumerate(generators):
        for y in generators[n + 1:]:
            sx, scx = GROUP_SCALE[x]
            sy, scy = GROUP_SCALE[y]
            val = table.get(sx, sy)
            entries[(x, y)] = contract_group_function(
                val, param_map, what=f"[{x},{y}]", scale=scx * scy)
    return CommutatorTable(entries)


def contract_group_tensor(pairs: List[Tuple[GroupFunction, GroupFunction]],
                          param_map: Dict[str, Scalar], what: str,
                          scale: Optional[Scalar] = None):
    """Contract a sum of two-leg group tensors factorwise.

    The c-limit must see the *combined* power of both legs, so legs are
    tagged and the limit is taken on the product bookkeeping.
    """
    # expand each leg fully, combine c-powers across legs, then limit
    acc: Dict = {}
    for left, right in pairs:
        lc = contract_group_leg(left, param_map)
        rc = contract_group_leg(right, param_map)
        for (ml, pl), cl in lc.terms.items():
            for (mr, pr), cr in rc.terms.items():
                key = ((ml, mr), pmul(pl, pr))
                pair = cmul(cl, cr)
                old = acc.get(key)
                if old is None:
                    acc[key] = pair
                else:
                    s = (old[0] + pair[0], old[1] + pair[1])
                    if s[0] or s[1]:
                        acc[key] = s
                    else:
                        del acc[key]
    if scale is not None:
        acc = {(m, pmul(p, scale.params)): cmul(c, scale.pair())
               for (m, p), c in acc.items()}
    return take_c_limit_terms(acc, what)


def contract_group_leg(f: GroupFunction,
                       param_map: Dict[str, Scalar]) -> GroupFunction:
    """Substitute and rescale one tensor leg, keeping all c powers."""
    # order chosen as in contract_group_function
    dry = f.substitute(lambda_parametrization(0))
    maxpos = 0
    for (mono, params), pair in dry.terms.items():
        s = _group_param_sub(params, param_map)
        maxpos = max(maxpos, _c_exponent(s.params))
    order = maxpos // 2 + 1
    full = f.substitute(lambda_parametrization(order))
    acc = GroupFunction()
    for (mono, params), pair in full.terms.items():
        s = _group_param_sub(params, param_map)
        acc = acc + GroupFunction({(mono, EMPTY): pair}).scaled(s)
    return acc


GROUP_PARAM_MAP = {
    "kinv": Scalar.param("c", 1) * Scalar.param("kbar_inv", 1),
    "khinv": Scalar.param("c", 1) * Scalar.param("khbar_inv", 1),
    "xi": Scalar.param("c", 1) * Scalar.param("xibar", 1),
}
