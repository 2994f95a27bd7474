"""PBW normal ordering: worked examples plus the randomized properties."""

import random
from fractions import Fraction

import pytest

from twistkit.generators import M, P
from twistkit.scalars import Scalar


def words_pool(pres):
    gens = list(pres.generators)
    return gens


def test_single_rewrite_example(kp):
    # P1 * M12 -> M12 P1 + i P2
    pres = kp.pres
    _, m12 = M(1, 2)
    e = pres.word([P(1), m12])
    expect = pres.word([m12, P(1)]) + pres.gen(P(2), Scalar.imaginary(1))
    assert e == expect


def test_already_normal_is_fixed(kp):
    pres = kp.pres
    _, m12 = M(1, 2)
    e = pres.word([m12, P(1)])
    assert e == pres.normal_order(e)
    assert list(e.terms) == [((pres.rank(m12), pres.rank(P(1))), ())]


def test_lorentz_rewrite_example(kp):
    # M23 * M12 -> M12 M23 - i M13   (from [M12, M23] = i M13)
    pres = kp.pres
    e = pres.word([M(2, 3)[1], M(1, 2)[1]])
    expect = pres.word([M(1, 2)[1], M(2, 3)[1]]) - \
        pres.gen(M(1, 3)[1], Scalar.imaginary(1))
    assert e == expect
    comm = pres.commutator(pres.gen(M(1, 2)[1]), pres.gen(M(2, 3)[1]))
    assert comm == pres.gen(M(1, 3)[1], Scalar.imaginary(1))


def test_multiply_examples(kp):
    pres = kp.pres
    assert pres.multiply(pres.one(), pres.gen(P(1))) == pres.gen(P(1))
    # momenta commute and sort by index
    assert pres.multiply(pres.gen(P(2)), pres.gen(P(1))) == \
        pres.word([P(1), P(2)])
    # [M12, P3] = 0: no correction term
    assert pres.multiply(pres.gen(P(3)), pres.gen(M(1, 2)[1])) == \
        pres.word([M(1, 2)[1], P(3)])


def test_mismatched_presentations_rejected(kp, classical):
    with pytest.raises(Exception):
        kp.pres.multiply(kp.pres.gen(P(0)), classical.pres.gen(P(0)))


def test_boost_momentum_series_example(kp):
    # [M30, P3] = i(P0 - kinv P0^2 + 2/3 kinv^2 P0^3 - ...) + (i/2) kinv Pvec^2
    #             - i kinv P3^2
    pres = kp.pres
    s, g = M(3, 0)
    c = pres.commutator(pres.gen(g, Scalar.rational(s)), pres.gen(P(3)))
    r0 = pres.rank(P(0))
    assert c.coefficient((r0,)).im == 1
    assert c.coefficient((r0, r0), (("kinv", 1),)).im == -1
    assert c.coefficient((r0,) * 3, (("kinv", 2),)).im == Fraction(2, 3)
    r1, r3 = pres.rank(P(1)), pres.rank(P(3))
    assert c.coefficient((r1, r1), (("kinv", 1),)).im == Fraction(1, 2)
    assert c.coefficient((r3, r3), (("kinv", 1),)).im == Fraction(-1, 2)


def test_idempotence_random(kp):
    pres = kp.pres
    rng = random.Random(7)
    gens = words_pool(pres)
    for _ in range(200):
        word = tuple(pres.rank(rng.choice(gens))
                     for _ in range(rng.randint(0, 4)))
        e = pres.from_raw([(Scalar.rational(rng.randint(-3, 3), 2), word)])
        assert pres.normal_order(e) == e


def test_confluence_associativity_random(kp):
    # normal_order(normal_order(w u) v) == normal_order(w normal_order(u v))
    pres = kp.pres
    rng = random.Random(11)
    gens = words_pool(pres)
    for _ in range(200):
        w, u, v = (pres.word([rng.choice(gens)
                              for _ in range(rng.randint(0, 2))])
                   for _ in range(3))
        assert (w * u) * v == w * (u * v)


def test_commutator_is_antisymmetric_and_bilinear(kp):
    pres = kp.pres
    rng = random.Random(13)
    gens = words_pool(pres)
    for _ in range(60):
        a = pres.gen(rng.choice(gens), Scalar.rational(rng.randint(1, 3)))
        b = pres.gen(rng.choice(gens))
        c = pres.gen(rng.choice(gens))
        assert pres.commutator(a, b) == -pres.commutator(b, a)
        assert pres.commutator(a + c, b) == \
            pres.commutator(a, b) + pres.commutator(c, b)


def test_jacobi_random_triples(kp):
    pres = kp.pres
    rng = random.Random(17)
    gens = words_pool(pres)
    for _ in range(200):
        a, b, c = (pres.gen(rng.choice(gens)) for _ in range(3))
        total = pres.commutator(a, pres.commutator(b, c)) \
            + pres.commutator(b, pres.commutator(c, a)) \
            + pres.commutator(c, pres.commutator(a, b))
        assert total.is_zero()


def test_substitute_examples(reg, kp):
    from twistkit.contraction import galilei_target, poincare_to_galilei
    from twistkit.generators import Pi
    pres = kp.pres
    target = galilei_target(reg)
    spec = poincare_to_galilei(pres, target)
    # P0 -> Pi0 / c
    img = pres.substitute(pres.gen(P(0)), spec.gen_map, target,
                          param_map=spec.param_map)
    assert img == target.gen(Pi(0), Scalar.param("c", -1))
    # M^{i0} -> c V_i, entered as canonical M[0,i] -> -c V_i
    img = pres.substitute(pres.gen(M(0, 1)[1]), spec.gen_map, target,
                          param_map=spec.param_map)
    assert img == target.gen(spec.gen_map[M(0, 1)[1]].pres.generators[
        next(iter(spec.gen_map[M(0, 1)[1]].terms))[0][0]],
        Scalar.param("c", 1, -1))
    # identity map fixes everything
    ident = {g: pres.gen(g) for g in pres.generators}
    e = pres.word([M(1, 2)[1], P(1), P(0)], Scalar.imaginary(1, 3))
    assert pres.substitute(e, ident, pres) == e


def test_unknown_generator_rejected(kp, classical):
    import pytest
    from twistkit.generators import Pi
    with pytest.raises(Exception):
        kp.pres.gen(Pi(0))
