from fractions import Fraction

import pytest

from twistkit import Registry


@pytest.fixture(scope="session")
def reg():
    """One registry for the whole run; algebras are cached inside it."""
    return Registry()


@pytest.fixture(scope="session")
def kp(reg):
    return reg.algebra("kappa-poincare")


@pytest.fixture(scope="session")
def classical(reg):
    return reg.algebra("poincare-classical")


def random_lorentz_point(rng):
    """Exact rational Lorentz matrix via the Cayley transform.

    Lambda = (1 - eta S)^{-1} (1 + eta S) with S antisymmetric rational is
    eta-orthogonal exactly; evaluating group polynomials at such points is
    the ideal-membership oracle for "equal modulo orthogonality".
    """
    from twistkit.generators import ETA

    while True:
        s = [[Fraction(0)] * 4 for _ in range(4)]
        for a in range(4):
            for b in range(a + 1, 4):
                v = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                s[a][b] = v
                s[b][a] = -v
        m = [[ETA[a] * s[a][b] for b in range(4)] for a in range(4)]
        # invert (I - m) by Gaussian elimination over Fractions
        aug = [[(Fraction(1) if a == b else Fraction(0)) - m[a][b]
                for b in range(4)] +
               [Fraction(1) if a == b else Fraction(0) for b in range(4)]
               for a in range(4)]
        ok = True
        for col in range(4):
            piv = next((r for r in range(col, 4) if aug[r][col]), None)
            if piv is None:
                ok = False
                break
            aug[col], aug[piv] = aug[piv], aug[col]
            factor = aug[col][col]
            aug[col] = [x / factor for x in aug[col]]
            for r in range(4):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        if not ok:
            continue
        inv = [row[4:] for row in aug]
        plus = [[(Fraction(1) if a == b else Fraction(0)) + m[a][b]
                 for b in range(4)] for a in range(4)]
        lam = [[sum(inv[a][c] * plus[c][b] for c in range(4))
                for b in range(4)] for a in range(4)]
        return lam


def evaluate_group_function(f, lam, avals):
    """Exact evaluation of a GroupFunction at a matrix point."""
    total = (Fraction(0), Fraction(0))
    for (mono, params), (re, im) in f.terms.items():
        if params:
            # keep formal parameters as factors of an abstract monomial:
            # evaluation is used on parameter-homogeneous combinations, so
            # a nonzero check may group by the parameter monomial instead
            raise ValueError("evaluate per parameter monomial")
        val = Fraction(1)
        for sym in mono:
            if sym[0] == "L":
                val *= lam[sym[1]][sym[2]]
            elif sym[0] == "a":
                val *= avals[sym[1]]
            else:
                raise ValueError(f"cannot evaluate symbol {sym}")
        total = (total[0] + re * val, total[1] + im * val)
    return total


def group_function_vanishes_on_group(f, rng, points=4):
    """Zero at several random exact Lorentz points, per parameter monomial."""
    from twistkit.poisson import GroupFunction

    by_params = {}
    for (mono, params), pair in f.terms.items():
        by_params.setdefault(params, {})[(mono, ())] = pair
    for params, terms in by_params.items():
        g = GroupFunction(terms)
        for _ in range(points):
            lam = random_lorentz_point(rng)
            avals = [Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                     for _ in range(4)]
            if evaluate_group_function(g, lam, avals) != (0, 0):
                return False
    return True
