"""Generator alphabet for the noncommutative algebras.

Families follow the paper's naming: M (Lorentz), P (momenta), K (rotations
after contraction), V (Galilean boosts), Pi (Galilean momenta).  Spacetime
indices run 0..3, spatial ones 1..3.  Antisymmetric families (M, K) are
canonicalized to mu < nu at construction; the swap sign is the caller's
business (see :func:`canonical_pair`).

Coordinate-type symbols (x, Lambda, a, R, v, b, tau) do not live here: they
belong to the commutative carrier spaces of the star-product and group
modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

SPACETIME = (0, 1, 2, 3)
SPATIAL = (1, 2, 3)

_FAMILIES = {
    # family: (index count, index range, antisymmetric)
    "M": (2, SPACETIME, True),
    "P": (1, SPACETIME, False),
    "K": (2, SPATIAL, True),
    "V": (1, SPATIAL, False),
    "Pi": (1, SPACETIME, False),
}


@dataclass(frozen=True, order=True)
class Generator:
    family: str
    indices: Tuple[int, ...]

    def __post_init__(self):
        spec = _FAMILIES.get(self.family)
        if spec is None:
            raise ValueError(f"unknown generator family {self.family!r}")
        count, rng, antisym = spec
        idx = tuple(int(i) for i in self.indices)
        if len(idx) != count:
            raise ValueError(f"{self.family} takes {count} indices, got {idx}")
        for i in idx:
            if i not in rng:
                raise ValueError(f"index {i} out of range for {self.family}{idx}")
        if antisym:
            if idx[0] == idx[1]:
                raise ValueError(f"{self.family}[{idx[0]},{idx[1]}] vanishes "
                                 "by antisymmetry")
            if idx[0] > idx[1]:
                raise ValueError(
                    f"{self.family}{idx} not canonical; use canonical_pair")
        object.__setattr__(self, "indices", idx)

    def label(self) -> str:
        return f"{self.family}[{','.join(str(i) for i in self.indices)}]"

    def __repr__(self):
        return self.label()


def canonical_pair(family: str, mu: int, nu: int) -> Tuple[int, Generator]:
    """Canonicalize an antisymmetric generator; returns (sign, generator).

    sign is +1 for mu < nu, -1 for mu > nu.  mu == nu raises (zero generator).
    """
    if mu == nu:
        raise ValueError(f"{family}[{mu},{nu}] vanishes by antisymmetry")
    if mu < nu:
        return 1, Generator(family, (mu, nu))
    return -1, Generator(family, (nu, mu))


def M(mu: int, nu: int) -> Tuple[int, Generator]:
    return canonical_pair("M", mu, nu)


def P(mu: int) -> Generator:
    return Generator("P", (mu,))


def K(i: int, j: int) -> Tuple[int, Generator]:
    return canonical_pair("K", i, j)


def V(i: int) -> Generator:
    return Generator("V", (i,))


def Pi(mu: int) -> Generator:
    return Generator("Pi", (mu,))


#: Minkowski metric diag(-1, +1, +1, +1), stored as the diagonal.
ETA = (-1, 1, 1, 1)
