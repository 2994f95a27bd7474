"""twistkit: exact symbolic engine for twist-deformed kappa-Poincare algebras.

Library layout mirrors the subsystems: exact scalars and PBW normal ordering
(`scalars`, `generators`, `elements`, `presentation`), Hopf structure and
Drinfeld twists (`hopf`, `registry`), classical r-matrices and Yang-Baxter
checks (`liealg`), star products on coordinate polynomials (`star`),
Poisson-Lie brackets and the quantum group (`poisson`), nonrelativistic
contractions (`contraction`), the expression grammar (`expressions`), and the
verification suite plus CLI (`verify`, `cli`).
"""

from .scalars import Scalar, TruncationPolicy
from .generators import Generator, M, P, K, V, Pi
from .elements import Element, TensorElement
from .presentation import Presentation, PresentationError
from .hopf import (HopfPresentation, TwistElement, check_cocycle,
                   check_hopf_axioms, check_centrality, compute_u,
                   twisted_antipode, twisted_coproduct)
from .registry import Registry

__version__ = "0.1.0"

__all__ = [
    "Scalar", "TruncationPolicy", "Generator", "M", "P", "K", "V", "Pi",
    "Element", "TensorElement", "Presentation", "PresentationError",
    "HopfPresentation", "TwistElement", "check_cocycle", "check_hopf_axioms",
    "check_centrality", "compute_u", "twisted_antipode", "twisted_coproduct",
    "Registry", "__version__",
]
