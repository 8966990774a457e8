"""Exact p-adic verification of affinoid enveloping algebra and Verma module statements."""

from .chevalley import ChevalleyAlgebra, LieAlgebra, build_lie_algebra
from .padic import INF, NEG_INF, PadicContext, valuation
from .pbw import EnvelopingAlgebra, PBWElement, casimir, enveloping, exp_adjoint, truncated_center
from .rootdata import RootDatum, build_root_datum
from .verma import VermaModule, VermaVector, WeightCharacter

__all__ = [
    "ChevalleyAlgebra", "EnvelopingAlgebra", "INF", "LieAlgebra", "NEG_INF", "PBWElement",
    "PadicContext", "RootDatum", "VermaModule", "VermaVector", "WeightCharacter", "build_lie_algebra",
    "build_root_datum", "casimir", "enveloping", "exp_adjoint", "truncated_center", "valuation",
]

__version__ = "0.1.0"
