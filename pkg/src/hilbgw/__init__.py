"""Equivariant Gromov-Witten theory of Hilb^n(C^2) by Givental-Teleman reconstruction."""

__version__ = "0.1.0"

from .scalars import DEFAULT_FIELD, ExtensionField, RationalFunctionField, Scalar, parse_scalar
from .series import QPoly, QRational, QSeries, rational_reconstruct
from .partitions import Partition, enumerate_partitions
from .fock import FockVector, build_MD
from .frobenius import eigen_decompose
from .rmatrix import compute_R
from .assembly import degree0_oracle, reconstruct_invariant
from .crepant import crepant_substitute

__all__ = [
    "__version__",
    "DEFAULT_FIELD",
    "ExtensionField",
    "RationalFunctionField",
    "Scalar",
    "parse_scalar",
    "QPoly",
    "QRational",
    "QSeries",
    "rational_reconstruct",
    "Partition",
    "enumerate_partitions",
    "FockVector",
    "build_MD",
    "eigen_decompose",
    "compute_R",
    "degree0_oracle",
    "reconstruct_invariant",
    "crepant_substitute",
]
