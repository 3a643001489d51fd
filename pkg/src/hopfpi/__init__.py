"""Exact-arithmetic workbench for Hopf group-algebras (Hopf pi-algebras),
Hopf pi-braces, matched pairs, post-Hopf pi-algebras and Rota-Baxter
operators on finite examples."""
from .errors import (AxiomError, BoundExceeded, DimensionError, FieldMismatchError, InputError,
                     OneSidedInverseError, PreconditionError, ShapeError, VerificationError)
from .groups import FiniteGroup, Grading, catalog_gradings, catalog_groups, trivial_grading
from .hopf import (GradedLinearMap, GradedSpace, HopfPiAlgebra, check_antipode_identities,
                   check_hopf_pi_algebra, group_algebra, is_cocommutative)
from .kernel import BACKEND
from .linalg import GF, QQ, Field, Matrix, StructureTensor
from .report import CheckReport

__version__ = "0.1.0"

__all__ = [
    "AxiomError", "BoundExceeded", "DimensionError", "FieldMismatchError", "InputError", "OneSidedInverseError",
    "PreconditionError", "ShapeError", "VerificationError",
    "FiniteGroup", "Grading", "catalog_gradings", "catalog_groups", "trivial_grading",
    "GradedLinearMap", "GradedSpace", "HopfPiAlgebra", "check_antipode_identities", "check_hopf_pi_algebra",
    "group_algebra", "is_cocommutative",
    "BACKEND", "GF", "QQ", "Field", "Matrix", "StructureTensor", "CheckReport",
]
