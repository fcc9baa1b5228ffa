"""Exact finiteness testing for matrix groups over infinite fields.

The package decides whether a finitely generated group of matrices over the
rationals, a number field, or a function field is finite, by mapping it onto
a matrix group over a finite field through a congruence homomorphism whose
kernel contains no nontrivial elements of finite order (characteristic 0) or
only unipotent ones (positive characteristic).  On top of the decision
procedure it computes exact orders, membership witnesses, and the center and
derived subgroup of finite groups through an isomorphic finite-field copy.
"""

from .decide import (
    Bounds,
    Config,
    Verdict,
    is_finite,
    is_finite_cyclic,
    normal_closure_unipotent,
    torsion_bounds,
)
from .errors import (
    AttemptsExhaustedError,
    FieldError,
    FinmatError,
    InputError,
    MapApplicationError,
    ParseError,
    ResourceLimitError,
    SingularMatrixError,
)
from .fields import (
    RATIONALS,
    AlgebraicFunctionField,
    NumberField,
    RationalFunctionField,
)
from .gf import FqField, standard_field
from .matrices import GroupInput, Mat, compute_mu
from .parse import field_from_json, parse_value
from .recognize import (
    IsoCopy,
    MembershipResult,
    StructureResult,
    SubgroupInfo,
    isomorphic_copy,
    membership,
    order_of_finite,
    structural_queries,
)
from .sw import CongruenceMap, apply_sw, build_sw, certificate_json, sw_image

__version__ = "0.1.0"

__all__ = [
    "AlgebraicFunctionField",
    "AttemptsExhaustedError",
    "Bounds",
    "CongruenceMap",
    "Config",
    "FieldError",
    "FinmatError",
    "FqField",
    "GroupInput",
    "InputError",
    "IsoCopy",
    "MapApplicationError",
    "Mat",
    "MembershipResult",
    "NumberField",
    "ParseError",
    "RATIONALS",
    "RationalFunctionField",
    "ResourceLimitError",
    "SingularMatrixError",
    "StructureResult",
    "SubgroupInfo",
    "Verdict",
    "apply_sw",
    "build_sw",
    "certificate_json",
    "compute_mu",
    "field_from_json",
    "is_finite",
    "is_finite_cyclic",
    "isomorphic_copy",
    "membership",
    "normal_closure_unipotent",
    "order_of_finite",
    "parse_value",
    "structural_queries",
    "torsion_bounds",
    "__version__",
]
