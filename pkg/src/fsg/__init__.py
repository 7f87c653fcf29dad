"""fsg: exact computation with finite simple groups and their companions.

Subpackages cover finite fields, permutation groups with stabilizer
chains, the named-group zoo and character tables, matrix groups over
finite fields with the simple-group census, the binary Golay code and
Mathieu chain, the Leech minimal-vector count, moonshine q-series, and
exact quaternion/octonion arithmetic.
"""

from .errors import (
    DomainMismatchError,
    InternalDefectError,
    ResourceLimitError,
    ValidationError,
)
from .fields import FieldElement, FieldSpec, make_field
from .perms import PermGroup, Permutation

__all__ = [
    "DomainMismatchError",
    "InternalDefectError",
    "ResourceLimitError",
    "ValidationError",
    "FieldElement",
    "FieldSpec",
    "make_field",
    "PermGroup",
    "Permutation",
]
