"""Real algebraic numbers, root isolation and exact sign evaluation."""

from .evaluation import SamplePoint, SpecializedRoots, isolate_dense, isolate_roots, sign_at, sort_numbers, specialize_roots, strip_factor
from .intervals import RationalInterval, enclose
from .isolation import count_roots, irreducible_factors, isolate_squarefree, sturm_sequence
from .numbers import RAN, RealAlgebraicNumber, compare

__all__ = [
    "RAN",
    "RationalInterval",
    "RealAlgebraicNumber",
    "SamplePoint",
    "SpecializedRoots",
    "compare",
    "count_roots",
    "enclose",
    "irreducible_factors",
    "isolate_dense",
    "isolate_roots",
    "isolate_squarefree",
    "sign_at",
    "sort_numbers",
    "specialize_roots",
    "strip_factor",
    "sturm_sequence",
]
