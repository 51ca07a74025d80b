"""Combinatorial and cohomological invariants of rational fans, in exact integer arithmetic."""

from .cone_algebra import Cone, cone_from_rays, dual_cone, faces, interior_point
from .errors import ToricFanError
from .fan import Fan, fan_from_maximal, is_complete, is_hereditary
from .pp import hilbert_function, pp_basis

__all__ = [
    "Cone",
    "Fan",
    "ToricFanError",
    "cone_from_rays",
    "dual_cone",
    "faces",
    "fan_from_maximal",
    "hilbert_function",
    "interior_point",
    "is_complete",
    "is_hereditary",
    "pp_basis",
]

__version__ = "0.1.0"
