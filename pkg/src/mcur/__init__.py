"""Integer chains on weighted complexes: mass, boundary, flat norm, and
decomposition into indecomposable components (simple paths and loops), with
planar finite-perimeter applications on pixel grids."""

from .complexes import Edge, Face, MetricComplex
from .chains import (AdditivityCertificate, Chain0, Chain1, Chain2,
                     ComplexMap, MassReport, boundary, boundary2, mass,
                     normal_mass, pushforward, pushforward0, restrict,
                     total_mass, verify_decomposition)
from .curves import (Classification, CurvePiece, as_curve, classify,
                     constant_multiple_on_cycle, currentify, length,
                     split_at_self_intersection, unit_path_on_arc)
from .decompose import (BigComponentReport, Decomposition, EnergyValue,
                        IndecomposabilityResult, big_component_bound_check,
                        enumerate_decompositions, greedy_decompose,
                        is_indecomposable, variational_oracle)
from .flatnorm import (FillingResult, FlatNormResult, IsoperimetricReport,
                       flat_norm, isoperimetric_report, minimal_filling)
from .planar import (PixelSet, boundary_current, grid_complex,
                     indecomposable_components, is_simple, jordan_loop,
                     parse_pbm, serialize_pbm)
from . import errors, formats, svg

__version__ = "0.1.0"

__all__ = [
    "AdditivityCertificate", "BigComponentReport", "Chain0", "Chain1",
    "Chain2", "Classification", "ComplexMap", "CurvePiece", "Decomposition",
    "Edge", "EnergyValue", "Face", "FillingResult", "FlatNormResult",
    "IndecomposabilityResult", "IsoperimetricReport", "MassReport",
    "MetricComplex", "PixelSet", "as_curve", "big_component_bound_check",
    "boundary", "boundary2", "boundary_current", "classify",
    "constant_multiple_on_cycle", "currentify", "enumerate_decompositions",
    "errors", "flat_norm", "formats", "greedy_decompose", "grid_complex",
    "indecomposable_components", "is_indecomposable", "is_simple",
    "isoperimetric_report", "jordan_loop", "length", "mass",
    "minimal_filling", "normal_mass", "parse_pbm", "pushforward",
    "pushforward0", "restrict", "serialize_pbm", "split_at_self_intersection",
    "svg", "total_mass", "unit_path_on_arc", "variational_oracle",
    "verify_decomposition",
]
