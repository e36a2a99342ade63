"""Variety specifications, samplers and Jacobians."""

from geometry.jacobian import jacobian_at, join_jacobian_at, symbolic_jacobian, symbolic_join_jacobian
from geometry.linear import compose_linear, random_invertible_matrix
from geometry.registry import builtin, list_builtins
from geometry.sampler import Sampler, SamplerMode, sample_points
from geometry.specs import JoinSpec, LinearChangeSpec, PolyMapSpec, ToricSpec, VarietySpec

__all__ = [
    "JoinSpec",
    "LinearChangeSpec",
    "PolyMapSpec",
    "Sampler",
    "SamplerMode",
    "ToricSpec",
    "VarietySpec",
    "builtin",
    "compose_linear",
    "jacobian_at",
    "join_jacobian_at",
    "list_builtins",
    "random_invertible_matrix",
    "sample_points",
    "symbolic_jacobian",
    "symbolic_join_jacobian",
]
