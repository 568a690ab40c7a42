"""Exact arithmetic and structure theory for crossed products A x_{sigma,alpha} G."""
from .errors import (
    CrossedForgeError,
    DomainMismatchError,
    NormalityError,
    ParseError,
    PreconditionError,
    SizeGuardError,
    UnsupportedEnumerationError,
    UnsupportedError,
    ValidationError,
)
from .product import (
    CrossedElem,
    commutes,
    cp_add,
    cp_mul,
    embed,
    is_in_base,
    kill,
    parse_elem,
    translate_deform,
)
from .system import CrossedSystem, ValidationReport, build_standard, fixed_ring, sigma_kernel, verify_crossed_system

__all__ = [
    "CrossedElem",
    "CrossedForgeError",
    "CrossedSystem",
    "DomainMismatchError",
    "NormalityError",
    "ParseError",
    "PreconditionError",
    "SizeGuardError",
    "UnsupportedEnumerationError",
    "UnsupportedError",
    "ValidationError",
    "ValidationReport",
    "build_standard",
    "commutes",
    "cp_add",
    "cp_mul",
    "embed",
    "fixed_ring",
    "is_in_base",
    "kill",
    "parse_elem",
    "sigma_kernel",
    "translate_deform",
    "verify_crossed_system",
]

__version__ = "0.1.0"
