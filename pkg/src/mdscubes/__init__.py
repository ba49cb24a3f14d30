"""Pairs of orthogonal latin cubes as MDS(2,5,q) codes: constructions and exhaustive verification."""

__version__ = "0.1.0"

from .assembly import new_orders, prop7_assemble, prop8_assemble, theorem1_assemble, theorem2_pipeline
from .codes import (
    Code,
    LatinCubePair,
    code_new,
    code_read,
    code_write,
    from_latin_cubes,
    to_latin_cubes,
    to_oa_rows,
)
from .fields import Field, field_axiom_check, field_make
from .holes import HoleCode, hole_verify
from .linear import coset_partition, linear_mds, rs_parity, super_chain
from .steiner import theorem3_assemble
from .verify import cubes_check, distance_check, mds_check, oa_check

__all__ = [
    "Code",
    "Field",
    "HoleCode",
    "LatinCubePair",
    "code_new",
    "code_read",
    "code_write",
    "coset_partition",
    "cubes_check",
    "distance_check",
    "field_axiom_check",
    "field_make",
    "from_latin_cubes",
    "hole_verify",
    "linear_mds",
    "mds_check",
    "new_orders",
    "oa_check",
    "prop7_assemble",
    "prop8_assemble",
    "rs_parity",
    "super_chain",
    "theorem1_assemble",
    "theorem2_pipeline",
    "theorem3_assemble",
    "to_latin_cubes",
    "to_oa_rows",
]
