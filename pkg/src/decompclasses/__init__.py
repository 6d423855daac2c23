"""Decomposition classes of reductive Lie algebras, with a matrix oracle.

Submodules: :mod:`~decompclasses.root_datum` (root data and mod-p vanishing),
:mod:`~decompclasses.partitions` (nilpotent orbit combinatorics),
:mod:`~decompclasses.engine` (classes of gl_n, closure order, sheets),
:mod:`~decompclasses.oracle` (exact matrices and sampling checks),
:mod:`~decompclasses.micro` (the pgl_2 model) and :mod:`~decompclasses.cli`.
"""
from .engine import (
    ClassInfo,
    GLDecompDatum,
    HasseDiagram,
    LeviShape,
    class_dim,
    class_infos,
    closure_leq,
    enumerate_classes,
    hasse,
    induce_orbit,
    level_of,
    pgl_transport,
    sheet_nilpotent,
    sheets,
)
from .fields import FiniteField
from .micro import pgl2_micro
from .oracle import (
    ExactMatrix,
    InconclusiveSampling,
    JordanType,
    SpectrumNotInField,
    StructureConstantAlgebra,
    centralizer_dim_lie,
    class_closure_member_oracle,
    generic_induced_type,
    jordan_type,
    orbit_closure_leq,
    representative,
)
from .partitions import Partition, centralizer_dim, dominance_leq, induce, transpose
from .root_datum import (
    LeviDescriptor,
    RootDatum,
    RootDatumError,
    SubspaceDescriptor,
    build_gl,
    build_pgl,
    build_sl,
    center_of_levi,
    generic_phi,
    is_stabiliser_type,
    load_root_datum,
    phi_y,
)

__version__ = "0.1.0"
