"""Syzygy order of torus-equivariant cohomology from combinatorial face
data, cross-validated by an independent commutative-algebra oracle."""

__version__ = "0.1.0"

from .exactla import (
    CochainComplex,
    GradedDims,
    HilbertSeries,
    Matrix,
    Rational,
    cohomology_dims,
    kernel_basis,
    rank,
    series_add,
    series_scale,
    series_shift,
    series_window,
)
from .simplicial import SimplicialComplex, faces, is_acyclic, link, reduced_homology
from .fan import Fan, cone_link, face_poset, underlying_complex, validate
from .bc import (
    BcComplex,
    Face,
    FaceStructure,
    bc_cohomology,
    bc_from_fan,
    bc_from_polytopal,
    bc_from_raw,
    link_correspondence_check,
    orbit_space_e2,
)
from .syzygy import (
    SyzygyReport,
    compact_dichotomy_check,
    syzygy_order_faces,
    syzygy_order_links,
    torus_manifold_report,
)
from .stanley import (
    ExtTable,
    MonomialIdeal,
    TaylorComplex,
    depth_pd,
    ext_decomposition_check,
    ext_table,
    face_ring_presentation,
    koszul_syzygy_hilbert,
    stanley_reisner_ideal,
    syzygy_order_oracle,
    taylor_complex,
)
from .gkm import GkmGraph, cs_kernel_dims, from_punctured_cube
