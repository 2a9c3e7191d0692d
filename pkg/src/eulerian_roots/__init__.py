"""Exact s-Eulerian polynomials, the statistics behind them, and certificates
of real-rootedness, interlacing and coefficient shape."""

from .eulerian import (
    RefinedFamily,
    affine_b_poly,
    d_poly,
    e_poly,
    fmaj_poly,
    pq_poly,
    refined,
    refined_pq,
    t_poly,
    t_refined,
)
from .geometry import ehrhart_check, lattice_count, series_identity_check
from .groups import group_poly, multiset_poly, phi, psi, stat, theta
from .invseq import InvSeq, oracle_asc, oracle_poly
from .polyx import (
    ExactPoly,
    certify_compatible_pair,
    certify_interlaces,
    certify_real_rooted,
    coeff_shape,
    gamma_expansion,
    isolate_roots,
    sturm_count,
)
from .pqpoly import PQPoly

__version__ = "0.1.0"
