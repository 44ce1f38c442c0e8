"""Divisor classes on del Pezzo surfaces S_r and the Gosset polytopes (r-4)_21."""
from .enumeration import (
    ClassSet,
    a_divisors,
    e8_theta_coefficient,
    exceptional_systems,
    lines,
    roots,
    rulings,
    skew_decompose,
    solve_classes,
)
from .gosset import (
    Crosspolytope,
    GossetPolytope,
    Simplex,
    build_polytope,
    center,
    count_simplexes,
    crosspolytopes,
    expected_face_table,
    face_count_formula,
    list_simplexes,
    polytope,
    simplex_to_exceptional_system,
)
from .kernels import BACKEND
from .picard import (
    DivisorClass,
    RankError,
    Surface,
    affine_norm,
    intersect,
    is_exceptional_system,
    is_line,
    is_root,
    is_ruling,
    k_degree,
    make_surface,
    parse_class,
)
from .weyl import orbit, reflect, simple_roots, weyl_order

__version__ = "0.1.0"
