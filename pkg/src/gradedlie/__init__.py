"""Exact computations with twisted affine root systems, alcove facets,
pseudo-Levi subalgebras, torsion gradings, relative Weyl groups with
unequal parameters, and a symbolic graded double affine Hecke algebra.
"""

from .affine import (
    Facet,
    canonical_form,
    conjugating_element,
    enumerate_alcoves,
    facet_of,
    fundamental_alcove,
    same_facet,
    walls_of_alcove,
)
from .chevalley import build_algebra, pinned_automorphism
from .cuspidal import CuspidalDatum, TORUS_DATUM, load_registry, validate_datum
from .daha import build_daha, eigen_point, multiply, specialize, specialized_algebra
from .errors import DataError, GradedLieError, InternalError, UsageError
from .grading import (
    GradingDatum,
    block_facets,
    graded_piece,
    grading_element,
    s_weight,
    spiral_of_facet,
    splitting_of_facet,
)
from .pseudolevi import PseudoLevi, RelevantSubspace, pseudo_levi_of, span_of_facet
from .relweyl import (
    RelWeylGroup,
    coxeter_order_direct,
    rel_weyl_group,
    xi_classes,
)
from .rootdata import RootDatum, build_root_datum

__all__ = [name for name in dir() if not name.startswith("_")]
