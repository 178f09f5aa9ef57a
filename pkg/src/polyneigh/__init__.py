"""Exact polyhedral combinatorics for 2-neighborly polytopes: facet and face
enumeration, neighborliness tests, constructions and facet-count bounds."""

from .bounds import (
    BoundReport,
    KnownBound,
    barnette,
    dim5_lower_bound,
    g_from_f,
    g_theorem_face_bound,
    is_m_sequence,
    m_matrix,
    mn_known,
    msn,
    neighborly_max_facets,
)
from .classify import (
    ClassificationReport,
    classification_report,
    dual_incidence,
    is_dual_2neighborly,
    is_k_neighborly,
    is_m_simple,
    is_m_simplicial,
    max_neighborliness,
)
from .construct import cyclic, example, join, join_family, join_family_counts, pyramid, simplex
from .exactcore import Hyperplane, affine_dim, hyperplane_through, rank
from .faces import FaceStructure, all_faces, closure, f_vector, facets_at_vertex
from .hull import FacetSet, Polytope, enumerate_facets, incidence_matrix

__version__ = "0.1.0"
