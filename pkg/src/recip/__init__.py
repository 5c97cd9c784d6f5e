"""Exact unit-fraction decompositions and reciprocal complements of Euclidean domains."""
from .complement import (bonaccian_split, classify, d_intersect_R_check, is_in_R,
                         units_field_check, valuation)
from .decompose import (Decomposition, distinctify_z, euclid_decompose, expand_z,
                        greedy_decompose_z, integer_expand, verify)
from .domain import DomainError, EuclideanDomain, Fraction, RecipError, ZeroDivisorError
from .extension import reciprocal_in_DX, verify_extension
from .instances import DomainDescriptor, GaussInt, Poly, make_domain
from .search import SearchSpec, cross_check, exhaustive_search

__version__ = "0.1.0"
