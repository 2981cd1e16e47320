"""Exact computational tensor-triangular geometry for finite ordered quivers.

Everything is computed over exact fields (the rationals or a prime field):
path algebras with relations, representation categories with their
vertex-wise tensor product, bounded complexes, the spectrum of prime thick
tensor ideals with its structure (pre)sheaf, and the reconstruction of the
path algebra from the derived category.
"""

from .fields import QQ, FieldError, FpElement, PrimeField, field_by_name
from .linalg import (DimensionMismatch, Echelon, InconsistentSystem, Matrix,
                     block_matrix, kernel_basis, kronecker, rank, rref, solve,
                     solve_many)
from .quiver import (Arrow, NotOrdered, Path, Quiver, QuiverError, Relation,
                     admissible_order, enumerate_paths, full_subquiver,
                     is_ordered)
from .path_algebra import (CompatibilityResult, PathAlgebra, TensorCheck,
                           build_path_algebra, compatibility,
                           is_tensor_relations, module_hom_space)
from .repcat import (FiltrationStep, RepMorphism, Representation,
                     direct_sum, extend_by_zero, hom_space,
                     module_representation, restrict, satisfies_relations,
                     simple_object, sub_quotient, tensor, unit_filtration,
                     unit_object, zero_object)
from .complexes import (BoundedComplex, ChainMap, ComplexError,
                        GradedVectorSpace, cohomology_at, complex_from_json,
                        complex_to_json, cone, direct_sum_complex,
                        eval_functor, shift, split_vector_complex, support,
                        tensor_complex)
from .spectrum import (IdealDescriptor, IncompatibleSubquiver, NotProper,
                       QuiverMorphism, SpectrumReport, TensorRelationError,
                       closed_set, contains, ideal_of, induced_spectrum_map,
                       is_maximal, is_prime, presheaf_sections, prime_at,
                       sheaf_sections, spc)
from .reconstruct import (CenterReport, ReconstructedAlgebra,
                          ReconstructionError, assemble_A, center_and_z,
                          phi, psi, rational_points, yoneda_coordinates)
from .dsl import ParseError, QuiverSpecFile, parse_quiver, parse_quiver_file

__version__ = "0.1.0"
