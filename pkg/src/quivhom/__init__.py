"""Cubical sets, quiver realizations, and exact homology of quivers."""

from .cubical import (CubicalMap, CubicalSet, FormalCube, ValidationError,
                      canonical_face, canonicalize_degens, compose_cubical,
                      cubical_set, identity_cubical_map, is_simple_cubical,
                      skeleton, validate_cubical)
from .files import (ParseError, SimplicialComplexInput, load_artifact,
                    save_artifact, simplicial_to_digraph)
from .homology import (ChainComplex, CompletionConfig, MPathComplex,
                       PathComplex, PrismHomotopy, betti_numbers,
                       chain_map_matrices, completion_quiver, compute_homology,
                       induced_path_chain_map, mpath_complex,
                       normalized_cubical_complex, path_complex,
                       prism_homotopy)
from .linalg import QQ, Matrix, PrimeField, rank_kernel, restricted_kernel
from .quiver import (Digraph, NonSimpleError, Quiver, QuiverMap, box_product,
                     build_quiver, check_homotopy, compose, cube_digraph,
                     digraph_map, face_map, identity_map, is_simple,
                     line_digraph, projection_map, quivers_isomorphic,
                     quotient_by_map, to_digraph)
from .realization import (Realization, adjunction_backward, adjunction_forward,
                          realize)
from .singular import (SingularComplex, SingularCube, enumerate_quiver_maps,
                       enumerate_singular_cubes, induced_postcompose,
                       induced_precompose, interval_change_maps,
                       singular_cubical_set)

__all__ = [name for name in dir() if not name.startswith("_")]
