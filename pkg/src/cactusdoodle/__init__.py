"""Cactus groups and cactus doodles via Gauss diagrams.

Words in the cactus group close up into diagrams of curves on the
sphere; diagrams are compared under the two elementary moves (pair
creation/cancellation and slides) through canonical forms, orbit
search, and minimization.  Realizability on the sphere is decided by
the genus of the induced ribbon graph.
"""

from .words import (Generator, CactusWord, Permutation, RelationInstance,
                    word, perm_of_generator, perm_image, find_relations,
                    apply_relation, bounded_word_equal, parse_word,
                    format_word)
from .diagram import (GaussDiagram, InvalidDiagram, validate, validate_order,
                      crossing_count, is_doodle, induced_suborder,
                      canonical_key, canonical_form, isomorphism, to_json_obj,
                      from_json_obj, dumps, loads)
from .moves import (PhiDescriptor, PsiDescriptor, reverse_subset_order,
                    cyclic_equal, enumerate_phi_annihilations,
                    enumerate_psi_moves, apply_phi, apply_psi, apply_move,
                    annihilation_of, psi_inverse, move_to_json,
                    move_from_json)
from .closure import close, component_count_check
from .realize import (RibbonGraph, FaceStructure, ribbon_graph, faces,
                      component_stats, is_realizable, genus_report,
                      check_lemma_preservation)
from .equivalence import (OrbitSummary, OrbitBudgetExceeded, FlattenError,
                          MoveSequence, DEFAULT_MAX_NODES, psi_orbit,
                          is_minimal, minimize, min_crossing_number,
                          equivalent, doodle_equivalent, sequence_of, replay,
                          flatten_peak)
from ._kernel import BACKEND

__version__ = "0.1.0"
