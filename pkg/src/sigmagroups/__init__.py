"""Finite permutation groups with sigma-partition embedding properties.

The engine (``perm``, ``groups``, ``lattice``) is partition-agnostic; ``sigma``
holds prime-partition arithmetic, ``hall`` the Hall/Sylow machinery and
``embedding`` the permutability and sigma-subnormality predicates.
"""

from .corpus import (CorpusEntry, affine_group, alternating, cyclic, default_corpus, dihedral, direct_product,
                     elementary_abelian, example_42, example_294, load_group, quaternion8, resolve_group, symmetric)
from .embedding import (SigmaSubnormalChain, is_minimal_non_sigma_nilpotent, is_pi_decomposable,
                        is_pi_permutable, is_S_permutable, is_S_semipermutable, is_schmidt, is_sigma_nilpotent,
                        is_sigma_primary, is_sigma_soluble, is_sigma_subnormal, permutes, sigma_nilpotent_residual)
from .groups import (centralizer, conjugate, core, intersection, is_abelian, is_normal, join, normal_closure,
                     normalizer, quotient)
from .hall import (CompleteHallSet, complete_hall_sets, hall_subgroups, has_d_property, is_pi_closed, is_pi_full,
                   is_sylow_type, o_pi_lower, o_pi_upper, sylow)
from .lattice import (ChiefSeries, all_subgroups, chief_series, frattini, is_nilpotent, is_subnormal,
                      maximal_subgroups, minimal_normal_subgroups, normal_subgroups, subgroups_between)
from .perm import (ContainmentError, GroupError, NotNormalError, PermGroup, Permutation, PermutationError,
                   ResourceLimitError, configure, group_from_generators, symmetric_group)
from .sigma import (PartitionError, PiSelector, SigmaPartition, all_partitions, is_pi_number, pi_of, pi_part,
                    sigma_coprime, sigma_of, sigma_of_group)

__all__ = [name for name in dir() if not name.startswith("_")]
