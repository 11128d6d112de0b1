import logging

from .group import Group
from .automorphism import Automorphism, AutomorphismGroup, automorphisms, identify_iso
from .constructors import (abelian_group, cyclic, dicyclic, dihedral, direct_product, generalized_dihedral, heisenberg,
                           modular, perm_group, semidihedral, semidirect_cyclic, semidirect_general, sl2_f3)
from .subgroups import normal_subgroups, quotient, subgroups
from .cayley import cayley_diameter, cayley_digraph, cayley_witness
from .registry import registry, table_row, table_rows
from .product_set import big_pi_contains_one, is_atom_bruteforce, is_product_one, product_set
from .splitting import splittings
from .orbit import OrbitIndex, orbit, representative
from .davenport_kind import DavenportKind
from .report import DavenportReport, LevelStats
from .engine import davenport, large_davenport, small_davenport
from .level_cache import dump_levels, load_levels
from .config import EngineConfig
from .formulas import (AbelianShape, BetaRecord, beta_k_rank2, beta_registry, bound_lower, bound_upper_rank2,
                       cpq_davenports, davenport_abelian, generalized_dihedral_beta, index_two_beta, index_two_davenports)
from .group_spec import GroupSpec, parse_group_spec, resolve_group
from .audit import AuditReport, run_table, run_verify
from .emit import emit
from .errors import DavenportError

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    'Group',
    'Automorphism',
    'AutomorphismGroup',
    'automorphisms',
    'identify_iso',
    'abelian_group',
    'cyclic',
    'dicyclic',
    'dihedral',
    'direct_product',
    'generalized_dihedral',
    'heisenberg',
    'modular',
    'perm_group',
    'semidihedral',
    'semidirect_cyclic',
    'semidirect_general',
    'sl2_f3',
    'subgroups',
    'normal_subgroups',
    'quotient',
    'cayley_digraph',
    'cayley_diameter',
    'cayley_witness',
    'registry',
    'table_row',
    'table_rows',
    'product_set',
    'is_product_one',
    'big_pi_contains_one',
    'is_atom_bruteforce',
    'splittings',
    'OrbitIndex',
    'orbit',
    'representative',
    'DavenportKind',
    'DavenportReport',
    'LevelStats',
    'small_davenport',
    'large_davenport',
    'davenport',
    'dump_levels',
    'load_levels',
    'EngineConfig',
    'AbelianShape',
    'BetaRecord',
    'davenport_abelian',
    'index_two_beta',
    'index_two_davenports',
    'cpq_davenports',
    'beta_k_rank2',
    'bound_lower',
    'bound_upper_rank2',
    'generalized_dihedral_beta',
    'beta_registry',
    'GroupSpec',
    'parse_group_spec',
    'resolve_group',
    'AuditReport',
    'run_table',
    'run_verify',
    'emit',
    'DavenportError',
]
