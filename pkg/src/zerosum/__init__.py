"""Exact computations for product-one (zero-sum) sequences over metacyclic groups."""

from .groups import (
    Element,
    GroupSpec,
    Subgroup,
    dihedral,
    factorize,
    mk_cyclic,
    mk_metacyclic,
    parse_group,
    projection,
    quotient_map,
    stabilizer,
)
from .sequences import Sequence, canonical_key, map_sequence, parse_sequence_file
from .products import (
    BudgetExceeded,
    ProductWitness,
    SubproductSet,
    find_arrangement,
    has_product_one,
    pi_set,
    subproducts,
    verify_witness,
)
from .bounds import DgmReport, dgm_check
from .constants import (
    ConstantReport,
    check_template,
    classify_extremal,
    davenport_constant,
    gao_constant,
)
from .witnesses import (
    Decomposition,
    WitnessSearchExhausted,
    egz_extract,
    extract_product_h_blocks,
    find_big_product_one,
    improve_x_coverage,
    replay_swap_argument,
    singleton_pi_structure,
)

__version__ = "0.1.0"

__all__ = [
    "Element", "GroupSpec", "Subgroup", "dihedral", "factorize", "mk_cyclic",
    "mk_metacyclic", "parse_group", "projection", "quotient_map", "stabilizer",
    "Sequence", "canonical_key", "map_sequence", "parse_sequence_file",
    "BudgetExceeded", "ProductWitness", "SubproductSet", "find_arrangement",
    "has_product_one", "pi_set", "subproducts", "verify_witness",
    "DgmReport", "dgm_check",
    "ConstantReport", "check_template", "classify_extremal",
    "davenport_constant", "gao_constant",
    "Decomposition", "WitnessSearchExhausted", "egz_extract",
    "extract_product_h_blocks", "find_big_product_one", "improve_x_coverage",
    "replay_swap_argument", "singleton_pi_structure",
]
