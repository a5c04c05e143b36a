"""Executable theory of container distributive laws.

Monadic and directed containers are tabulated over finite index sets; the
package checks their axioms, checks and searches distributive laws between
them, and converts laws to compatible composites and back.
"""

from .compose import CompatibleComposite, check_compatible, composite_from_law, law_from_composite
from .container import (Container, ContainerMorphism, Ext, OutOfFuel, compose_containers,
                        interpret_morphism)
from .directed import DirectedContainer, check_directed
from .kernel import DepTable, FinIndexSet, RankError, rank_dep_map, unrank_dep_map
from .laws import (DistLawData, LawKind, beck_oracle, check_dir_mnd, check_law, check_mnd_dir,
                   check_mnd_mnd, law_gamma)
from .monadic import MonadicContainer, check_monadic, check_sigma_universe, monad_laws_oracle
from .report import EquationReport, Status
from .search import (SearchProblem, check_left_zero, check_S3, check_singleton, constant_shapes,
                     nogo_certificate, refute_bounded, search_laws)

__all__ = [
    "CompatibleComposite", "Container", "ContainerMorphism", "DepTable", "DirectedContainer",
    "DistLawData", "EquationReport", "Ext", "FinIndexSet", "LawKind", "MonadicContainer",
    "OutOfFuel", "RankError", "SearchProblem", "Status", "beck_oracle", "check_S3",
    "check_compatible", "check_dir_mnd", "check_directed", "check_law", "check_left_zero",
    "check_mnd_dir", "check_mnd_mnd", "check_monadic", "check_sigma_universe", "check_singleton",
    "compose_containers", "composite_from_law", "constant_shapes", "interpret_morphism",
    "law_from_composite", "law_gamma", "monad_laws_oracle", "nogo_certificate", "rank_dep_map",
    "refute_bounded", "search_laws", "unrank_dep_map",
]
