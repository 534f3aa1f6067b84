"""Linear triple systems: constructions, closure, spreading checks, extremal search and bounds."""

from ._lts import (
    LtsError,
    TripleSystem,
    average_value_ratio,
    bose_skolem,
    cayley_latin,
    closure,
    construction_density,
    crowning,
    expander_deficiency,
    is_spreading,
    is_strongly_connected,
    is_weakly_spreading,
    lower_bound_constants,
    min_weakly_spreading,
    neighbourhood,
    ordering_witness,
    parse_system,
    read_system,
    restricted_sumset,
    spreading_6p3,
    star_expansion,
    sumset,
    tau,
    write_system,
)

__all__ = [
    "LtsError",
    "TripleSystem",
    "average_value_ratio",
    "bose_skolem",
    "cayley_latin",
    "closure",
    "construction_density",
    "crowning",
    "expander_deficiency",
    "is_spreading",
    "is_strongly_connected",
    "is_weakly_spreading",
    "lower_bound_constants",
    "min_weakly_spreading",
    "neighbourhood",
    "ordering_witness",
    "parse_system",
    "read_system",
    "restricted_sumset",
    "spreading_6p3",
    "star_expansion",
    "sumset",
    "tau",
    "write_system",
]
