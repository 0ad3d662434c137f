"""fb-tableaux, the extra slow Tamari lattices and their counting sequences."""

from ._fbtableau import (
    Tableau,
    TableauError,
    check,
    congruence_count,
    count,
    enumerate,
    is_on_spine,
    join,
    join_irreducible,
    join_irreducible_labels,
    leq,
    meet,
    series,
    spine_count,
)

__all__ = [
    "Tableau",
    "TableauError",
    "check",
    "congruence_count",
    "count",
    "enumerate",
    "is_on_spine",
    "join",
    "join_irreducible",
    "join_irreducible_labels",
    "leq",
    "meet",
    "series",
    "spine_count",
]
