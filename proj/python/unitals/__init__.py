"""Hermitian unitals: construction, verification, O'Nan configuration search,
translation groups, Wilbrink's conditions and the classification verdict."""

from ._core import (
    FieldTables,
    NotPrimePowerError,
    ParseError,
    Unital,
    VersionError,
    admits_all_translations,
    check_condition_i,
    check_condition_ii,
    check_condition_iii,
    classical_unital,
    classify,
    find_isomorphism,
    find_onan,
    is_automorphism,
    is_prime_power,
    load_unital,
    relabel,
    save_unital,
    translations_with_center,
    verify_design,
    x_parallel_blocks,
)

__all__ = [
    "FieldTables",
    "NotPrimePowerError",
    "ParseError",
    "Unital",
    "VersionError",
    "admits_all_translations",
    "check_condition_i",
    "check_condition_ii",
    "check_condition_iii",
    "classical_unital",
    "classify",
    "find_isomorphism",
    "find_onan",
    "is_automorphism",
    "is_prime_power",
    "load_unital",
    "relabel",
    "save_unital",
    "translations_with_center",
    "verify_design",
    "x_parallel_blocks",
]
