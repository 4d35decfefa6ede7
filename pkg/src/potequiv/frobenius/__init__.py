"""Frobenius data: point counts, paired tables, file formats, twists."""

from .curves import (
    CM_CURVE,
    LEVEL11_CURVE,
    ECModel,
    ExcludedPrime,
    UnsupportedPrime,
    count_points,
    count_points_naive,
    is_prime,
    legendre,
)
from .tables import (
    FrobeniusTable,
    PrimeRecord,
    TableEntry,
    TableError,
    cm_entry,
    cm_pair_table,
    cyclotomic_pair_table,
    table_verdicts,
)
from .twist import (
    APTable,
    InsufficientData,
    TwistCharacter,
    ap_table_from_curve,
    detect_twist_character,
    kronecker_character,
    twist_ap_table,
    units,
)
from .io import (
    TableFormatError,
    format_ap_table,
    format_frobenius_table,
    parse_ap_table,
    parse_ap_text,
    parse_frobenius_table,
    parse_frobenius_text,
    write_ap_table,
    write_frobenius_table,
)
