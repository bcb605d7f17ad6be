"""Bijective string/integer enumerations, pairing, substitution codes and
diagonalization, with exhaustively checkable round trips."""

from .diagonal import (
    Enumeration,
    InjectionState,
    Witness,
    diagonal_prefix,
    extend_injection,
    extension_process,
    load_table,
    run_extension,
    verify_diagonal,
)
from .errors import (
    DecimalParseError,
    DuplicateSourceError,
    EncodingError,
    FramingError,
    InsufficientInputError,
    InvalidStringError,
    NotInImageError,
    OutOfRangeError,
    TableFormatError,
    UnmappedCodewordError,
)
from .growth import GrowthState, grow_step, growth_process, init_growth, run_growth
from .numeration import (
    BINARY,
    DECIMAL,
    Alphabet,
    SymbolString,
    enumerate_strings,
    int_to_nat,
    nat_to_int,
    shortlex_index,
    shortlex_string,
    transcode,
)
from .pairing import pair, pair_int, unpair, unpair_int
from .real_codec import DecimalRepr, Sign, decode_real, encode_real, parse_decimal, render
from .rewriting import SubstitutionCode, make_code, rewrite, unrewrite

__version__ = "0.1.0"
