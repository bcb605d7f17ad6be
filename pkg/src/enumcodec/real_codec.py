"""Decimal representations as single integers.

A representation ``[+|-] digits "." digits`` is treated as a string, not a
value: ``1.5`` and ``1.50`` differ, as do ``7.`` and ``007.``.  The encoder
indexes both digit strings in shortlex order and nests Cantor pairs::

    encode(sign, u, w) = pair(sign_bit, pair(index(u), index(w)))

with sign_bit 0 for ``+`` and 1 for ``-``.  Only finite representations are
covered.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DecimalParseError, NotInImageError
from .numeration import DECIMAL, shortlex_index, shortlex_string
from .pairing import pair, unpair


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def bit(self) -> int:
        return 0 if self is Sign.PLUS else 1


@dataclass(frozen=True)
class DecimalRepr:
    sign: Sign
    int_part: str
    frac_part: str

    def __post_init__(self):
        if not isinstance(self.sign, Sign):
            object.__setattr__(self, "sign", Sign(self.sign))
        for part in (self.int_part, self.frac_part):
            if not all(c in "0123456789" for c in part):
                raise ValueError(f"digit string expected, got {part!r}")

    def __str__(self) -> str:
        return render(self)


def parse_decimal(text: str) -> DecimalRepr:
    """Parse ``[+|-] digits* "." digits*``; an absent sign means ``+``.

    No whitespace or exponents are accepted.
    """
    sign = Sign.PLUS
    start = 0
    dot = -1
    for i, c in enumerate(text):
        if c in "+-":
            if i != 0:
                raise DecimalParseError(f"sign {c!r} not in leading position", i)
            sign = Sign(c)
            start = 1
        elif c == ".":
            if dot >= 0:
                raise DecimalParseError("second decimal point", i)
            dot = i
        elif not ("0" <= c <= "9"):
            raise DecimalParseError(f"illegal character {c!r}", i)
    if dot < 0:
        raise DecimalParseError("missing decimal point", len(text))
    return DecimalRepr(sign, text[start:dot], text[dot + 1:])


def render(d: DecimalRepr) -> str:
    return f"{d.sign.value}{d.int_part}.{d.frac_part}"


def encode_real(d: DecimalRepr) -> int:
    u = shortlex_index(d.int_part, DECIMAL)
    w = shortlex_index(d.frac_part, DECIMAL)
    return pair(d.sign.bit, pair(u, w))


def decode_real(n: int) -> DecimalRepr:
    sign_bit, inner = unpair(n)
    if sign_bit > 1:
        raise NotInImageError(f"{n} unpairs to sign component {sign_bit}; only 0 and 1 are valid")
    u, w = unpair(inner)
    return DecimalRepr(
        Sign.MINUS if sign_bit else Sign.PLUS,
        str(shortlex_string(u, DECIMAL)),
        str(shortlex_string(w, DECIMAL)),
    )
