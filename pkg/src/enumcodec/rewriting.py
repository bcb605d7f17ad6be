"""Fixed-width substitution codes into binary strings.

Each source symbol is replaced by a distinct codeword of ``width`` bits.
Because every codeword has the same width, any rewritten string splits back
into blocks unambiguously, so ``rewrite`` is injective. It is generally not
surjective: with 3 symbols and width 2 the block ``11`` is never produced.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import FramingError, InvalidStringError, UnmappedCodewordError
from .numeration import BINARY, Alphabet, SymbolString


def code_width(size: int) -> int:
    """Bits needed for ``size`` distinct codewords, never less than one."""
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    return max(1, (size - 1).bit_length())


@dataclass(frozen=True)
class SubstitutionCode:
    source: Alphabet
    width: int
    table: tuple[tuple[str, str], ...]  # (symbol, codeword) in alphabet order

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("codeword width must be at least 1")
        if [sym for sym, _ in self.table] != list(self.source.symbols):
            raise ValueError("code table must list every source symbol in alphabet order")
        words = [w for _, w in self.table]
        for w in words:
            if len(w) != self.width or set(w) - {"0", "1"}:
                raise ValueError(f"codeword {w!r} is not a {self.width}-bit binary word")
        if len(set(words)) != len(words):
            raise ValueError("codewords must be distinct")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> SubstitutionCode:
        """Explicit code, e.g. ``{"m": "0", "w": "1"}``. Insertion order is alphabet order."""
        if not mapping:
            raise ValueError("empty code mapping")
        widths = {len(w) for w in mapping.values()}
        if len(widths) != 1:
            raise ValueError("all codewords must have the same width")
        return cls(Alphabet(mapping), widths.pop(), tuple(mapping.items()))

    def encoder(self) -> dict[str, str]:
        return dict(self.table)

    def decoder(self) -> dict[str, str]:
        return {w: sym for sym, w in self.table}


def make_code(alphabet: Alphabet) -> SubstitutionCode:
    """Symbol with digit value v gets the width-bit binary spelling of v."""
    width = code_width(len(alphabet))
    table = tuple((sym, format(v, f"0{width}b")) for v, sym in enumerate(alphabet.symbols))
    return SubstitutionCode(alphabet, width, table)


def rewrite(s: SymbolString, code: SubstitutionCode) -> SymbolString:
    enc = code.encoder()
    try:
        bits = "".join(enc[sym] for sym in s.symbols)
    except KeyError as exc:
        raise InvalidStringError(f"symbol {exc.args[0]!r} not in code source alphabet") from None
    return SymbolString(BINARY, tuple(bits))


def unrewrite(bits: SymbolString, code: SubstitutionCode) -> SymbolString:
    if bits.alphabet != BINARY:
        raise InvalidStringError("unrewrite expects a binary string")
    raw = str(bits)
    w = code.width
    if len(raw) % w:
        raise FramingError(f"length {len(raw)} is not a multiple of codeword width {w}")
    dec = code.decoder()
    out = []
    for i in range(0, len(raw), w):
        block = raw[i:i + w]
        try:
            out.append(dec[block])
        except KeyError:
            raise UnmappedCodewordError(f"block {block!r} at offset {i} matches no codeword") from None
    return SymbolString(code.source, tuple(out))
