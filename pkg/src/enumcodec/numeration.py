"""Bijective base-k numeration.

Every finite string over a k-symbol alphabet gets a unique non-negative
integer, listing strings in shortlex order (shorter first, then
lexicographic by alphabet order)::

    ""  -> 0
    "0" -> 1,  "1" -> 2
    "00" -> 3, "01" -> 4, "10" -> 5, "11" -> 6, ...

Digits run 1..k instead of 0..k-1, so leading zeros are significant:
"0", "00" and "000" are distinct strings with distinct indices.

Signed integers are reached through the zigzag map 0, +1, -1, +2, -2, ...
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidStringError


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbols. Position gives the digit value."""

    symbols: tuple[str, ...]
    _digit: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("alphabet must contain at least one symbol")
        digit = {s: i for i, s in enumerate(syms)}
        if len(digit) != len(syms):
            raise ValueError(f"alphabet symbols must be distinct: {syms!r}")
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "_digit", digit)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._digit

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def digit(self, symbol: str) -> int:
        try:
            return self._digit[symbol]
        except (KeyError, TypeError):
            raise InvalidStringError(
                f"symbol {symbol!r} not in alphabet {self.symbols!r}"
            ) from None

    def string(self, symbols: Iterable[str]) -> SymbolString:
        """Build a validated string. A plain ``str`` is split per character."""
        return SymbolString(self, tuple(symbols))


@dataclass(frozen=True)
class SymbolString:
    alphabet: Alphabet
    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        try:
            stray = set(self.symbols).difference(self.alphabet._digit)
        except TypeError:
            raise InvalidStringError("unhashable symbol in string") from None
        if stray:
            s = next(s for s in self.symbols if s in stray)
            raise InvalidStringError(
                f"symbol {s!r} not in alphabet {self.alphabet.symbols!r}"
            )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    def __str__(self) -> str:
        return "".join(self.symbols)

    def __add__(self, other: SymbolString) -> SymbolString:
        if not isinstance(other, SymbolString):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise InvalidStringError("cannot concatenate strings over different alphabets")
        return SymbolString(self.alphabet, self.symbols + other.symbols)


BINARY = Alphabet("01")
DECIMAL = Alphabet("0123456789")


def _as_string(s: SymbolString | Sequence[str], alphabet: Alphabet | None) -> SymbolString:
    if isinstance(s, SymbolString):
        if alphabet is not None and alphabet != s.alphabet:
            raise InvalidStringError("string alphabet does not match the given alphabet")
        return s
    if alphabet is None:
        raise TypeError("an alphabet is required for a plain sequence")
    return alphabet.string(s)


def shortlex_index(s: SymbolString | Sequence[str], alphabet: Alphabet | None = None) -> int:
    """Position of ``s`` in the shortlex enumeration of its alphabet's strings.

    A plain sequence (e.g. ``"10"``) needs ``alphabet``; it is validated first.
    """
    s = _as_string(s, alphabet)
    k = len(s.alphabet)
    digit = s.alphabet.digit
    n = 0
    for sym in s.symbols:
        n = n * k + digit(sym) + 1
    return n


def shortlex_string(n: int, alphabet: Alphabet) -> SymbolString:
    """Inverse of :func:`shortlex_index`."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    k = len(alphabet)
    syms = alphabet.symbols
    out = []
    while n > 0:
        n, r = divmod(n - 1, k)
        out.append(syms[r])
    out.reverse()
    return SymbolString(alphabet, tuple(out))


def enumerate_strings(alphabet: Alphabet, limit: int | None = None) -> Iterator[SymbolString]:
    """Yield strings in shortlex order; unbounded when ``limit`` is None."""
    syms = alphabet.symbols
    k = len(syms)
    # Odometer increment in bijective base k: cheaper than re-deriving each
    # string from its index.
    digits: list[int] = []
    emitted = 0
    while limit is None or emitted < limit:
        yield SymbolString(alphabet, tuple(syms[d] for d in digits))
        emitted += 1
        i = len(digits) - 1
        while i >= 0 and digits[i] == k - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            digits.insert(0, 0)
        else:
            digits[i] += 1


def transcode(s: SymbolString, target: Alphabet) -> SymbolString:
    """Carry ``s`` to the string with the same shortlex index over ``target``.

    Bijective for any pair of alphabets; decimal to binary is the K to S map.
    """
    return shortlex_string(shortlex_index(s), target)


def nat_to_int(n: int) -> int:
    """Zigzag: 0, 1, 2, 3, 4, ... -> 0, +1, -1, +2, -2, ..."""
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    if n % 2:
        return (n + 1) // 2
    return -(n // 2)


def int_to_nat(z: int) -> int:
    if z > 0:
        return 2 * z - 1
    return -2 * z
