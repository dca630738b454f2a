"""Words over totally ordered alphabets, evaluations, and standardization.

Symbols are the positive naturals 1 < 2 < 3 < ...; a word is a tuple of
symbols.  Standardizing a word attaches an occurrence index to every symbol,
producing a word of :class:`StandardizedSymbol` entries in which no symbol
repeats.  Standardized symbols compare base-first, then index, so plain tuple
comparison realizes the indexed-alphabet order.
"""

from __future__ import annotations

from typing import Iterable, Literal, NamedTuple, Union

from .errors import InvalidInputError

Direction = Literal["left", "right"]


class StandardizedSymbol(NamedTuple):
    """A symbol tagged with its occurrence index, ordered base-first."""

    base: int
    index: int

    def __str__(self) -> str:
        return f"{self.base}_{self.index}"


Symbol = Union[int, StandardizedSymbol]
Word = tuple[Symbol, ...]
Evaluation = tuple[int, ...]


def _require_plain(word: Iterable[Symbol]) -> tuple[int, ...]:
    out = tuple(word)
    for sym in out:
        if not isinstance(sym, int) or isinstance(sym, bool) or sym < 1:
            raise InvalidInputError(f"expected a plain symbol (positive int), got {sym!r}")
    return out


def _require_standardized(word: Iterable[Symbol]) -> tuple[StandardizedSymbol, ...]:
    out = tuple(word)
    for sym in out:
        if not isinstance(sym, StandardizedSymbol):
            raise InvalidInputError(f"expected a standardized symbol, got {sym!r}")
    return out


def standardize(word: Iterable[int], direction: Direction = "left") -> tuple[StandardizedSymbol, ...]:
    """Attach occurrence indices to every symbol of ``word``.

    ``direction="left"`` numbers the occurrences of each symbol 1, 2, ...
    reading left to right; ``direction="right"`` reads right to left, so the
    leftmost occurrence of a symbol carries the highest index.  The result is
    a standard word either way.
    """
    plain = _require_plain(word)
    if direction == "left":
        order = range(len(plain))
    elif direction == "right":
        order = range(len(plain) - 1, -1, -1)
    else:
        raise InvalidInputError(f"direction must be 'left' or 'right', got {direction!r}")
    seen: dict[int, int] = {}
    out: list[StandardizedSymbol | None] = [None] * len(plain)
    for pos in order:
        base = plain[pos]
        seen[base] = seen.get(base, 0) + 1
        out[pos] = StandardizedSymbol(base, seen[base])
    return tuple(out)  # type: ignore[arg-type]


def destandardize(word: Iterable[StandardizedSymbol]) -> tuple[int, ...]:
    """Erase the occurrence indices, recovering the underlying plain word."""
    return tuple(sym.base for sym in _require_standardized(word))


def evaluation(word: Iterable[int], alphabet_size: int) -> Evaluation:
    """Count the occurrences of each symbol of the alphabet 1..``alphabet_size``.

    Entry ``a`` (1-based) of the result is the number of times ``a`` occurs in
    ``word``; the entries sum to the length of the word.
    """
    if alphabet_size < 0:
        raise InvalidInputError("alphabet_size must be nonnegative")
    counts = [0] * alphabet_size
    for sym in _require_plain(word):
        if sym > alphabet_size:
            raise InvalidInputError(f"symbol {sym} exceeds alphabet size {alphabet_size}")
        counts[sym - 1] += 1
    return tuple(counts)


def is_standard(word: Iterable[Symbol]) -> bool:
    """True iff no symbol of ``word`` repeats."""
    syms = tuple(word)
    return len(set(syms)) == len(syms)


def parse_word(text: str) -> Word:
    """Parse a word from whitespace- or comma-separated tokens.

    Plain symbols are positive integers ("4 6 2" or "4,6,2"); standardized
    symbols use ``base_index`` tokens ("4_1 1_1").  An empty string is the
    empty word.
    """
    tokens = text.replace(",", " ").split()
    out: list[Symbol] = []
    for tok in tokens:
        try:
            if "_" in tok:
                base_text, index_text = tok.split("_")
                sym: Symbol = StandardizedSymbol(int(base_text), int(index_text))
            else:
                sym = int(tok)
        except ValueError as exc:
            raise InvalidInputError(f"cannot parse symbol {tok!r}") from exc
        base = sym.base if isinstance(sym, StandardizedSymbol) else sym
        index = sym.index if isinstance(sym, StandardizedSymbol) else 1
        if base < 1 or index < 1:
            raise InvalidInputError(f"symbols must be positive, got {tok!r}")
        out.append(sym)
    return tuple(out)


def format_word(word: Iterable[Symbol]) -> str:
    """Render a word as space-separated tokens (``base_index`` when standardized)."""
    return " ".join(str(sym) for sym in word)
