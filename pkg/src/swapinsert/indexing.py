"""Dense alphabet coding plus O(1) rank/select/count queries over strings.

Symbol codes live in [1..d] and string positions are 1-based everywhere.
Maps and indexes are immutable after construction and safe to share
between threads and computations.
"""

from itertools import chain, repeat
from typing import List, Optional, Sequence, Tuple

MAX_ALPHABET = 1 << 16


class UnknownSymbol(ValueError):
    """A string contains a symbol absent from the alphabet map."""


class AlphabetTooLarge(ValueError):
    """The inputs contain more distinct symbols than supported."""


class AlphabetMap:
    """Bijection between raw symbols and dense codes in [1..d]."""

    __slots__ = ("external_symbols", "d", "_codes")

    def __init__(self, external_symbols: Sequence) -> None:
        self.external_symbols = tuple(external_symbols)
        self.d = len(self.external_symbols)
        if self.d > MAX_ALPHABET:
            raise AlphabetTooLarge(
                f"{self.d} distinct symbols exceed the {MAX_ALPHABET} limit"
            )
        self._codes = {sym: code for code, sym in enumerate(self.external_symbols, 1)}
        if len(self._codes) != self.d:
            raise ValueError("alphabet symbols must be distinct")

    def code_of(self, symbol) -> int:
        try:
            return self._codes[symbol]
        except KeyError:
            raise UnknownSymbol(f"symbol {symbol!r} has no code") from None

    def raw_of(self, code: int):
        if not 1 <= code <= self.d:
            raise ValueError(f"code {code} outside [1..{self.d}]")
        return self.external_symbols[code - 1]

    def encode(self, raw: Sequence) -> Tuple[int, ...]:
        codes = self._codes
        try:
            return tuple(codes[sym] for sym in raw)
        except KeyError as exc:
            raise UnknownSymbol(f"symbol {exc.args[0]!r} has no code") from None

    def __len__(self) -> int:
        return self.d

    def __repr__(self) -> str:
        return f"AlphabetMap(d={self.d})"


def build_alphabet(source: Sequence, target: Sequence) -> AlphabetMap:
    """Collect the distinct symbols of both strings into dense codes.

    Codes follow first-occurrence order scanning the target then the
    source, so a given input pair always produces the same coding.
    """
    seen = dict.fromkeys(chain(target, source))
    if len(seen) > MAX_ALPHABET:
        raise AlphabetTooLarge(
            f"{len(seen)} distinct symbols exceed the {MAX_ALPHABET} limit"
        )
    return AlphabetMap(tuple(seen))


class IndexedString:
    """A coded string with prefix-count and occurrence-position tables.

    ``rank_table`` holds exactly d rows of length len+1; the row for code
    a gives the number of a's in every prefix.  ``select_table`` lists,
    per code, the 1-based positions of its occurrences in order.
    """

    __slots__ = ("alphabet", "symbols", "rank_table", "select_table", "per_symbol_count")

    def __init__(self, symbols: Tuple[int, ...], alphabet: AlphabetMap) -> None:
        self.alphabet = alphabet
        self.symbols = symbols
        n = len(symbols)
        d = alphabet.d
        positions: List[List[int]] = [[] for _ in range(d)]
        for pos, code in enumerate(symbols, 1):
            positions[code - 1].append(pos)
        rank_rows: List[List[int]] = []
        for occ in positions:
            # a row is flat runs of each prefix count, one run per gap
            bounds = [0] + occ
            gaps = [b - a for a, b in zip(bounds, bounds[1:])]
            gaps.append(n + 1 - bounds[-1])
            rank_rows.append(
                list(chain.from_iterable(map(repeat, range(len(occ) + 1), gaps)))
            )
        self.rank_table = rank_rows
        self.select_table = positions
        self.per_symbol_count = [len(occ) for occ in positions]

    def __len__(self) -> int:
        return len(self.symbols)

    def code_at(self, position: int) -> int:
        """Symbol code at a 1-based position."""
        if not 1 <= position <= len(self.symbols):
            raise ValueError(f"position {position} outside [1..{len(self.symbols)}]")
        return self.symbols[position - 1]

    def __repr__(self) -> str:
        return f"IndexedString(len={len(self.symbols)}, d={self.alphabet.d})"


def index_string(raw: Sequence, alphabet: AlphabetMap) -> IndexedString:
    """Code a raw string and precompute its query tables."""
    return IndexedString(alphabet.encode(raw), alphabet)


def rank(indexed: IndexedString, i: int, code: int) -> int:
    """Number of occurrences of ``code`` in the length-``i`` prefix."""
    if not 0 <= i <= len(indexed.symbols):
        raise ValueError(f"prefix length {i} outside [0..{len(indexed.symbols)}]")
    if not 1 <= code <= indexed.alphabet.d:
        raise ValueError(f"code {code} outside [1..{indexed.alphabet.d}]")
    return indexed.rank_table[code - 1][i]


def select(indexed: IndexedString, k: int, code: int) -> Optional[int]:
    """Position of the k-th occurrence of ``code``, or None if there is none."""
    if k < 1:
        raise ValueError(f"occurrence index {k} must be at least 1")
    if not 1 <= code <= indexed.alphabet.d:
        raise ValueError(f"code {code} outside [1..{indexed.alphabet.d}]")
    occurrences = indexed.select_table[code - 1]
    if k > len(occurrences):
        return None
    return occurrences[k - 1]


def count(indexed: IndexedString, i: int, code: int) -> int:
    """Number of occurrences of ``code`` in the suffix starting at position ``i``."""
    if not 1 <= i <= len(indexed.symbols) + 1:
        raise ValueError(f"suffix start {i} outside [1..{len(indexed.symbols) + 1}]")
    if not 1 <= code <= indexed.alphabet.d:
        raise ValueError(f"code {code} outside [1..{indexed.alphabet.d}]")
    row = indexed.rank_table[code - 1]
    return row[-1] - row[i - 1]
