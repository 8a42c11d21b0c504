"""Fundamental word primitives: periods, borders, rotations, prime words.

A word is an immutable sequence of non-negative integer symbol ids together
with an explicit alphabet size.  Integer ids (rather than characters) are
used because the alphabet-doubling family grows its alphabet without bound.
Positions are 1-based in all reported coordinates, matching the usual
convention of the combinatorics-on-words literature; internally Python's
0-based indexing is used.

Text format: one word per line.  Words over an alphabet of size at most 26
render as lowercase letters a-z; larger alphabets render as comma-separated
decimal ids.
"""

from __future__ import annotations

from dataclasses import dataclass

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class WordFormatError(ValueError):
    """Malformed word text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Word:
    """An immutable word over the integer alphabet {0, ..., alphabet_size-1}."""

    symbols: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 0:
            raise ValueError("alphabet_size must be non-negative")
        for c in self.symbols:
            if not (0 <= c < self.alphabet_size):
                raise ValueError(
                    f"symbol id {c} out of range for alphabet of size {self.alphabet_size}"
                )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    @staticmethod
    def from_letters(text: str) -> "Word":
        """Build a word from lowercase letters, a=0, b=1, ..."""
        ids = tuple(ord(c) - ord("a") for c in text)
        bad = [c for c in ids if not 0 <= c < 26]
        if bad:
            raise ValueError(f"letters must be a-z, got id {bad[0]}")
        return Word(ids, max(ids) + 1 if ids else 0)

    @staticmethod
    def from_ids(ids, alphabet_size: int | None = None) -> "Word":
        ids = tuple(ids)
        if alphabet_size is None:
            alphabet_size = max(ids) + 1 if ids else 0
        return Word(ids, alphabet_size)

    def factor(self, start: int, end: int) -> "Word":
        """The factor at 1-based inclusive positions [start, end]."""
        if not (1 <= start <= end <= len(self.symbols)):
            raise ValueError(f"factor [{start}..{end}] out of range")
        return Word(self.symbols[start - 1 : end], self.alphabet_size)

    def to_text(self) -> str:
        if self.alphabet_size <= 26:
            return "".join(_LETTERS[c] for c in self.symbols)
        return ",".join(str(c) for c in self.symbols)


def parse_word(text: str, line: int = 1) -> Word:
    """Parse one line of word text (letters a-z, or comma-separated ids)."""
    stripped = text.strip()
    if not stripped:
        raise WordFormatError("empty word", line, 1)
    if all(c in _LETTERS for c in stripped):
        return Word.from_letters(stripped)
    # comma-separated integer ids
    ids = []
    for part in stripped.split(","):
        token = part.strip()
        col = text.index(part) + 1
        if not token or not token.isdigit():
            offending = token if token else part
            # pinpoint the first character that is neither digit, comma nor space
            for i, c in enumerate(text):
                if c not in "0123456789, \t\n":
                    raise WordFormatError(f"unexpected character {c!r}", line, i + 1)
            raise WordFormatError(f"bad symbol id {offending!r}", line, col)
        ids.append(int(token))
    return Word.from_ids(ids)


def _require_nonempty(w: Word, op: str):
    if len(w.symbols) == 0:
        raise ValueError(f"empty word has no {op}")


def _border(seq) -> int:
    """Length of the longest proper prefix of seq that is also its suffix."""
    n = len(seq)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        c = seq[i]
        while k and seq[k] != c:
            k = fail[k - 1]
        if seq[k] == c:
            k += 1
        fail[i] = k
    return fail[-1] if n else 0


def border_length(w: Word) -> int:
    """Longest proper prefix of w that is also a suffix of w.

    >>> border_length(Word.from_letters("abab"))
    2
    """
    _require_nonempty(w, "border")
    return _border(w.symbols)


def period(w: Word) -> int:
    """The shortest period p >= 1 with w[i] == w[i+p] for all valid i.

    >>> period(Word.from_letters("abab"))
    2
    """
    _require_nonempty(w, "period")
    return len(w.symbols) - _border(w.symbols)


def primitive_root(w: Word) -> Word:
    """The shortest x with x**k == w; equals w iff w is primitive."""
    _require_nonempty(w, "primitive root")
    n = len(w.symbols)
    p = n - _border(w.symbols)
    if n % p == 0:
        return Word(w.symbols[:p], w.alphabet_size)
    return w


def is_primitive(w: Word) -> bool:
    return len(primitive_root(w)) == len(w)


def _extreme_rotation_shift(seq, use_max: bool) -> int:
    """Starting index of the lexicographically minimal (or maximal) rotation.

    Two-candidate comparison scan, O(n); ties resolve to the smaller index.
    """
    n = len(seq)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = seq[(i + k) % n]
        b = seq[(j + k) % n]
        if a == b:
            k += 1
            continue
        if (a > b) != use_max:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def min_rotation_shift(seq) -> int:
    return _extreme_rotation_shift(seq, use_max=False)


def max_rotation_shift(seq) -> int:
    return _extreme_rotation_shift(seq, use_max=True)


def min_rotation(w: Word) -> Word:
    """The lexicographically smallest cyclic rotation of w."""
    _require_nonempty(w, "rotation")
    d = min_rotation_shift(w.symbols)
    return Word(w.symbols[d:] + w.symbols[:d], w.alphabet_size)


def max_rotation(w: Word) -> Word:
    """The lexicographically largest cyclic rotation of w."""
    _require_nonempty(w, "rotation")
    d = max_rotation_shift(w.symbols)
    return Word(w.symbols[d:] + w.symbols[:d], w.alphabet_size)


def is_prime(w: Word) -> bool:
    """True iff w is primitive and extremal (min or max) among its rotations.

    Prime words are border-free for length >= 2.
    """
    _require_nonempty(w, "primality")
    if not is_primitive(w):
        return False
    return w == min_rotation(w) or w == max_rotation(w)
