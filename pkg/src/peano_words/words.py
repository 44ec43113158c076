"""Construction, streaming and random access for the Peano words X_n.

X_1 = 123 and for n >= 2

    X_n = phi1(X_{n-1}) 1 X_{n-1} 2 X_{n-1} 3 phi2(X_{n-1})

where phi1/phi2 reverse a word and relabel its letters by the cyclic
decrement (1->4, 2->1, 3->2, 4->3) or increment (1->2, ..., 4->1).

Words are held as ASCII bytes (b"1".."4") internally; ``Letter`` is the
public view of a single symbol.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .errors import CapacityError, DomainError

MAX_N = 31
DEFAULT_CAP = 12

# chunks emitted by the streaming cursor are transformed copies of X_CHUNK_LEVEL
CHUNK_LEVEL = 8

ALPHABET = b"1234"


class Letter(enum.IntEnum):
    """One move of the curve: 1=up, 2=right, 3=down, 4=left."""

    UP = 1
    RIGHT = 2
    DOWN = 3
    LEFT = 4


_LETTERS = (None, Letter.UP, Letter.RIGHT, Letter.DOWN, Letter.LEFT)


class TransformKind(enum.Enum):
    """Reverse-then-relabel transforms; ``shift`` is the cyclic relabel."""

    PHI1 = "phi1"
    PHI2 = "phi2"

    @property
    def shift(self) -> int:
        return -1 if self is TransformKind.PHI1 else 1

    @property
    def table(self) -> bytes:
        return _shift_table(self.shift)


@lru_cache(maxsize=None)
def _shift_table(shift: int) -> bytes:
    src = bytearray(range(256))
    for v in range(4):
        src[49 + v] = 49 + (v + shift) % 4
    return bytes(src)


def shift_letter(value: int, shift: int) -> int:
    return (value - 1 + shift) % 4 + 1


WordLike = Union["PeanoWord", bytes, bytearray, str, Iterable[int]]


def as_bytes(word: WordLike, alphabet: bytes = ALPHABET) -> bytes:
    """Normalize any accepted word representation to ASCII bytes, validating the alphabet."""
    if isinstance(word, PeanoWord):
        return word.data
    if isinstance(word, (bytes, bytearray)):
        data = bytes(word)
    elif isinstance(word, str):
        data = word.encode("ascii", errors="replace")
    else:
        try:
            data = bytes(48 + int(v) for v in word)
        except ValueError:
            raise DomainError(f"letters must be single digits, got {word!r}") from None
    if data.translate(None, alphabet):
        raise DomainError(f"word contains symbols outside {alphabet.decode()}: {data[:40]!r}")
    return data


@dataclass(frozen=True)
class PeanoWord:
    """The materialized word X_n."""

    n: int
    data: bytes

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, i: int) -> Letter:
        return _LETTERS[self.data[i] - 48]

    def __iter__(self) -> Iterator[Letter]:
        return (_LETTERS[b - 48] for b in self.data)

    def __str__(self) -> str:
        return self.data.decode("ascii")

    def __repr__(self) -> str:
        body = str(self) if len(self) <= 20 else f"{self.data[:17].decode()}..."
        return f"PeanoWord(n={self.n}, {body!r})"

    @property
    def first(self) -> Letter:
        return self[0]

    @property
    def last(self) -> Letter:
        return self[-1]


def _check_n(n: int, upper: int = MAX_N) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= upper:
        raise DomainError(f"iteration index n must be in [1, {upper}], got {n!r}")


def word_length(n: int) -> int:
    """|X_n| = 4**n - 1."""
    _check_n(n)
    return 4**n - 1


def apply_transform(word: WordLike, kind: TransformKind | str) -> bytes:
    """Reverse ``word`` and relabel it by ``kind``; works on any word over 1..4."""
    kind = TransformKind(kind)
    return as_bytes(word)[::-1].translate(kind.table)


@lru_cache(maxsize=None)
def _raw_word(n: int) -> bytes:
    if n == 1:
        return b"123"
    prev = _raw_word(n - 1)
    rev = prev[::-1]
    return b"".join(
        (
            rev.translate(_shift_table(-1)),
            b"1",
            prev,
            b"2",
            prev,
            b"3",
            rev.translate(_shift_table(1)),
        )
    )


def build_word(n: int, cap: int = DEFAULT_CAP) -> PeanoWord:
    """Materialize X_n. Raises CapacityError above ``cap``."""
    _check_n(n)
    if n > cap:
        raise CapacityError(
            f"X_{n} has {4**n - 1} letters, above the materialization cap n={cap}; "
            "use stream_letters() or letter_at() instead"
        )
    if n <= CHUNK_LEVEL:
        return PeanoWord(n, _raw_word(n))
    # larger words are assembled without memoizing them
    return PeanoWord(n, b"".join(iter_chunks(n)))


def letter_at(n: int, i: int) -> Letter:
    """Letter at 0-based position ``i`` of X_n in O(n), without building the word.

    Descends the decomposition tracking the pending cyclic relabel; reversal is
    folded into the position at each step.
    """
    _check_n(n)
    length = 4**n - 1
    if not isinstance(i, int) or not 0 <= i < length:
        raise IndexError(f"position {i!r} out of range for X_{n} (length {length})")
    pos, shift = i, 0
    for m in range(n, 1, -1):
        block = 4 ** (m - 1)  # sub-word length + 1 separator
        q, r = divmod(pos, block)
        if r == block - 1:
            return _LETTERS[shift_letter(q + 1, shift)]
        if q == 0:
            pos, shift = block - 2 - r, shift - 1
        elif q == 3:
            pos, shift = block - 2 - r, shift + 1
        else:
            pos = r
    return _LETTERS[shift_letter(pos + 1, shift)]


@lru_cache(maxsize=16)
def _variant(m: int, reverse: bool, shift: int) -> bytes:
    raw = _raw_word(m)
    if reverse:
        raw = raw[::-1]
    return raw.translate(_shift_table(shift)) if shift else raw


def iter_chunks(n: int) -> Iterator[bytes]:
    """Yield X_n front to back as byte chunks of bounded size.

    Uses an explicit stack of pending (level, reversed, shift) frames, so the
    working memory is O(n) frames plus one cached chunk template per variant.
    """
    _check_n(n)
    stack: list = [(n, False, 0)]
    while stack:
        item = stack.pop()
        if isinstance(item, bytes):
            yield item
            continue
        m, rev, shift = item
        if m <= CHUNK_LEVEL:
            yield _variant(m, rev, shift % 4)
            continue
        sub = m - 1
        pieces = [
            (sub, not rev, (shift - 1) % 4),
            bytes((48 + shift_letter(1, shift),)),
            (sub, rev, shift),
            bytes((48 + shift_letter(2, shift),)),
            (sub, rev, shift),
            bytes((48 + shift_letter(3, shift),)),
            (sub, not rev, (shift + 1) % 4),
        ]
        # reversed frame: pieces in reverse reading order; pop order is LIFO
        if not rev:
            pieces.reverse()
        stack.extend(pieces)


@lru_cache(maxsize=None)
def _shifted_counts(m: int, shift: int) -> tuple[int, int, int, int]:
    """Letter counts of X_m relabeled by ``shift`` (reversal does not change counts)."""
    if m == 1:
        counts = [0, 0, 0, 0]
        for v in (1, 2, 3):
            counts[shift_letter(v, shift) - 1] += 1
        return tuple(counts)
    parts = (
        _shifted_counts(m - 1, (shift - 1) % 4),
        _shifted_counts(m - 1, shift),
        _shifted_counts(m - 1, shift),
        _shifted_counts(m - 1, (shift + 1) % 4),
    )
    counts = [sum(p[v] for p in parts) for v in range(4)]
    for sep in (1, 2, 3):
        counts[shift_letter(sep, shift) - 1] += 1
    return tuple(counts)


def structural_counts(n: int) -> tuple[int, int, int, int]:
    """Letter counts of X_n by walking the decomposition tree's relabels, O(n) work."""
    _check_n(n)
    return _shifted_counts(n, 0)


class LetterStream:
    """Lazy cursor over the letters of X_n.

    Iterating yields ``Letter`` values; ``chunks()`` gives the same content as
    byte chunks for bulk consumers.
    """

    def __init__(self, n: int):
        _check_n(n)
        self.n = n

    def __len__(self) -> int:
        return 4**self.n - 1

    def chunks(self) -> Iterator[bytes]:
        return iter_chunks(self.n)

    def __iter__(self) -> Iterator[Letter]:
        for chunk in iter_chunks(self.n):
            for b in chunk:
                yield _LETTERS[b - 48]

    @property
    def first(self) -> Letter:
        return letter_at(self.n, 0)

    @property
    def last(self) -> Letter:
        return letter_at(self.n, len(self) - 1)


def stream_letters(n: int) -> LetterStream:
    return LetterStream(n)
