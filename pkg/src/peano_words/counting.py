"""Occurrence counting for patterns in words over {1, 2, 3, 4}.

An occurrence of a pattern with r letters is an increasing index sequence
i_1 < ... < i_r such that letters of one block sit at consecutive positions,
the chosen word letters are order- and equality-isomorphic to the pattern
letters, and the anchors pin i_1 = 0 / i_r = |w| - 1.

``count_occurrences`` is the exact oracle; ``count_fast`` covers the
pattern families that reduce to letter frequencies or adjacent pairs and
also works on streamed words of any length.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple

import numpy as np

from .errors import CapacityError, DomainError
from .patterns import Pattern, as_pattern
from .words import DEFAULT_CAP, LetterStream, as_bytes, structural_counts

# the oracles also accept general digit words such as the permutation 516423
DIGITS = b"0123456789"

ORACLE_MAX_LENGTH = 4**DEFAULT_CAP - 1
NAIVE_MAX_WORD = 14
NAIVE_MAX_LETTERS = 5


class FrequencyVector(NamedTuple):
    ones: int
    twos: int
    threes: int
    fours: int

    def of(self, letter: int) -> int:
        return self[letter - 1]


class AdjacencyStats(NamedTuple):
    rises: int
    descents: int
    equals: int


def _chunks(word) -> Iterable[bytes]:
    if isinstance(word, LetterStream):
        return word.chunks()
    return (as_bytes(word),)


def letter_frequencies(word) -> FrequencyVector:
    """Per-letter counts in one pass; accepts materialized words or a LetterStream."""
    counts = [0, 0, 0, 0]
    for chunk in _chunks(word):
        for v in range(4):
            counts[v] += chunk.count(49 + v)
    return FrequencyVector(*counts)


def adjacency_stats(word) -> AdjacencyStats:
    """Adjacent strict rises, strict descents and equal pairs."""
    rises = descents = equals = 0
    prev = None
    for chunk in _chunks(word):
        if not chunk:
            continue
        arr = np.frombuffer(chunk, dtype=np.uint8).astype(np.int8)
        if prev is not None:
            if prev < arr[0]:
                rises += 1
            elif prev > arr[0]:
                descents += 1
            else:
                equals += 1
        diff = np.diff(arr)
        rises += int(np.count_nonzero(diff > 0))
        descents += int(np.count_nonzero(diff < 0))
        equals += int(np.count_nonzero(diff == 0))
        prev = arr[-1]
    return AdjacencyStats(rises, descents, equals)


def value_assignments(p: Pattern, alphabet: Iterable[int] = (1, 2, 3, 4)) -> Iterable[dict[int, int]]:
    """Order-preserving injective maps from the pattern's distinct letters into ``alphabet``."""
    distinct = sorted(set(p.letters))
    for values in combinations(sorted(alphabet), len(distinct)):
        yield dict(zip(distinct, values))


def _match_starts(data: bytes, needle: bytes) -> list[int]:
    starts = []
    i = data.find(needle)
    while i >= 0:
        starts.append(i)
        i = data.find(needle, i + 1)
    return starts


def count_embeddings(data: bytes, blocks: list[bytes], left: bool = False, right: bool = False) -> int:
    """Count placements of concrete letter blocks at increasing, non-overlapping positions.

    Sparse DP over block start positions: each block keeps (start, ways) pairs and
    the next block accumulates ways from every earlier start that ends before it.
    """
    if not blocks:
        return 1
    size = len(data)
    cache: dict[bytes, list[int]] = {}
    prev_starts: list[int] = []
    prev_ways: list[int] = []
    prev_len = 0
    last = len(blocks) - 1
    for idx, block in enumerate(blocks):
        if block not in cache:
            cache[block] = _match_starts(data, block)
        starts = cache[block]
        if idx == 0 and left:
            starts = [0] if starts and starts[0] == 0 else []
        if idx == last and right:
            tail = size - len(block)
            starts = [tail] if tail in starts[-1:] else []
        if idx == 0:
            ways = [1] * len(starts)
        else:
            ways = []
            j = acc = 0
            n_prev = len(prev_starts)
            for s in starts:
                limit = s - prev_len
                while j < n_prev and prev_starts[j] <= limit:
                    acc += prev_ways[j]
                    j += 1
                ways.append(acc)
            # leading zero-way starts never contribute
            k = 0
            while k < len(ways) and ways[k] == 0:
                k += 1
            starts, ways = starts[k:], ways[k:]
        if not starts:
            return 0
        prev_starts, prev_ways, prev_len = starts, ways, len(block)
    return sum(prev_ways)


def count_occurrences(word, pattern: Pattern | str) -> int:
    """Exact occurrence count (the oracle).

    Every occurrence fixes one concrete value per distinct pattern letter, so
    the count is the sum over order-preserving value assignments of the number
    of embeddings of the concretized blocks.
    """
    data = as_bytes(word, DIGITS)
    p = as_pattern(pattern)
    if len(data) > ORACLE_MAX_LENGTH:
        raise CapacityError(f"word of length {len(data)} exceeds the oracle bound {ORACLE_MAX_LENGTH}")
    present = {b - 48 for b in set(data)}
    total = 0
    for assign in value_assignments(p, present):
        blocks = [bytes(48 + assign[v] for v in block) for block in p.blocks]
        if p.left_anchor and not data.startswith(blocks[0]):
            continue
        if p.right_anchor and not data.endswith(blocks[-1]):
            continue
        total += count_embeddings(data, blocks, p.left_anchor, p.right_anchor)
    return total


def _sign(a: int) -> int:
    return (a > 0) - (a < 0)


def count_occurrences_naive(word, pattern: Pattern | str) -> int:
    """Brute force over all index subsets; for cross-checking on small inputs."""
    data = as_bytes(word, DIGITS)
    p = as_pattern(pattern)
    if len(data) > NAIVE_MAX_WORD or len(p) > NAIVE_MAX_LETTERS:
        raise CapacityError(
            f"naive counting is limited to words of <= {NAIVE_MAX_WORD} letters "
            f"and patterns of <= {NAIVE_MAX_LETTERS} letters"
        )
    letters = p.letters
    r = len(letters)
    # pattern slots that must directly follow their predecessor
    glued = []
    for block in p.blocks:
        glued.extend([False] + [True] * (len(block) - 1))
    count = 0
    for idx in combinations(range(len(data)), r):
        if p.left_anchor and idx[0] != 0:
            continue
        if p.right_anchor and idx[-1] != len(data) - 1:
            continue
        if any(glued[a] and idx[a] != idx[a - 1] + 1 for a in range(1, r)):
            continue
        if all(
            _sign(letters[a] - letters[b]) == _sign(data[idx[a]] - data[idx[b]])
            for a in range(r)
            for b in range(a + 1, r)
        ):
            count += 1
    return count


def _cmp(a: int, b: int) -> int:
    return _sign(a - b)


def count_anchored_run(
    freqs: FrequencyVector | tuple[int, int, int, int],
    first: int,
    last: int,
    kind: str,
    x: int,
    y: int,
    z: int | None = None,
    ell: int = 1,
) -> int:
    """Count [x-y^ell), (x^ell-y] or [x-y^ell-z] from letter frequencies alone.

    ``first``/``last`` are the word's end letters. Each word value v that
    relates to the anchored letter(s) the way the run letter relates to the
    anchor pattern letter(s) contributes C(m_v, ell), where m_v excludes the
    anchor positions holding v.
    """
    freqs = FrequencyVector(*freqs)
    size = sum(freqs)
    if kind == "tau1":
        anchors, run = [(first, x)], y
    elif kind == "tau2":
        anchors, run = [(last, y)], x
    elif kind == "tau3":
        if z is None:
            raise DomainError("tau3 needs z")
        anchors, run = [(first, x), (last, z)], y
    else:
        raise DomainError(f"unknown pattern kind {kind!r}")
    if ell < 0:
        raise DomainError("repetition count must be >= 0")
    if size < len(anchors):
        return 0
    if kind == "tau3" and _cmp(first, last) != _cmp(x, z):
        return 0
    if ell == 0:
        return 1
    total = 0
    for v in range(1, 5):
        if all(_cmp(v, word_val) == _cmp(run, pat_val) for word_val, pat_val in anchors):
            m = freqs.of(v) - sum(1 for word_val, _ in anchors if word_val == v)
            total += comb(m, ell)
    return total


def classify(p: Pattern) -> tuple | None:
    """Recognize the pattern families with a frequency or adjacency shortcut.

    Returns ("adjacent", a, b), ("power", ell), ("tau1", x, y, ell),
    ("tau2", x, y, ell), ("tau3", x, y, z, ell), or None.
    """
    blocks, left, right = p.blocks, p.left_anchor, p.right_anchor
    singles = all(len(b) == 1 for b in blocks)
    if not left and not right:
        if len(blocks) == 1 and len(blocks[0]) == 2:
            return ("adjacent", *blocks[0])
        if singles and len(set(p.letters)) == 1:
            return ("power", len(blocks))
        return None
    if not singles:
        return None
    letters = p.letters
    if left and not right:
        run = letters[1:]
        if len(set(run)) <= 1:
            return ("tau1", letters[0], run[0] if run else letters[0], len(run))
    elif right and not left:
        run = letters[:-1]
        if len(set(run)) <= 1:
            return ("tau2", run[0] if run else letters[-1], letters[-1], len(run))
    elif len(letters) >= 2:
        run = letters[1:-1]
        if len(set(run)) <= 1:
            return ("tau3", letters[0], run[0] if run else letters[0], letters[-1], len(run))
    return None


def _end_letters(word) -> tuple[int, int]:
    if isinstance(word, LetterStream):
        return int(word.first), int(word.last)
    data = as_bytes(word)
    return data[0] - 48, data[-1] - 48


def count_fast(word, pattern: Pattern | str) -> int:
    """Shortcut count for adjacent pairs, 1^ell and the anchored run families.

    Raises DomainError for patterns outside those families.
    """
    p = as_pattern(pattern)
    shape = classify(p)
    if shape is None:
        raise DomainError(f"no fast path for pattern {p}")
    if shape[0] == "adjacent":
        stats = adjacency_stats(word)
        a, b = shape[1:]
        return stats.rises if a < b else stats.descents if a > b else stats.equals
    if isinstance(word, LetterStream):
        freqs = FrequencyVector(*structural_counts(word.n))
    else:
        freqs = letter_frequencies(word)
    if shape[0] == "power":
        return sum(comb(f, shape[1]) for f in freqs)
    if sum(freqs) == 0:
        return 0
    first, last = _end_letters(word)
    if shape[0] == "tau3":
        _, x, y, z, ell = shape
        return count_anchored_run(freqs, first, last, "tau3", x, y, z, ell)
    kind, x, y, ell = shape
    return count_anchored_run(freqs, first, last, kind, x, y, None, ell)
