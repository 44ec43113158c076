import itertools
import random

import pytest
from hypothesis import given, strategies as st

from peano_words.errors import CapacityError, DomainError
from peano_words.wordfile import MAGIC, load_word, pack_letters, save_word, unpack_letters, write_packed
from peano_words.words import (
    Letter,
    TransformKind,
    _raw_word,
    apply_transform,
    build_word,
    iter_chunks,
    letter_at,
    stream_letters,
    structural_counts,
    word_length,
)

X2 = "214112321233432"

words_1234 = st.text(alphabet="1234", max_size=14)


@pytest.mark.parametrize("n, expected", [(1, 3), (2, 15), (3, 63), (31, 4**31 - 1)])
def test_word_length(n, expected):
    assert word_length(n) == expected


@pytest.mark.parametrize("n", [0, 32, -1])
def test_word_length_range(n):
    with pytest.raises(DomainError, match="31"):
        word_length(n)


def test_build_word_published():
    assert str(build_word(1)) == "123"
    assert str(build_word(2)) == X2


def test_build_word_n3_by_hand():
    # phi1(X_2): reverse 234332123211412, then 1->4,2->1,3->2,4->3
    phi1 = "123221412144341"
    phi2 = "341443234322123"
    expected = phi1 + "1" + X2 + "2" + X2 + "3" + phi2
    assert str(build_word(3)) == expected
    assert len(expected) == 63


@pytest.mark.parametrize("n", range(2, 9))
def test_decomposition(n):
    prev = build_word(n - 1).data
    expected = (
        apply_transform(prev, "phi1") + b"1" + prev + b"2" + prev + b"3" + apply_transform(prev, "phi2")
    )
    assert build_word(n).data == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_end_letters_and_length(n):
    w = build_word(n)
    assert len(w) == 4**n - 1
    if n % 2:
        assert (w.first, w.last) == (Letter.UP, Letter.DOWN)
    else:
        assert (w.first, w.last) == (Letter.RIGHT, Letter.RIGHT)


def test_build_word_cap():
    with pytest.raises(CapacityError, match="stream"):
        build_word(13)
    with pytest.raises(CapacityError):
        build_word(5, cap=4)


@pytest.mark.parametrize(
    "word, kind, expected",
    [("123", "phi1", b"214"), ("123", "phi2", b"432"), ("1", "phi1", b"4"), ("", "phi2", b"")],
)
def test_apply_transform(word, kind, expected):
    assert apply_transform(word, kind) == expected


def test_transform_relabels_are_inverse():
    t1, t2 = TransformKind.PHI1.table, TransformKind.PHI2.table
    for v in b"1234":
        assert t2[t1[v]] == v


@given(words_1234)
def test_transform_pairing(w):
    once = apply_transform(w, TransformKind.PHI1)
    assert len(once) == len(w)
    assert apply_transform(once, TransformKind.PHI2) == w.encode()
    assert apply_transform(apply_transform(w, "phi2"), "phi1") == w.encode()


def test_transform_pairing_exhaustive_short():
    for length in range(0, 6):
        for letters in itertools.product("1234", repeat=length):
            w = "".join(letters)
            assert apply_transform(apply_transform(w, "phi1"), "phi2") == w.encode()


def test_transform_rejects_bad_letters():
    with pytest.raises(DomainError):
        apply_transform("125", "phi1")


@pytest.mark.parametrize("n, i, expected", [(2, 0, 2), (2, 7, 2), (1, 2, 3)])
def test_letter_at_examples(n, i, expected):
    assert letter_at(n, i) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_letter_at_matches_word(n):
    data = build_word(n).data
    assert bytes(48 + letter_at(n, i) for i in range(len(data))) == data


def test_letter_at_range():
    with pytest.raises(IndexError):
        letter_at(2, 15)
    with pytest.raises(IndexError):
        letter_at(2, -1)
    assert letter_at(31, 4**31 - 2) == 3
    assert letter_at(30, 4**30 - 2) == 2


def test_stream_examples():
    assert list(itertools.islice(stream_letters(2), 5)) == [2, 1, 4, 1, 1]
    assert list(stream_letters(1)) == [1, 2, 3]
    assert sum(1 for _ in stream_letters(3)) == 63


@pytest.mark.parametrize("n", [9, 10])
def test_stream_matches_recurrence_beyond_chunk_level(n):
    assert b"".join(iter_chunks(n)) == _raw_word(n)


def test_stream_first_last_and_structural_counts():
    s = stream_letters(20)
    assert (s.first, s.last) == (2, 2)
    assert len(s) == 4**20 - 1
    for n in range(1, 9):
        data = build_word(n).data
        assert structural_counts(n) == tuple(data.count(c) for c in b"1234")


@given(st.text(alphabet="1234", max_size=41))
def test_pack_roundtrip(w):
    data = w.encode()
    assert unpack_letters(pack_letters(data), len(data)) == data


def test_pack_bit_order():
    # letters 1,2,3,4 -> values 0,1,2,3 at bits 0,2,4,6
    assert pack_letters(b"1234") == bytes([0b11100100])
    assert pack_letters(b"4") == bytes([0b11])


def test_word_files(tmp_path):
    w = build_word(3)
    save_word(tmp_path / "w.txt", w)
    assert (tmp_path / "w.txt").read_bytes() == w.data + b"\n"
    assert load_word(tmp_path / "w.txt") == (None, w.data)

    save_word(tmp_path / "w.bin", w, n=3, fmt="packed")
    blob = (tmp_path / "w.bin").read_bytes()
    assert blob[:8] == MAGIC and blob[8] == 3
    assert int.from_bytes(blob[9:17], "little") == 63
    assert len(blob) == 17 + 16
    assert load_word(tmp_path / "w.bin") == (3, w.data)


def test_streamed_packing_matches_whole(tmp_path):
    n = 9
    with open(tmp_path / "s.bin", "wb") as fh:
        write_packed(fh, n, word_length(n), iter_chunks(n))
    assert load_word(tmp_path / "s.bin") == (n, build_word(n).data)


def test_random_positions_n8():
    data = build_word(8).data
    rng = random.Random(7)
    for _ in range(2000):
        i = rng.randrange(len(data))
        assert letter_at(8, i) == data[i] - 48
