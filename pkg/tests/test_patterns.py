import pytest
from hypothesis import given, strategies as st

from peano_words.errors import PatternSyntaxError
from peano_words.patterns import Pattern, format_pattern, parse_pattern


@pytest.mark.parametrize(
    "text, blocks, left, right",
    [
        ("2-31", ((2,), (3, 1)), False, False),
        ("[1-2^3)", ((1,), (2,), (2,), (2,)), True, False),
        ("[2-1^0-3]", ((2,), (3,)), True, True),
        ("12", ((1, 2),), False, False),
        ("(1^2-2]", ((1,), (1,), (2,)), False, True),
        ("1^0-4", ((4,),), False, False),
        ("[12-3", ((1, 2), (3,)), True, False),
        ("1^12", tuple((1,) for _ in range(12)), False, False),
    ],
)
def test_parse(text, blocks, left, right):
    p = parse_pattern(text)
    assert p == Pattern(blocks, left, right)


@pytest.mark.parametrize(
    "pattern, text",
    [
        (Pattern(((2,), (3, 1))), "2-31"),
        (Pattern(((1,), (2,), (2,)), left_anchor=True), "[1-2-2"),
        (Pattern(((1,), (2,), (3,)), True, True), "[1-2-3]"),
    ],
)
def test_format(pattern, text):
    assert format_pattern(pattern) == text
    assert parse_pattern(text) == pattern


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("1--2", 2),
        ("1-", 2),
        ("15", 1),
        ("12^2", 0),
        ("1^", 2),
        ("1^0", 0),
        ("[1^0-2^0]", 0),
        ("a", 0),
        ("[]", 1),
    ],
)
def test_parse_errors(text, position):
    with pytest.raises(PatternSyntaxError) as info:
        parse_pattern(text)
    assert info.value.position == position


def test_exponent_block_count():
    for ell in range(0, 8):
        p = parse_pattern(f"[3-1^{ell})")
        assert len(p.blocks) == ell + 1


blocks = st.lists(st.lists(st.integers(1, 4), min_size=1, max_size=3).map(tuple), min_size=1, max_size=5)


@given(blocks, st.booleans(), st.booleans())
def test_roundtrip(bs, left, right):
    p = Pattern(tuple(bs), left, right)
    assert parse_pattern(format_pattern(p)) == p


@st.composite
def pattern_texts(draw):
    parts = []
    for _ in range(draw(st.integers(1, 4))):
        if draw(st.booleans()):
            parts.append(f"{draw(st.integers(1, 4))}^{draw(st.integers(0, 3))}")
        else:
            parts.append("".join(map(str, draw(st.lists(st.integers(1, 4), min_size=1, max_size=3)))))
    opener = draw(st.sampled_from(["", "[", "("]))
    closer = draw(st.sampled_from(["", "]", ")"]))
    return opener + "-".join(parts) + closer


@given(pattern_texts())
def test_text_roundtrip(text):
    try:
        p = parse_pattern(text)
    except PatternSyntaxError:
        return  # fully collapsed exponents
    assert parse_pattern(format_pattern(p)) == p
    assert "^" not in format_pattern(p)
