"""Pattern notation.

    pattern := [ "[" | "(" ] block { "-" block } [ "]" | ")" ]
    block   := atom { atom }
    atom    := letter [ "^" number ]
    letter  := "1" | "2" | "3" | "4"

A dash separates blocks; letters inside a block must be matched at adjacent
positions. ``y^k`` is k dash-separated copies of ``y`` and is only allowed
as the sole atom of its block. "[" / "]" anchor the first / last pattern
letter to the first / last letter of the word; "(" and ")" are plain
delimiters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PatternSyntaxError

Block = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    blocks: tuple[Block, ...]
    left_anchor: bool = False
    right_anchor: bool = False

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a pattern needs at least one block")
        for block in self.blocks:
            if not block or any(v not in (1, 2, 3, 4) for v in block):
                raise ValueError(f"invalid block {block!r}")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(v for block in self.blocks for v in block)

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return format_pattern(self)


def format_pattern(p: Pattern) -> str:
    body = "-".join("".join(map(str, block)) for block in p.blocks)
    return ("[" if p.left_anchor else "") + body + ("]" if p.right_anchor else "")


def parse_pattern(text: str) -> Pattern:
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    pos = 0
    left = right = False
    if s[:1] in ("[", "("):
        left = s[0] == "["
        pos = 1
    end = len(s)
    if end > pos and s[-1] in ("]", ")"):
        right = s[-1] == "]"
        end -= 1

    def fail(msg: str, at: int):
        raise PatternSyntaxError(msg, text, offset + at)

    blocks: list[Block] = []
    while True:
        # one block: atoms until "-" or end
        atoms: list[tuple[int, int | None]] = []
        start = pos
        while pos < end and s[pos] != "-":
            ch = s[pos]
            if ch not in "1234":
                fail(f"unexpected {ch!r}", pos)
            letter = int(ch)
            pos += 1
            exponent = None
            if pos < end and s[pos] == "^":
                pos += 1
                digits_at = pos
                while pos < end and s[pos].isdigit():
                    pos += 1
                if pos == digits_at:
                    fail("expected a number after '^'", digits_at)
                exponent = int(s[digits_at:pos])
            atoms.append((letter, exponent))
        if not atoms:
            fail("empty block", start)
        if len(atoms) == 1 and atoms[0][1] is not None:
            letter, exponent = atoms[0]
            blocks.extend((letter,) for _ in range(exponent))
        else:
            if any(e is not None for _, e in atoms):
                fail("'^' is only allowed on a letter that forms its own block", start)
            blocks.append(tuple(v for v, _ in atoms))
        if pos >= end:
            break
        pos += 1  # the dash
        if pos >= end:
            fail("pattern ends with '-'", pos)

    if not blocks:
        fail("pattern is empty after expanding exponents", 0)
    return Pattern(tuple(blocks), left, right)


def as_pattern(p: Pattern | str) -> Pattern:
    return p if isinstance(p, Pattern) else parse_pattern(p)
