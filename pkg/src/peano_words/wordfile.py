"""Word file formats.

text:   one line of ASCII digits '1'..'4' followed by a newline.
packed: b"PEANOW01", one byte n, 8-byte little-endian length, then the
        letters at 2 bits each (value - 1), little-endian within each byte.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import BinaryIO, Iterable

import numpy as np

from .errors import PeanoError
from .words import ALPHABET, as_bytes

MAGIC = b"PEANOW01"
_HEADER = struct.Struct("<8sBQ")


def pack_letters(data: bytes) -> bytes:
    """2-bit pack ASCII letters; a trailing partial byte is zero-padded."""
    vals = np.frombuffer(data, dtype=np.uint8) - np.uint8(49)
    pad = (-len(vals)) % 4
    if pad:
        vals = np.concatenate([vals, np.zeros(pad, dtype=np.uint8)])
    quads = vals.reshape(-1, 4)
    packed = quads[:, 0] | (quads[:, 1] << 2) | (quads[:, 2] << 4) | (quads[:, 3] << 6)
    return packed.astype(np.uint8).tobytes()


def unpack_letters(packed: bytes, length: int) -> bytes:
    raw = np.frombuffer(packed, dtype=np.uint8)
    if len(raw) * 4 < length:
        raise PeanoError(f"packed payload holds {len(raw) * 4} letters, header says {length}")
    out = np.empty((len(raw), 4), dtype=np.uint8)
    for k in range(4):
        out[:, k] = (raw >> (2 * k)) & 3
    return (out.reshape(-1)[:length] + np.uint8(49)).tobytes()


def write_packed(fh: BinaryIO, n: int, length: int, chunks: Iterable[bytes]) -> None:
    """Stream-pack ``chunks`` to ``fh``; only a <4-letter carry is buffered between chunks."""
    fh.write(_HEADER.pack(MAGIC, n, length))
    carry = b""
    written = 0
    for chunk in chunks:
        buf = carry + chunk
        cut = len(buf) - len(buf) % 4
        fh.write(pack_letters(buf[:cut]))
        carry = buf[cut:]
        written += len(chunk)
    if carry:
        fh.write(pack_letters(carry))
    if written != length:
        raise PeanoError(f"wrote {written} letters, expected {length}")


def write_text(fh: BinaryIO, chunks: Iterable[bytes]) -> None:
    for chunk in chunks:
        fh.write(chunk)
    fh.write(b"\n")


def save_word(path: str | Path, word, n: int = 0, fmt: str = "text") -> None:
    data = as_bytes(word)
    with open(path, "wb") as fh:
        if fmt == "packed":
            write_packed(fh, n, len(data), [data])
        elif fmt == "text":
            write_text(fh, [data])
        else:
            raise ValueError(f"unknown format {fmt!r}")


def load_word(path: str | Path, alphabet: bytes = ALPHABET) -> tuple[int | None, bytes]:
    """Read either format (detected by the magic). Returns (n or None, letters).

    ``alphabet`` restricts the symbols accepted in text files.
    """
    blob = Path(path).read_bytes()
    if blob.startswith(MAGIC):
        if len(blob) < _HEADER.size:
            raise PeanoError(f"{path}: truncated packed header")
        _, n, length = _HEADER.unpack_from(blob)
        return n, unpack_letters(blob[_HEADER.size :], length)
    return None, as_bytes(blob.strip(), alphabet)
