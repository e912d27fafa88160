"""Small helpers for vertex sets stored as Python int bitmasks."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import string


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_indices(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def rotl(mask: int, n: int) -> int:
    """Rotate an n-bit mask left by one (bit i moves to bit i+1 mod n)."""
    full = (1 << n) - 1
    return ((mask << 1) | (mask >> (n - 1))) & full


def rotr(mask: int, n: int) -> int:
    full = (1 << n) - 1
    return ((mask >> 1) | ((mask & 1) << (n - 1))) & full


def default_labels(n: int) -> tuple[str, ...]:
    """Short display labels: a..z for small universes, v<i> beyond."""
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < len(letters) else f"v{i}" for i in range(n))
