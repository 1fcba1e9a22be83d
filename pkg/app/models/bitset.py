"""
Маски подмножеств носителя: бит i установлен, если элемент с индексом i входит в множество
"""
from functools import reduce
from typing import Iterable, Iterator


def bits_to_mask(bits: Iterable[int]) -> int:
    return reduce(lambda x, y: x | y, (1 << b for b in bits), 0)


def iter_bits(mask: int) -> Iterator[int]:
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(order: int) -> int:
    return (1 << order) - 1


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0
