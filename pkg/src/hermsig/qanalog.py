"""Gaussian q-analogues as integer coefficient lists (index = power of q)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


def q_integer(k: int) -> list[int]:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return [1] * k if k > 0 else [0]


def q_factorial(k: int) -> list[int]:
    out = [1]
    for i in range(1, k + 1):
        out = poly_mul(out, q_integer(i))
    return out


@lru_cache(maxsize=None)
def _binomial(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or k > n:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    shifted = [0] * k + list(_binomial(n - 1, k))
    return tuple(poly_add(list(_binomial(n - 1, k - 1)), shifted))


def gaussian_binomial(n: int, k: int) -> list[int]:
    return list(_binomial(n, k))


def q_multinomial(parts: Iterable[int]) -> list[int]:
    """[n; k_1, ..., k_s]_q for n = sum(parts), via iterated binomials."""
    out, total = [1], 0
    for k in parts:
        total += k
        out = poly_mul(out, gaussian_binomial(total, k))
    return out
