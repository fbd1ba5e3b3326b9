"""Exact integer combinatorics behind the counting engine.

Everything here returns Python ints (arbitrary precision) and raises
DomainError on arguments outside the defined range.  The recurrences are
memoized; the caches live for the process.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Iterator

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class IntegerPartitionSpec:
    """A partition of n by multiplicities: parts[i] copies of the part i+1.

    Trailing zeros are trimmed, so the tuple length is the largest part
    (empty for n = 0).
    """

    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum((i + 1) * m for i, m in enumerate(self.parts))

    def multiplicity(self, part: int) -> int:
        return self.parts[part - 1] if 1 <= part <= len(self.parts) else 0


def integer_partitions(n: int) -> Iterator[IntegerPartitionSpec]:
    """All partitions of n, largest-part-first (reverse lexicographic).

    Yielded as multiplicity vectors; n = 0 yields the single empty spec.
    """
    if n < 0:
        raise DomainError(f"cannot partition {n}")

    def rec(remaining: int, biggest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, biggest), 0, -1):
            most = remaining // part
            for mult in range(most, 0, -1):
                for rest in rec(remaining - part * mult, part - 1):
                    vec = [0] * part
                    vec[part - 1] = mult
                    for i, m in enumerate(rest):
                        vec[i] = m
                    yield tuple(vec)

    for vec in rec(n, n):
        yield IntegerPartitionSpec(vec)


def pi_count(spec: IntegerPartitionSpec) -> int:
    """Number of set partitions of {1..n} whose block sizes realize spec.

    n! divided by the product over parts i of (multiplicity! * (i!)^multiplicity).
    """
    n = spec.n
    num = math.factorial(n)
    den = 1
    for i, mult in enumerate(spec.parts):
        if mult:
            den *= math.factorial(mult) * math.factorial(i + 1) ** mult
    q, r = divmod(num, den)
    assert r == 0
    return q


def bell(n: int) -> int:
    """Number of set partitions of an n-set."""
    if n < 0:
        raise DomainError(f"bell({n})")
    return sum(stirling2(n, r) for r in range(n + 1)) if n else 1


@cache
def stirling2(n: int, r: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into r blocks."""
    if n < 0 or r < 0:
        raise DomainError(f"stirling2({n},{r})")
    if n == 0:
        return 1 if r == 0 else 0
    if r == 0 or r > n:
        return 0
    if r == n:
        return 1
    return r * stirling2(n - 1, r) + stirling2(n - 1, r - 1)


def odd_double_factorial(k: int) -> int:
    """k!! for odd k >= -1, the number of perfect matchings on k+1 points."""
    if k < -1 or k % 2 == 0:
        raise DomainError(f"odd_double_factorial({k})")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@cache
def involutions(n: int) -> int:
    """Number of involutions of an n-set (equivalently partial matchings)."""
    if n < 0:
        raise DomainError(f"involutions({n})")
    if n <= 1:
        return 1
    return involutions(n - 1) + (n - 1) * involutions(n - 2)


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n, error when either argument is negative."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial({n},{k})")
    return math.comb(n, k)


_BASE_SEQUENCES = {
    "bell": lambda args: bell(*args),
    "stirling2": lambda args: stirling2(*args),
    "odd_double_factorial": lambda args: odd_double_factorial(*args),
    "involutions": lambda args: involutions(*args),
    "binomial": lambda args: binomial(*args),
}


def base_sequence(kind: str, *args: int) -> int:
    """Dispatch by name onto the base sequences above (for the CLI and cache)."""
    try:
        fn = _BASE_SEQUENCES[kind]
    except KeyError:
        raise DomainError(f"unknown sequence {kind!r}") from None
    return fn(args)


# --------------------------------------------------------------------------
# join-universal partition pairs

def e_nrs(n: int, r: int, s: int) -> int:
    """Number of pairs (upper, lower) of set partitions of {1..n} with r and
    s blocks respectively whose join is the one-block partition.

    Arguments must satisfy 1 <= r, s <= n.
    """
    if n < 1 or not (1 <= r <= n) or not (1 <= s <= n):
        raise DomainError(f"e_nrs({n},{r},{s})")
    return _e_pairs(n, r, s)


@cache
def _e_pairs(n: int, r: int, s: int) -> int:
    """e_nrs without the argument guard: out-of-range indices count zero."""
    if n < 1 or r < 1 or s < 1 or r > n or s > n:
        return 0
    if s == 1:
        return stirling2(n, r)
    if r == 1:
        return stirling2(n, s)
    total = (
        s * _e_pairs(n - 1, r - 1, s)
        + r * _e_pairs(n - 1, r, s - 1)
        + r * s * _e_pairs(n - 1, r, s)
    )
    for m in range(1, n - 1):
        cm = math.comb(n - 2, m)
        inner = 0
        for a in range(1, r):
            for b in range(1, s):
                w = a * (s - b) + b * (r - a)
                if w:
                    inner += w * _e_pairs(m, a, b) * _e_pairs(n - m - 1, r - a, s - b)
        total += cm * inner
    return total
