"""Permutations as dense image tables on {0, ..., n-1}.

A permutation is a plain tuple of images; ``compose(a, b)`` applies b first,
then a, so ``compose(a, b)[x] == a[b[x]]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Perm = tuple[int, ...]


def check_perm(p: Perm) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation of 0..n-1")


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def power(a: Perm, e: int) -> Perm:
    if e < 0:
        a, e = inverse(a), -e
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = compose(base, result)
        base = compose(base, base)
        e >>= 1
    return result


def order(a: Perm) -> int:
    """Least e >= 1 with a**e the identity (lcm of cycle lengths)."""
    n = len(a)
    seen = [False] * n
    out = 1
    for v in range(n):
        if seen[v]:
            continue
        length = 0
        w = v
        while not seen[w]:
            seen[w] = True
            w = a[w]
            length += 1
        out = math.lcm(out, length)
    return out


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of a permutation; each orbit starts at its least vertex and is
    ordered by successive application of the permutation."""

    orbit_of: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]


def orbits(a: Perm) -> OrbitPartition:
    n = len(a)
    orbit_of = [-1] * n
    out: list[tuple[int, ...]] = []
    for v in range(n):
        if orbit_of[v] >= 0:
            continue
        idx = len(out)
        cyc = [v]
        orbit_of[v] = idx
        w = a[v]
        while w != v:
            orbit_of[w] = idx
            cyc.append(w)
            w = a[w]
        out.append(tuple(cyc))
    return OrbitPartition(tuple(orbit_of), tuple(out))


def is_semiregular(a: Perm, k: int) -> bool:
    """True iff every orbit of a has length exactly k."""
    if k < 1:
        raise ValueError("orbit length must be positive")
    return all(len(orb) == k for orb in orbits(a).orbits)


def is_fixed_point_free(a: Perm) -> bool:
    return all(a[v] != v for v in range(len(a)))


def format_perm(p: Perm) -> str:
    """One-line serialisation: space-separated image list."""
    return " ".join(str(v) for v in p)


def parse_perm(text: str) -> Perm:
    p = tuple(int(tok) for tok in text.split())
    check_perm(p)
    return p
