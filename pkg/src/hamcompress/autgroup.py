"""Automorphism groups by partition-refinement backtracking.

The search builds a stabilizer chain: for an ascending sequence of base
vertices it computes, level by level, the orbit of the base vertex under the
pointwise stabilizer of the earlier ones, with a witness automorphism per
orbit member. The group order is the product of the orbit sizes
(orbit-stabilizer), which stays exact even when the full element list is not
enumerated. Candidate images are pruned by iterated neighbourhood-colour
refinement run simultaneously on the source and target side.

Determinism: refinement assigns colours from sorted signature keys, the base
vertex is always the least vertex of the first non-singleton cell, and
candidate targets are tried in ascending order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod

from .graph import Graph, bits
from .numth import is_prime
from .perm import (
    Perm,
    compose,
    identity,
    is_fixed_point_free,
    is_semiregular,
    order,
)

DEFAULT_CAP = 1 << 20


def is_automorphism(g: Graph, a: Perm) -> bool:
    """True iff a maps the edge set of g onto itself."""
    if len(a) != g.n:
        raise ValueError(f"degree mismatch: permutation on {len(a)}, graph on {g.n}")
    rows = g.rows
    for u in range(g.n):
        img = 0
        for v in bits(rows[u]):
            img |= 1 << a[v]
        if img != rows[a[u]]:
            return False
    return True


def _refine(rows: tuple[int, ...], col_a: list[int], col_b: list[int]):
    """Jointly refine two colourings to a stable (equitable) pair.

    Cells are split by (own colour, sorted multiset of neighbour colours);
    fresh colour ids come from the sorted signature keys of the source side,
    so aligned cells keep matching ids. Returns (col_a, col_b, ncolours), or
    None when the signature multisets diverge, i.e. no automorphism can map
    the source cells onto the target cells.
    """
    n = len(col_a)
    same = col_b is col_a
    ncol = len(set(col_a))
    while True:
        sig_a = [None] * n
        for v in range(n):
            nb = sorted(col_a[w] for w in bits(rows[v]))
            sig_a[v] = (col_a[v], tuple(nb))
        if same:
            sig_b = sig_a
        else:
            sig_b = [None] * n
            for v in range(n):
                nb = sorted(col_b[w] for w in bits(rows[v]))
                sig_b[v] = (col_b[v], tuple(nb))
            if Counter(sig_a) != Counter(sig_b):
                return None
        remap = {key: i for i, key in enumerate(sorted(set(sig_a)))}
        col_a = [remap[s] for s in sig_a]
        col_b = col_a if same else [remap[s] for s in sig_b]
        if len(remap) == ncol:
            return col_a, col_b, ncol
        ncol = len(remap)


def _cells(col: list[int], ncol: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(ncol)]
    for v, c in enumerate(col):
        out[c].append(v)
    return out


def _search_one(g: Graph, col_a: list[int], col_b: list[int]) -> Perm | None:
    """First automorphism compatible with the coloured alignment, or None."""
    refined = _refine(g.rows, col_a, col_b)
    if refined is None:
        return None
    col_a, col_b, ncol = refined
    cells_a = _cells(col_a, ncol)
    cells_b = _cells(col_b, ncol)
    split = next((c for c in range(ncol) if len(cells_a[c]) > 1), None)
    if split is None:
        img = [0] * g.n
        for c in range(ncol):
            img[cells_a[c][0]] = cells_b[c][0]
        p = tuple(img)
        return p if is_automorphism(g, p) else None
    v = cells_a[split][0]
    for t in cells_b[split]:
        ca = list(col_a)
        cb = list(col_b)
        ca[v] = ncol
        cb[t] = ncol
        found = _search_one(g, ca, cb)
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class GroupData:
    """An automorphism group: generators, exact order, and (unless capped)
    the full sorted element list."""

    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] | None
    order: int
    capped: bool


def automorphism_group(g: Graph, cap: int = DEFAULT_CAP) -> GroupData:
    if cap < 1:
        raise ValueError("cap must be positive")
    n = g.n
    if n == 0:
        return GroupData((), ((),), 1, False)
    col = [0] * n
    levels: list[dict[int, Perm]] = []
    while True:
        col, _, ncol = _refine(g.rows, col, col)
        cells = _cells(col, ncol)
        split = next((c for c in range(ncol) if len(cells[c]) > 1), None)
        if split is None:
            break
        base = cells[split][0]
        transversal: dict[int, Perm] = {base: identity(n)}
        for t in cells[split][1:]:
            ca = list(col)
            cb = list(col)
            ca[base] = ncol
            cb[t] = ncol
            witness = _search_one(g, ca, cb)
            if witness is not None:
                transversal[t] = witness
        levels.append(transversal)
        col = list(col)
        col[base] = ncol  # fix the base point and descend to its stabilizer
    grp_order = prod(len(t) for t in levels)
    generators = tuple(
        p for t in levels for p in t.values() if any(p[i] != i for i in range(n))
    )
    if grp_order > cap:
        return GroupData(generators, None, grp_order, True)
    elements = [identity(n)]
    for transversal in reversed(levels):
        elements = [compose(u, e) for u in transversal.values() for e in elements]
    elements.sort()
    return GroupData(generators, tuple(elements), grp_order, False)


def _semiregular_pool(group: GroupData) -> list[Perm]:
    """Elements available for semiregularity scans; for capped groups only
    the cyclic subgroups of the generators are visible."""
    if not group.capped:
        return list(group.elements)
    pool: set[Perm] = set()
    for gen in group.generators:
        p = gen
        while any(p[i] != i for i in range(len(p))):
            pool.add(p)
            p = compose(gen, p)
    return sorted(pool)


@dataclass(frozen=True)
class SemArray:
    """Ascending orders of semiregular automorphisms, with one witness each.
    exact is False when the group enumeration was capped."""

    values: tuple[int, ...]
    witnesses: dict[int, Perm]
    exact: bool


def sem_array(g: Graph, cap: int = DEFAULT_CAP, group: GroupData | None = None) -> SemArray:
    if group is None:
        group = automorphism_group(g, cap)
    found: dict[int, Perm] = {1: identity(g.n)}
    for a in _semiregular_pool(group):
        k = order(a)
        if k not in found and is_semiregular(a, k):
            found[k] = a
    values = tuple(sorted(found))
    return SemArray(values, found, exact=not group.capped)


@dataclass(frozen=True)
class RegularSubgroup:
    order: int
    elements: tuple[Perm, ...]
    tag: str | None  # "cyclic" / "dihedral" for order 2p, else None


def _closure(base: frozenset[Perm], extra: Perm, bound: int) -> frozenset[Perm] | None:
    """Subgroup generated by base | {extra}; None once it exceeds bound."""
    elems = set(base)
    elems.add(extra)
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(elems):
                for c in (compose(a, b), compose(b, a)):
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
                        if len(elems) > bound:
                            return None
        frontier = nxt
    return frozenset(elems)


def _transitive(elems, n: int) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for a in elems:
            w = a[v]
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n


def regular_subgroups(
    g: Graph, cap: int = DEFAULT_CAP, group: GroupData | None = None
) -> list[RegularSubgroup] | None:
    """All order-n subgroups acting regularly on g, or None when the group
    enumeration was capped (status unknown).

    Search: depth-first closure over fixed-point-free elements, seeded by the
    fixed-point-free elements of prime order dividing n; every intermediate
    subgroup must divide n and stay fixed-point-free outside the identity.
    """
    if group is None:
        group = automorphism_group(g, cap)
    if group.capped:
        return None
    n = g.n
    if n == 0:
        return []
    id_p = identity(n)
    fpf = [a for a in group.elements if a != id_p and is_fixed_point_free(a)]
    seeds = [a for a in fpf if n % order(a) == 0 and is_prime(order(a))]
    found: set[frozenset[Perm]] = set()
    seen: set[frozenset[Perm]] = set()

    def admissible(h: frozenset[Perm]) -> bool:
        return n % len(h) == 0 and all(p == id_p or is_fixed_point_free(p) for p in h)

    def grow(h: frozenset[Perm]) -> None:
        if h in seen:
            return
        seen.add(h)
        if len(h) == n:
            if _transitive(h, n):
                found.add(h)
            return
        for x in fpf:
            if x in h:
                continue
            k = _closure(h, x, n)
            if k is not None and k not in seen and admissible(k):
                grow(k)

    for seed in seeds:
        h = _closure(frozenset({id_p}), seed, n)
        if h is not None and admissible(h):
            grow(h)

    out = []
    for h in sorted(found, key=lambda s: sorted(s)):
        tag = None
        if any(order(p) == n for p in h):
            tag = "cyclic"
        elif n % 2 == 0 and is_prime(n // 2) and n > 4:
            tag = "dihedral"  # non-cyclic groups of order 2p are dihedral
        out.append(RegularSubgroup(n, tuple(sorted(h)), tag))
    return out


def is_cayley(g: Graph, cap: int = DEFAULT_CAP, group: GroupData | None = None) -> str:
    """"yes" / "no" / "unknown": does some subgroup act regularly on g?"""
    subs = regular_subgroups(g, cap, group=group)
    if subs is None:
        return "unknown"
    return "yes" if subs else "no"


def group_report(group: GroupData) -> dict:
    """JSON-ready summary: order, capped flag, generator image lists."""
    return {
        "order": group.order,
        "capped": group.capped,
        "generators": [list(gen) for gen in group.generators],
    }
