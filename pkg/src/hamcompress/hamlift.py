"""Quotients with voltages, the lifting construction, and Hamilton search.

Quotienting a graph by a semiregular automorphism of order k yields a
multigraph on the orbits whose arcs carry voltages in Z_k: an arc (A, B, s)
records that the representative of A is adjacent to the s-th power image of
the representative of B. A Hamilton cycle of the quotient whose net voltage
generates Z_k lifts to a Hamilton cycle of the source graph on which the
automorphism acts as a rotation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, bits
from .perm import Perm, is_semiregular, orbits, order

HamCycle = tuple[int, ...]

ENUM_LIMIT = 10**7


def check_hamcycle(g: Graph, seq) -> None:
    seq = tuple(seq)
    if len(seq) != g.n or sorted(seq) != list(range(g.n)):
        raise ValueError("sequence does not visit every vertex exactly once")
    for i, u in enumerate(seq):
        if not g.has_edge(u, seq[(i + 1) % g.n]):
            raise ValueError(f"vertices {u} and {seq[(i + 1) % g.n]} are not adjacent")


def canonical_cycle(seq) -> HamCycle:
    """Rotate the least vertex to the front and fix the direction, collapsing
    the 2n equivalent presentations of one cycle."""
    seq = tuple(seq)
    n = len(seq)
    i0 = seq.index(min(seq))
    fwd = tuple(seq[(i0 + i) % n] for i in range(n))
    rev = tuple(seq[(i0 - i) % n] for i in range(n))
    return fwd if fwd[1] <= rev[1] else rev


def format_cycle(seq) -> str:
    """One-line serialisation: space-separated vertex ids, canonical start."""
    return " ".join(str(v) for v in canonical_cycle(seq))


def parse_cycle(text: str) -> HamCycle:
    return canonical_cycle(int(tok) for tok in text.split())


@dataclass(frozen=True)
class QuotientGraph:
    """Multigraph on the orbits of a semiregular automorphism.

    orbit_lists[A][e] is the e-th image of A's representative (the least
    vertex of the orbit); arcs are (A, B, s) with A <= B, parallel arcs
    allowed, and loop voltages normalised into 1..k//2.
    """

    k: int
    orbit_lists: tuple[tuple[int, ...], ...]
    orbit_of: tuple[int, ...]
    exponent: tuple[int, ...]
    arcs: tuple[tuple[int, int, int], ...]

    @property
    def num_orbits(self) -> int:
        return len(self.orbit_lists)

    @property
    def reps(self) -> tuple[int, ...]:
        return tuple(orb[0] for orb in self.orbit_lists)

    def directed_voltages(self) -> dict[tuple[int, int], list[int]]:
        """Voltages per ordered orbit pair; reversing an arc negates it."""
        out: dict[tuple[int, int], set[int]] = {}
        for a, b, s in self.arcs:
            if a == b:
                out.setdefault((a, a), set()).update({s, (-s) % self.k})
            else:
                out.setdefault((a, b), set()).add(s)
                out.setdefault((b, a), set()).add((-s) % self.k)
        return {key: sorted(vs) for key, vs in out.items()}


def quotient_with_voltages(g: Graph, a: Perm) -> QuotientGraph:
    if len(a) != g.n:
        raise ValueError("degree mismatch")
    k = order(a)
    if k < 2 or not is_semiregular(a, k):
        raise ValueError(f"permutation is not semiregular of order >= 2 (order {k})")
    part = orbits(a)
    exponent = [0] * g.n
    for orb in part.orbits:
        for e, v in enumerate(orb):
            exponent[v] = e
    arcs = set()
    for u in range(g.n):
        for v in bits(g.rows[u]):
            if v < u:
                continue
            oa, ob = part.orbit_of[u], part.orbit_of[v]
            s = (exponent[v] - exponent[u]) % k
            if oa == ob:
                arcs.add((oa, oa, min(s, k - s)))
            elif oa < ob:
                arcs.add((oa, ob, s))
            else:
                arcs.add((ob, oa, (-s) % k))
    return QuotientGraph(k, part.orbits, part.orbit_of, tuple(exponent), tuple(sorted(arcs)))


def lift(qg: QuotientGraph, orbit_cycle, voltages) -> HamCycle:
    """Lift a quotient Hamilton cycle with chosen arc voltages.

    orbit_cycle visits every orbit exactly once; voltages[i] is the voltage
    of the arc from orbit_cycle[i] to its successor. The lift exists iff the
    net voltage generates Z_k; otherwise the walk closes early and a
    ValueError is raised.
    """
    orbit_cycle = list(orbit_cycle)
    voltages = list(voltages)
    k, q = qg.k, qg.num_orbits
    if sorted(orbit_cycle) != list(range(q)) or len(voltages) != q:
        raise ValueError("not a closed quotient cycle visiting every orbit once")
    avail = qg.directed_voltages()
    for i, a in enumerate(orbit_cycle):
        b = orbit_cycle[(i + 1) % q]
        if voltages[i] not in avail.get((a, b), []):
            raise ValueError(f"no arc from orbit {a} to {b} with voltage {voltages[i]}")
    if q == 2 and (voltages[0] + voltages[1]) % k == 0:
        raise ValueError("the two steps reuse one arc; a 2-cycle needs parallel arcs")
    net = sum(voltages) % k
    if math.gcd(net, k) != 1:
        raise ValueError(f"net voltage {net} does not generate Z_{k}; lift closes early")
    exps = [0] * q
    for i in range(1, q):
        exps[i] = exps[i - 1] + voltages[i - 1]
    seq = [
        qg.orbit_lists[orb][(exps[i] + j * net) % k]
        for j in range(k)
        for i, orb in enumerate(orbit_cycle)
    ]
    if len(set(seq)) != q * k:
        raise AssertionError("lift revisited a vertex")  # unreachable given gcd check
    return tuple(seq)


def project_cycle(qg: QuotientGraph, cycle: HamCycle):
    """Orbit sequence and step voltages of one quotient pass of a lifted cycle."""
    q = qg.num_orbits
    seq = [qg.orbit_of[v] for v in cycle[:q]]
    volts = [
        (qg.exponent[cycle[(i + 1) % len(cycle)]] - qg.exponent[cycle[i]]) % qg.k
        for i in range(q)
    ]
    return seq, volts


def _voltage_choice(volt_sets: list[list[int]], k: int) -> list[int] | None:
    """Pick one voltage per step so the total generates Z_k, or None.

    Reachable subsets are propagated forward; the least achievable generator
    is reconstructed backwards, greedily taking the least voltage per step.
    """
    reach = [{0}]
    for vs in volt_sets:
        reach.append({(x + s) % k for x in reach[-1] for s in vs})
    targets = sorted(t for t in reach[-1] if math.gcd(t, k) == 1)
    if not targets:
        return None
    cur = targets[0]
    choice = [0] * len(volt_sets)
    for i in range(len(volt_sets) - 1, -1, -1):
        for s in volt_sets[i]:
            if (cur - s) % k in reach[i]:
                choice[i] = s
                cur = (cur - s) % k
                break
    return choice


def _quotient_ham_search(qg: QuotientGraph):
    """First quotient Hamilton cycle admitting a generating net voltage.

    Arcs are explored in (orbit, voltage) ascending order; loops are only
    usable in the single-orbit case, and the two-orbit case needs a pair of
    distinct parallel arcs.
    """
    k, q = qg.k, qg.num_orbits
    avail = qg.directed_voltages()
    if q == 1:
        for s in avail.get((0, 0), []):
            if math.gcd(s, k) == 1:
                return [0], [s]
        return None
    if q == 2:
        volts = avail.get((0, 1), [])
        for s0 in volts:
            for s1 in volts:
                if s1 != s0 and math.gcd(s0 - s1, k) == 1:
                    return [0, 1], [s0, (-s1) % k]
        return None
    support = [0] * q
    for (a, b), _ in avail.items():
        if a != b:
            support[a] |= 1 << b
    full = (1 << q) - 1
    path = [0]

    def extend(head: int, visited: int):
        if len(path) == q:
            if support[head] & 1:
                volt_sets = [
                    avail[(path[i], path[(i + 1) % q])] for i in range(q)
                ]
                choice = _voltage_choice(volt_sets, k)
                if choice is not None:
                    return list(path), choice
            return None
        rest = full & ~visited
        # every unvisited orbit needs two links into the open region
        live = rest | (1 << head) | 1
        probe = rest
        while probe:
            bit = probe & -probe
            probe ^= bit
            if (support[bit.bit_length() - 1] & live).bit_count() < 2:
                return None
        cand = support[head] & rest
        for b in bits(cand):
            path.append(b)
            found = extend(b, visited | (1 << b))
            if found is not None:
                return found
            path.pop()
        return None

    return extend(0, 1)


def find_symmetric_hamcycle(g: Graph, a: Perm) -> HamCycle | None:
    """A Hamilton cycle on which a acts as a rotation, or None.

    Searches Hamilton cycles of the quotient multigraph, accepting one iff
    its net voltage generates Z_k, then lifts.
    """
    qg = quotient_with_voltages(g, a)
    found = _quotient_ham_search(qg)
    if found is None:
        return None
    cycle = lift(qg, *found)
    check_hamcycle(g, cycle)
    return cycle


def _ham_cycle_gen(g: Graph):
    """All Hamilton cycles, one canonical representative each.

    Cycles start at vertex 0 with the direction fixed by second < last;
    pruning: forced-degree and connectivity of the open region.
    """
    n = g.n
    if n < 3 or not g.is_connected():
        return
    rows = g.rows
    full = (1 << n) - 1
    path = [0]

    def extend(head: int, visited: int):
        if len(path) == n:
            if rows[0] >> head & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        rest = full & ~visited
        live = rest | (1 << head) | 1
        probe = rest
        while probe:
            bit = probe & -probe
            probe ^= bit
            if (rows[bit.bit_length() - 1] & live).bit_count() < 2:
                return
        region = rest | (1 << head)
        comp = 1 << head
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v] & region
            frontier = nxt & ~comp
            comp |= frontier
        if comp != region:
            return
        for v in bits(rows[head] & rest):
            path.append(v)
            yield from extend(v, visited | (1 << v))
            path.pop()

    yield from extend(0, 1)


def find_hamcycle(g: Graph) -> HamCycle | None:
    return next(_ham_cycle_gen(g), None)


def enumerate_hamcycles(g: Graph, limit: int = ENUM_LIMIT) -> tuple[list[HamCycle], bool]:
    """All Hamilton cycles up to rotation/reflection; exhaustive flag is False
    when the limit cut the enumeration short."""
    out: list[HamCycle] = []
    for cycle in _ham_cycle_gen(g):
        if len(out) >= limit:
            return out, False
        out.append(cycle)
    return out, True
