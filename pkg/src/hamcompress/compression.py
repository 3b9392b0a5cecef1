"""Compression factors of Hamilton cycles and the derived graph invariants.

The compression factor of a Hamilton cycle is n divided by the least
positive position-shift along the cycle that is an automorphism of the
graph; the shifts that work always form a subgroup of Z_n, which is checked
at runtime. The graph invariant is the maximum over all Hamilton cycles,
computed either by a descending divisor sweep over cyclic semiregular
subgroups (lift mode) or by exhaustive cycle enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .autgroup import (
    DEFAULT_CAP,
    GroupData,
    automorphism_group,
    is_automorphism,
    regular_subgroups,
    sem_array,
    _semiregular_pool,
)
from .families import FamilyInstance, petersen
from .graph import Graph, bits, remove_intra_orbit_edges
from .hamlift import (
    ENUM_LIMIT,
    HamCycle,
    _ham_cycle_gen,
    canonical_cycle,
    check_hamcycle,
    find_hamcycle,
    find_symmetric_hamcycle,
)
from .numth import divisors, factorize, is_prime
from .perm import Perm, is_semiregular, order, power


@dataclass(frozen=True)
class CompressionCertificate:
    """A cycle, its compression factor k, the witnessing position shift
    n/k, and the rotation-by-shift permutation (an automorphism)."""

    cycle: HamCycle
    k: int
    shift: int
    witness: Perm


def rotation_witness(cycle: HamCycle, shift: int) -> Perm:
    n = len(cycle)
    img = [0] * n
    for i, v in enumerate(cycle):
        img[v] = cycle[(i + shift) % n]
    return tuple(img)


def cycle_compression(g: Graph, cycle) -> CompressionCertificate:
    """Exact compression factor of one Hamilton cycle of g."""
    check_hamcycle(g, cycle)
    cycle = canonical_cycle(cycle)
    n = g.n
    working = [
        s for s in range(1, n + 1) if is_automorphism(g, rotation_witness(cycle, s))
    ]
    s_min = working[0]
    if working != list(range(s_min, n + 1, s_min)) or n % s_min:
        raise AssertionError("working shifts do not form a subgroup of Z_n")
    k = n // s_min
    if __debug__:
        by_div = max(n // s for s in divisors(n) if s in set(working))
        assert by_div == k, "divisor sweep disagrees with minimal shift"
    return CompressionCertificate(cycle, k, s_min, rotation_witness(cycle, s_min))


def _kappa_of_cycle(g: Graph, cycle: HamCycle) -> int:
    """Fast path: least working divisor shift (the set of shifts is a subgroup)."""
    n = g.n
    for s in divisors(n):
        if is_automorphism(g, rotation_witness(cycle, s)):
            return n // s
    return 1


@dataclass(frozen=True)
class KappaResult:
    kappa: int
    certificate: CompressionCertificate | None
    exact: bool
    mode: str
    note: str = ""


def _cyclic_semiregular_reps(group: GroupData, n: int) -> dict[int, list[Perm]]:
    """One representative generator per cyclic semiregular subgroup, keyed by
    order; deduplicated by subgroup element-set identity."""
    reps: dict[int, dict[frozenset[Perm], Perm]] = {}
    for a in _semiregular_pool(group):
        k = order(a)
        if k < 2 or not is_semiregular(a, k):
            continue
        subgroup = frozenset(power(a, e) for e in range(1, k + 1))
        bucket = reps.setdefault(k, {})
        if subgroup not in bucket or a < bucket[subgroup]:
            bucket[subgroup] = a
    return {k: sorted(bucket.values()) for k, bucket in reps.items()}


def hamilton_compression(
    g: Graph,
    mode: str = "lift",
    cap: int = DEFAULT_CAP,
    limit: int = ENUM_LIMIT,
    group: GroupData | None = None,
) -> KappaResult:
    """Hamilton compression of g with a certificate (0 when non-hamiltonian).

    lift mode sweeps the divisors of n descending, running the symmetric
    search on every cyclic semiregular subgroup of that order; the first hit
    is the answer. exhaustive mode maximises over all enumerated cycles.
    """
    n = g.n
    if mode == "exhaustive":
        best: CompressionCertificate | None = None
        exhausted = True
        for count, cycle in enumerate(_ham_cycle_gen(g)):
            if count >= limit:
                exhausted = False
                break
            k = _kappa_of_cycle(g, cycle)
            if best is None or k > best.k or (k == best.k and cycle < best.cycle):
                best = CompressionCertificate(
                    cycle, k, n // k, rotation_witness(cycle, n // k)
                )
        if best is None:
            return KappaResult(0, None, exhausted, mode)
        return KappaResult(best.k, best, exhausted, mode)
    if mode != "lift":
        raise ValueError(f"unknown mode {mode!r}")
    if group is None:
        group = automorphism_group(g, cap)
    note = "lower bound only on the k>=2 sweep" if group.capped else ""
    reps = _cyclic_semiregular_reps(group, n)
    for k in sorted((d for d in divisors(n) if d >= 2), reverse=True):
        for a in reps.get(k, []):
            cycle = find_symmetric_hamcycle(g, a)
            if cycle is not None:
                cert = cycle_compression(g, cycle)
                if not group.capped and cert.k != k:
                    raise AssertionError("descending sweep returned a non-maximal hit")
                return KappaResult(cert.k, cert, not group.capped, mode, note)
    cycle = find_hamcycle(g)
    if cycle is None:
        return KappaResult(0, None, True, mode, note)
    cert = cycle_compression(g, cycle)
    if not group.capped and cert.k != 1:
        raise AssertionError("sweep missed a symmetric cycle")
    return KappaResult(cert.k, cert, not group.capped, mode, note)


@dataclass(frozen=True)
class HamArray:
    """Ascending attained compression factors with one certificate per value;
    the single value 0 when the graph has no Hamilton cycle."""

    exact: bool
    values: tuple[int, ...]
    certificates: dict[int, CompressionCertificate]


def ham_array(g: Graph, limit: int = ENUM_LIMIT) -> HamArray:
    certs: dict[int, CompressionCertificate] = {}
    n = g.n
    exhausted = True
    for count, cycle in enumerate(_ham_cycle_gen(g)):
        if count >= limit:
            exhausted = False
            break
        k = _kappa_of_cycle(g, cycle)
        if k not in certs or cycle < certs[k].cycle:
            certs[k] = CompressionCertificate(
                cycle, k, n // k, rotation_witness(cycle, n // k)
            )
    if not certs:
        return HamArray(exhausted, (0,), {})
    return HamArray(exhausted, tuple(sorted(certs)), certs)


def is_ubiquitously_compressible(
    g: Graph, cap: int = DEFAULT_CAP, limit: int = ENUM_LIMIT
) -> bool | None:
    """Ham(g) == Sem(g), or None when either side is inexact."""
    ham = ham_array(g, limit)
    sem = sem_array(g, cap)
    if not ham.exact or not sem.exact:
        return None
    return ham.values == sem.values


# --- LCF notation for cubic hamiltonian graphs ------------------------------


def lcf(g: Graph, cycle) -> tuple[int, ...]:
    """Chord offsets d_i along a Hamilton cycle of a cubic graph, normalised
    into (-n/2, n/2]; entries avoid {0, +-1} by simplicity."""
    if any(d != 3 for d in g.degrees()):
        raise ValueError("LCF notation requires a cubic graph")
    check_hamcycle(g, cycle)
    cycle = tuple(cycle)
    n = g.n
    pos = {v: i for i, v in enumerate(cycle)}
    out = []
    for i, v in enumerate(cycle):
        prev_v = cycle[(i - 1) % n]
        next_v = cycle[(i + 1) % n]
        third = next(w for w in bits(g.rows[v]) if w != prev_v and w != next_v)
        d = (pos[third] - i) % n
        if d > n // 2:
            d -= n
        out.append(d)
    return tuple(out)


def lcf_compressed(g: Graph, cert: CompressionCertificate) -> tuple[tuple[int, ...], int]:
    """First n/k offsets plus the repetition count; verifies periodicity."""
    word = lcf(g, cert.cycle)
    n = len(word)
    block = word[: n // cert.k]
    if word != block * cert.k:
        raise AssertionError("offset word is not periodic with period n/k")
    return block, cert.k


def format_lcf(block, repeat: int) -> str:
    return "[" + ", ".join(str(d) for d in block) + "]" + (f"^{repeat}" if repeat > 1 else "")


def lcf_to_graph(word) -> Graph:
    """Cubic graph on len(word) vertices from a full offset word; vertex i is
    position i along the defining cycle."""
    word = tuple(word)
    n = len(word)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + d) % n) for i, d in enumerate(word)]
    g = Graph.build(n, edges)
    if any(deg != 3 for deg in g.degrees()):
        raise ValueError("offset word does not define a cubic graph")
    return g


# --- closed-form predictors --------------------------------------------------


def find_isomorphism(g1: Graph, g2: Graph) -> Perm | None:
    """Backtracking isomorphism search, ordered by degree; for small graphs."""
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    deg1, deg2 = g1.degrees(), g2.degrees()
    verts = sorted(range(n), key=lambda v: (-deg1[v], v))
    image = [-1] * n
    used = [False] * n

    def assign(pos: int) -> bool:
        if pos == n:
            return True
        v = verts[pos]
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            ok = True
            for u in verts[:pos]:
                if g1.has_edge(v, u) != g2.has_edge(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if assign(pos + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return tuple(image) if assign(0) else None


def is_petersen(g: Graph) -> bool:
    if g.n != 10 or g.m != 15 or any(d != 3 for d in g.degrees()):
        return False
    return find_isomorphism(g, petersen().graph) is not None


@dataclass(frozen=True)
class MetaPqPrediction:
    kappa: int | None
    case: str  # petersen / disconnected-cayley / disconnected-noncayley /
    #            connected-bicayley / connected-default / unknown


def predict_kappa_metapq(
    inst: FamilyInstance, cap: int = DEFAULT_CAP, group: GroupData | None = None
) -> MetaPqPrediction:
    """Predicted Hamilton compression of a (q,p)-metacirculant, q < p primes.

    Decision tree: the Petersen graph is 0; otherwise split on whether
    deleting the rotation-orbit edges disconnects the graph. Disconnected:
    q for Cayley graphs, 1 for non-Cayley. Connected: 2p when both a cyclic
    and a dihedral regular subgroup of order 2p exist, else p. The deleted
    subgraph is the orbit-edge-free graph of the order-p rotation.
    """
    q, p = inst.labeling.m, inst.labeling.n
    if not (is_prime(q) and is_prime(p) and q < p):
        raise ValueError(f"need prime parameters q < p, got ({q}, {p})")
    g = inst.graph
    rho = inst.rho
    if order(rho) != p or not is_semiregular(rho, p):
        raise ValueError("instance rotation is not semiregular of order p")
    if is_petersen(g):
        return MetaPqPrediction(0, "petersen")
    tilde = remove_intra_orbit_edges(g, rho)
    if not tilde.is_connected():
        verdict = regular_subgroups(g, cap, group=group)
        if verdict is None:
            return MetaPqPrediction(None, "unknown")
        if verdict:
            return MetaPqPrediction(q, "disconnected-cayley")
        return MetaPqPrediction(1, "disconnected-noncayley")
    subs = regular_subgroups(g, cap, group=group)
    if subs is None:
        return MetaPqPrediction(None, "unknown")
    tags = {s.tag for s in subs}
    if q == 2 and "cyclic" in tags and "dihedral" in tags:
        return MetaPqPrediction(2 * p, "connected-bicayley")
    return MetaPqPrediction(p, "connected-default")


def predict_kappa_circulant(n: int, conn) -> int:
    """n when the connection set contains a unit of Z_n, else 1; n must be a
    product of two distinct primes and the circulant connected."""
    fac = factorize(n)
    if len(fac) != 2 or any(e != 1 for e in fac.values()):
        raise ValueError(f"{n} is not a product of two distinct primes")
    conn = {s % n for s in conn}
    if 0 in conn or {(-s) % n for s in conn} != conn:
        raise ValueError("connection set must be symmetric and avoid 0")
    if math.gcd(n, *conn) != 1:
        raise ValueError("circulant is disconnected")
    return n if any(math.gcd(s, n) == 1 for s in conn) else 1


def double_edge_positions(m: int, n: int, r: int) -> tuple[int, int]:
    """The two orbit indices j = r/(1-r) and j = 1/(r-1) mod n where the
    twisted-rotation quotient of the 2m-generator metacirculant carries a
    double arc; requires r - 1 invertible mod n."""
    if math.gcd(r - 1, n) != 1:
        raise ValueError(f"r - 1 = {r - 1} is not a unit mod {n}")
    j1 = r * pow(1 - r, -1, n) % n
    j2 = pow(r - 1, -1, n) % n
    return (j1, j2)
