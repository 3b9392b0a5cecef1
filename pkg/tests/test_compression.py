import pytest

from conftest import graph_cycle, graph_k4
from hamcompress import (
    FamilyInstance,
    cayley_p3,
    circulant,
    cycle_compression,
    double_edge_positions,
    enumerate_hamcycles,
    find_hamcycle,
    format_lcf,
    generalized_petersen,
    grid_sigma,
    ham_array,
    hamilton_compression,
    is_automorphism,
    is_petersen,
    is_ubiquitously_compressible,
    lcf,
    lcf_compressed,
    lcf_to_graph,
    metacirculant_triple_2p,
    petersen,
    predict_kappa_circulant,
    predict_kappa_metapq,
    quotient_with_voltages,
    x_mnr,
    y_qp,
)


def test_cycle_compression_cycle_graph():
    for n in (5, 8, 12):
        g = graph_cycle(n)
        cert = cycle_compression(g, tuple(range(n)))
        assert cert.k == n and cert.shift == 1
        assert is_automorphism(g, cert.witness)


def test_cycle_compression_k4():
    g = graph_k4()
    cycles, exact = enumerate_hamcycles(g)
    assert exact
    for cycle in cycles:
        cert = cycle_compression(g, cycle)
        assert cert.k == 4  # every rotation of K4 is an automorphism
    with pytest.raises(ValueError):
        cycle_compression(g, (0, 1, 2))


def test_certificate_shape():
    g = x_mnr(3, 7, 2).graph
    res = hamilton_compression(g, "lift")
    cert = res.certificate
    assert cert.k * cert.shift == g.n
    n = g.n
    pos = {v: i for i, v in enumerate(cert.cycle)}
    for v in cert.cycle:
        assert cert.witness[v] == cert.cycle[(pos[v] + cert.shift) % n]


def test_kappa_examples_lift():
    assert hamilton_compression(petersen().graph).kappa == 0
    assert hamilton_compression(x_mnr(3, 7, 2).graph).kappa == 3
    assert hamilton_compression(circulant(15, {1, 14}).graph).kappa == 15
    assert hamilton_compression(x_mnr(2, 5, 4).graph).kappa == 2
    assert hamilton_compression(graph_k4()).kappa == 4


def test_kappa_complement_petersen():
    res = hamilton_compression(petersen().graph.complement(), "exhaustive")
    assert res.kappa == 5 and res.exact


def test_kappa_modes_agree_small():
    for g in (
        graph_k4(),
        graph_cycle(6),
        petersen().graph,
        x_mnr(2, 4, 3).graph,
        x_mnr(2, 5, 4).graph,
        y_qp(2, 13, 2).graph,
    ):
        lift_res = hamilton_compression(g, "lift")
        exh_res = hamilton_compression(g, "exhaustive")
        assert exh_res.exact
        assert lift_res.kappa == exh_res.kappa


def test_kappa_capped_is_flagged():
    res = hamilton_compression(petersen().graph.complement(), "lift", cap=10)
    assert res.note
    assert not res.exact


def test_ham_array_values():
    assert ham_array(petersen().graph).values == (0,)
    comp = ham_array(petersen().graph.complement())
    assert comp.exact and comp.values == (1, 5)
    k4 = ham_array(graph_k4())
    assert k4.values == (4,)
    assert ham_array(graph_cycle(15)).values == (15,)


def test_ham_array_certificates_replay():
    arr = ham_array(petersen().graph.complement())
    g = petersen().graph.complement()
    for k, cert in arr.certificates.items():
        assert cycle_compression(g, cert.cycle).k == k == cert.k


def test_ubiquitous():
    assert is_ubiquitously_compressible(petersen().graph) is False
    assert is_ubiquitously_compressible(petersen().graph.complement()) is True
    assert is_ubiquitously_compressible(graph_k4()) is False  # Ham [4] vs Sem [1,2,4]


def test_lcf_cube():
    cube = x_mnr(2, 4, 3).graph
    cycle = find_hamcycle(cube)
    word = lcf(cube, cycle)
    assert len(word) == 8
    assert all(d in (3, -3, 4) for d in word)
    rebuilt = lcf_to_graph(word)
    relabel = {v: i for i, v in enumerate(cycle)}
    for u, v in cube.edges():
        assert rebuilt.has_edge(relabel[u], relabel[v])
    assert rebuilt.m == cube.m


def test_lcf_roundtrip_many():
    for g in (
        x_mnr(2, 4, 3).graph,
        generalized_petersen(8, 3).graph,
        y_qp(2, 13, 2).graph,
        x_mnr(2, 7, 6).graph,
    ):
        cycle = find_hamcycle(g)
        word = lcf(g, cycle)
        rebuilt = lcf_to_graph(word)
        relabel = {v: i for i, v in enumerate(cycle)}
        assert {frozenset((relabel[u], relabel[v])) for u, v in g.edges()} == {
            frozenset(e) for e in rebuilt.edges()
        }


def test_lcf_compressed_periodicity():
    g = generalized_petersen(8, 3).graph  # kappa 8, block length 2
    res = hamilton_compression(g, "lift")
    block, repeat = lcf_compressed(g, res.certificate)
    assert repeat == res.kappa
    assert len(block) * repeat == g.n
    word = lcf(g, res.certificate.cycle)
    assert word == block * repeat
    assert format_lcf(block, repeat).endswith(f"^{repeat}")


def test_lcf_k4_is_cubic_edge_case():
    # K4 is cubic; every chord points at the antipode
    assert lcf(graph_k4(), (0, 1, 2, 3)) == (2, 2, 2, 2)


def test_lcf_rejects_non_cubic():
    with pytest.raises(ValueError):
        lcf(graph_cycle(5), (0, 1, 2, 3, 4))


def test_is_petersen():
    assert is_petersen(petersen().graph)
    assert is_petersen(y_qp(2, 5, 2).graph)
    assert not is_petersen(generalized_petersen(5, 1).graph)
    assert not is_petersen(graph_k4())


def test_predict_metapq_cases():
    assert predict_kappa_metapq(petersen()).kappa == 0
    assert predict_kappa_metapq(x_mnr(3, 7, 2)).kappa == 3
    assert predict_kappa_metapq(generalized_petersen(5, 1)).kappa == 2
    assert predict_kappa_metapq(generalized_petersen(13, 5)).kappa == 1
    sym = metacirculant_triple_2p(5, {1, 4}, {1, 4}, {0, 1, 4})
    assert predict_kappa_metapq(sym).kappa == 10
    pet = petersen()
    comp_inst = FamilyInstance(
        pet.graph.complement(), pet.labeling, pet.rho, pet.sigma, {"family": "complement"}
    )
    assert predict_kappa_metapq(comp_inst).kappa == 5


def test_predict_metapq_rejects_bad_instance():
    with pytest.raises(ValueError):
        predict_kappa_metapq(cayley_p3(3, "heisenberg"))  # q = 9 not prime
    with pytest.raises(ValueError):
        predict_kappa_metapq(circulant(15, {1, 14}))  # m = 1


def test_predict_circulant():
    assert predict_kappa_circulant(15, {1, 14}) == 15
    assert predict_kappa_circulant(15, {3, 12, 5, 10}) == 1
    assert predict_kappa_circulant(10, {2, 8, 5}) == 1
    with pytest.raises(ValueError):
        predict_kappa_circulant(12, {1, 11})  # not squarefree pq
    with pytest.raises(ValueError):
        predict_kappa_circulant(15, {3, 12})  # disconnected
    with pytest.raises(ValueError):
        predict_kappa_circulant(15, {1, 2})  # not symmetric


def test_double_edge_positions():
    assert sorted(double_edge_positions(3, 7, 2)) == [1, 5]
    assert sorted(double_edge_positions(4, 5, 2)) == [1, 3]
    with pytest.raises(ValueError):
        double_edge_positions(2, 8, 3)  # r-1 even


def test_double_edge_positions_match_quotient():
    from collections import Counter

    for m, n, r in ((3, 7, 2), (4, 5, 2), (3, 13, 3), (6, 7, 3)):
        inst = x_mnr(m, n, r)
        qg = quotient_with_voltages(inst.graph, grid_sigma(m, n, r))
        counts = Counter((a, b) for a, b, _ in qg.arcs)
        doubled = sorted(pair for pair, c in counts.items() if c > 1)
        expected = sorted(
            tuple(sorted((j, (j + 1) % n))) for j in double_edge_positions(m, n, r)
        )
        assert doubled == expected
        j1, j2 = double_edge_positions(m, n, r)
        assert j1 != j2  # distinct positions on these instances


def test_exhaustive_mode_limit_marks_inexact():
    g = petersen().graph.complement()
    res = hamilton_compression(g, "exhaustive", limit=5)
    assert not res.exact
    arr = ham_array(g, limit=5)
    assert not arr.exact
