import _dompoly as dp


def test_path_poly_golden():
    assert dp.path_poly(4) == [0, 0, 4, 4, 1]
    assert dp.path_poly(8) == [0, 0, 0, 4, 26, 40, 26, 8, 1]


def test_dom_poly_matches_closed_form():
    g = dp.Graph.path(9)
    assert dp.dom_poly(g) == dp.path_poly(9)
    assert dp.dom_poly_bruteforce(g) == dp.path_poly(9)


def test_tilde_path_identity():
    assert dp.dom_poly(dp.Graph.tilde_path(12)) == dp.path_poly(12)


def test_d_equivalence_table1_n4():
    p4 = dp.Graph.path(4)
    two_k2 = dp.Graph.disjoint_union([dp.Graph.path(2), dp.Graph.path(2)])
    assert dp.d_equivalent(p4, two_k2)
    assert not dp.d_equivalent(p4, dp.Graph.cycle(4))


def test_graph6_roundtrip_and_canonical():
    g = dp.Graph.cycle(6)
    assert dp.from_graph6(dp.to_graph6(g)) == g
    relabeled = dp.Graph.from_edges(6, [(5, 4), (4, 0), (0, 2), (2, 1), (1, 3), (3, 5)])
    assert dp.canonical_form(g) == dp.canonical_form(relabeled)


def test_describe_and_gamma():
    g = dp.Graph.disjoint_union([dp.Graph.pendant_cycle(4), dp.Graph.path(2)])
    assert dp.describe(g) == "F4 + K2"
    assert dp.gamma(dp.Graph.path(7)) == 3


def test_structure_summary():
    s = dp.structure_summary(dp.Graph.path(6))
    assert s["t1"] == 2 and s["t2"] == 2
    assert sorted(s["stems"]) == [1, 4]


def test_cap_exceeded():
    import pytest

    with pytest.raises(dp.CapExceeded):
        dp.dom_poly_bruteforce(dp.Graph.cycle(12), cap=10)
