import pytest

from dawnsp.errors import GraphBoundsError, GraphFormatError, UnsupportedFormatError
from dawnsp.generators import erdos_renyi
from dawnsp.io import load_csr, load_edge_list, load_graph, load_matrix_market, save_csr, sniff_format


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_mm_pattern_general(tmp_path):
    p = write(tmp_path, "a.mtx", "%%MatrixMarket matrix coordinate pattern general\n% c\n3 3 2\n1 2\n2 3\n")
    el = load_matrix_market(p)
    assert el.num_nodes == 3
    assert set(el.pairs()) == {(0, 1), (1, 2)}


def test_mm_symmetric_expansion(tmp_path):
    p = write(tmp_path, "s.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n")
    assert set(load_matrix_market(p).pairs()) == {(1, 0), (0, 1)}


def test_mm_real_values_ignored_and_loops_dropped(tmp_path):
    p = write(
        tmp_path,
        "r.mtx",
        "%%MatrixMarket matrix coordinate real general\n3 3 4\n1 1 2.5\n1 2 -1e3\n1 2 7\n3 1 0.5\n",
    )
    assert load_matrix_market(p).pairs() == [(0, 1), (2, 0)]


def test_mm_out_of_bounds(tmp_path):
    p = write(tmp_path, "b.mtx", "%%MatrixMarket matrix coordinate pattern general\n3 3 1\n4 1\n")
    with pytest.raises(GraphBoundsError):
        load_matrix_market(p)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("%%MatrixMarkt matrix coordinate pattern general\n1 1 0\n", GraphFormatError),
        ("hello\n", GraphFormatError),
        ("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n", UnsupportedFormatError),
        ("%%MatrixMarket matrix coordinate complex general\n1 1 0\n", UnsupportedFormatError),
        ("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n", GraphFormatError),
        ("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n1 x\n", GraphFormatError),
    ],
)
def test_mm_errors(tmp_path, text, exc):
    with pytest.raises(exc):
        load_matrix_market(write(tmp_path, "e.mtx", text))


def test_edge_list_basic(tmp_path):
    el = load_edge_list(write(tmp_path, "g.txt", "# header\n0 1\n1 2\n"))
    assert el.num_nodes == 3
    assert el.pairs() == [(0, 1), (1, 2)]


def test_edge_list_self_loop_dropped(tmp_path):
    assert load_edge_list(write(tmp_path, "g.txt", "0 0\n0 1\n")).pairs() == [(0, 1)]


def test_edge_list_errors(tmp_path):
    with pytest.raises(GraphFormatError):
        load_edge_list(write(tmp_path, "a.txt", "a b\n"))
    with pytest.raises(GraphBoundsError):
        load_edge_list(write(tmp_path, "b.txt", "0 -1\n"))
    with pytest.raises(GraphBoundsError):
        load_edge_list(write(tmp_path, "c.txt", "0 5\n"), num_nodes=3)


def test_edge_list_explicit_node_count(tmp_path):
    assert load_edge_list(write(tmp_path, "g.txt", "% c\n0 1\n"), num_nodes=10).num_nodes == 10


def test_binary_cache_round_trip(tmp_path):
    g = erdos_renyi(100, 0.05, seed=2)
    save_csr(g, tmp_path / "g.csr")
    assert load_csr(tmp_path / "g.csr") == g
    assert sniff_format(tmp_path / "g.csr") == "csr"


def test_binary_cache_rejects_garbage(tmp_path):
    p = tmp_path / "x.csr"
    p.write_bytes(b"DAWNCSR\0" + b"\x09" + b"\0" * 30)
    with pytest.raises(UnsupportedFormatError):
        load_csr(p)
    p.write_bytes(b"nope" * 10)
    with pytest.raises(GraphFormatError):
        load_csr(p)


def test_sniff_order(tmp_path):
    mm = write(tmp_path, "g.txt", "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n")
    assert sniff_format(mm) == "mtx"  # banner beats extension
    assert sniff_format(mm, "edgelist") == "edgelist"  # flag beats banner
    plain = write(tmp_path, "h.mtx", "0 1\n")
    assert sniff_format(plain) == "mtx"  # extension as last resort
    assert load_graph(mm).m == 1
