import nilcomm


def test_partitions():
    assert nilcomm.rpt(12, 5) == [3, 3, 2, 2, 2]
    assert nilcomm.rp_set(4) == [[4], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert [3, 3, 2] in nilcomm.rp_of_partition("5,3")
    assert nilcomm.basili_indices([5, 5, 5, 3, 3, 1, 1, 1]) == (3, [1, 4, 6])


def test_maxnil_and_bpath():
    report = nilcomm.max_nilpotency_index("4,3,2^2,1")
    assert report["value"] == 9
    assert [c[2] for c in report["candidates"]] == [7, 9, 9, 9]
    row = nilcomm.b_path("4,3,2,2,1", 2)
    assert (row["s"], row["w"], row["z"], row["length"]) == (3, 4, 2, 9)
    assert row["table_vertices"][-1] == (1, 4)


def test_digraph():
    six_vertex = [(1, 3), (1, 5), (2, 4), (2, 6), (5, 4), (5, 6)]
    assert nilcomm.delta_sequence(6, six_vertex) == [3, 2, 1]
    assert [nilcomm.d_hat(6, six_vertex, k) for k in range(4)] == [0, 3, 5, 6]
    assert nilcomm.longest_path(6, six_vertex) == 3
    assert nilcomm.verify_gansner_saks(6, six_vertex, trials=5)["agree"]
    params = [(1, 1, 2), (1, 2, 0), (2, 1, 1), (2, 2, 1)]
    assert nilcomm.nb_digraph("4,2", params) == sorted(six_vertex)


def test_matrices():
    assert nilcomm.shape_of(nilcomm.jordan_matrix("3,1")) == [3, 1]
    a = nilcomm.instantiate("4,2", [(1, 2, 0)], [1])
    assert nilcomm.nilpotency_index(a) == 2
    assert nilcomm.shape_of(nilcomm.expjor2_witness("5,3", [2, 1])) == [3, 3, 2]
    assert len(nilcomm.full_pattern("5,3")) == 12


def test_sampling():
    assert nilcomm.sampled_max_nil("6,4", 200) == 6
    report = nilcomm.shape_set("5,3", mode="value-sample", budget=500, seed=2)
    assert report["trials"] == 500
    assert all(sum(map(int, s.split(","))) == 8 for s in report["shapes"])
    w = nilcomm.witness_pattern("4,3,3")
    assert w == [(1, 2, 0), (2, 3, 0), (3, 1, 0)]


def test_errors():
    import pytest

    with pytest.raises(ValueError):
        nilcomm.max_nilpotency_index("4,x")
    with pytest.raises(ValueError):
        nilcomm.delta_sequence(3, [(1, 2), (2, 3), (3, 1)])
