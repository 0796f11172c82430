import thetanil


def test_root_counts():
    assert len(thetanil.root_system("G2")["positive_roots"]) == 6
    assert len(thetanil.root_system("E8")["positive_roots"]) == 120


def test_type_a_orbits_match_partitions():
    assert [len(thetanil.nilpotent_wdds(f"A{n}")) for n in range(1, 5)] == [2, 3, 5, 7]


def test_sl2_grading():
    data = thetanil.orbits("A1", [1, 1])
    assert len(data["records"]) == 3
    assert data["summary"]["orbits"] == 2


def test_g2_nregular_order_two():
    row = thetanil.nregular("G2", 2)
    assert (row["orbits"], row["components"], row["dim"], row["rank"]) == (5, 1, 6, 2)


def test_methods_agree():
    a = thetanil.orbits("G2", [1, 0, 1], method="1")
    b = thetanil.orbits("G2", [1, 0, 1], method="2")
    assert [r["h"] for r in a["records"]] == [r["h"] for r in b["records"]]


def test_cosets_and_pisystems():
    assert thetanil.coset_count("A2", simple=[1]) == 3
    assert len(thetanil.pisystem_types("G2")) == 5
