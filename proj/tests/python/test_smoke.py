import pytest

import socmod


def banded(ring):
    return socmod.from_columns(ring, [["x", "y", "z", "0"], ["0", "x", "y", "z"]])


def test_rank_two_module():
    s = socmod.Ring(["x", "y", "z"])
    n = banded(s)
    assert n.rank == 2
    assert socmod.soc_dim(n) == 2
    assert socmod.mingens(n) == 4
    mm = socmod.from_columns(s, [["x", "y", "z", "0", "0", "0"], ["0", "0", "0", "x", "y", "z"]])
    assert socmod.same_module(socmod.socle_colon(n), mm)
    assert socmod.check_rn1(n)["verdict"] == "holds"


def test_ideal_colength_and_closure():
    a = socmod.Ring(["x", "y"])
    i = socmod.ideal(a, ["x^2", "y^2"])
    assert socmod.colength(i) == 4
    assert socmod.check_rn1(i)["result"]["equal"] is True
    closed = socmod.check_closed(i)
    assert closed["verdict"] == "computed"
    assert closed["result"]["closure"] == ["x^2", "x*y", "y^2"]


def test_perfect_matrix_claims():
    a = socmod.Ring(["x", "y"])
    n = socmod.from_columns(a, [["x", "y", "0"], ["0", "x", "y"]])
    assert socmod.check_prop23(n)["verdict"] == "holds"
    cor = socmod.check_cor25(n)
    assert cor["result"]["lhs"] == cor["result"]["rhs"] == 9


def test_square_matrix_is_outside_the_hypothesis():
    x = socmod.Ring(["X"])
    n = socmod.from_columns(x, [["X", "0"], ["0", "X"]])
    assert socmod.check_prop23(n)["verdict"] == "hypothesis-not-met"


def test_cone_and_dual_image():
    b = socmod.Ring(["x", "y", "z"], ["z^2 - x*y"], cm=True)
    assert not b.regular
    assert socmod.check_socle_multiplier(socmod.ideal(b, ["x", "y"]))["verdict"] == "holds"
    a = socmod.Ring(["x", "y"])
    d = socmod.dual_image(a, ["x^2", "x*y", "y^2"])
    assert d["result"]["betti"] == [1, 3, 2]
    assert d["verdict"] == "holds"


def test_undecided_claims():
    a = socmod.Ring(["x", "y"])
    assert socmod.check_rees_cm(socmod.ideal(a, ["x^2", "y^2"]))["verdict"] == "undecided"
    n = socmod.from_columns(a, [["x", "y", "0"], ["0", "x", "y"]])
    assert socmod.check_closed(n)["verdict"] == "undecided"


def test_prime_field():
    a = socmod.Ring(["x", "y"], field=7)
    assert socmod.colength(socmod.ideal(a, ["x^3", "y^2"])) == 6


def test_scripts():
    out = socmod.run_text("ring A = QQ[x,y];\nideal I in A = (x, y);\ncheck rn1 I;\nexpect fails;")
    assert out["exit_code"] == 0
    assert out["reports"][0]["verdict"] == "fails"
    bad = socmod.run_text("check")
    assert bad["exit_code"] == 2 and bad["parse_error"]
    corpus = socmod.corpus()
    assert len(corpus) == 9
    for text in corpus.values():
        assert socmod.run_text(text, deterministic=True)["exit_code"] == 0


def test_errors_raise():
    a = socmod.Ring(["x", "y"])
    with pytest.raises(Exception):
        socmod.ideal(a, ["x +* 1"])
