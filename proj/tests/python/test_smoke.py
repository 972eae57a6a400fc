import pytest

import qf


def test_trefoil_orders():
    for n, order in [(2, 3), (3, 8), (4, 24), (5, 120)]:
        q, gens = qf.complete(f"quandle<a,b | (a*b)*a=b, a*^{n} b=a>")
        assert q.order == order
        assert qf.type_of(q) == n
        assert set(gens) == {"a", "b"}
        assert qf.is_quandle(q)


def test_quandle_from_rows():
    m = 5
    q = qf.Quandle([[(2 * y - x) % m for y in range(m)] for x in range(m)])
    assert qf.isomorphism(q, qf.Quandle.dihedral(m)) is not None
    assert qf.colorings(q, 5) == 25
    assert q.rows()[1][2] == 3
    assert qf.profile(q)["inner_group_order"] == 10


def test_groups_and_galex():
    g = qf.group("group<x,y | x^2 = y^2 = (x*y)^2>")
    assert g.order == 8
    assert sorted(qf.automorphism_orders(g)).count(3) == 8
    q = qf.galex(g, 3)
    assert qf.type_of(q) == 3
    with pytest.raises(qf.NotFound):
        qf.galex(qf.Group.cyclic(5), 3)


def test_census():
    assert [len(qf.enumerate_quandles(n)) for n in range(1, 5)] == [1, 1, 3, 7]


def test_classify_and_triple():
    c = qf.classify("t_{3,4}", 2, "t23", 4)
    assert c["verdict"] == "not_equivalent"
    assert c["witness"][0]["invariant"] == "type"
    c = qf.classify("figure-eight", 2, "t_{2,5}", 2)
    assert c["quandle_isomorphic"] and c["caveats"]
    r = qf.triple_report(5, 3, 2)
    assert all(r["groups_isomorphic"].values())
    assert not any(r["quandles_isomorphic"].values())


def test_catalog_and_presentations():
    assert "figure-eight" in qf.knots()
    assert qf.family("t23", 5) == "S6"
    assert qf.family("t27", 3) is None
    text = qf.twist_spin_presentation("1,1,1", 3)
    assert qf.complete(text)[0].order == 8


def test_errors():
    with pytest.raises(qf.ParseError):
        qf.complete("quandle<a,b | a*=b>")
    with pytest.raises(qf.BudgetExceeded):
        qf.complete("quandle<a,b | (a*b)*a=b, a*^7 b=a>", budget=300)
    with pytest.raises(qf.OutsideFiniteCatalog):
        qf.classify("t27", 3, "t23", 3)
    with pytest.raises(qf.OutsideCatalog):
        qf.triple_report(2, 3, 7)
    with pytest.raises(qf.UsageError):
        qf.triple_report(2, 4, 5)
    assert issubclass(qf.BudgetExceeded, qf.DomainError)
