import pytest

import hocalc


def test_hom_sets():
    assert len(hocalc.hom_set([], [2])) == 3
    assert len(hocalc.hom_set([1], [1, 1])) == 4
    assert len(hocalc.hom_set([1, 1], [1, 1])) == 5


def test_compose_identity():
    ident = {"source": [1, 1], "target": [1, 1], "components": [[0, 1], [0, 1]]}
    assert hocalc.compose(ident, ident) == ident


def test_fixtures_are_categories():
    assert "retract" in hocalc.fixture_names()
    for name in hocalc.fixture_names():
        ok, witness = hocalc.is_ncategory(name)
        assert ok, witness


def test_category_documents():
    doc = hocalc.category("arrow")
    assert doc["schema"] == "v1"
    assert hocalc.oracle_hom(doc, "arrow") == 3
    doc["arrows"][0]["dst"] = "nowhere"
    with pytest.raises(ValueError, match="/arrows/0/dst"):
        hocalc.category(doc)


def test_resolution():
    r = hocalc.resolve("arrow")
    assert r["f0"]["cells"] == 3
    assert r["structure_failures"] == []
    p = hocalc.resolve("point", degree_bound=2, f2=True)
    assert p["latch"]["cells"] == 15


@pytest.mark.parametrize("a,b,n", [("arrow", "arrow", 3), ("iso", "arrow", 2), ("point", "arrow", 2),
                                   ("point", "iso", 1), ("point", "point", 1)])
def test_hom_classes(a, b, n):
    assert hocalc.hom_classes(a, b)["classes"] == n
    assert hocalc.oracle_hom(a, b) == n


def test_mapping_space():
    ms = hocalc.mapping_space("point", "iso", degree_bound=2, max_level=2)
    assert ms["pi0"] == 1
    assert ms["identity_failures"] == []


def test_discrepancy():
    rows = {(r["a"], r["b"]): r for r in hocalc.report("discrepancy")}
    row = rows[("point", "retract")]
    assert (row["method"], row["oracle"], row["flagged"]) == (1, 2, True)


def test_errors():
    with pytest.raises(ValueError):
        hocalc.resolve("arrow", n=3)
    with pytest.raises(hocalc.BoundError):
        hocalc.theta_closure_agrees(5)
