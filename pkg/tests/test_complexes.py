"""Stratified complexes: validation, constructions, allowability, JSON."""
import pytest
from hypothesis import given, settings, strategies as st

from strathom.complexes import (
    Perversity,
    StratifiedComplex,
    allowable_simplex,
    barycentric_subdivision,
    complex_from_json,
    complex_to_json,
    cone,
    link,
    suspension,
)
from strathom.corpus import by_name, circle, small_members
from strathom.errors import ValidationError


# ------------------------------------------------------------- perversity


def test_middle_perversity_values():
    assert Perversity.middle(4).values == (0, 0, 1)
    assert Perversity.middle(2).values == (0,)
    assert Perversity.middle(1).values == ()
    p = Perversity.middle(6)
    assert [p(c) for c in range(2, 7)] == [0, 0, 1, 1, 2]


def test_perversity_growth_constraints():
    Perversity((0, 1, 1, 2))
    with pytest.raises(ValidationError, match="start at"):
        Perversity((1,))
    with pytest.raises(ValidationError, match="grow by 0 or 1"):
        Perversity((0, 2))
    with pytest.raises(ValidationError, match="grow by 0 or 1"):
        Perversity((0, 1, 0))


def test_perversity_call_range():
    p = Perversity((0, 1))
    assert p(2) == 0 and p(3) == 1
    with pytest.raises(ValidationError):
        p(1)
    with pytest.raises(ValidationError):
        p(4)


def test_perversity_resized():
    assert Perversity((0, 1)).resized(5).values == (0, 1, 1, 1)
    assert Perversity((0, 1)).resized(2).values == (0,)
    assert Perversity((0,)).resized(1).values == ()
    # The middle one regrows from its formula instead of repeating.
    assert Perversity.middle(3).resized(4).values == (0, 0, 1)


def test_perversity_json():
    assert Perversity.middle(3).to_json() == "middle"
    assert Perversity.from_json("middle", 4).values == (0, 0, 1)
    assert Perversity.from_json({"2": 0, "3": 1}, 3).values == (0, 1)
    assert Perversity((0, 1)).to_json() == {"2": 0, "3": 1}
    with pytest.raises(ValidationError, match="cover"):
        Perversity.from_json({"2": 0}, 3)
    with pytest.raises(ValidationError):
        Perversity.from_json([0, 1], 3)


# ---------------------------------------------------------------- complex


def test_complex_normalizes_maximal_simplices():
    k = StratifiedComplex({"a": 1, "b": 1}, [{"a", "b"}, {"a"}])
    assert k.maximal == (frozenset({"a", "b"}),)
    assert k.dim == 1
    assert k.has_simplex({"a"}) and k.has_simplex({"a", "b"})
    assert not k.has_simplex({"a", "c"})


def test_complex_vertex_and_label_validation():
    with pytest.raises(ValidationError, match="strings"):
        StratifiedComplex({1: 1}, [{1}])
    with pytest.raises(ValidationError, match=">= 0"):
        StratifiedComplex({"a": -1}, [{"a"}])
    with pytest.raises(ValidationError, match="disagree"):
        StratifiedComplex({"a": 1, "b": 1}, [{"a"}])


def test_filtration_rejects_deep_high_dimensional_simplices():
    with pytest.raises(ValidationError, match="lies in X_0"):
        StratifiedComplex({"u": 0, "v": 0}, [{"u", "v"}])


def test_empty_complex():
    k = StratifiedComplex({}, [])
    assert k.dim == -1
    assert k.simplices == frozenset()
    assert k.euler_characteristic() == 0


def test_euler_characteristic():
    assert by_name("circle6").euler_characteristic() == 0
    assert by_name("sphere2").euler_characteristic() == 2
    assert by_name("torus7").euler_characteristic() == 0
    assert by_name("cone_hexagon").euler_characteristic() == 1


def test_cone_and_suspension_structure():
    ch = by_name("cone_hexagon")
    assert ch.dim == 2
    assert ch.label("apex") == 0
    assert len(ch.maximal) == 6
    sus = by_name("susp_hexagon")
    assert sus.dim == 2 and len(sus.maximal) == 12
    assert sus.label("north") == sus.label("south") == 0
    st7 = by_name("susp_torus7")
    assert st7.dim == 3 and len(st7.maximal) == 28


def test_cone_picks_fresh_apex_name():
    k = StratifiedComplex({"apex": 2, "b": 2}, [{"apex", "b"}])
    coned = cone(k)
    assert sorted(coned.vertices) == ["apex", "apex0", "b"]
    assert coned.strata["apex0"] == 0


def test_cone_of_empty_complex_is_a_point():
    k = cone(StratifiedComplex({}, []))
    assert k.vertices == ("apex",) and k.dim == 0


def test_suspension_of_two_points_is_a_circle():
    two = StratifiedComplex({"u": 1, "v": 1}, [{"u"}, {"v"}])
    sus = suspension(two)
    assert sorted(sorted(f) for f in sus.maximal) == [
        ["north", "u"], ["north", "v"], ["south", "u"], ["south", "v"]]
    assert sus.dim == 1


def test_link_of_apex_recovers_base():
    ch = by_name("cone_hexagon")
    assert link(ch, "apex").same_labeled_complex(circle(6, 2))
    with pytest.raises(ValidationError, match="unknown vertex"):
        link(ch, "nope")


def test_barycentric_subdivision_counts_and_labels():
    sd = barycentric_subdivision(by_name("circle6"))
    assert len(sd.vertices) == 12 and len(sd.maximal) == 12
    sd2 = barycentric_subdivision(by_name("cone_hexagon"))
    assert len(sd2.vertices) == 25 and len(sd2.maximal) == 36
    # An edge barycenter inherits the deeper endpoint's stratum reading.
    assert sd2.strata["apex|v0"] == 2
    assert sd2.strata["apex"] == 0


@pytest.mark.parametrize("name", [e.name for e, _ in small_members()])
def test_subdivision_preserves_euler_characteristic(name):
    k = by_name(name)
    assert barycentric_subdivision(k).euler_characteristic() == k.euler_characteristic()


def test_allowability_on_the_coned_hexagon():
    ch = by_name("cone_hexagon")
    assert not allowable_simplex(ch, {"apex"})
    assert allowable_simplex(ch, {"v0"})
    assert not allowable_simplex(ch, {"apex", "v0"})
    assert allowable_simplex(ch, {"v0", "v1"})
    assert allowable_simplex(ch, {"apex", "v0", "v1"})
    with pytest.raises(ValidationError, match="not a simplex"):
        allowable_simplex(ch, {"v0", "v3"})


def test_with_strata_and_with_perversity():
    k = by_name("torus7")
    flat = k.with_strata(2)
    assert flat.same_labeled_complex(k)
    upper = k.with_perversity(Perversity((0,)))
    assert upper.perversity.values == (0,)
    with pytest.raises(ValidationError, match="covers codimensions"):
        k.with_perversity(Perversity((0, 1)))


def test_complex_json_roundtrip():
    k = by_name("susp_torus7")
    doc = complex_to_json(k)
    back = complex_from_json(doc)
    assert back.same_labeled_complex(k)
    assert back.perversity.to_json() == k.perversity.to_json()
    with pytest.raises(ValidationError, match="missing"):
        complex_from_json({"dim": 3})
    with pytest.raises(ValidationError, match="declared dim"):
        complex_from_json({**doc, "dim": 9})
    with pytest.raises(ValidationError, match="same vertices"):
        complex_from_json({**doc, "vertices": doc["vertices"][:-1]})


@settings(deadline=None, max_examples=30)
@given(st.integers(min_value=3, max_value=12), st.integers(min_value=1, max_value=4))
def test_circles_of_any_size_validate(n, label):
    k = circle(n, label)
    assert k.dim == 1
    assert len(k.simplices) == 2 * n
    assert k.euler_characteristic() == 0
