import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vecfield_census import bracketing as br
from vecfield_census.diagram import BoardDiagram, EdgeKind
from vecfield_census.errors import NotValid, OddLength
from vecfield_census.formulas import catalan

from _bruteforce import naive_rotated_string


def test_from_bracketing_examples():
    d = BoardDiagram.from_bracketing("()")
    assert d.partners == (1, 0)
    assert d.kinds == (EdgeKind.HOMOCLINIC, EdgeKind.HOMOCLINIC)

    d = BoardDiagram.from_bracketing("[]..")
    assert d.partners == (1, 0, -1, -1)
    assert d.kinds[:2] == (EdgeKind.TRANSVERSAL, EdgeKind.TRANSVERSAL)
    assert d.kinds[2:] == (None, None)


def test_from_bracketing_rejections():
    with pytest.raises(NotValid):
        BoardDiagram.from_bracketing("(.)")
    with pytest.raises(OddLength):
        BoardDiagram.from_bracketing("...")
    with pytest.raises(NotValid):
        BoardDiagram.from_bracketing("")


def test_constructor_rejects_crossings_and_bad_involutions():
    H = EdgeKind.HOMOCLINIC
    with pytest.raises(NotValid):
        BoardDiagram((2, 3, 0, 1), (H, H, H, H))  # crossing chords
    with pytest.raises(NotValid):
        BoardDiagram((1, 0), (H, EdgeKind.TRANSVERSAL))  # kind mismatch
    with pytest.raises(NotValid):
        BoardDiagram((0, 1), (H, H))  # self-paired
    with pytest.raises(NotValid):
        BoardDiagram((-1, -1, -1), (None, None, None))  # odd slot count
    with pytest.raises(NotValid):
        BoardDiagram((), ())  # no slots


def test_roundtrip_exhaustive_up_to_10():
    for n in (2, 4, 6, 8, 10):
        for s in br.enumerate_valid(n):
            assert BoardDiagram.from_bracketing(s).to_bracketing() == s


def test_rotate_identity_and_full_turn():
    for s in br.enumerate_valid(6):
        d = BoardDiagram.from_bracketing(s)
        assert d.rotated(0) == d
        assert d.rotated(6) == d
        assert d.rotated(-2) == d.rotated(4)


def test_rotate_examples():
    nested = BoardDiagram.from_bracketing("(())")
    assert nested.rotated(2) == nested
    assert nested.rotated(1).to_bracketing() == "()()"

    mixed = BoardDiagram.from_bracketing("([])")
    assert mixed.rotated(1) == BoardDiagram.from_bracketing("()[]")
    orbit = {mixed.rotated(r).to_bracketing() for r in range(4)}
    assert orbit == {"([])", "()[]", "[()]", "[]()"}


def test_rotate_agrees_with_naive_pair_shift():
    for n in (1, 2, 3):
        for s in br.enumerate_valid(2 * n):
            d = BoardDiagram.from_bracketing(s)
            for r in range(2 * n):
                assert d.rotated(r).to_bracketing() == naive_rotated_string(s, r)


def test_rotation_composition():
    for s in br.enumerate_valid(6):
        d = BoardDiagram.from_bracketing(s)
        for r1 in range(6):
            for r2 in range(6):
                assert d.rotated(r1).rotated(r2) == d.rotated(r1 + r2)


@given(st.integers(min_value=1, max_value=4), st.data())
@settings(max_examples=120, deadline=None)
def test_rotation_closure_property(n, data):
    pool = list(br.enumerate_valid(2 * n))
    s = data.draw(st.sampled_from(pool))
    r = data.draw(st.integers(min_value=-10, max_value=10))
    rotated = BoardDiagram.from_bracketing(s).rotated(r)  # constructor validates
    assert br.is_valid(rotated.to_bracketing())


@pytest.mark.parametrize(
    "s,expect",
    [("....", 1), ("()()", 2), ("()[]", 4), ("()", 1), ("(())", 2), ("[..]", 4)],
)
def test_period_examples(s, expect):
    assert BoardDiagram.from_bracketing(s).period() == expect


def test_period_divides_and_characterizes_fixity():
    for n in (1, 2, 3, 4):
        for s in br.enumerate_valid(2 * n):
            d = BoardDiagram.from_bracketing(s)
            p = d.period()
            assert (2 * n) % p == 0
            for r in range(2 * n):
                assert (d.rotated(r) == d) is (r % p == 0)


def test_canonical_form_examples():
    assert BoardDiagram.from_bracketing("([])").canonical_form() == "()[]"
    assert BoardDiagram.from_bracketing("()").canonical_form() == "()"
    assert BoardDiagram.from_bracketing("..()").canonical_form() == "().."


def test_canonical_form_is_orbit_invariant_and_separating():
    for n in (1, 2, 3):
        by_canon: dict[str, set[str]] = {}
        for s in br.enumerate_valid(2 * n):
            d = BoardDiagram.from_bracketing(s)
            canon = d.canonical_form()
            for r in range(2 * n):
                assert d.rotated(r).canonical_form() == canon
            by_canon.setdefault(canon, set()).add(s)
        # distinct canonical forms are genuinely distinct orbits
        for canon, members in by_canon.items():
            d = BoardDiagram.from_bracketing(canon)
            orbit = {d.rotated(r).to_bracketing() for r in range(2 * n)}
            assert members == orbit


@pytest.mark.parametrize(
    "s,expect",
    [("[[]]", True), ("()", False), ("[]..", False), ("[][]", True), ("[()]", False)],
)
def test_is_generic_examples(s, expect):
    assert BoardDiagram.from_bracketing(s).is_generic() is expect


def test_generic_diagrams_are_catalan_counted():
    for n in (1, 2, 3, 4, 5):
        count = sum(
            1
            for s in br.enumerate_valid(2 * n)
            if BoardDiagram.from_bracketing(s).is_generic()
        )
        assert count == catalan(n)


def test_json_roundtrip_and_shape():
    d = BoardDiagram.from_bracketing("[]..")
    payload = d.to_json_dict()
    assert payload["n"] == 2
    assert payload["slots"][0] == {"partner": 1, "kind": "T"}
    assert payload["slots"][2] == {"partner": None, "kind": None}
    assert BoardDiagram.from_json_dict(payload) == d


def test_json_rejects_inconsistent_n():
    payload = BoardDiagram.from_bracketing("()").to_json_dict()
    payload["n"] = 7
    with pytest.raises(NotValid):
        BoardDiagram.from_json_dict(payload)
