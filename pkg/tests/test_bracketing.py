import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vecfield_census import bracketing as br
from vecfield_census.errors import NotValid, UnknownCharacter

from _bruteforce import all_strings, enumerate_by_rules, quasi_set, rules_accept


def test_parse_basic():
    assert br.parse_string("[]") == "[]"
    assert br.parse_string("(•)") == "(.)"
    assert br.parse_string(" ( . ) ") == "(.)"
    assert br.parse_string("") == ""


def test_parse_rejects_unknown_characters():
    with pytest.raises(UnknownCharacter) as exc:
        br.parse_string("ab")
    assert exc.value.position == 0
    with pytest.raises(UnknownCharacter) as exc:
        br.parse_string("()x")
    assert exc.value.position == 2


def test_symbol_order_is_not_ascii():
    # ( < ) < [ < ] < .   whereas ASCII puts '.' before '['
    ordered = sorted(["]", ".", "(", "[", ")"], key=br.symbol_sort_key)
    assert ordered == ["(", ")", "[", "]", "."]


@pytest.mark.parametrize(
    "s,expect",
    [
        ("[]", True),
        ("([)]", False),
        ("(.)", False),
        ("(..)", True),
        ("", True),
        (".", True),
        ("(", False),
        ("...", True),
        ("().", True),
        (".()", True),
        ("[].", True),
        (".[]", True),
        ("[.]", False),
        ("(()", False),
    ],
)
def test_is_valid_examples(s, expect):
    assert br.is_valid(s) is expect


def test_valid_length3_strings():
    assert set(br.enumerate_valid(3)) == {"...", "().", ".()", "[].", ".[]"}


@pytest.mark.parametrize(
    "s,expect",
    [
        ("(.)", True),
        ("()", True),
        ("((.)", False),
        ("[.]", True),
        ("..", True),
        (")", False),
    ],
)
def test_is_quasi_valid_examples(s, expect):
    assert br.is_quasi_valid(s) is expect


def test_match_pairs_examples():
    table = br.match_pairs("()")
    assert table.pairs == frozenset({br.Pair(0, 1, br.PairKind.ROUND)})
    assert table.dots == frozenset()

    with pytest.raises(NotValid) as exc:
        br.match_pairs("[.]")
    assert exc.value.reason == "odd interior"
    with pytest.raises(NotValid) as exc:
        br.match_pairs("([)]")
    assert exc.value.reason == "crossing"
    with pytest.raises(NotValid) as exc:
        br.match_pairs("((")
    assert exc.value.reason == "unbalanced"


def test_match_pairs_roundtrip_exhaustive():
    for n in range(11):
        for s in br.enumerate_valid(n):
            assert br.match_pairs(s).to_string() == s


def test_match_pairs_fails_exactly_on_invalid():
    for n in range(7):
        for s in all_strings(n):
            if br.is_valid(s):
                br.match_pairs(s)
            else:
                with pytest.raises(NotValid):
                    br.match_pairs(s)


def test_enumerate_small_families():
    assert list(br.enumerate_valid(0)) == [""]
    assert list(br.enumerate_valid(1)) == ["."]
    assert list(br.enumerate_valid(2)) == ["()", "[]", ".."]


def test_enumerate_is_strictly_increasing():
    for n in range(9):
        keys = [br.symbol_sort_key(s) for s in br.enumerate_valid(n)]
        assert all(a < b for a, b in zip(keys, keys[1:]))


def test_enumerate_agrees_with_counting_rules_up_to_12():
    # The grammar-driven enumerator and a DFS that prunes on the four
    # counting rules must produce the same list, odd lengths included.
    for n in range(13):
        assert list(br.enumerate_valid(n)) == enumerate_by_rules(n)


def test_validity_agrees_with_counting_rules_on_all_strings():
    for n in range(8):
        for s in all_strings(n):
            assert br.is_valid(s) is rules_accept(s)


def test_count_valid_known_values():
    assert [br.count_valid(n) for n in range(7)] == [1, 1, 3, 5, 17, 33, 119]
    assert br.count_valid(10) == 7755
    assert br.count_valid(14) == 611567


def test_count_valid_matches_enumeration():
    for n in range(13):
        assert sum(1 for _ in br.enumerate_valid(n)) == br.count_valid(n)


def test_count_valid_is_exact_beyond_word_size():
    # growth ~ 11^n: length 80 is already far past 64-bit territory
    value = br.count_valid(80)
    assert value > 2**64
    assert isinstance(value, int)


def test_count_quasi_known_values():
    assert [br.count_quasi(m) for m in range(8)] == [1, 1, 3, 7, 21, 61, 179, 575]


def test_count_quasi_matches_insertion_set():
    for n in range(1, 13):
        expected = quasi_set(
            n, br.enumerate_valid(n), br.enumerate_valid(n - 1)
        )
        assert len(expected) == br.count_quasi(n)


def test_quasi_definition_on_all_strings():
    # is_quasi_valid must equal "valid or one dot deletion is valid"
    for n in range(7):
        for s in all_strings(n):
            by_definition = br.is_valid(s) or any(
                s[i] == "." and br.is_valid(s[:i] + s[i + 1 :])
                for i in range(n)
            )
            assert br.is_quasi_valid(s) is by_definition


@given(st.integers(min_value=0, max_value=8), st.data())
@settings(max_examples=150, deadline=None)
def test_valid_strings_are_quasi_valid(n, data):
    pool = list(br.enumerate_valid(n))
    s = data.draw(st.sampled_from(pool))
    assert br.is_quasi_valid(s)


@given(st.integers(min_value=0, max_value=7), st.data())
@settings(max_examples=150, deadline=None)
def test_dot_insertion_into_valid_is_quasi_valid(n, data):
    pool = list(br.enumerate_valid(n))
    s = data.draw(st.sampled_from(pool))
    i = data.draw(st.integers(min_value=0, max_value=n))
    assert br.is_quasi_valid(s[:i] + "." + s[i:])


def test_counting_tables_are_thread_safe():
    results = []

    def worker():
        results.append((br.count_valid(90), br.count_quasi(90)))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
