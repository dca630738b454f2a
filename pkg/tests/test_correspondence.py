from itertools import permutations
from math import factorial

from hypothesis import given, strategies as st
import pytest

from pstab import (
    DashedPattern,
    InvalidInputError,
    NotInStablePairsError,
    Tableau,
    TableauPair,
    TwoRowedArray,
    extended_insert,
    is_stable_pair,
    occurrences,
    rsk,
    rsk_inverse,
    standardize,
)
from pstab.oracle import enumerate_pstab
from pstab.counting import compositions

GOLDEN_PAIR = TableauPair(Tableau([[1, 2, 4], [2, 3, 6], [4]]), Tableau([[1, 3, 6], [2, 4, 5], [7]]))
GOLDEN_ARRAY = TwoRowedArray(top=(1, 1, 2, 3, 3, 3, 4), bottom=(3, 4, 2, 1, 1, 2, 3))
ARRAY_PAIR = TableauPair(Tableau([[1, 2, 3], [1, 4], [2], [3]]), Tableau([[1, 2, 3], [1, 3], [3], [4]]))
NON_MEMBER = TableauPair(Tableau([[1, 2, 3], [1]]), Tableau([[1, 3, 4], [2]]))

words = st.lists(st.integers(min_value=1, max_value=3), max_size=7).map(tuple)
modes = st.sampled_from(["lps", "rps"])


def test_pattern_parse_and_str():
    pat = DashedPattern.parse("31-2")
    assert pat.blocks == ((3, 1), (2,))
    assert str(pat) == "31-2"
    assert len(pat) == 3


def test_pattern_parse_rejects_garbage():
    with pytest.raises(InvalidInputError):
        DashedPattern.parse("3a-2")
    with pytest.raises(InvalidInputError):
        DashedPattern.parse("31-3")
    with pytest.raises(InvalidInputError):
        DashedPattern.parse("31--2")


def test_occurrences_worked_examples():
    assert occurrences((3, 1, 4, 2), "2-31") == [(1, 3, 4)]
    assert occurrences(standardize((2, 3, 1, 2), "left"), "2-13") == [(1, 3, 4)]
    assert occurrences((1, 2, 3), "31-2") == []


def test_occurrences_allow_zero_gap_at_dash():
    assert occurrences((3, 1, 2), "31-2") == [(1, 2, 3)]
    assert occurrences((4, 1, 3, 2), "31-2") == [(1, 2, 3), (1, 2, 4)]


def test_occurrences_enforce_block_contiguity():
    # the subword at (1,3,4) is order isomorphic to 312 but its 31 part is not
    # contiguous, so only the occurrence at (2,3,4) counts
    assert occurrences((3, 4, 1, 2), "31-2") == [(2, 3, 4)]


def test_occurrences_reject_repeated_symbols():
    with pytest.raises(InvalidInputError):
        occurrences((1, 2, 1), "31-2")


@given(st.lists(st.integers(1, 6), unique=True, max_size=6).map(tuple),
       st.sampled_from(["31-2", "13-2", "23-1", "32-1"]))
def test_occurrences_invariant_under_order_isomorphism(word, pattern):
    relabeled = tuple(5 * s + 2 for s in word)
    assert occurrences(word, pattern) == occurrences(relabeled, pattern)


def test_stable_pair_rejects_the_unique_bad_pair_over_three_symbols():
    t = Tableau([[1, 3], [2]])
    assert is_stable_pair(TableauPair(t, t), "lps", "standard") is False
    assert is_stable_pair(TableauPair(t, t), "rps", "standard") is False


def test_stable_pair_rejection_via_every_forbidden_combination():
    # readings 4312 / 1342 match (32-1, 13-2) at (1,2,4) and (31-2, 23-1) at (2,3,4)
    t = Tableau([[1, 3, 4], [2]])
    assert is_stable_pair(TableauPair(t, t), "lps", "standard") is False


def test_pattern_constructor_rejects_empty_blocks():
    with pytest.raises(InvalidInputError):
        DashedPattern(((1, 2, 3), ()))


def test_triple_classifier_names_all_dashed_shapes():
    from pstab.correspondence import _triple_code

    assert _triple_code(3, 1, 2) == "31-2"
    assert _triple_code(3, 2, 1) == "32-1"
    assert _triple_code(1, 3, 2) == "13-2"
    assert _triple_code(2, 3, 1) == "23-1"
    assert _triple_code(1, 2, 3) is None
    assert _triple_code(2, 1, 3) is None


def test_stable_pair_counterexample_word_and_array_level():
    assert is_stable_pair(NON_MEMBER, "lps", "word") is False
    assert is_stable_pair(NON_MEMBER, "lps", "array") is False


@given(words, modes)
def test_insertion_image_is_stable(word, mode):
    assert is_stable_pair(extended_insert(word, mode), mode, "word") is True


def test_stable_pair_validates_preconditions():
    with pytest.raises(InvalidInputError):
        is_stable_pair(TableauPair(Tableau([[1]]), Tableau([[1], [2]])), "lps", "word")
    with pytest.raises(InvalidInputError):
        # not a recording tableau at word level
        is_stable_pair(TableauPair(Tableau([[1], [2]]), Tableau([[2], [3]])), "lps", "word")
    with pytest.raises(InvalidInputError):
        # repeated symbols rule out the standard level
        repeated = Tableau([[1], [1]])
        is_stable_pair(TableauPair(repeated, repeated), "lps", "standard")
    with pytest.raises(InvalidInputError):
        # first tableau must match the mode at word level
        rps_only = Tableau([[1, 1], [2, 2]])
        is_stable_pair(TableauPair(rps_only, Tableau([[1, 2], [3, 4]])), "lps", "word")
    with pytest.raises(InvalidInputError):
        # rPS-only tableau at lps array level
        rps_only = Tableau([[1, 1], [2, 2]])
        is_stable_pair(TableauPair(rps_only, rps_only), "lps", "array")
    with pytest.raises(InvalidInputError):
        is_stable_pair(GOLDEN_PAIR, "lps", "everything")


def test_rsk_dispatches_on_input_kind():
    assert rsk((4, 6, 2, 3, 2, 1, 4), "lps") == GOLDEN_PAIR
    assert rsk(GOLDEN_ARRAY, "lps") == ARRAY_PAIR
    assert rsk((), "lps") == TableauPair(Tableau(), Tableau())


def test_rsk_inverse_word_level():
    assert rsk_inverse(GOLDEN_PAIR, "lps", "word") == (4, 6, 2, 3, 2, 1, 4)


def test_rsk_inverse_array_level():
    assert rsk_inverse(ARRAY_PAIR, "lps", "array") == GOLDEN_ARRAY


def test_rsk_inverse_semistandard_worked_pair():
    pair = TableauPair(
        Tableau([[1], [1, 2], [2], [2, 3], [3], [3]]),
        Tableau([[1], [1, 2], [1], [2, 3], [4], [4]]),
    )
    expected = TwoRowedArray(top=(1, 1, 1, 2, 2, 3, 4, 4), bottom=(1, 2, 2, 1, 3, 2, 3, 3))
    assert rsk_inverse(pair, "lps", "array") == expected
    assert rsk(expected, "lps") == pair


def test_rsk_inverse_refuses_non_members():
    with pytest.raises(NotInStablePairsError):
        rsk_inverse(NON_MEMBER, "lps", "word")
    with pytest.raises(NotInStablePairsError):
        rsk_inverse(NON_MEMBER, "lps", "array")
    with pytest.raises(InvalidInputError):
        rsk_inverse(GOLDEN_PAIR, "lps", "standard")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_standard_level_bijection_small(n):
    image = {extended_insert(sigma, "lps") for sigma in permutations(range(1, n + 1))}
    assert len(image) == factorial(n)
    members = []
    for lam in compositions(n):
        tabs = enumerate_pstab(tuple(range(1, n + 1)), lam)
        for p in tabs:
            for q in tabs:
                if is_stable_pair(TableauPair(p, q), "lps", "standard"):
                    members.append(TableauPair(p, q))
    assert len(members) == factorial(n)
    assert set(members) == image


@given(words, modes)
def test_word_roundtrip(word, mode):
    pair = rsk(word, mode)
    assert rsk_inverse(pair, mode, "word") == word
