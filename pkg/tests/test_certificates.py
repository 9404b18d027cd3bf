import pytest

from coxrank.certificates import (
    Counterexample,
    GoodnessStatus,
    bad_set,
    falsify_essential,
    find_even_completion,
    goodness_report,
    is_all_odd_essential,
    is_good_essential,
    is_s_good,
    is_s_minimal,
)
from coxrank.errors import (
    GeneratorAbsentError,
    MissingGeneratorsError,
    NotReducedError,
    RadiusCapError,
)
from coxrank.words import enumerate_ball, parity_vector, support


def test_s_minimal_examples(c5):
    assert is_s_minimal(c5, ("c", "a", "c"), "c")
    assert is_s_minimal(c5, ("a",), "a")  # vacuous single occurrence


def test_s_minimal_errors(c5):
    with pytest.raises(NotReducedError):
        is_s_minimal(c5, ("a", "a"), "a")
    with pytest.raises(GeneratorAbsentError):
        is_s_minimal(c5, ("a",), "b")


def test_every_reduced_word_is_s_minimal(c5):
    for w in enumerate_ball(c5, 5):
        for s in support(c5, w):
            assert is_s_minimal(c5, w, s)


def test_s_good_examples(c5):
    assert not is_s_good(c5, ("c", "a", "c"), "c")  # nothing outside the pair
    assert is_s_good(c5, ("a", "b", "c", "d", "e"), "a")  # single occurrence
    w = ("d", "c", "a", "c", "d")
    assert not is_s_good(c5, w, "c")  # outside blocks are "d" and "d": both commute with c
    assert not is_s_good(c5, w, "d")  # outside blocks empty
    assert is_s_minimal(c5, w, "c") and is_s_minimal(c5, w, "d")


def test_bad_set_examples(c5):
    assert bad_set(c5, tuple("abcde")).bad_set == frozenset()
    report = bad_set(c5, tuple("abcdea"))
    assert report.bad_set == frozenset("a")
    assert report.per_generator["a"] is GoodnessStatus.NOT_GOOD
    assert report.per_generator["b"] is GoodnessStatus.GOOD
    assert report.full_support


def test_bad_set_missing_generators(c5):
    with pytest.raises(MissingGeneratorsError) as err:
        bad_set(c5, ("a", "b", "c", "d"))
    assert err.value.missing == ("e",)


def test_goodness_report_absent_statuses(c5):
    report = goodness_report(c5, ("c", "a", "c"))
    assert report.per_generator["b"] is GoodnessStatus.ABSENT
    assert not report.full_support
    assert report.bad_set == frozenset("c")  # absent generators stay out
    d = report.to_json_dict()
    assert d["badSet"] == ["c"]
    assert d["fullSupport"] is False


def test_all_odd_examples(c5):
    assert is_all_odd_essential(c5, tuple("abcde"))
    assert not is_all_odd_essential(c5, ("a", "b"))
    assert is_all_odd_essential(c5, tuple("aaabcde"))


def test_good_essential_examples(c5):
    assert is_good_essential(c5, tuple("abcde"))
    assert not is_good_essential(c5, tuple("abcdea"))
    assert not is_good_essential(c5, ("a", "b"))  # missing support
    # reduces internally: abab is the identity
    assert not is_good_essential(c5, tuple("abab"))


def test_every_permutation_word_is_good_essential(c5):
    import itertools

    for perm in itertools.permutations(c5.vertices):
        assert is_good_essential(c5, perm)
        assert is_all_odd_essential(c5, perm)


def test_find_even_completion_examples(c5):
    assert find_even_completion(c5, ("a", "b")) == ("c", "d", "e")
    assert find_even_completion(c5, tuple("abcde")) == ()
    assert find_even_completion(c5, ("a", "a")) == ("a", "b", "c", "d", "e")


def test_completion_always_all_odd(c5):
    for w in enumerate_ball(c5, 5):
        completion = find_even_completion(c5, w)
        assert len(set(completion)) == len(completion)
        assert is_all_odd_essential(c5, completion + w)
        assert all(
            v == 1 for v in parity_vector(c5, completion + w).values()
        )


def test_falsify_examples(c5):
    hit = falsify_essential(c5, ("a",), 2)
    assert hit == Counterexample(conjugator=(), parabolic=frozenset("a"))
    assert falsify_essential(c5, tuple("abcde"), 3) is None
    assert falsify_essential(c5, (), 1) is not None  # identity is not essential


def test_falsify_radius_cap(c5):
    with pytest.raises(RadiusCapError):
        falsify_essential(c5, ("a",), 12)


def test_certified_words_survive_falsifier_small(c5):
    for w in enumerate_ball(c5, 5):
        if is_all_odd_essential(c5, w) or is_good_essential(c5, w):
            assert falsify_essential(c5, w, 2) is None
