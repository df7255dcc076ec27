"""The falsifier: no man strategy survives a space with a minimum."""

import pytest

from lionman import falsify_man_strategy, is_continuous
from lionman.finite import NoMinimumError
from lionman.fixtures import ClairvoyantMan, MirrorMan, SitMan, falsifier_fixture_suite


def test_indiscrete_defeats_any_man(indiscrete2):
    for name, man in falsifier_fixture_suite(indiscrete2).items():
        result = falsify_man_strategy(indiscrete2, "b", man)
        assert result.capture_time == 1.0, name
        assert result.verified, name
        assert result.beta_prime.at(1.0) == result.response_at_1


def test_sierpinski_sit_at_one(sierpinski):
    result = falsify_man_strategy(sierpinski, "1", SitMan("1"))
    assert result.capture_time == 1.0
    assert result.verified
    assert result.response_at_1 == "1"
    assert result.beta_prime.at(1.0) == "1"  # the path jumps onto the sitter
    assert result.beta_prime.at(0.5) == "0"  # after walking down to the minimum
    assert is_continuous(sierpinski, result.beta_prime)


def test_discrete_space_has_no_minimum(discrete2):
    with pytest.raises(NoMinimumError):
        falsify_man_strategy(discrete2, "a", SitMan("b"))


def test_zigzag_without_minimum_rejected(fence_space):
    with pytest.raises(NoMinimumError):
        falsify_man_strategy(fence_space, "a", MirrorMan(default="c"))


def test_chain_defeats_fixture_suite(chain3):
    for name, man in falsifier_fixture_suite(chain3).items():
        result = falsify_man_strategy(chain3, "c", man)
        assert result.capture_time == 1.0, name
        assert result.verified, name


def test_beta_prime_agrees_with_beta_before_1(chain3):
    result = falsify_man_strategy(chain3, "c", MirrorMan(default="b"))
    bp = result.beta_prime
    # before t=1 the rewritten path is the original walk to the minimum
    assert bp.at(0.0) == "c"
    assert bp.at(0.5) == "a"
    assert bp.at(0.999) == "a"
    assert bp.at(1.0) == result.response_at_1


def test_clairvoyant_man_reported_as_causality_violation(sierpinski):
    # emits the swap of the opponent's next sample: a genuinely future-
    # dependent response that the verification replay must expose
    swap = {"0": "1", "1": "0"}
    cheat = ClairvoyantMan(transform=lambda p: swap[p])
    result = falsify_man_strategy(sierpinski, "1", cheat)
    assert not result.verified
    assert result.causality_violation is not None


def test_unknown_start_rejected(sierpinski):
    from lionman import ScenarioError

    with pytest.raises(ScenarioError):
        falsify_man_strategy(sierpinski, "zz", SitMan("1"))
