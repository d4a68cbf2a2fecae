"""Language tests. The independent oracle is a brute factor scan of a long
graph-word prefix; the library computes languages by the level decomposition
instead, and the two must agree wherever the scan premise holds."""

import pytest
from hypothesis import given, strategies as st

from grigorchuk import (
    complexity,
    delta_not_eventually_periodic,
    double_language,
    extensions,
    gamma_word,
    is_admissible,
    language,
    morse_hedlund_check,
    occurring_symbols_from,
    parse_omega,
    render_word,
    ruler_a,
    uniform_recurrence_radius,
)
from grigorchuk.omega import EventuallyConstantOmegaError


def scan_factors(omega, n: int) -> frozenset:
    """Brute factor scan of a graph-word prefix. The horizon is stretched so
    that, at the junction level for n, every symbol still occurring in omega
    has shown up as a junction block: the first junction carrying symbol s
    sits at block index 2^(v-1) where v is the first tail position reading s,
    so factors of the prefix past (2^(v-1)+1)*2^m are exhaustive."""
    m = max(1, (n - 1).bit_length())
    worst = 1
    for s in omega.symbols_from(m):
        v = 1
        while omega.at(m - 1 + v) != s:
            v += 1
        worst = max(worst, (1 << (v - 1)) + 1)
    w = gamma_word(omega, (worst + 1) << m)
    return frozenset(w[i : i + n] for i in range(len(w) - n + 1))


class TestGammaWord:
    def test_prefix(self, omega012):
        assert gamma_word(omega012, 4) == "T0T1"

    def test_odd_positions_theta(self, suite):
        for w in suite:
            word = gamma_word(w, 101)
            assert all(word[p] == "T" for p in range(0, 101, 2))

    def test_even_positions_ruler(self, suite):
        for w in suite:
            word = gamma_word(w, 100)
            for i in range(1, 50):
                assert word[2 * i - 1] == str(w.at(ruler_a(i)))


class TestLanguage:
    def test_length1(self, omega012):
        assert language(omega012, 1) == frozenset("T012")

    def test_length2(self, omega012):
        assert language(omega012, 2) == frozenset({"T0", "T1", "T2", "0T", "1T", "2T"})

    def test_alternation(self, suite):
        for w in suite:
            for word in language(w, 7):
                thetas = {i for i, c in enumerate(word) if c == "T"}
                assert thetas in ({0, 2, 4, 6}, {1, 3, 5})

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 16, 21, 32, 50])
    def test_exactness_against_scan(self, suite, n):
        for w in suite:
            assert language(w, n) == scan_factors(w, n)

    def test_factor_closure(self, suite):
        for w in suite:
            for n in range(2, 24):
                smaller = language(w, n - 1)
                for word in language(w, n):
                    assert word[:-1] in smaller and word[1:] in smaller

    def test_eventually_constant_rejected(self):
        with pytest.raises(EventuallyConstantOmegaError):
            language(parse_omega("0:1"), 3)

    def test_occurring_symbols(self):
        assert occurring_symbols_from(parse_omega("2:0112"), 2) == {0, 1, 2}
        assert occurring_symbols_from(parse_omega("2:01"), 2) == {0, 1}


class TestComplexity:
    def test_small_values(self, omega012):
        assert complexity(omega012, 1) == 4
        assert complexity(omega012, 2) == 6
        assert [complexity(omega012, n) for n in range(1, 9)] == [4, 6, 8, 10, 13, 16, 18, 20]

    def test_bounds(self, suite):
        for w in suite:
            for n in range(1, 257):
                assert n + 1 <= complexity(w, n) <= 6 * n

    def test_power_of_two_boundary(self, suite):
        for w in suite:
            for m in range(1, 8):
                assert complexity(w, 1 << m) <= 3 << m

    def test_morse_hedlund(self, suite):
        for w in suite:
            assert all(morse_hedlund_check(w, n) for n in range(1, 65))


class TestAdmissibility:
    def test_rejections(self, omega012):
        assert not is_admissible("TT", omega012)
        assert not is_admissible("00", omega012)

    def test_factors_of_prefix_admissible(self, omega012):
        word = gamma_word(omega012, 500)
        for i in range(0, 480, 7):
            assert is_admissible(word[i : i + 11], omega012)

    def test_extensions(self, omega012):
        right_of_theta = extensions("T", omega012, "right")
        assert right_of_theta and right_of_theta <= frozenset("012")
        assert extensions("0", omega012, "right") == frozenset("T")
        assert extensions("0", omega012, "left") == frozenset("T")

    def test_extensions_nonempty(self, suite):
        for w in suite:
            for word in language(w, 10):
                assert extensions(word, w, "left")
                assert extensions(word, w, "right")

    def test_extensions_reject_inadmissible(self, omega012):
        with pytest.raises(ValueError):
            extensions("TT", omega012, "right")


class TestRecurrence:
    def test_frozen_radius(self, omega012):
        assert uniform_recurrence_radius(omega012, 1) == 16

    def test_definition_at_frozen_radius(self, omega012):
        # independent re-check of minimality: 16 covers, 15 does not
        letters = language(omega012, 1)
        for w in language(omega012, 16):
            assert letters <= set(w)
        assert any(not letters <= set(w) for w in language(omega012, 15))

    def test_monotone(self, omega012):
        radii = [uniform_recurrence_radius(omega012, n) for n in range(1, 9)]
        assert radii == sorted(radii)

    def test_terminates_suite(self, suite):
        for w in suite:
            for n in range(1, 17):
                radius = uniform_recurrence_radius(w, n)
                assert radius >= n

    def test_every_long_window_contains_short_words(self, suite):
        for w in suite:
            for n in (2, 5, 9):
                radius = uniform_recurrence_radius(w, n)
                targets = language(w, n)
                for word in language(w, radius):
                    found = {word[i : i + n] for i in range(radius - n + 1)}
                    assert targets <= found


class TestAperiodicity:
    def test_suite(self, suite):
        for w in suite:
            assert delta_not_eventually_periodic(w, 64, 4096)

    def test_horizon_validation(self, omega012):
        with pytest.raises(ValueError):
            delta_not_eventually_periodic(omega012, 64, 100)


class TestDoubleLanguage:
    def test_length1(self, omega012):
        assert double_language(omega012, 1) == frozenset("T012z")

    def test_length2(self, omega012):
        expected = {c + "z" for c in "T012"} | {"z" + c for c in "T012"}
        assert double_language(omega012, 2) == frozenset(expected)

    def test_marker_alternates(self, suite):
        for w in suite:
            for word in double_language(w, 9):
                z_positions = {i for i, c in enumerate(word) if c == "z"}
                assert z_positions in ({0, 2, 4, 6, 8}, {1, 3, 5, 7})

    def test_doubling_bound(self, suite):
        for w in suite:
            for n in range(1, 129):
                assert len(double_language(w, n)) <= 2 * complexity(w, (n + 1) // 2)

    def test_plain_subword_admissible(self, suite):
        for w in suite:
            for word in double_language(w, 11):
                plain = word.replace("z", "")
                assert is_admissible(plain, w)


def test_render_word():
    assert render_word("T012z") == "TL0L1L2z"
