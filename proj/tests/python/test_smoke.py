from fractions import Fraction

import pytest

import betaorbit


def test_freq_golden_ratio():
    assert betaorbit.freq("quad:(1+1*sqrt(5))/2") == (Fraction(1, 2), "M.c")


def test_freq_three_halves():
    value, case = betaorbit.freq("rat:3/2")
    assert value == Fraction(1, 3)
    assert case == "G.3b"


def test_expansion_prefix():
    assert betaorbit.bar_expansion("pi", n=10).startswith("3011021110")


def test_christoffel():
    lower, upper, central = betaorbit.christoffel(2, 5)
    assert (lower, upper, central) == ("00101", "10100", "010")


def test_pal_and_centrality():
    assert betaorbit.pal("010") == "010010"
    assert betaorbit.is_central("010")
    assert not betaorbit.is_central("0110")


def test_domain_error():
    with pytest.raises(betaorbit.DomainError):
        betaorbit.xi("1/2", "rat:3/2")
    assert issubclass(betaorbit.DomainError, ValueError)


def test_undetermined():
    with pytest.raises(betaorbit.Undetermined):
        betaorbit.freq(
            "dec:1.83524463578171158396416179170095023101332013663119263032541211015550475547128285@80",
            max_depth=64,
        )
