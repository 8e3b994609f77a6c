"""Beta-expansions, Sturmian words and invariant orbit closures."""

from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    PrecisionExhausted,
    Undetermined,
    bar_expansion,
    christoffel,
    classify,
    delta,
    is_central,
    pal,
    palindromic_closure,
    xi,
)

__all__ = [
    "DomainError",
    "PrecisionExhausted",
    "Undetermined",
    "bar_expansion",
    "christoffel",
    "classify",
    "delta",
    "freq",
    "is_central",
    "locate",
    "pal",
    "palindromic_closure",
    "xi",
]


def freq(beta, max_depth=512):
    """Freq(beta) as a Fraction, with the case tag."""
    r = _core.freq(beta, max_depth)
    return Fraction(r["freq"]), r["case"]


def locate(beta, t, max_depth=512):
    r = _core.locate(beta, t, max_depth)
    r["freq"] = Fraction(r["freq"])
    return r
