"""Truncated generating series of omega_X.

The stringy volume is ``[G/H] * sum zeta_l * L^omega(y, nu, l)`` over classes
``[y, nu, l]`` of lattice points of the Cayley cones.  Points with ``l = 0``
are identified across all ``y`` and carry ``P = [C_X - supp]``; points with
``l >= 1`` carry ``T = L - 1``.  Coefficients stay symbolic: a term records
how many classes of each kind sit at a given exponent.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import _linalg as la
from .divisor import ColoredPolyhedralDivisor, support
from .errors import NotLogTerminal
from .geometry import as_rational, lattice_points
from .weight import WeightFunction, solve_weight

__all__ = ["StringyTerm", "StringySeries", "stringy_series"]


@dataclass(frozen=True)
class StringyTerm:
    exponent: Fraction
    n_open: int
    n_special: int


@dataclass(frozen=True)
class StringySeries:
    """``prefactor * sum (n_open * P + n_special * T) * L^exponent``."""

    terms: tuple[StringyTerm, ...]
    truncation: Fraction
    prefactor: str = "[G/H]"

    @property
    def denominator(self) -> int:
        """``q`` such that every exponent is an integer power of ``L^(1/q)``."""
        return reduce(math.lcm, (t.exponent.denominator for t in self.terms), 1)

    def as_dict(self) -> dict:
        return {t.exponent: (t.n_open, t.n_special) for t in self.terms}


def stringy_series(d: ColoredPolyhedralDivisor, truncation, w: WeightFunction | None = None) -> StringySeries:
    """All terms with exponent ``>= truncation``; needs log terminal input."""
    from .classify import classify_log_terminal

    t = as_rational(truncation)
    if t >= 0:
        raise ValueError("truncation must be negative")
    w = w if w is not None else solve_weight(d)
    lt, wit = classify_log_terminal(d, w)
    if not lt:
        raise NotLogTerminal(f"omega = {wit.omega} >= 0 on the ray {wit.vector}")
    open_ = Counter({Fraction(0): 1})
    special = Counter()
    supp = support(d)
    # l = 0 classes live on the common face (sigma, 0) of the cones over supp
    if supp:
        for p in lattice_points(d.tail, w.tail, t):
            if any(p):
                open_[la.dot(w.tail, p)] += 1
    for y in supp:
        form = w.form(y)
        for p in lattice_points(w.cones[y].cone, form, t):
            if p[-1] >= 1:
                special[la.dot(form, p)] += 1
    exps = sorted(set(open_) | set(special), reverse=True)
    terms = tuple(StringyTerm(e, open_[e], special[e]) for e in exps)
    return StringySeries(terms, t)
