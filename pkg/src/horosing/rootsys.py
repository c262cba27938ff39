"""Cartan matrices and color coefficients.

Simple roots use the Bourbaki numbering.  Matrices follow the convention
``C[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``,
so for B2 (alpha_1 long) ``C = [[2, -1], [-2, 2]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidRank, InvalidSpec

__all__ = ["CONVENTION", "RootSystemSpec", "cartan_matrix", "color_coefficients"]

CONVENTION = "C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering"


def _gram(kind, n):
    """Squared lengths and off-diagonal inner products of the simple roots."""
    lengths = [2] * n
    edges = []
    if kind == "A":
        edges = [(i, i + 1, -1) for i in range(n - 1)]
    elif kind == "B":
        edges = [(i, i + 1, -1) for i in range(n - 1)]
        lengths[-1] = 1
    elif kind == "C":
        edges = [(i, i + 1, -1) for i in range(n - 2)] + [(n - 2, n - 1, -2)]
        lengths[-1] = 4
    elif kind == "D":
        edges = [(i, i + 1, -1) for i in range(n - 2)] + [(n - 3, n - 1, -1)]
    elif kind == "E":
        edges = [(0, 2, -1), (1, 3, -1)] + [(i, i + 1, -1) for i in range(2, n - 1)]
    elif kind == "F":
        edges = [(0, 1, -1), (1, 2, -1), (2, 3, -Fraction(1, 2))]
        lengths = [2, 2, 1, 1]
    elif kind == "G":
        edges = [(0, 1, -3)]
        lengths = [2, 6]
    return lengths, edges


_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def cartan_matrix(kind: str, rank: int) -> list[list[int]]:
    kind = str(kind).upper()
    if kind not in _RANKS:
        raise InvalidSpec(f"unknown root system type {kind!r}")
    if not isinstance(rank, int) or not _RANKS[kind](rank):
        raise InvalidRank(f"type {kind} has no rank {rank}")
    lengths, edges = _gram(kind, rank)
    ip = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        ip[i][i] = Fraction(lengths[i])
    for i, j, v in edges:
        ip[i][j] = ip[j][i] = Fraction(v)
    return [[int(2 * ip[i][j] / ip[i][i]) for j in range(rank)] for i in range(rank)]


@dataclass(frozen=True)
class RootSystemSpec:
    """Simple components ``[(type, rank), ...]`` and the 1-based indices of
    the simple roots not coming from the parabolic ``P``; indices run
    consecutively through the components."""

    components: tuple
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((str(t).upper(), int(r)) for t, r in self.components))
        object.__setattr__(self, "phi", tuple(int(i) for i in self.phi))


def _block_cartan(components):
    blocks = [cartan_matrix(t, r) for t, r in components]
    size = sum(len(b) for b in blocks)
    full = [[0] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            full[off + i][off:off + len(row)] = row
        off += len(b)
    return full


def color_coefficients(spec: RootSystemSpec) -> dict[int, int]:
    """``a_alpha = sum_{beta in phi} <beta, alpha^vee>`` for each ``alpha`` in ``phi``."""
    if not spec.components:
        raise InvalidSpec("no simple components given")
    c = _block_cartan(spec.components)
    size = len(c)
    if len(set(spec.phi)) != len(spec.phi):
        raise InvalidSpec("repeated index in phi")
    for i in spec.phi:
        if not 1 <= i <= size:
            raise InvalidSpec(f"simple root index {i} out of range 1..{size}")
    return {a: sum(c[a - 1][b - 1] for b in spec.phi) for a in spec.phi}
