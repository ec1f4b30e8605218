"""Membership and certified finite complements of subsemigroups of N^r.

Membership is decided by dynamic programming over a box; the complement
routine certifies finiteness when each coordinate axis carries a generator
supported on that axis alone and the outer shell of the box is fully
covered (every lattice point beyond the box is then a member by adding
axis generators).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np


class SemigroupError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    r: int
    gens: tuple  # tuples in N^r, nonzero

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise SemigroupError("generator set must be nonempty")
        for g in gens:
            if len(g) != self.r:
                raise SemigroupError(f"generator {g} has wrong dimension")
            if any(x < 0 for x in g):
                raise SemigroupError(f"generator {g} has negative entries")
            if all(x == 0 for x in g):
                raise SemigroupError("zero vector is not a valid generator")


@dataclass(frozen=True)
class ComplementResult:
    points: tuple      # sorted non-members in the box
    certified: bool    # True iff no non-member exists outside points
    box_bound: int


def _reach_grid(gs: GeneratorSet, shape):
    """Boolean membership grid over the box prod [0, shape_i)."""
    reach = np.zeros(shape, dtype=bool)
    reach[(0,) * gs.r] = True
    # ascending lexicographic order: all v - g cells precede v
    for v in product(*(range(s) for s in shape)):
        if reach[v]:
            continue
        for g in gs.gens:
            w = tuple(a - b for a, b in zip(v, g))
            if all(x >= 0 for x in w) and reach[w]:
                reach[v] = True
                break
    return reach


def member(gs: GeneratorSet, v) -> bool:
    """True iff v is a nonnegative integer combination of the generators."""
    v = tuple(int(x) for x in v)
    if len(v) != gs.r:
        raise SemigroupError(f"vector {v} has wrong dimension")
    if any(x < 0 for x in v):
        raise SemigroupError(f"vector {v} is not in N^r")
    reach = _reach_grid(gs, tuple(x + 1 for x in v))
    return bool(reach[v])


def complement(gs: GeneratorSet, box_bound: int = 64) -> ComplementResult:
    """Non-members of the semigroup inside [0, box_bound]^r, with a
    finiteness certificate.

    Requires an axis generator (supported on one axis) for every axis.
    certified is True iff every point of the outer shell
    {v : some v_i > box_bound - gmax} is a member; induction with the axis
    generators then shows every point outside the box is a member.
    """
    for i in range(gs.r):
        if not any(g[i] > 0 and all(g[j] == 0 for j in range(gs.r) if j != i)
                   for g in gs.gens):
            raise SemigroupError(
                f"no generator supported on axis {i} alone; "
                "finiteness certificate unavailable")
    gmax = max(max(g) for g in gs.gens)
    if box_bound < gmax:
        raise SemigroupError(f"box_bound must be at least gmax = {gmax}")
    shape = (box_bound + 1,) * gs.r
    reach = _reach_grid(gs, shape)
    nonmembers = [tuple(int(x) for x in v) for v in np.argwhere(~reach)]

    shell_ok = all(max(v) <= box_bound - gmax for v in nonmembers)
    points = tuple(sorted(v for v in nonmembers)) if shell_ok else \
        tuple(sorted(nonmembers))
    return ComplementResult(points=points, certified=shell_ok,
                            box_bound=box_bound)
