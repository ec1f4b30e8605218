"""Restriction of irreducible characters to sl2-subalgebras.

An sl2-subalgebra is specified (for branching purposes) by its marks, the
integers alpha_i(h) for the standard semisimple element h of the triple.
The restricted character is the histogram N of weight values mu(h); the
decomposition into sl2 irreducibles V(k) (dimension k+1) follows from
mult V(k) = N_k - N_{k+2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rootsys import RootSystem, RootSystemError, Weight
from .character import full_weight_values


class BranchingError(ArithmeticError):
    """Restriction failed a certificate (marks are not a valid sl2 triple,
    or an internal bug)."""


@dataclass(frozen=True)
class Sl2Embedding:
    marks: tuple  # alpha_i(h)
    kind: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(int(m) for m in self.marks))

    def __str__(self):
        return f"{self.kind}{list(self.marks)}"


@dataclass(frozen=True)
class Sl2Decomposition:
    mults: dict  # k -> multiplicity of V(k), dim V(k) = k+1

    def dimension(self) -> int:
        return sum((k + 1) * m for k, m in self.mults.items())

    def to_json_dict(self) -> dict:
        return {str(k): m for k, m in sorted(self.mults.items())}


def principal_embedding(rs: RootSystem) -> Sl2Embedding:
    """Principal sl2: all marks equal 2."""
    return Sl2Embedding(marks=(2,) * rs.rank, kind="principal")


def root_embedding(rs: RootSystem, beta) -> Sl2Embedding:
    """Root sl2 for a positive root beta (simple-root coordinates):
    marks_i = <alpha_i, beta_vee>."""
    beta = tuple(int(b) for b in beta)
    if beta not in rs.positive_roots:
        raise RootSystemError(f"{beta} is not a positive root")
    c = np.asarray(beta, dtype=np.int64)
    d = rs._np["d"]
    wc = rs._np["A"] @ c  # weight coords of beta
    beta_norm = int((c * d * wc).sum())  # (beta, beta)
    marks = []
    for i in range(rs.rank):
        # <alpha_i, beta_vee> = 2 (alpha_i, beta) / (beta, beta);
        # (alpha_i, beta) = d_i * wc(beta)_i
        v = Fraction(2 * int(d[i]) * int(wc[i]), beta_norm)
        if v.denominator != 1:
            raise BranchingError("root embedding marks not integral")
        marks.append(int(v))
    return Sl2Embedding(marks=tuple(marks), kind=f"root{beta}")


def sl2_decompose(rs: RootSystem, lam: Weight, emb: Sl2Embedding) -> Sl2Decomposition:
    """Decompose L(lambda) restricted to the sl2 given by emb.

    Asserts the sl2-character certificate: N symmetric under negation and
    every computed multiplicity nonnegative.
    """
    N = full_weight_values(rs, lam, emb.marks)
    for j, n in N.items():
        if N.get(-j, 0) != n:
            raise BranchingError(
                f"weight-value histogram not symmetric at {j} "
                f"(marks {emb.marks} are not an sl2 triple?)")
    mults = {}
    for k in sorted(j for j in N if j >= 0):
        m = N[k] - N.get(k + 2, 0)
        if m < 0:
            raise BranchingError(
                f"negative multiplicity for V({k}) (marks {emb.marks})")
        if m:
            mults[k] = m
    return Sl2Decomposition(mults=mults)


def invariant_dim(rs: RootSystem, lam: Weight, emb: Sl2Embedding) -> int:
    """dim L(lambda)^K = multiplicity of the trivial sl2-module V(0)."""
    N = full_weight_values(rs, lam, emb.marks)
    for j, n in N.items():
        if N.get(-j, 0) != n:
            raise BranchingError("weight-value histogram not symmetric")
    m = N.get(0, 0) - N.get(2, 0)
    if m < 0:
        raise BranchingError("negative invariant dimension")
    return m


def g0(rs: RootSystem, lam: Weight, emb: Sl2Embedding) -> int:
    """Smallest dimension k+1 of an sl2 irreducible occurring in L(lambda)."""
    dec = sl2_decompose(rs, lam, emb)
    return min(dec.mults) + 1
