"""Pyramid combinatorics and the centralizer Lie algebra it defines.

A pyramid is a left-justified array of unit boxes with non-decreasing row
lengths lambda_1 <= ... <= lambda_n; boxes are numbered 1..N row by row.
The nilpotent matrix with Jordan blocks of these sizes has a centralizer
inside gl_N spanned by symbols E[i,j,r], one for every ordered pair of
rows (i, j) and every shift r in the window

    lambda_j - min(lambda_i, lambda_j) <= r < lambda_j.

This module provides that basis, its bracket (with out-of-window terms
truncated to zero), the invariant symmetric bilinear form in the
critical-level normalization, and the expansion of a basis symbol into
elementary matrices e_ab of gl_N.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple


class GenId(NamedTuple):
    """Centralizer basis symbol E[i,j,r]; sorts canonically by (i, j, r)."""

    i: int
    j: int
    r: int

    def text(self) -> str:
        return f"E[{self.i},{self.j},{self.r}]"

    @classmethod
    def parse(cls, text: str) -> "GenId":
        m = re.fullmatch(r"\s*E\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(-?\d+)\s*\]\s*", text)
        if m is None:
            raise ValueError(f"cannot parse generator {text!r}; expected E[i,j,r]")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)))


@dataclass(frozen=True)
class Pyramid:
    """Left-justified pyramid given by its non-decreasing row lengths.

    Any other row order is rejected rather than sorted silently, since
    sorting would remap the (i, j) labels of the basis.
    """

    lambdas: Tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lambdas)
        if not lam:
            raise ValueError("pyramid needs at least one row")
        if any(x <= 0 for x in lam):
            raise ValueError(f"row lengths must be positive: {lam}")
        if any(a > b for a, b in zip(lam, lam[1:])):
            raise ValueError(f"row lengths must be non-decreasing: {lam}")
        object.__setattr__(self, "lambdas", lam)

    @classmethod
    def parse(cls, text: str) -> "Pyramid":
        try:
            lam = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(
                f"cannot parse pyramid {text!r}; expected comma-separated integers like 2,3,4"
            ) from None
        return cls(lam)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.lambdas)

    @property
    def n(self) -> int:
        return len(self.lambdas)

    @property
    def big_n(self) -> int:
        return sum(self.lambdas)

    # -- box bookkeeping (1-based throughout, matching the tableau convention)

    def _offsets(self) -> List[int]:
        out = [0]
        for lam in self.lambdas:
            out.append(out[-1] + lam)
        return out

    def row_of(self, a: int) -> int:
        """Row of box ``a`` under consecutive row-wise filling."""
        if not 1 <= a <= self.big_n:
            raise ValueError(f"box index {a} out of range 1..{self.big_n}")
        off = self._offsets()
        for i in range(1, self.n + 1):
            if a <= off[i]:
                return i
        raise AssertionError("unreachable")

    def col_of(self, a: int) -> int:
        """Column of box ``a`` (position within its row, from the left)."""
        i = self.row_of(a)
        return a - self._offsets()[i - 1]

    def box(self, i: int, c: int) -> int:
        """Box index of row ``i``, column ``c``."""
        if not 1 <= i <= self.n or not 1 <= c <= self.lambdas[i - 1]:
            raise ValueError(f"no box at row {i}, column {c}")
        return self._offsets()[i - 1] + c

    # -- the E[i,j,r] basis

    def window(self, i: int, j: int) -> range:
        """Admissible shifts r for E[i,j,r]."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"row indices ({i},{j}) out of range 1..{self.n}")
        li, lj = self.lambdas[i - 1], self.lambdas[j - 1]
        return range(lj - min(li, lj), lj)

    def contains(self, g: GenId) -> bool:
        return (
            1 <= g.i <= self.n
            and 1 <= g.j <= self.n
            and g.r in self.window(g.i, g.j)
        )

    def check(self, g: GenId) -> GenId:
        if not self.contains(g):
            raise ValueError(f"{g.text()} is not a basis symbol of the pyramid {self}")
        return g

    def basis(self) -> List[GenId]:
        """All basis symbols in canonical (i, j, r) order."""
        return [
            GenId(i, j, r)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            for r in self.window(i, j)
        ]

    def dim(self) -> int:
        return sum(
            min(li, lj) for li in self.lambdas for lj in self.lambdas
        )

    def column_boxes(self, i: int) -> int:
        """Number of boxes in the first lambda_i columns of the pyramid."""
        li = self.lambdas[i - 1]
        return sum(min(lam, li) for lam in self.lambdas)


@dataclass
class LieCombo:
    """Exact linear combination of basis symbols plus a scalar part.

    The scalar slot is unused by the pyramid bracket but the same carrier
    serves the affine cocycle, where a bracket can produce a multiple of
    the central element.
    """

    terms: Dict[GenId, Fraction] = field(default_factory=dict)
    scalar: Fraction = 0

    def __post_init__(self):
        self.terms = {g: c for g, c in self.terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms and not self.scalar

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieCombo):
            return NotImplemented
        return self.terms == other.terms and self.scalar == other.scalar


def bracket(p: Pyramid, a: GenId, b: GenId) -> LieCombo:
    """[E[i,j,r], E[k,l,s]] with out-of-window terms truncated to zero."""
    p.check(a)
    p.check(b)
    terms: Dict[GenId, Fraction] = {}
    rs = a.r + b.r
    # delta_{kj} E[i,l,r+s]
    if b.i == a.j and rs < p.lambdas[b.j - 1]:
        g = GenId(a.i, b.j, rs)
        terms[g] = terms.get(g, 0) + 1
    # - delta_{il} E[k,j,r+s]
    if a.i == b.j and rs < p.lambdas[a.j - 1]:
        g = GenId(b.i, a.j, rs)
        terms[g] = terms.get(g, 0) - 1
    return LieCombo(terms)


def form(p: Pyramid, a: GenId, b: GenId) -> int:
    """Invariant symmetric bilinear form in the critical-level normalization.

    Nonzero only on shift-0 pairs: diagonal against diagonal, and
    E[i,j,0] against E[j,i,0] when rows i and j have equal length.
    """
    p.check(a)
    p.check(b)
    if a.r != 0 or b.r != 0:
        return 0
    if a.i == a.j and b.i == b.j:
        value = min(p.lambdas[a.i - 1], p.lambdas[b.i - 1])
        if a.i == b.i:
            value -= p.column_boxes(a.i)
        return value
    if a.i == b.j and a.j == b.i and a.i != a.j:
        if p.lambdas[a.i - 1] == p.lambdas[a.j - 1]:
            return -p.column_boxes(a.i)
    return 0


def gln_expand(p: Pyramid, a: GenId) -> Dict[Tuple[int, int], int]:
    """E[i,j,r] as a combination of elementary matrices e_ab of gl_N.

    The sum runs over box pairs with row(a) = i, row(b) = j and
    col(b) - col(a) = r; returned as a map (a, b) -> coefficient.
    """
    p.check(a)
    li, lj = p.lambdas[a.i - 1], p.lambdas[a.j - 1]
    out: Dict[Tuple[int, int], int] = {}
    for c in range(max(1, 1 - a.r), min(li, lj - a.r) + 1):
        out[(p.box(a.i, c), p.box(a.j, c + a.r))] = 1
    return out
