"""Operator-valued matrices and their column determinants.

The central object is a polynomial in two commuting variables u, x whose
coefficients live in an algebra (vacuum-module elements, enveloping
algebra elements, or commutative polynomials).  Matrix entries are of
the shape

    delta_ij * (x + lambda_i * T) + sum_r E[i,j,r][-1] u^r,

and the column determinant applies them as operators, rightmost column
first.  The determinant is evaluated by a subset-memoized column
recursion (2^n * n states instead of n! products); the straight
permutation sum is kept as a test oracle.

A second, tau-based presentation replaces x + lambda_i T by powers of a
skew variable tau with tau * X[r] = X[r] * tau - r X[r-1]; moving tau
right through a word costs a binomial sum of translation derivatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .pbw import (
    Element,
    element_from_obj,
    element_to_obj,
    get_context,
    translation_T,
    weight_component,
)
from .pyramid import Pyramid


class UXElem:
    """Polynomial in commuting u, x with algebra-valued coefficients.

    Coefficients may be :class:`~sugawara.pbw.Element` values or any
    ring type supporting +, -, * and scalar multiplication.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[int, int], object]):
        self.terms = {k: c for k, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "UXElem") -> "UXElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return UXElem(out)

    def __sub__(self, other: "UXElem") -> "UXElem":
        return self + other.scale(-1)

    def scale(self, s) -> "UXElem":
        return UXElem({k: s * c for k, c in self.terms.items()})

    def __mul__(self, other: "UXElem") -> "UXElem":
        out: Dict[Tuple[int, int], object] = {}
        for (u1, x1), c1 in self.terms.items():
            for (u2, x2), c2 in other.terms.items():
                k = (u1 + u2, x1 + x2)
                prod = c1 * c2
                cur = out.get(k)
                out[k] = prod if cur is None else cur + prod
        return UXElem(out)

    def shift_x(self) -> "UXElem":
        return UXElem({(u, x + 1): c for (u, x), c in self.terms.items()})

    def map_coeffs(self, f: Callable) -> "UXElem":
        return UXElem({k: f(c) for k, c in self.terms.items()})

    def coeff(self, u: int, x: int, zero):
        return self.terms.get((u, x), zero)

    def x_coefficient(self, x: int) -> Dict[int, object]:
        """Map u-exponent -> coefficient of x^x u^u."""
        return {u: c for (u, xx), c in self.terms.items() if xx == x}

    def __eq__(self, other) -> bool:
        if not isinstance(other, UXElem):
            return NotImplemented
        return self.terms == other.terms


@dataclass(frozen=True)
class MatrixEntry:
    """One matrix entry: x_flag*x + t_coeff*T + a multiplication part."""

    x_flag: int
    t_coeff: int
    mult: UXElem


def apply_entry(
    entry: MatrixEntry, s: UXElem, translate: Optional[Callable] = None
) -> UXElem:
    """Apply an entry as an operator to a UX polynomial.

    u and x commute with everything; the translation derivation acts on
    the coefficients only.
    """
    out = entry.mult * s
    if entry.x_flag:
        out = out + s.shift_x()
    if entry.t_coeff:
        if translate is None:
            raise ValueError("entry carries T but no translation was supplied")
        out = out + s.map_coeffs(translate).scale(entry.t_coeff)
    return out


def column_determinant(
    matrix: List[List[MatrixEntry]], one, translate: Optional[Callable] = None
) -> UXElem:
    """Column determinant by subset-memoized recursion.

    ``matrix[i][c]`` (0-based) is applied with column c+1 choosing row
    i+1; signs come from the position of the chosen row among the rows
    still available, which reproduces sgn of the permutation.
    """
    n = len(matrix)
    memo: Dict[frozenset, UXElem] = {}

    def rec(rows: frozenset) -> UXElem:
        if not rows:
            return UXElem({(0, 0): one})
        hit = memo.get(rows)
        if hit is not None:
            return hit
        col = n - len(rows)  # 0-based column index
        total: Optional[UXElem] = None
        for pos, i in enumerate(sorted(rows)):
            inner = rec(rows - {i})
            piece = apply_entry(matrix[i][col], inner, translate)
            if pos % 2:
                piece = piece.scale(-1)
            total = piece if total is None else total + piece
        memo[rows] = total
        return total

    return rec(frozenset(range(n)))


def column_determinant_bruteforce(
    matrix: List[List[MatrixEntry]], one, translate: Optional[Callable] = None
) -> UXElem:
    """Permutation-sum oracle: sum over sigma of sgn(sigma) times the
    composition of entries, rightmost column applied first."""
    n = len(matrix)
    total: Optional[UXElem] = None
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        v = UXElem({(0, 0): one})
        for col in reversed(range(n)):
            v = apply_entry(matrix[perm[col]][col], v, translate)
        v = v.scale(sign)
        total = v if total is None else total + v
    return total


def build_entry_matrix(p: Pyramid) -> List[List[MatrixEntry]]:
    """Vacuum-module matrix: delta_ij (x + lambda_i T) + sum_r E[i,j,r][-1] u^r."""
    ctx = get_context(p, "affine")
    matrix: List[List[MatrixEntry]] = []
    for i in range(1, p.n + 1):
        row = []
        for j in range(1, p.n + 1):
            mult = UXElem(
                {(r, 0): ctx.gen(i, j, r, depth=-1) for r in p.window(i, j)}
            )
            if i == j:
                row.append(MatrixEntry(1, p.lambdas[i - 1], mult))
            else:
                row.append(MatrixEntry(0, 0, mult))
        matrix.append(row)
    return matrix


@lru_cache(maxsize=None)
def cdet(p: Pyramid) -> UXElem:
    """The column determinant of the pyramid's operator matrix, as a
    polynomial in x with coefficients in the vacuum module tensored with
    polynomials in u."""
    ctx = get_context(p, "affine")
    return column_determinant(build_entry_matrix(p), ctx.one(), translation_T)


def max_weight_component(v: Element, w: int) -> Element:
    """Weight-w homogeneous part of a vacuum-module element."""
    return weight_component(v, w)


def uxelem_to_obj(v: UXElem) -> list:
    """JSON-ready form, sorted by (u, x); element coefficients only."""
    return [
        {"u": u, "x": x, "element": element_to_obj(c)}
        for (u, x), c in sorted(v.terms.items())
    ]


def uxelem_from_obj(ctx, obj: list) -> UXElem:
    return UXElem(
        {(item["u"], item["x"]): element_from_obj(ctx, item["element"]) for item in obj}
    )


# -- the tau presentation


class TauPoly:
    """Polynomial in the skew variable tau with vacuum-module coefficients,
    tau powers kept to the right."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Element]):
        self.terms = {e: c for e, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TauPoly") -> "TauPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            out[e] = c if cur is None else cur + c
        return TauPoly(out)

    def scale(self, s) -> "TauPoly":
        return TauPoly({e: s * c for e, c in self.terms.items()})

    def __mul__(self, other: "TauPoly") -> "TauPoly":
        # (A tau^a)(B tau^b): tau^a B = sum_k C(a,k) T^k(B) tau^(a-k)
        if not self.terms or not other.terms:
            return TauPoly({})
        max_a = max(self.terms)
        tpow: Dict[int, List[Element]] = {}
        for eb, cb in other.terms.items():
            row = [cb]
            for _ in range(max_a):
                row.append(translation_T(row[-1]))
            tpow[eb] = row
        out: Dict[int, Element] = {}
        for ea, ca in self.terms.items():
            for eb in other.terms:
                for k in range(ea + 1):
                    piece = comb(ea, k) * (ca * tpow[eb][k])
                    if piece.is_zero():
                        continue
                    e = ea - k + eb
                    cur = out.get(e)
                    out[e] = piece if cur is None else cur + piece
        return TauPoly(out)

    def coeff(self, e: int, zero: Element) -> Element:
        return self.terms.get(e, zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TauPoly):
            return NotImplemented
        return self.terms == other.terms


def build_tau_matrix(p: Pyramid) -> List[List[TauPoly]]:
    """Entries delta_ij tau^{lambda_j} + sum_m E[i,j,lambda_j-1-m][-1] tau^m."""
    ctx = get_context(p, "affine")
    matrix: List[List[TauPoly]] = []
    for i in range(1, p.n + 1):
        row = []
        for j in range(1, p.n + 1):
            lj = p.lambdas[j - 1]
            terms = {lj - 1 - r: ctx.gen(i, j, r, depth=-1) for r in p.window(i, j)}
            if i == j:
                terms[lj] = ctx.one()
            row.append(TauPoly(terms))
        matrix.append(row)
    return matrix


@lru_cache(maxsize=None)
def cdet_tau(p: Pyramid) -> TauPoly:
    """Column determinant in the skew ring; the result is monic of
    degree N in tau and its lower coefficients are the phi-circle
    elements of the alternative presentation."""
    n = p.n
    matrix = build_tau_matrix(p)
    memo: Dict[frozenset, TauPoly] = {}

    def rec(rows: frozenset) -> TauPoly:
        if not rows:
            return TauPoly({0: get_context(p, "affine").one()})
        hit = memo.get(rows)
        if hit is not None:
            return hit
        col = n - len(rows)
        total: Optional[TauPoly] = None
        for pos, i in enumerate(sorted(rows)):
            piece = matrix[i][col] * rec(rows - {i})
            if pos % 2:
                piece = piece.scale(-1)
            total = piece if total is None else total + piece
        memo[rows] = total
        return total

    return rec(frozenset(range(n)))


def phi_circle(p: Pyramid, k: int) -> Element:
    """Coefficient of tau^(N-k) in the tau column determinant."""
    ctx = get_context(p, "affine")
    return cdet_tau(p).coeff(p.big_n - k, ctx.zero())
