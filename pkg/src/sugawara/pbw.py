"""Exact PBW engine over the loop extension of a pyramid centralizer.

Two contexts share one rewriting core:

* ``finite``  -- the enveloping algebra of the centralizer itself; the
  depth of every generator is pinned to 0 and no central term can arise.
* ``affine``  -- loop generators X[m] = X t^m with the bracket

      [X[r], Y[s]] = [X, Y][r+s] + r delta_{r,-s} <X, Y> * 1,

  acting on the vacuum module: the central element is identified with
  the scalar 1, and any normal-ordered monomial whose rightmost factor
  has depth >= 0 is annihilated.

Monomials are tuples of :class:`LoopGen` sorted by the canonical key
(depth, i, j, r).  With that key every nonnegative-depth factor of a
normal-ordered word sits in a trailing run, so the vacuum quotient is a
suffix test.  Elements are sparse maps monomial -> exact rational.

The rewriting core is a memoized right-insertion: the normal form of
``w * g`` for sorted ``w`` is computed from ``w[:-1] * g`` and the
bracket of the displaced pair, which terminates by the usual filtration
argument (bracket terms are shorter words).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Tuple

from .pyramid import GenId, Pyramid, bracket as lie_bracket, form as lie_form


class LoopGen(NamedTuple):
    """Loop generator X[depth] with X = E[i,j,r]; sorts by (depth, i, j, r)."""

    depth: int
    i: int
    j: int
    r: int

    @property
    def gen(self) -> GenId:
        return GenId(self.i, self.j, self.r)

    def text(self) -> str:
        return f"E[{self.i},{self.j},{self.r}][{self.depth}]"


Monomial = Tuple[LoopGen, ...]


class Element:
    """Exact linear combination of normal-ordered monomials.

    Immutable by convention: operations return fresh elements and never
    mutate ``terms``.  Arithmetic requires both operands to live in the
    same context.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "LieContext", terms: Dict[Monomial, Fraction]):
        self.ctx = ctx
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _compat(self, other: "Element") -> None:
        if self.ctx.key != other.ctx.key:
            raise ValueError(
                f"mixed contexts: {self.ctx.key} vs {other.ctx.key}"
            )

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Element(self.ctx, out)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.ctx, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.ctx.mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Element":
        if not c:
            return Element(self.ctx, {})
        return Element(self.ctx, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx.key == other.ctx.key and self.terms == other.terms

    def __repr__(self) -> str:
        return f"<Element {element_text(self)}>"

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())


class LieContext:
    """Rewriting context: a pyramid plus the mode (finite or affine)."""

    def __init__(self, pyramid: Pyramid, mode: str):
        if mode not in ("finite", "affine"):
            raise ValueError(f"unknown mode {mode!r}")
        self.pyramid = pyramid
        self.mode = mode
        self.key = (pyramid.lambdas, mode)
        self._bracket_cache: Dict[Tuple[GenId, GenId], Tuple[Tuple[GenId, int], ...]] = {}
        self._form_cache: Dict[Tuple[GenId, GenId], int] = {}
        self._insert_memo: Dict[Tuple[Monomial, LoopGen], Dict[Monomial, Fraction]] = {}

    # -- structure data

    def bracket_terms(self, a: GenId, b: GenId) -> Tuple[Tuple[GenId, int], ...]:
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is None:
            combo = lie_bracket(self.pyramid, a, b)
            hit = tuple(sorted(combo.terms.items()))
            self._bracket_cache[key] = hit
        return hit

    def form(self, a: GenId, b: GenId) -> int:
        key = (a, b)
        hit = self._form_cache.get(key)
        if hit is None:
            hit = lie_form(self.pyramid, a, b)
            self._form_cache[key] = hit
        return hit

    # -- element constructors

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(): 1})

    def scalar(self, c) -> Element:
        return Element(self, {(): c} if c else {})

    def loop(self, i: int, j: int, r: int, depth: int) -> LoopGen:
        self.pyramid.check(GenId(i, j, r))
        if self.mode == "finite" and depth != 0:
            raise ValueError("finite mode carries no loop variable; depth must be 0")
        return LoopGen(depth, i, j, r)

    def gen(self, i: int, j: int, r: int, depth: int = 0) -> Element:
        """Single-generator element (X[depth] applied to the vacuum in
        affine mode, so nonnegative depths give zero there)."""
        g = self.loop(i, j, r, depth)
        return self._element({(g,): 1})

    def gen_or_zero(self, i: int, j: int, r: int, depth: int = 0) -> Element:
        """Like :meth:`gen` but with out-of-window shifts read as zero."""
        if not self.pyramid.contains(GenId(i, j, r)):
            return self.zero()
        return self.gen(i, j, r, depth)

    def _element(self, terms: Dict[Monomial, Fraction]) -> Element:
        if self.mode == "affine":
            terms = {
                m: c for m, c in terms.items() if c and not (m and m[-1].depth >= 0)
            }
        else:
            terms = {m: c for m, c in terms.items() if c}
        return Element(self, terms)

    # -- the rewriting core

    def _insert(self, w: Monomial, g: LoopGen) -> Dict[Monomial, Fraction]:
        """Normal form of w*g for a normal-ordered w, in the full loop
        enveloping algebra (the vacuum quotient is applied by callers)."""
        if not w or w[-1] <= g:
            return {w + (g,): 1}
        key = (w, g)
        hit = self._insert_memo.get(key)
        if hit is not None:
            return hit
        h = w[-1]
        head = w[:-1]
        out: Dict[Monomial, Fraction] = {}
        # w*g = (head*g)*h + head*[h, g]
        for m, c in self._insert(head, g).items():
            for m2, c2 in self._insert(m, h).items():
                v = out.get(m2, 0) + c * c2
                if v:
                    out[m2] = v
                elif m2 in out:
                    del out[m2]
        d = h.depth + g.depth
        for z, c in self.bracket_terms(h.gen, g.gen):
            zg = LoopGen(d, z.i, z.j, z.r)
            for m2, c2 in self._insert(head, zg).items():
                v = out.get(m2, 0) + c * c2
                if v:
                    out[m2] = v
                elif m2 in out:
                    del out[m2]
        if d == 0 and h.depth:
            s = h.depth * self.form(h.gen, g.gen)
            if s:
                v = out.get(head, 0) + s
                if v:
                    out[head] = v
                elif head in out:
                    del out[head]
        self._insert_memo[key] = out
        return out

    def combine(self, pieces: Iterable[Tuple[Iterable[LoopGen], Fraction]]) -> Element:
        """Normal-ordered sum of arbitrary words with coefficients."""
        out: Dict[Monomial, Fraction] = {}
        for word, coeff in pieces:
            if not coeff:
                continue
            cur: Dict[Monomial, Fraction] = {(): coeff}
            for g in word:
                nxt: Dict[Monomial, Fraction] = {}
                for m, c in cur.items():
                    for m2, c2 in self._insert(m, g).items():
                        v = nxt.get(m2, 0) + c * c2
                        if v:
                            nxt[m2] = v
                        elif m2 in nxt:
                            del nxt[m2]
                cur = nxt
            for m, c in cur.items():
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return self._element(out)

    def word(self, factors: Iterable[LoopGen], coeff: Fraction = 1) -> Element:
        return self.combine([(tuple(factors), coeff)])

    # -- products and the module action

    def mul(self, a: Element, b: Element) -> Element:
        a._compat(b)
        if a.ctx.key != self.key:
            raise ValueError("operands do not belong to this context")
        out: Dict[Monomial, Fraction] = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                cur: Dict[Monomial, Fraction] = {ma: ca * cb}
                for g in mb:
                    nxt: Dict[Monomial, Fraction] = {}
                    for m, c in cur.items():
                        for m2, c2 in self._insert(m, g).items():
                            v = nxt.get(m2, 0) + c * c2
                            if v:
                                nxt[m2] = v
                            elif m2 in nxt:
                                del nxt[m2]
                    cur = nxt
                for m, c in cur.items():
                    v = out.get(m, 0) + c
                    if v:
                        out[m] = v
                    elif m in out:
                        del out[m]
        return self._element(out)

    def act(self, g: LoopGen, v: Element) -> Element:
        """Left action of X[s] with s >= 0 on a vacuum-module state."""
        if self.mode != "affine":
            raise ValueError("act is defined on the vacuum module only")
        if g.depth < 0:
            raise ValueError("act needs depth >= 0; use mul for module elements")
        self.pyramid.check(g.gen)
        return self.combine([((g,) + m, c) for m, c in v.terms.items()])

    def commutator(self, a: Element, b: Element) -> Element:
        return self.mul(a, b) - self.mul(b, a)


_CONTEXTS: Dict[Tuple[Tuple[int, ...], str], LieContext] = {}


def get_context(p: Pyramid, mode: str) -> LieContext:
    """Shared per-(pyramid, mode) context, so rewrite caches accumulate."""
    key = (p.lambdas, mode)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = LieContext(p, mode)
        _CONTEXTS[key] = ctx
    return ctx


# -- derivations of the vacuum module


def translation_T(v: Element) -> Element:
    """Translation derivation X[r] -> -r X[r-1], T(1) = 0."""
    ctx = v.ctx
    if ctx.mode != "affine":
        raise ValueError("the translation derivation lives on the vacuum module")
    pieces = []
    for m, c in v.terms.items():
        for idx, g in enumerate(m):
            pieces.append(
                (
                    m[:idx] + (LoopGen(g.depth - 1, g.i, g.j, g.r),) + m[idx + 1 :],
                    -g.depth * c,
                )
            )
    return ctx.combine(pieces)


def delta(v: Element) -> Element:
    """Raising derivation with [Delta, X[r]] = r X[r+1], Delta(1) = 0.

    Factors promoted to depth >= 0 are resolved through the vacuum rule.
    """
    ctx = v.ctx
    if ctx.mode != "affine":
        raise ValueError("the raising derivation lives on the vacuum module")
    pieces = []
    for m, c in v.terms.items():
        for idx, g in enumerate(m):
            if g.depth == 0:
                continue
            pieces.append(
                (
                    m[:idx] + (LoopGen(g.depth + 1, g.i, g.j, g.r),) + m[idx + 1 :],
                    g.depth * c,
                )
            )
    return ctx.combine(pieces)


def degree_d(v: Element) -> Element:
    """Grading derivation with [d, X[r]] = r X[r]."""
    ctx = v.ctx
    out: Dict[Monomial, Fraction] = {}
    for m, c in v.terms.items():
        w = sum(g.depth for g in m)
        if w:
            out[m] = w * c
    return Element(ctx, out)


def monomial_degree(m: Monomial) -> int:
    return -sum(g.depth for g in m)


def monomial_weight(m: Monomial) -> int:
    return sum(g.r for g in m)


def grade_by_degree(v: Element) -> Dict[int, Element]:
    """Split by total degree (deg X[r] = -r); components sum back to v."""
    buckets: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in v.terms.items():
        buckets.setdefault(monomial_degree(m), {})[m] = c
    return {d: Element(v.ctx, t) for d, t in sorted(buckets.items())}


def grade_by_weight(v: Element) -> Dict[int, Element]:
    """Split by total weight (the shift superscript, summed over factors)."""
    buckets: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in v.terms.items():
        buckets.setdefault(monomial_weight(m), {})[m] = c
    return {w: Element(v.ctx, t) for w, t in sorted(buckets.items())}


def weight_component(v: Element, w: int) -> Element:
    return Element(
        v.ctx, {m: c for m, c in v.terms.items() if monomial_weight(m) == w}
    )


# -- text and JSON forms


def _coeff_str(c) -> str:
    return str(Fraction(c))


def element_text(v: Element) -> str:
    """Readable bracketed form, factors as E[i,j,r][depth]."""
    if not v.terms:
        return "0"
    parts = []
    for m, c in v.sorted_terms():
        frac = Fraction(c)
        word = " ".join(g.text() for g in m) if m else "1"
        mag = abs(frac)
        if mag == 1 and m:
            body = word
        else:
            body = f"{mag} {word}" if m else str(mag)
        if not parts:
            parts.append(body if frac > 0 else f"- {body}")
        else:
            parts.append(f"+ {body}" if frac > 0 else f"- {body}")
    return " ".join(parts)


def element_to_obj(v: Element) -> list:
    """JSON-ready term list, sorted by the canonical monomial key."""
    return [
        {
            "coeff": _coeff_str(c),
            "monomial": [
                {"i": g.i, "j": g.j, "r": g.r, "depth": g.depth} for g in m
            ],
        }
        for m, c in v.sorted_terms()
    ]


def element_from_obj(ctx: LieContext, obj: list) -> Element:
    terms: Dict[Monomial, Fraction] = {}
    for item in obj:
        m = tuple(
            LoopGen(f["depth"], f["i"], f["j"], f["r"]) for f in item["monomial"]
        )
        c = Fraction(item["coeff"])
        if c:
            terms[m] = terms.get(m, 0) + c
    return Element(ctx, {m: c for m, c in terms.items() if c})


def element_to_json(v: Element) -> str:
    return json.dumps(element_to_obj(v))


def element_from_json(ctx: LieContext, text: str) -> Element:
    return element_from_obj(ctx, json.loads(text))
