"""Walk through the combinatorial layer: pyramids, the E[i,j,r] basis,
brackets, the invariant form, and the embedding into gl_N.

Run:  python3 demos/01_pyramid_and_basis.py
"""

from sugawara import GenId, Pyramid, bracket, form, gln_expand

p = Pyramid((2, 3, 4))
print(f"pyramid {p}: n = {p.n} rows, N = {p.big_n} boxes")
print()

# boxes are numbered row by row; box 5 sits in row 2, column 3
for a in (1, 2, 5, 9):
    print(f"  box {a}: row {p.row_of(a)}, column {p.col_of(a)}")
print()

basis = p.basis()
print(f"centralizer dimension = {len(basis)} = sum of min(lambda_i, lambda_j)")
print("first few basis symbols:", " ".join(g.text() for g in basis[:6]), "...")
print()

# the bracket truncates shifts that leave the admissible window:
# here the E[1,1,2] term dies (row 1 only admits shifts 0 and 1)
a, b = GenId(1, 2, 2), GenId(2, 1, 0)
combo = bracket(p, a, b)
print(f"[{a.text()}, {b.text()}] =", {g.text(): str(c) for g, c in combo.items()})
# and here both terms truncate, so the bracket vanishes outright
a, b = GenId(2, 1, 1), GenId(1, 2, 2)
combo = bracket(p, a, b)
print(f"[{a.text()}, {b.text()}] =", {g.text(): str(c) for g, c in combo.items()})
print()

# the critical-level form is supported on shift-0 pairs only
for pair in [(GenId(1, 1, 0), GenId(2, 2, 0)), (GenId(1, 1, 0), GenId(1, 1, 0))]:
    print(f"<{pair[0].text()}, {pair[1].text()}> =", form(p, *pair))
print()

# every symbol is an honest gl_N matrix; brackets agree with gl_N commutators
g = GenId(1, 1, 1)
print(f"{g.text()} expands to elementary matrices:", gln_expand(p, g))
