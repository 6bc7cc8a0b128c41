"""Center of the enveloping algebra of the centralizer: generators from
the shifted column determinant, exact centrality, and the diagonal-shift
automorphism.

Run:  python3 demos/04_center_of_enveloping_algebra.py
"""

from fractions import Fraction

from sugawara import (
    Pyramid,
    apply_automorphism,
    center_generators,
    centrality_check,
    element_text,
)

p = Pyramid((1, 2))
gens = center_generators(p)
print(f"pyramid {p}: {len(gens)} center generators")
for k, r, elem in gens:
    print(f"  Phi[k={k},r={r}] = {element_text(elem)}")

report = centrality_check(p, [(f"Phi[{k},{r}]", e) for k, r, e in gens])
print("centrality report passed:", report.passed())
print()

# the diagonal shift E[i,i,0] -> E[i,i,0] + c*lambda_i is an algebra
# automorphism; with c = 1 - n it lands on another standard normalization
c = Fraction(1 - p.n)
twisted = [(k, r, apply_automorphism(p, e, c)) for k, r, e in gens]
for k, r, elem in twisted:
    print(f"  c={c}: Phi[k={k},r={r}] -> {element_text(elem)}")
report = centrality_check(p, [(f"Phi[{k},{r}]", e) for k, r, e in twisted])
print("centrality after the shift:", report.passed())
