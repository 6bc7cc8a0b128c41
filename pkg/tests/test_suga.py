import pytest

from sugawara.pbw import delta, get_context, monomial_degree, monomial_weight
from sugawara.pyramid import Pyramid
from sugawara.suga import (
    delta_ladder,
    gln_delta_tower,
    homogeneity_ok,
    ladder_boundary,
    ladder_coefficient,
    minimal_nilpotent_check,
    pair_for_total,
    per_level_counts,
    phi_2_formula_check,
    phi_table,
    selected_pairs,
    selection_bounds,
    tau_cross_check,
)


PYRAMIDS = [
    (1,), (2,), (3,), (1, 1), (1, 2), (2, 2), (2, 3),
    (1, 1, 1), (1, 1, 2), (1, 2, 3),
]


def test_principal_case_phi1():
    p = Pyramid((3,))
    ctx = get_context(p, "affine")
    table = phi_table(p)
    assert set(table.selected) == {(1, 0), (1, 1), (1, 2)}
    for r in range(3):
        assert table.entry(1, r) == ctx.gen(1, 1, r, depth=-1)


def test_selected_set_2_3():
    p = Pyramid((2, 3))
    assert set(selected_pairs(p)) == {(1, 0), (1, 1), (1, 2), (2, 2), (2, 3)}
    assert len(selected_pairs(p)) == p.big_n


def test_minimal_nilpotent_phi1_entry():
    p = Pyramid((1, 1, 2))
    ctx = get_context(p, "affine")
    assert phi_table(p).entry(1, 1) == ctx.gen(3, 3, 1, depth=-1)


@pytest.mark.parametrize("lam", PYRAMIDS)
def test_selected_counts(lam):
    p = Pyramid(lam)
    pairs = selected_pairs(p)
    assert len(pairs) == p.big_n
    counts = per_level_counts(p)
    for k in range(1, p.n + 1):
        assert counts[k] == p.lambdas[p.n - k]
    # selected entries all present and nonzero in the table
    table = phi_table(p)
    for k, r in pairs:
        assert (k, r) in table.entries


@pytest.mark.parametrize("lam", PYRAMIDS)
def test_totals_partition(lam):
    p = Pyramid(lam)
    totals = sorted(k + r for k, r in selected_pairs(p))
    assert totals == list(range(1, p.big_n + 1))
    for t in range(1, p.big_n + 1):
        k, r = pair_for_total(p, t)
        assert (k, r) in set(selected_pairs(p))
        assert k + r == t
    with pytest.raises(ValueError):
        pair_for_total(p, p.big_n + 1)


@pytest.mark.parametrize("lam", [(1, 1), (2, 2), (1, 2), (2, 3)])
def test_phi2_closed_form(lam):
    assert phi_2_formula_check(Pyramid(lam))


def test_phi2_closed_form_needs_two_rows():
    with pytest.raises(ValueError):
        phi_2_formula_check(Pyramid((1, 1, 1)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_minimal_nilpotent_closed_form(n):
    assert minimal_nilpotent_check(n)


def test_minimal_nilpotent_degree():
    p = Pyramid((1, 2))
    elem = phi_table(p).entry(2, 1)
    assert {monomial_degree(m) for m in elem.terms} == {2}


@pytest.mark.parametrize("lam", PYRAMIDS)
def test_selected_vectors_homogeneous(lam):
    assert homogeneity_ok(phi_table(Pyramid(lam)))


def test_ladder_k1_all_zero():
    for lam in [(2, 3), (1, 1, 2)]:
        p = Pyramid(lam)
        table = phi_table(p)
        for (k, r), elem in table.entries.items():
            if k == 1:
                assert delta(elem).is_zero()


def test_ladder_gl2_example():
    p = Pyramid((1, 1))
    table = phi_table(p)
    assert ladder_boundary(p, 2) == 0
    assert ladder_coefficient(p, 2) == -1
    assert delta(table.entry(2, 0)) == -1 * table.entry(1, 0)


def test_ladder_gl3_example():
    p = Pyramid((1, 1, 1))
    table = phi_table(p)
    assert delta(table.entry(3, 0)) == -2 * table.entry(2, 0)
    assert delta(table.entry(2, 0)) == -2 * table.entry(1, 0)


@pytest.mark.parametrize("lam", PYRAMIDS)
def test_delta_ladder_report(lam):
    report = delta_ladder(Pyramid(lam))
    assert report.passed(), [c.key for c in report.failures()]


@pytest.mark.parametrize("n", [2, 3])
def test_tower(n):
    powers, report = gln_delta_tower(n)
    assert report.passed()
    assert len(powers) == n + 1
    assert powers[-1].is_zero()
    if n == 2:
        table = phi_table(Pyramid((1, 1)))
        assert powers[1] == -1 * table.entry(1, 0)
    if n == 3:
        table = phi_table(Pyramid((1, 1, 1)))
        assert powers[2] == 4 * table.entry(1, 0)


@pytest.mark.parametrize("lam", [(1, 1), (3,), (1, 2), (2, 3), (1, 1, 2)])
def test_tau_cross_check(lam):
    report = tau_cross_check(Pyramid(lam))
    assert report.passed(), [c.key for c in report.failures()]


def test_selection_bounds_match_display():
    p = Pyramid((2, 3))
    assert selection_bounds(p, 1) == (0, 2)
    assert selection_bounds(p, 2) == (2, 3)
