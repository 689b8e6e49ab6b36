"""Contact orders, truncations, the jet congruence, and the deformation
space dimensions h0 = 2n-k+1."""

import random
from fractions import Fraction

import pytest

from tangency.deformation import (
    CONTAINED,
    canonical_line,
    congruence_check,
    contact_experiment,
    contact_order,
    log_sections,
    sample_contact_form,
    sample_line,
    truncate,
)
from tangency.fields import QQ, PrimeField
from tangency.forms import HyperForm, LineParam, parse_form, s_valuation


def conic_and_tangent():
    # F = x0 x2 - x1^2, L: [s:t] -> [t:s:0]; contact order 2 at [0:1]
    F = HyperForm(2, 2, {(1, 0, 1): 1, (0, 2, 0): -1}, QQ)
    L = LineParam([(0, 1), (1, 0), (0, 0)], QQ)
    return F, L


def test_contact_order_worked_example():
    F, L = conic_and_tangent()
    assert contact_order(F, L) == 2


def test_contact_order_transverse_and_contained():
    f = QQ
    quadric = HyperForm(3, 2, {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}, f)
    # line x2 = x3 = 0 lies in the quadric
    inside = LineParam([(1, 0), (0, 1), (0, 0), (0, 0)], f)
    assert contact_order(quadric, inside) == CONTAINED
    # generic line through [0:1:0:0]
    thru = LineParam([(1, 0), (0, 1), (1, 0), (1, 0)], f)
    assert contact_order(quadric, thru) == 1


def test_truncate_full_order_reproduces_the_form():
    F, _ = conic_and_tangent()
    t = truncate(F, [1, 0, 0], F.d)
    assert t.form == F.substitute(t.basis)


def test_truncate_first_order_is_tangent_form():
    F, _ = conic_and_tangent()
    t = truncate(F, [1, 0, 0], 1)
    assert t.form.d == 1
    # tangent line of the conic at [1:0:0] is x2 = 0 (in the new frame)
    assert set(t.form.terms) == {(0, 0, 1)}


def test_truncate_validation():
    F, _ = conic_and_tangent()
    with pytest.raises(ValueError, match="does not lie on"):
        truncate(F, [1, 1, 0], 1)  # F(1,1,0) = -1
    with pytest.raises(ValueError):
        truncate(F, [1, 0, 0], 0)
    with pytest.raises(ValueError):
        truncate(F, [1, 0, 0], 3)


def test_congruence_holds_and_corrupts():
    F, L = conic_and_tangent()
    rep = congruence_check(F, L, 2)
    assert rep.ok and all(rep.per_index)
    bad = congruence_check(F, L, 2, corrupt=True)
    assert not bad.ok and bad.corrupted


def test_congruence_on_seeded_random_samples():
    rng = random.Random(77)
    gf = PrimeField(53)
    for _ in range(15):
        n = rng.choice((2, 3, 4))
        d = rng.choice((2, 3))
        if d > 52:
            continue
        L = sample_line(n, gf, rng)
        k = rng.randint(1, d)
        F = sample_contact_form(L, d, k, rng)
        rep = congruence_check(F, L, k)
        assert rep.ok, (n, d, k)


def test_log_sections_worked_example():
    F, L = conic_and_tangent()
    space = log_sections(F, L, 2)
    assert space.contact == 2
    assert space.raw_dim == 4
    assert space.h0 == 3
    assert space.expected_h0 == 3  # 2n-k+1 with n=2, k=2
    assert space.matches
    assert space.euler_in_kernel


def test_log_sections_no_condition_and_one_condition():
    F, L = conic_and_tangent()
    z = log_sections(F, L, 0)
    assert z.h0 == 5  # 2n+1 on P^2
    one = log_sections(F, L, 1)
    assert one.h0 == 4  # 2n


def test_log_sections_contained_line():
    f = QQ
    quadric = HyperForm(3, 2, {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}, f)
    inside = LineParam([(1, 0), (0, 1), (0, 0), (0, 0)], f)
    space = log_sections(quadric, inside, 2)
    assert space.contact == CONTAINED
    assert space.expected_h0 is None
    assert space.matches is None
    assert space.euler_in_kernel


def test_log_sections_contact_too_low():
    F, L = conic_and_tangent()
    with pytest.raises(ValueError, match="contact"):
        log_sections(F, L, 3)


def test_routes_agree_on_samples():
    rng = random.Random(13)
    gf = PrimeField(101)
    for _ in range(10):
        n = rng.choice((3, 4))
        d = rng.choice((n, n + 1))
        k = rng.randint(1, min(4, d))
        L = sample_line(n, gf, rng)
        F = sample_contact_form(L, d, k, rng)
        direct = log_sections(F, L, k, use_truncation=False)
        trunc = log_sections(F, L, k, use_truncation=True)
        assert direct.raw_dim == trunc.raw_dim
        assert direct.h0 == trunc.h0


def test_sample_contact_form_has_exact_valuation():
    rng = random.Random(5)
    gf = PrimeField(101)
    for _ in range(10):
        n = rng.choice((2, 3))
        d = rng.choice((3, 4))
        k = rng.randint(1, min(4, d))
        L = sample_line(n, gf, rng)
        F = sample_contact_form(L, d, k, rng)
        assert s_valuation(F.pullback(L), gf) == k
        grad = F.gradient(L.marked_point())
        assert any(not gf.is_zero(g) for g in grad)


def test_canonical_line():
    # normalization sends the marked point to e0, the direction to e1
    line = canonical_line(3, QQ)
    assert line.marked_point() == [1, 0, 0, 0]
    assert line.direction() == [0, 1, 0, 0]


def test_small_experiment_summary():
    summary = contact_experiment(trials=25, seed=4, prime=53)
    assert summary.trials == 25
    assert summary.euler_failures == 0
    assert summary.congruence_failures == 0
    assert summary.route_disagreements == 0
    assert summary.match_rate >= 0.9
    assert summary.seed == 4 and summary.prime == 53
    assert len(summary.records) == 25


def test_prime_field_degree_guard():
    with pytest.raises(ValueError, match="exceed the degree"):
        HyperForm.fermat(2, 5, PrimeField(5))


def test_log_sections_from_files(tmp_path):
    form_file = tmp_path / "conic.hs"
    form_file.write_text("1 1 0 1\n-1 0 2 0\n")
    F = parse_form(form_file.read_text(), QQ)
    L = LineParam([(0, 1), (1, 0), (0, 0)], QQ)
    assert log_sections(F, L, 2).h0 == 3
