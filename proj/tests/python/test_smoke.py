import math

import pytest

import bhlab


def test_lorentz_norm_frozen_value():
    assert bhlab.lorentz_norm([1, 2, 3, 4], p=4 / 3, q=1) == pytest.approx(
        7.789727012208397, rel=1e-13
    )


def test_indicator_norm_is_fundamental_function():
    for p in (4 / 3, 1.5, 2.0):
        assert bhlab.lorentz_norm([1] * 9, p=p, q=1) == pytest.approx(
            9 ** (1 / p), rel=1e-13
        )
        assert bhlab.fundamental_function(p, 1.0, 9) == pytest.approx(
            9 ** (1 / p), rel=1e-13
        )


def test_marcinkiewicz_indicator():
    assert bhlab.marcinkiewicz_norm([1] * 9, p=4.0) == pytest.approx(
        9**0.25, rel=1e-13
    )


def test_invalid_exponent_raises():
    with pytest.raises(bhlab.BhlabError):
        bhlab.lorentz_norm([1, 2], p=0.5, q=1)


def test_k_functional_breakpoints():
    assert bhlab.k_functional([3, 1], 1.5) == pytest.approx(3.5)
    assert bhlab.k_functional([3, 1], 50.0) == pytest.approx(4.0)


def test_interp_norm_sandwiches_lorentz():
    x = [0.3, 1.7, 0.9, 2.4]
    for p in (1.5, 2.0, 3.0):
        interp = bhlab.real_interp_norm(x, theta=1 - 1 / p, q=p)
        plain = bhlab.lorentz_norm(x, p=p, q=p)
        assert (1 - 1 / p) * interp <= plain * (1 + 1e-12)
        assert plain <= interp * (1 + 1e-12)


def test_monomial_indices_order_and_count():
    idx = bhlab.monomial_indices(2, 2)
    assert idx == [(1, 1), (1, 2), (2, 2)]
    assert len(bhlab.monomial_indices(3, 4)) == 20


def test_supnorm_of_single_monomial():
    est = bhlab.supnorm_poly(2, 2, [0, 1, 0], grid_points=240)
    assert est["lower"] == pytest.approx(1.0, rel=1e-9)
    assert est["upper"] is not None and est["upper"] >= est["lower"]
    z = est["witness"]
    assert abs(bhlab.eval_poly(2, 2, [0, 1, 0], z)) == pytest.approx(
        est["lower"], rel=1e-12
    )


def test_polarization_factor():
    assert bhlab.polarization_factor(3) == pytest.approx(4.5)


def test_fourier_sup_bound():
    assert bhlab.fourier_sup_bound(2, 2) == pytest.approx(2 * math.sqrt(2))


def test_optimality_ratio_is_one_at_matching_exponent():
    rows = bhlab.optimality_table(2, 5, m=2, p=4 / 3, q=1.0)
    for row in rows:
        assert row["ratio"] == pytest.approx(1.0, abs=1e-9)


def test_dirichlet_weight_frozen_value():
    assert bhlab.dirichlet_weight(2, 2) == pytest.approx(
        0.7000921880254583, rel=1e-13
    )


def test_bohr_lift_roundtrip():
    values = [1 + 2j, -0.5j, 3.0]
    lifted = bhlab.bohr_lift(2, 2, values)
    assert set(lifted) == {4, 6, 9}
    assert lifted[6] == pytest.approx(-0.5j)
    assert bhlab.bohr_unlift(2, lifted, n_vars=2) == pytest.approx(values)


def test_divergence_tables_shape():
    tables = bhlab.divergence_tables(2, N_max=2000, checkpoints=8)
    assert tables["atom_table"][0] == (2, pytest.approx(1.4283833145180529))
    assert tables["atom_table"][-1][0] == 2000
    assert tables["ratio_monotone"]
    assert tables["ratio_growth"] > 1
