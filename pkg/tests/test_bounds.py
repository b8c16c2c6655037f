import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cuspskew.bounds import (
    F_constant,
    FillingParams,
    K_squared,
    K_squared_branches,
    TightnessInput,
    fdtc_geometric_lower_bound,
    prop22_gate,
    prop22_volume_interval,
    tightness_certificate,
)

LOG3 = math.log(3)


def test_params_validation():
    for eps, J in [(0, 2), (1.2, 2), (0.5, 1), (0.5, 0.5)]:
        with pytest.raises(ValueError):
            FillingParams(eps, J)


def test_K_squared_default():
    k2 = K_squared(FillingParams(LOG3, 2))
    first, second = K_squared_branches(FillingParams(LOG3, 2))
    assert k2 == first > second
    assert k2 == pytest.approx(1.16321e5, rel=1e-5)


def test_K_squared_decreasing_in_eps():
    eps = np.linspace(0.05, LOG3, 200)
    vals = [K_squared(FillingParams(e, 2)) for e in eps]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_second_branch_limit():
    tails = [K_squared_branches(FillingParams(LOG3, J))[1] for J in (1e10, 1e100, 1e300)]
    assert all(a > b > 11.7 for a, b in zip(tails, tails[1:]))
    assert tails[-1] == pytest.approx(11.7, abs=0.1)


def test_branch_crossover_moves_with_J():
    # the second branch wins for small J; find where it stops winning
    def crossover(J):
        eps = np.linspace(0.01, LOG3, 2000)
        wins = [K_squared_branches(FillingParams(e, J))[1] > K_squared_branches(FillingParams(e, J))[0]
                for e in eps]
        return eps[np.argmin(wins)] if any(wins) else 0.0

    xs = [crossover(J) for J in (1.0001, 1.001, 1.01, 1.1)]
    assert all(a >= b for a, b in zip(xs, xs[1:]))


@given(st.floats(0.01, LOG3), st.floats(1.001, 100))
def test_K_squared_is_max_of_branches(eps, J):
    p = FillingParams(eps, J)
    assert K_squared(p) == max(K_squared_branches(p))


def test_F_examples():
    p = FillingParams(LOG3, 2)
    assert F_constant(-1, p) == pytest.approx(K_squared(p) * 3 * 19297 + 3, rel=1e-12)
    assert F_constant(-1, p) == pytest.approx(6.7339e9, rel=1e-4)
    vals = [F_constant(c, p) for c in range(-1, -6, -1)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert F_constant(-1, p) > K_squared(p)
    with pytest.raises(ValueError):
        F_constant(0, p)


def test_large_fdtc_gate():
    assert not prop22_gate([22521], -1, 7).holds
    c = prop22_gate([22523, -30000], -1, 7)
    assert c.holds and c.lhs == 22522
    assert not prop22_gate([22522], -1, 7).holds  # strict
    assert prop22_gate([], -1, 7).holds
    with pytest.raises(ValueError):
        prop22_gate([1], -1, 2 * math.pi)


def test_filled_volume_interval():
    lo, hi = prop22_volume_interval(1, 4 * math.pi)
    assert lo == pytest.approx(0.75**1.5, rel=1e-12) and hi == 1
    assert prop22_volume_interval(2, 1e9)[0] == pytest.approx(2, rel=1e-12)
    assert prop22_volume_interval(1, 2 * math.pi * (1 + 1e-12))[0] < 1e-5
    with pytest.raises(ValueError):
        prop22_volume_interval(1, 6)


@given(st.floats(2 * math.pi * 1.001, 1e6), st.floats(0.01, 100))
def test_filled_volume_interval_nondegenerate(c, vol):
    lo, hi = prop22_volume_interval(vol, c)
    assert lo < hi


def test_geometric_lower_bound():
    t = TightnessInput(1e-13, 1e-6, -1)
    expected = 2 * math.pi * 1e6 * (1 - 19296 * 1e-7) - 92 * 19297 - 3
    assert fdtc_geometric_lower_bound(t) == pytest.approx(expected, rel=1e-9)
    assert fdtc_geometric_lower_bound(t) == pytest.approx(4.4957e6, rel=1e-4)
    t = TightnessInput(1e-3 / 19296, 1e-3, -1)
    assert fdtc_geometric_lower_bound(t) == pytest.approx(-92 * 19297 - 3, abs=1e-6)
    assert fdtc_geometric_lower_bound(TightnessInput(1.0, 0.1, -1)) < 0
    with pytest.raises(ValueError):
        fdtc_geometric_lower_bound(TightnessInput(1e-3, -1e-3, -1))


def test_tightness_examples():
    c = tightness_certificate(TightnessInput(1e-13, 1e-6, -1))
    assert c.holds and c.details["hypothesis_holds"] and c.details["fdtc_bound_holds"]
    c = tightness_certificate(TightnessInput(0.03, 0.1, -1))
    assert not c.holds and c.details["reason"] == "hypothesis" and not c.details["gate_A"]
    c = tightness_certificate(TightnessInput(1e-3, 2e-3, -1))
    assert not c.holds and c.details["reason"] == "hypothesis" and not c.details["gate_B"]


@given(st.floats(1e-14, 0.2), st.floats(1e-12, 0.5), st.integers(-4, -1))
def test_tightness_implies_bound(l, tau, chi):
    t = TightnessInput(l, tau, chi)
    if tightness_certificate(t).holds:
        assert fdtc_geometric_lower_bound(t) >= 1
