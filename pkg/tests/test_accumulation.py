"""Spectrum accumulation sums and their limit."""

import math

import numpy as np
import pytest

from cliffordprolate.accumulation import limit_value, partial_sum, zonal_trace
from cliffordprolate.prolate import eval_field_coeffs, make_cpswf


def test_zonal_trace_values():
    assert abs(zonal_trace(2, 0) - 1 / (2 * math.pi)) < 1e-15
    assert abs(zonal_trace(2, 5) - 1 / (2 * math.pi)) < 1e-15
    assert abs(zonal_trace(3, 2) - 3 / (4 * math.pi)) < 1e-15


def test_limit_values():
    assert abs(limit_value(2, 1.0) - math.pi) < 1e-14
    assert abs(limit_value(2, 2.0) - 4 * math.pi) < 1e-13
    assert abs(limit_value(3, 1.0) - 4 * math.pi / 3) < 1e-14


def test_partial_sum_matches_direct_field_sum():
    m, c, K, N = 2, 1.0, 2, 2
    r = 0.6
    acc = partial_sum(m, c, K, N, np.array([r ** 2]))
    x = np.array([r, 0.0])
    total = 0.0
    for k in range(K + 1):
        for n in range(2 * N + 2):
            psi = make_cpswf(n, k, m, c)
            v = eval_field_coeffs(psi, 1, x)
            total += psi.lam * float(np.real(np.sum(np.conj(v) * v)))
    assert abs(acc.values[0] - total) < 1e-10


def test_partial_sum_monotone_in_K_and_below_limit():
    m, c = 2, 1.0
    t = np.linspace(0.0, 0.64, 9)
    prev = np.zeros_like(t)
    for K in range(5):
        acc = partial_sum(m, c, K, 6, t)
        assert np.all(acc.values >= prev - 1e-12)
        assert np.all(acc.values <= limit_value(m, c) + 1e-9)
        prev = acc.values


def test_partial_sum_converges_at_origin():
    acc = partial_sum(2, 1.0, 0, 10, np.array([0.0]))
    assert abs(acc.values[0] - limit_value(2, 1.0)) < 1e-6


def test_validation():
    with pytest.raises(ValueError):
        partial_sum(2, 0.0, 1, 1, [0.5])
    with pytest.raises(ValueError):
        partial_sum(2, 1.0, 1, 1, [1.5])
