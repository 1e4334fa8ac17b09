import os
import subprocess
import sys

import numpy as np
import pytest

from icup import ChannelParams, weak_sum_rate
from icup import _kernels as k

POINTS = [
    (6.0, 1.0, 0.5),
    (6.0, 1.0, 10.0),
    (1e4, 0.01, 2.0),
    (100.0, 0.3, 0.0),
    (2.0, 0.5, 1.0),
]


class TestWeakRateKernel:
    @pytest.mark.parametrize("p,a,c12", POINTS)
    def test_scalar_matches_reference(self, p, a, c12):
        params = ChannelParams(p, a, c12)
        for gamma in (0.0, 0.25, 0.5, 0.75, 1.0):
            assert k.weak_rate_scalar(p, a, c12, gamma) == pytest.approx(
                weak_sum_rate(params, gamma), abs=1e-12
            )

    @pytest.mark.parametrize("p,a,c12", POINTS)
    def test_grid_matches_scalar(self, p, a, c12):
        gammas = np.linspace(0.0, 1.0, 17)
        grid = k.weak_rate_grid_np(p, a, c12, gammas)
        scalar = [k.weak_rate_scalar(p, a, c12, g) for g in gammas]
        np.testing.assert_allclose(grid, scalar, atol=1e-12)

    @pytest.mark.parametrize("p,a,c12", POINTS)
    def test_gamma_search_paths_agree(self, p, a, c12):
        g_np, r_np = k._optimize_gamma_np(p, a, c12)
        g_active, r_active = k.optimize_gamma_impl(p, a, c12)
        assert r_np == pytest.approx(r_active, abs=1e-9)
        assert g_np == pytest.approx(g_active, abs=1e-3)


class TestCgrcKernel:
    @pytest.mark.parametrize("p,a", [(3.0, 0.0), (6.0, 0.5), (1e5, 0.9), (0.5, 1.0)])
    def test_paths_agree(self, p, a):
        assert k._cgrc_eta_max_np(p, a) == pytest.approx(
            k.cgrc_eta_max(p, a), abs=1e-9
        )


class TestVertexEnumKernel:
    def test_paths_agree(self):
        from icup import build_constraints, universal_pa

        params = ChannelParams(6.0, 1.0, 0.5)
        cons = build_constraints(universal_pa(params), params)
        A = np.array([c.coeffs for c in cons])
        b = np.array([c.rhs for c in cons])
        c = np.ones(3)
        got_np = k._vertex_enum_np(A, b, c)
        got_active = k._vertex_enum(A, b, c)
        assert got_np[0] and got_active[0]
        assert got_np[1] == pytest.approx(got_active[1], abs=1e-9)
        np.testing.assert_allclose(got_np[2:], got_active[2:], atol=1e-9)


class TestEnvToggle:
    @pytest.mark.parametrize("value,expected", [
        ("1", True), ("true", True), ("YES", True), (" on ", True),
        ("0", False), ("", False), ("off", False),
    ])
    def test_disable_flag_parsing(self, monkeypatch, value, expected):
        monkeypatch.setenv("ICUP_DISABLE_NUMBA", value)
        assert k.numba_disabled() is expected

    def test_fallback_import_path(self):
        env = dict(os.environ, ICUP_DISABLE_NUMBA="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "from icup import _kernels as k;"
             "print(k.NUMBA_ACTIVE, k.optimize_gamma_impl is k._optimize_gamma_np)"],
            env=env, capture_output=True, text=True, check=True,
        )
        assert out.stdout.split() == ["False", "True"]

    def test_thread_cap_no_error(self):
        k.apply_thread_cap(1)
        k.apply_thread_cap(10**6)
