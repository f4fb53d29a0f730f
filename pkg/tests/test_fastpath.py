"""Float-lane kernels: backend agreement and consistency with exact values."""

import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from alphaperm import fastpath
from alphaperm.kernels import hafnian, per_alpha_dp, permanent
from alphaperm.matrices import random_matrix, random_symmetric_matrix

F = Fraction

HAS_NUMBA = "numba" in fastpath.available_backends()
needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba not available")


def _sym(n, seed):
    return random_symmetric_matrix(n, scale=3, seed=seed)


class TestBackendSelection:
    def test_python_always_available(self):
        assert "python" in fastpath.available_backends()

    def test_active_backend_is_available(self):
        assert fastpath.active_backend() in fastpath.available_backends()

    def test_unknown_backend_rejected(self):
        a = np.eye(3)
        with pytest.raises(ValueError):
            fastpath.permanent(a, backend="fortran")

    def test_env_flag_disables_numba(self):
        code = (
            "import alphaperm.fastpath as fp; "
            "print(sorted(fp.available_backends())); "
            "print(fp.active_backend())"
        )
        env = dict(os.environ, ALPHAPERM_NO_NUMBA="1")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env,
            capture_output=True, text=True, check=True,
        ).stdout.splitlines()
        assert out[0] == "['python']"
        assert out[1] == "python"


class TestPythonBackendVsExact:
    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_per_alpha(self, n):
        A = _sym(n, seed=n)
        exact = float(per_alpha_dp(A, F(3, 2)))
        got = fastpath.per_alpha_dp(A.to_numpy(), 1.5, backend="python")
        assert got == pytest.approx(exact, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("n", [0, 1, 3, 5, 7])
    def test_permanent(self, n):
        A = random_matrix(n, "rational", scale=3, seed=n + 50)
        exact = float(permanent(A))
        got = fastpath.permanent(A.to_numpy(), backend="python")
        assert got == pytest.approx(exact, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("n", [0, 2, 4, 6])
    def test_hafnian(self, n):
        A = _sym(n, seed=n + 90)
        exact = float(hafnian(A))
        got = fastpath.hafnian(A.to_numpy(), backend="python")
        assert got == pytest.approx(exact, rel=1e-10, abs=1e-12)

    def test_complex_inputs(self):
        A = random_matrix(4, "complex-rational", scale=3, seed=7)
        exact = complex(permanent(A.to_float()))
        got = fastpath.permanent(A.to_numpy(), backend="python")
        assert got == pytest.approx(exact, rel=1e-10)


@needs_numba
class TestNumbaBackend:
    @pytest.mark.parametrize("n", [2, 5, 8])
    def test_per_alpha_agreement(self, n):
        a = random_matrix(n, "rational", scale=3, seed=n).to_numpy()
        v1 = fastpath.per_alpha_dp(a, 1.25, backend="python")
        v2 = fastpath.per_alpha_dp(a, 1.25, backend="numba")
        assert v2 == pytest.approx(v1, rel=1e-12)

    @pytest.mark.parametrize("n", [2, 5, 8])
    def test_permanent_agreement(self, n):
        a = random_matrix(n, "rational", scale=3, seed=n + 5).to_numpy()
        v1 = fastpath.permanent(a, backend="python")
        v2 = fastpath.permanent(a, backend="numba")
        assert v2 == pytest.approx(v1, rel=1e-12)

    @pytest.mark.parametrize("n", [2, 6, 8])
    def test_hafnian_agreement(self, n):
        a = _sym(n, seed=n + 9).to_numpy()
        v1 = fastpath.hafnian(a, backend="python")
        v2 = fastpath.hafnian(a, backend="numba")
        assert v2 == pytest.approx(v1, rel=1e-12)

    def test_complex_agreement(self):
        a = random_matrix(5, "complex-rational", scale=3, seed=3).to_numpy()
        v1 = fastpath.per_alpha_dp(a, 0.75, backend="python")
        v2 = fastpath.per_alpha_dp(a, 0.75, backend="numba")
        assert v2 == pytest.approx(v1, rel=1e-12)
        p1 = fastpath.permanent(a, backend="python")
        p2 = fastpath.permanent(a, backend="numba")
        assert p2 == pytest.approx(p1, rel=1e-12)


class TestInputHandling:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            fastpath.permanent(np.ones((2, 3)), backend="python")

    def test_odd_hafnian_rejected(self):
        with pytest.raises(ValueError):
            fastpath.hafnian(np.ones((3, 3)), backend="python")

    def test_accepts_int_arrays(self):
        a = np.arange(1, 5).reshape(2, 2)
        assert fastpath.permanent(a.astype(np.int64), backend="python") == \
            pytest.approx(10.0)

    def test_kernel_lookup(self):
        fn = fastpath.get_kernel("permanent", "python")
        assert fn(np.eye(4)) == pytest.approx(1.0)
        with pytest.raises(ValueError):
            fastpath.get_kernel("nonsense", "python")
