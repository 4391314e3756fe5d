import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhermite import _kernels_py

try:
    from qhermite import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

needs_c = pytest.mark.skipif(_kernels_c is None, reason="compiled kernel not built")

small = st.lists(st.integers(-1000, 1000), min_size=1, max_size=40)
wide = st.lists(st.integers(-(10 ** 40), 10 ** 40), min_size=1, max_size=20)
nonzero_tail = lambda xs: xs[-1] != 0  # noqa: E731


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@settings(max_examples=150, deadline=None)
@given(st.one_of(small, wide), st.one_of(small, wide))
def test_python_mul_matches_schoolbook(a, b):
    assert _kernels_py.mul(a, b) == _schoolbook(a, b)


@settings(max_examples=150, deadline=None)
@given(st.one_of(small, wide), st.one_of(small, wide).filter(nonzero_tail))
def test_python_divexact_inverts_mul(a, b):
    assert _kernels_py.divexact(_kernels_py.mul(a, b), b) == a


@needs_c
@settings(max_examples=200, deadline=None)
@given(st.one_of(small, wide), st.one_of(small, wide).filter(nonzero_tail))
def test_backends_agree(a, b):
    prod = _kernels_c.mul(a, b)
    assert prod == _kernels_py.mul(a, b)
    assert _kernels_c.divexact(prod, b) == _kernels_py.divexact(prod, b) == a


@needs_c
def test_int64_overflow_falls_back_exactly():
    a = [2 ** 62, 2 ** 62, -(2 ** 62)]
    b = [2 ** 62, 3]
    assert _kernels_c.mul(a, b) == _schoolbook(a, b)


def test_pure_python_switch():
    code = (
        "from qhermite import BACKEND, verify;"
        "r = verify.run_suite('routes', 6);"
        "print(BACKEND, verify.all_passed(r))"
    )
    env = dict(os.environ, QHERMITE_PURE_PYTHON="1")
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert res.stdout.split() == ["python", "True"]
