import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nestedroots import _kernels_py as pure
from nestedroots import kernels
from nestedroots.algebra.cosine_field import cosine_field

compiled = pytest.importorskip("nestedroots._kernels")

F = cosine_field(24)
RED = F.reduction
D = F.degree

elem = st.tuples(*[st.integers(-10**6, 10**6)] * D)
vec3 = st.tuples(elem, elem, elem)


@given(elem, elem)
def test_mulmod(a, b):
    assert compiled.mulmod(a, b, RED) == pure.mulmod(a, b, RED)


@given(vec3, vec3, vec3)
def test_vector_kernels(u, v, w):
    assert compiled.dot(u, v, RED) == pure.dot(u, v, RED)
    assert compiled.cross3(u, v, RED) == pure.cross3(u, v, RED)
    assert compiled.det3(u, v, w, RED) == pure.det3(u, v, w, RED)
    assert compiled.matvec((u, v, w), u, RED) == pure.matvec((u, v, w), u, RED)


@given(st.lists(elem, max_size=6))
def test_float_signs(vals):
    powers = list(F.powers)
    got, got_b = compiled.float_signs(vals, powers)
    want, want_b = pure.float_signs(vals, powers)
    assert got == pytest.approx(want) and got_b == pytest.approx(want_b)


def test_huge_coefficients_do_not_overflow():
    a = (3**80,) + (0,) * (D - 1)
    b = (0, 5**70) + (0,) * (D - 2)
    assert compiled.mulmod(a, b, RED) == pure.mulmod(a, b, RED)


def test_rank_one_field():
    F1 = cosine_field(2)
    assert F1.degree == 1
    assert compiled.mulmod((3,), (-4,), F1.reduction) == (-12,) == pure.mulmod((3,), (-4,), F1.reduction)


def test_dispatch_uses_compiled_backend():
    if os.environ.get("NESTEDROOTS_PURE", "") not in ("", "0"):
        assert kernels.BACKEND == "python"
    else:
        assert kernels.BACKEND == "compiled"


def test_pure_backend_gives_identical_reports():
    argv = [sys.executable, "-m", "nestedroots.cli", "triangle", "scan", "--type", "2,3,8", "--depth", "4", "--quiet"]
    env = dict(os.environ)
    outs = []
    for flag in ("1", "0"):
        env["NESTEDROOTS_PURE"] = flag
        proc = subprocess.run(argv, capture_output=True, text=True, env=env, check=True)
        outs.append(proc.stdout)
        probe = subprocess.run(
            [sys.executable, "-c", "from nestedroots import kernels; print(kernels.BACKEND)"],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        assert probe.stdout.strip() == ("python" if flag == "1" else "compiled")
    assert outs[0] == outs[1] and outs[0]
