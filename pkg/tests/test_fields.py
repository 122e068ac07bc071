import numpy as np
import pytest

from seqfam.errors import ParameterError, TableLimitError
from seqfam.fields import build_extension, build_field


def test_gf5_smallest_primitive_root(gf5):
    # orders mod 5: 2 -> 4, so 2 is the smallest primitive root
    assert gf5.beta == 2
    assert gf5.q == 5
    assert list(gf5.exp) == [1, 2, 4, 3]


def test_gf2_trivial_group():
    ctx = build_field(2, 1)
    assert ctx.beta == 1
    assert ctx.dlog(0) == 0 and ctx.dlog(1) == 0


def test_gf16_generator_order(gf16):
    assert np.unique(gf16.exp).size == 15
    assert gf16.pow_(gf16.beta, 15) == 1
    assert all(gf16.pow_(gf16.beta, k) != 1 for k in range(1, 15))


def test_parameter_errors():
    with pytest.raises(ParameterError):
        build_field(12, 1)
    with pytest.raises(ParameterError):
        build_field(5, 0)
    with pytest.raises(TableLimitError):
        build_field(2, 10, limit=512)
    with pytest.raises(ParameterError):
        build_extension(build_field(5, 1), 1)


def test_table_limit_env(monkeypatch):
    monkeypatch.setenv("SEQFAM_TABLE_LIMIT", "16")
    with pytest.raises(TableLimitError):
        build_field(5, 2)
    build_field(2, 4)  # exactly at the cap


def test_determinism(gf16, gf256):
    again = build_field(2, 4)
    assert again.descriptor() == gf16.descriptor()
    assert np.array_equal(again.exp, gf16.exp)
    assert np.array_equal(again.log, gf16.log)
    ext_again = build_extension(again, 2)
    assert ext_again.descriptor() == gf256.descriptor()
    assert np.array_equal(ext_again.exp, gf256.exp)


def test_validate(gf16, gf256, gf25):
    gf16.validate()
    gf256.validate()
    gf25.validate()


def test_norm_of_alpha_is_beta(gf25, gf256, gf64_over4):
    for ext in (gf25, gf256, gf64_over4):
        assert ext.norm(ext.alpha) == ext.base.beta
        assert ext.derived_beta == ext.base.beta
        assert ext.norm(0) == 0


def test_norm_of_base_elements(gf25):
    # conjugates of a base element coincide, so the norm is a**d
    for a in range(1, 5):
        assert gf25.norm(a) == gf25.base.pow_(a, 2)


def test_norm_is_product_of_conjugates(gf64_over4):
    ext = gf64_over4
    rng = np.random.default_rng(2)
    for x in map(int, rng.integers(1, ext.size, 40)):
        prod = 1
        for j in range(ext.d):
            prod = ext.mul(prod, ext.frobenius(x, j))
        assert prod == ext.norm(x)
        assert prod < ext.q


def test_frobenius_is_automorphism(gf256):
    ext = gf256
    rng = np.random.default_rng(3)
    for _ in range(40):
        x, y = map(int, rng.integers(0, ext.size, 2))
        assert ext.frobenius(ext.add(x, y)) == ext.add(ext.frobenius(x), ext.frobenius(y))
        assert ext.frobenius(ext.mul(x, y)) == ext.mul(ext.frobenius(x), ext.frobenius(y))


def test_trace_properties(gf25):
    ext = gf25
    assert ext.trace(0) == 0
    rng = np.random.default_rng(4)
    for _ in range(30):
        x, y = map(int, rng.integers(0, ext.size, 2))
        assert ext.trace(ext.add(x, y)) == ext.base.add(ext.trace(x), ext.trace(y))
        assert ext.trace(x) < ext.q
    # trace of a base element is d copies of it added together
    for a in range(5):
        assert ext.trace(a) == ext.base.add(a, a)


def test_dlog_convention(gf16):
    assert gf16.dlog(gf16.beta) == 1
    assert gf16.dlog(0) == 0
    assert gf16.dlog(int(gf16.exp[14])) == 14


def test_scalar_and_array_ops_agree(gf25):
    ext = gf25
    rng = np.random.default_rng(5)
    a = rng.integers(0, ext.size, 50)
    b = rng.integers(0, ext.size, 50)
    add_vec = ext.add_arr(a, b)
    mul_vec = ext.mul_arr(a, b)
    neg_vec = ext.neg_arr(a)
    for i in range(50):
        assert add_vec[i] == ext.add(int(a[i]), int(b[i]))
        assert mul_vec[i] == ext.mul(int(a[i]), int(b[i]))
        assert neg_vec[i] == ext.neg(int(a[i]))


def test_inverse_and_order(gf16):
    for a in range(1, 16):
        assert gf16.mul(a, gf16.inv(a)) == 1
        assert gf16.pow_(a, gf16.order(a)) == 1
    with pytest.raises(ZeroDivisionError):
        gf16.inv(0)
