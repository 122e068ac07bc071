import numpy as np
import pytest

from seqfam import polys
from seqfam.columns import (
    column_from_long_sequence,
    column_polynomial,
    column_sequence,
    column_symbols,
    coset,
    frobenius_poly,
)
from seqfam.errors import ParameterError
from seqfam.sequences import sidelnikov_sequence, sidelnikov_sequence_ext


def test_coset_basics():
    assert coset(0, 7, 3).members == (0,)
    c = coset(1, 5, 4)
    assert set(c.members) == {1, 4} and c.representative == 1 and c.size == 2
    with pytest.raises(ParameterError):
        coset(5, 5, 4)


def test_coset_pairs_for_degree_two():
    # mod q+1 the orbit of l is {l, q+1-l}
    q = 16
    for l in range(1, q + 1):
        members = set(coset(l % (q + 1), q + 1, q).members)
        assert members == {l % (q + 1), (q + 1 - l) % (q + 1)}


@pytest.mark.parametrize("M", [2, 4])
def test_column_vs_strided_extraction(gf25, M):
    long_seq = sidelnikov_sequence_ext(gf25, M)
    for l in range(gf25.norm_ratio):
        a = column_sequence(gf25, l, M)
        b = column_from_long_sequence(gf25, l, M, long_seq)
        assert np.array_equal(a.symbols, b.symbols)


def test_column_vs_strided_extraction_d3(gf64_over4):
    long_seq = sidelnikov_sequence_ext(gf64_over4, 3)
    for l in range(gf64_over4.norm_ratio):
        a = column_sequence(gf64_over4, l, 3)
        b = column_from_long_sequence(gf64_over4, l, 3, long_seq)
        assert np.array_equal(a.symbols, b.symbols)


def test_column_zero_is_degree_times_base(gf25, gf64_over4):
    for ext, M in ((gf25, 4), (gf64_over4, 3)):
        base = sidelnikov_sequence(ext.base, M)
        v0 = column_symbols(ext, 0, M)
        assert np.array_equal(v0, (ext.d * base.symbols) % M)


def test_column_q_multiple_identity(gf25, gf256):
    for ext, M in ((gf25, 4), (gf256, 5)):
        for l in range(1, ext.norm_ratio):
            assert np.array_equal(
                column_symbols(ext, l, M), column_symbols(ext, l * ext.q, M)
            )


def test_columns_congruent_mod_count_are_shifts(gf25):
    m = gf25.norm_ratio
    for l in range(1, m):
        a = column_symbols(gf25, l, 4)
        b = column_symbols(gf25, l + 2 * m, 4)
        assert np.array_equal(b, np.roll(a, -2))


def test_reflection_shift_identity(gf25, gf64_over4, gf256):
    for ext, M in ((gf25, 4), (gf64_over4, 3), (gf256, 5)):
        q, m = ext.q, ext.norm_ratio
        ratio_small = (q ** (ext.d - 1) - 1) // (q - 1)
        for l in range(1, q + 1):
            lhs = column_symbols(ext, (m - ratio_small * l) % m, M)
            rhs = np.roll(column_symbols(ext, l % m, M), l - 1)
            assert np.array_equal(lhs, rhs), (ext.q, ext.d, l)


def test_column_range_checks(gf25):
    with pytest.raises(ParameterError):
        column_sequence(gf25, 6, 4)
    with pytest.raises(ParameterError):
        column_sequence(gf25, -1, 4)


def test_column_polynomial_structure(gf25, gf64_over4):
    for ext in (gf25, gf64_over4):
        base = ext.base
        for l in range(ext.norm_ratio):
            cp = column_polynomial(ext, l)
            assert cp.norm_poly[-1] == base.pow_(base.beta, l)
            assert cp.norm_poly[0] == 1
            alpha_l = int(ext.exp[l % (ext.size - 1)])
            assert cp.norm_poly[1] == ext.trace(alpha_l)
            assert len(cp.norm_poly) - 1 == ext.d
            assert len(cp.min_poly) - 1 == cp.full_coset.size
            assert cp.full_coset.size % cp.reduced_coset.size == 0
            assert ext.d % cp.full_coset.size == 0


def test_column_zero_polynomial(gf25, gf64_over4):
    for ext in (gf25, gf64_over4):
        cp = column_polynomial(ext, 0)
        assert cp.min_poly == (1, 1)  # x + 1
        assert cp.full_coset.size == 1
        assert cp.norm_poly == polys.pow_(ext, (1, 1), ext.d)


def test_orbit_product_rebuilds_min_poly(gf25, gf256, gf64_over4):
    subproduct_seen = False
    for ext in (gf25, gf256, gf64_over4):
        for l in range(ext.norm_ratio):
            cp = column_polynomial(ext, l)
            rebuilt = (1,)
            for i in range(cp.full_coset.size // cp.reduced_coset.size):
                rebuilt = polys.mul(
                    ext, rebuilt, frobenius_poly(ext, cp.orbit_poly, i * cp.reduced_coset.size)
                )
            assert polys.trim(rebuilt) == polys.trim(cp.min_poly)
            if cp.reduced_coset.size < cp.full_coset.size:
                subproduct_seen = True
    assert subproduct_seen


def test_min_poly_root_free_in_base_field(gf25, gf256, gf64_over4):
    for ext in (gf25, gf256, gf64_over4):
        for l in range(1, ext.norm_ratio):
            cp = column_polynomial(ext, l)
            assert all(
                polys.eval_at(ext.base, cp.min_poly, x) != 0 for x in range(ext.q)
            ), (ext.q, ext.d, l)


def test_min_poly_degree_equals_conjugate_orbit(gf64_over4):
    ext = gf64_over4
    for l in range(1, ext.norm_ratio):
        cp = column_polynomial(ext, l)
        root = ext.neg(int(ext.exp[(-l) % (ext.size - 1)]))
        seen = {root}
        cur = ext.frobenius(root)
        while cur != root:
            seen.add(cur)
            cur = ext.frobenius(cur)
        assert len(seen) == cp.full_coset.size
        assert polys.eval_at(ext, cp.min_poly, root) == 0


def test_symbols_from_polynomial(gf25):
    # v_l(t) is the base-field log of the column polynomial at beta**t
    base = gf25.base
    for l in range(gf25.norm_ratio):
        cp = column_polynomial(gf25, l)
        vals = polys.eval_arr(base, cp.norm_poly, base.exp)
        assert np.array_equal(base.log[vals] % 4, column_symbols(gf25, l, 4))
