import random
from itertools import product

import pytest

from boxball import (
    CrystalTensor,
    RResult,
    SemiStandardTableau,
    apply_r,
    energy_h,
    enumerate_tableaux,
    insertion_product,
    oracle_r,
    yang_baxter_holds,
)
from boxball.bbs import vacuum_block, vacuum_column
from conftest import T


def small_rectangles(n, kmax=2, lmax=2):
    for k in range(1, min(kmax, n - 1) + 1):
        for l in range(1, lmax + 1):
            yield from enumerate_tableaux((l,) * k, n)


def r_on_tensor(ct):
    res = apply_r(ct.factors[0], ct.factors[1])
    return CrystalTensor((res.left_out, res.right_out), ct.n)


class TestWorkedExample:
    def test_values(self):
        res = apply_r(T("1 2 4 / 2 3 5 / 4 4 6", 6), T("2/5", 6))
        assert res.left_out == T("2/4", 6)
        assert res.right_out == T("1 2 3 / 2 4 5 / 4 5 6", 6)
        assert res.energy == -1

    def test_oracle_agrees(self):
        x, y = T("1 2 4 / 2 3 5 / 4 4 6", 6), T("2/5", 6)
        assert oracle_r(x, y) == apply_r(x, y)

    def test_insertion_identity_holds(self):
        x, y = T("1 2 4 / 2 3 5 / 4 4 6", 6), T("2/5", 6)
        res = apply_r(x, y)
        assert insertion_product(res.left_out, res.right_out) == insertion_product(x, y)


class TestVacuum:
    @pytest.mark.parametrize("k,l,n", [(1, 1, 2), (2, 3, 4), (3, 2, 5)])
    def test_carrier_passes_vacuum(self, k, l, n):
        res = apply_r(vacuum_block(k, l, n), vacuum_column(k, n))
        assert res.left_out == vacuum_column(k, n)
        assert res.right_out == vacuum_block(k, l, n)

    @pytest.mark.parametrize("k,l,n", [(1, 2, 3), (2, 3, 4), (3, 3, 5)])
    def test_normalization(self, k, l, n):
        assert energy_h(vacuum_block(k, l, n), vacuum_column(k, n)) == 0


class TestWideExample:
    def test_three_row_pair(self):
        x = T("1 1 1 1 2 / 2 2 3 3 3 / 4 4 4 5 5", 7)
        y = T("1 1 2 / 2 3 3 / 5 6 7", 7)
        res = apply_r(x, y)
        assert res.left_out == T("1 1 2 / 3 3 3 / 4 5 5", 7)
        assert res.right_out == T("1 1 1 1 2 / 2 2 2 4 4 / 3 3 5 6 7", 7)


class TestZeroRowConvention:
    def test_two_empties(self):
        e = SemiStandardTableau.empty(4)
        assert apply_r(e, e) == RResult(e, e, 0)
        assert energy_h(e, e) == 0

    def test_one_empty_swaps(self):
        e = SemiStandardTableau.empty(4)
        t = T("1 2 / 2 3", 4)
        assert apply_r(t, e) == RResult(e, t, 0)
        assert apply_r(e, t) == RResult(t, e, 0)


class TestAgainstOracle:
    def test_exhaustive_small(self):
        for n in (2, 3):
            for x in small_rectangles(n):
                for y in small_rectangles(n):
                    assert apply_r(x, y) == oracle_r(x, y)


class TestProperties:
    def test_involution(self):
        for n in (2, 3):
            for x in small_rectangles(n):
                for y in small_rectangles(n):
                    res = apply_r(x, y)
                    back = apply_r(res.left_out, res.right_out)
                    assert (back.left_out, back.right_out) == (x, y)
                    assert back.energy == res.energy

    def test_content_conserved(self):
        rng = random.Random(2)
        pool = list(small_rectangles(4))
        for _ in range(200):
            x, y = rng.choice(pool), rng.choice(pool)
            res = apply_r(x, y)
            assert res.left_out.content() + res.right_out.content() == x.content() + y.content()
            assert res.left_out.shape == y.shape
            assert res.right_out.shape == x.shape

    def test_equivariance(self):
        rng = random.Random(4)
        pool = list(small_rectangles(4))
        for _ in range(150):
            x, y = rng.choice(pool), rng.choice(pool)
            ct = CrystalTensor((x, y), 4)
            for i in range(1, 4):
                lowered = ct.apply_f(i)
                swapped = r_on_tensor(ct)
                if lowered is None:
                    assert swapped.apply_f(i) is None
                else:
                    assert r_on_tensor(lowered) == swapped.apply_f(i)
                raised = ct.apply_e(i)
                if raised is None:
                    assert swapped.apply_e(i) is None
                else:
                    assert r_on_tensor(raised) == swapped.apply_e(i)

    def test_energy_invariant_under_classical_operators(self):
        rng = random.Random(6)
        pool = list(small_rectangles(4))
        for _ in range(150):
            x, y = rng.choice(pool), rng.choice(pool)
            h = energy_h(x, y)
            ct = CrystalTensor((x, y), 4)
            for i in range(1, 4):
                moved = ct.apply_e(i)
                if moved is not None:
                    assert energy_h(*moved.factors) == h
                moved = ct.apply_f(i)
                if moved is not None:
                    assert energy_h(*moved.factors) == h

    def test_energy_nonpositive_same_height(self):
        for n in (3, 4):
            for k in range(1, min(2, n - 1) + 1):
                for l, lp in product((1, 2), repeat=2):
                    for x in enumerate_tableaux((l,) * k, n):
                        for y in enumerate_tableaux((lp,) * k, n):
                            assert energy_h(x, y) <= 0


class TestValidation:
    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            apply_r(T("1", 3), T("1", 4))

    def test_non_rectangular(self):
        with pytest.raises(ValueError):
            apply_r(T("1 1 / 2", 4), T("1", 4))


class TestYangBaxter:
    def test_vacuum_triple(self):
        assert yang_baxter_holds(
            vacuum_block(2, 3, 4), vacuum_block(2, 2, 4), vacuum_block(2, 1, 4))

    def test_random_triples(self):
        rng = random.Random(8)
        for _ in range(40):
            k = rng.randint(1, 2)
            n = rng.randint(k + 1, 4)
            x, y, z = (
                rng.choice(list(enumerate_tableaux((rng.randint(1, 3),) * k, n)))
                for _ in range(3)
            )
            assert yang_baxter_holds(x, y, z)

    def test_soliton_internal_triple(self):
        x = T("2 2 2 / 3 3 3 / 4 4 5", 6)
        y = T("1 2 / 2 3 / 4 6", 6)
        z = T("1 / 3 / 5", 6)
        assert yang_baxter_holds(x, y, z)
