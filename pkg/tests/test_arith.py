import math

import pytest
from hypothesis import given, settings, strategies as st

from schureuclid.arith import (
    PrimeBasis,
    decompose,
    factor_over_basis,
    is_prime,
    is_smooth,
    is_square,
    mantissa_index,
    residues_from_index,
    smooth_numbers,
)
from schureuclid.errors import NotSmooth

from oracles import primes_below, trial_exponents

B23 = PrimeBasis((2, 3))


@pytest.mark.parametrize(
    "m,expected",
    [(48, (4, 1)), (1, (0, 0)), (31104, (7, 5)), (2, (1, 0))],
)
def test_factor_over_basis(m, expected):
    assert factor_over_basis(m, B23) == expected


def test_factor_not_smooth_carries_cofactor():
    with pytest.raises(NotSmooth) as info:
        factor_over_basis(10, B23)
    assert info.value.cofactor == 5
    assert info.value.witness == 5


def test_not_smooth_witness_is_smallest_prime_of_cofactor():
    with pytest.raises(NotSmooth) as info:
        factor_over_basis(2 * 7 * 11 * 11, B23)
    assert info.value.cofactor == 847
    assert info.value.witness == 7


@pytest.mark.parametrize("m", [0, -3])
def test_nonpositive_rejected(m):
    with pytest.raises(ValueError):
        factor_over_basis(m, B23)
    with pytest.raises(ValueError):
        decompose(m, B23)


@pytest.mark.parametrize(
    "m,u,residues,mantissa",
    [(48, 2, (0, 1), 3), (31104, 6, (3, 1), 24), (1, 1, (0, 0), 1)],
)
def test_decompose_examples(m, u, residues, mantissa):
    d = decompose(m, B23)
    assert (d.u, d.residues, d.mantissa) == (u, residues, mantissa)
    assert d.u**4 * d.mantissa == m
    assert d.check(B23)


def test_decompose_not_smooth():
    with pytest.raises(NotSmooth):
        decompose(10, B23)


@pytest.mark.parametrize(
    "basis",
    [PrimeBasis((2,)), PrimeBasis((2, 3)), PrimeBasis((2, 3, 5)), PrimeBasis((3, 7, 11))],
)
def test_reconstruction_all_smooth_up_to_a_million(basis):
    cube = math.prod(p**3 for p in basis)
    for m in smooth_numbers(basis, 10**6):
        d = decompose(m, basis)
        assert d.u**4 * d.mantissa == m
        assert all(0 <= r < 4 for r in d.residues)
        assert cube % d.mantissa == 0


def test_factor_agrees_with_trial_division_oracle():
    for basis in (PrimeBasis((2, 3)), PrimeBasis((2, 5, 7))):
        for m in range(1, 10**5 + 1):
            expected = trial_exponents(m, basis.primes)
            if expected is None:
                with pytest.raises(NotSmooth):
                    factor_over_basis(m, basis)
            else:
                assert factor_over_basis(m, basis) == expected


@pytest.mark.parametrize(
    "residues,index", [((0, 0), 0), ((0, 1), 4), ((1, 0), 1), ((3, 3), 15)]
)
def test_mantissa_index(residues, index):
    assert mantissa_index(residues) == index


def test_mantissa_index_k2_has_sixteen_labels():
    labels = {mantissa_index((r0, r1)) for r0 in range(4) for r1 in range(4)}
    assert labels == set(range(16))


@pytest.mark.parametrize("k", range(1, 7))
def test_mantissa_index_inverse(k):
    for index in range(4**k):
        assert mantissa_index(residues_from_index(index, k)) == index


@pytest.mark.parametrize("bad", [(4, 0), (0, -1), (0, 1.5)])
def test_mantissa_index_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        mantissa_index(bad)


def test_residues_from_index_range():
    with pytest.raises(ValueError):
        residues_from_index(16, 2)


@pytest.mark.parametrize(
    "primes,bound,expected",
    [
        ((2, 3), 20, [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]),
        ((2,), 10, [1, 2, 4, 8]),
        ((2, 3, 5), 1, [1]),
    ],
)
def test_smooth_numbers(primes, bound, expected):
    assert smooth_numbers(PrimeBasis(primes), bound) == expected


@pytest.mark.parametrize("primes", [(2,), (2, 3), (2, 3, 5), (5, 7)])
def test_smooth_numbers_cross_filter(primes):
    basis = PrimeBasis(primes)
    bound = 20000
    assert smooth_numbers(basis, bound) == [m for m in range(1, bound + 1)
                                            if is_smooth(m, basis)]


def test_is_prime_matches_sieve():
    primes = set(primes_below(20000))
    assert all(is_prime(n) == (n in primes) for n in range(-2, 20000))


@pytest.mark.parametrize(
    "n,expected",
    [(2**61 - 1, True), (2**64 + 1, False), (18446744073709551557, True),
     (3215031751, False), (3825123056546413051, False)],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


@settings(max_examples=2000)
@given(st.integers(min_value=0, max_value=10**30))
def test_is_square_agrees_with_floor_sqrt(n):
    r = math.isqrt(n)
    assert is_square(n) == (r * r == n)
    assert is_square(r * r)


def test_is_square_random_sample():
    import random

    rng = random.Random(20240101)
    for _ in range(10**5):
        n = rng.randrange(10**12)
        r = int(n**0.5)
        while r * r > n:
            r -= 1
        while (r + 1) ** 2 <= n:
            r += 1
        assert is_square(n) == (r * r == n)


@pytest.mark.parametrize("primes", [(), (4,), (3, 2, 2), (1,), (2, 2)])
def test_bad_basis(primes):
    with pytest.raises(ValueError):
        PrimeBasis(primes)


def test_basis_parse_sorts():
    assert PrimeBasis.parse("5,2,3").primes == (2, 3, 5)
    with pytest.raises(ValueError):
        PrimeBasis.parse("2,x")
    with pytest.raises(ValueError):
        PrimeBasis.parse("2,2")
