"""Exact integer arithmetic over a finite prime basis.

Every positive integer that is smooth over a basis ``p_1 < ... < p_k`` splits
as ``m = u**4 * M`` where ``M`` (the mantissa) has every exponent in
``[0, 4)``.  The decomposition computed here is the canonical one obtained by
trial division; nothing downstream depends on its uniqueness.

Python integers are unbounded, so none of the arithmetic here can wrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSmooth

__all__ = [
    "PrimeBasis",
    "MantissaDecomposition",
    "is_prime",
    "smallest_prime_factor",
    "is_square",
    "factor_over_basis",
    "decompose",
    "mantissa_index",
    "residues_from_index",
    "smooth_numbers",
    "is_smooth",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every ``n < 3.3 * 10**24``."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def is_square(n: int) -> bool:
    """Exact perfect-square test: integer square root, then multiply back."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@dataclass(frozen=True)
class PrimeBasis:
    """Strictly ascending tuple of distinct primes ``p_1 < ... < p_k``."""

    primes: tuple[int, ...]

    def __post_init__(self):
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise ValueError("a prime basis needs at least one prime")
        for p in primes:
            if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
                raise ValueError(f"{p!r} is not a prime")
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError(f"basis must be strictly ascending: {primes}")

    @classmethod
    def of(cls, primes: Iterable[int]) -> "PrimeBasis":
        """Build from any iterable, sorting it; duplicates are rejected."""
        primes = list(primes)
        if len(set(primes)) != len(primes):
            raise ValueError(f"duplicate primes in basis: {primes}")
        return cls(tuple(sorted(primes)))

    @classmethod
    def parse(cls, text: str) -> "PrimeBasis":
        """Parse ``"2,3,5"``."""
        try:
            primes = [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"cannot parse prime basis {text!r}") from None
        return cls.of(primes)

    @property
    def k(self) -> int:
        return len(self.primes)

    @property
    def n_mantissas(self) -> int:
        return 4 ** self.k

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __contains__(self, p):
        return p in self.primes

    def __str__(self):
        return ",".join(map(str, self.primes))


@dataclass(frozen=True)
class MantissaDecomposition:
    """``m = u**4 * mantissa`` with ``u = prod p_i**q_i`` and
    ``mantissa = prod p_i**r_i``, ``0 <= r_i < 4``."""

    m: int
    u: int
    residues: tuple[int, ...]
    mantissa: int
    quotients: tuple[int, ...]

    @property
    def index(self) -> int:
        return mantissa_index(self.residues)

    def check(self, basis: PrimeBasis) -> bool:
        """Re-verify every invariant by direct multiplication."""
        if self.u ** 4 * self.mantissa != self.m:
            return False
        if len(self.residues) != basis.k or len(self.quotients) != basis.k:
            return False
        if any(not 0 <= r < 4 for r in self.residues):
            return False
        if math.prod(p**q for p, q in zip(basis, self.quotients)) != self.u:
            return False
        if math.prod(p**r for p, r in zip(basis, self.residues)) != self.mantissa:
            return False
        cube = math.prod(p**3 for p in basis)
        return cube % self.mantissa == 0

    def to_dict(self, basis: PrimeBasis) -> dict:
        return {
            "m": self.m,
            "basis": list(basis.primes),
            "u": self.u,
            "quotients": list(self.quotients),
            "residues": list(self.residues),
            "mantissa": self.mantissa,
            "index": self.index,
        }


def _check_positive(m):
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"expected an int, got {type(m).__name__}")
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")


def factor_over_basis(m: int, basis: PrimeBasis) -> tuple[int, ...]:
    """Exponent vector ``e`` with ``prod p_i**e_i == m``.

    Raises :class:`NotSmooth` carrying the cofactor left after dividing out
    every basis prime when ``m`` has any other prime factor.
    """
    _check_positive(m)
    rest = m
    exponents = []
    for p in basis.primes:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        exponents.append(e)
    if rest != 1:
        raise NotSmooth(m, rest, smallest_prime_factor(rest))
    return tuple(exponents)


def is_smooth(m: int, basis: PrimeBasis) -> bool:
    try:
        factor_over_basis(m, basis)
    except NotSmooth:
        return False
    return True


def decompose(m: int, basis: PrimeBasis) -> MantissaDecomposition:
    """Split ``m`` into its fourth-power part and its mantissa.

    >>> d = decompose(31104, PrimeBasis((2, 3)))
    >>> d.u, d.residues, d.mantissa
    (6, (3, 1), 24)
    """
    exponents = factor_over_basis(m, basis)
    quotients = tuple(e // 4 for e in exponents)
    residues = tuple(e % 4 for e in exponents)
    u = math.prod(p**q for p, q in zip(basis.primes, quotients))
    mantissa = math.prod(p**r for p, r in zip(basis.primes, residues))
    assert u**4 * mantissa == m
    return MantissaDecomposition(m, u, residues, mantissa, quotients)


def mantissa_index(residues: Sequence[int]) -> int:
    """Base-4 label of a residue vector, least significant digit first.

    The digit at position ``i`` belongs to the ``i``-th smallest prime, so
    the labels run over ``[0, 4**k)`` bijectively.
    """
    index = 0
    for i, r in enumerate(residues):
        if not isinstance(r, int) or not 0 <= r < 4:
            raise ValueError(f"residue {r!r} at position {i} is outside [0, 4)")
        index += r * 4**i
    return index


def residues_from_index(index: int, k: int) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= index < 4**k:
        raise ValueError(f"index {index} is outside [0, {4**k})")
    digits = []
    for _ in range(k):
        index, r = divmod(index, 4)
        digits.append(r)
    return tuple(digits)


def smooth_numbers(basis: PrimeBasis, bound: int) -> list[int]:
    """All basis-smooth integers in ``[1, bound]``, ascending."""
    _check_positive(bound)
    found = [1]
    for p in basis.primes:
        extended = []
        for s in found:
            while s <= bound:
                extended.append(s)
                s *= p
        found = extended
    return sorted(found)
