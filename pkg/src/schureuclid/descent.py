"""The quartic obstruction ``z**4 - y**4 = x**2``.

There is no solution in positive integers.  This module refutes it
exhaustively for ``z <= z_max`` and supplies the Pythagorean machinery a
descent argument runs on: primitive triples, their generators, and a single
descent step that maps a claimed solution to a strictly smaller one.

The orientation ``z**4 - y**4 = x**2`` is equivalent to
``x**2 + (y**2)**2 = (z**2)**2``, i.e. ``(x, y**2, z**2)`` is a Pythagorean
triple.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .arith import is_square
from .errors import NotATriple, NotPrimitive

__all__ = [
    "QuarticCandidate",
    "FailedCondition",
    "DescentReport",
    "PythTriple",
    "search_quartic",
    "descent_audit",
    "descent_step",
    "primitive_triples",
    "parametrize",
    "quartic_residual",
]


@dataclass(frozen=True)
class QuarticCandidate:
    x: int
    y: int
    z: int

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")

    def as_tuple(self):
        return (self.x, self.y, self.z)


class FailedCondition(str, enum.Enum):
    NONE = "none"
    NOT_A_SOLUTION = "not_a_solution"


@dataclass(frozen=True)
class DescentReport:
    candidate: QuarticCandidate
    satisfies_equation: bool
    residual: int
    gcd_reduction: QuarticCandidate
    failed_condition: FailedCondition
    smaller: Optional[QuarticCandidate] = None


@dataclass(frozen=True)
class PythTriple:
    """``p**2 + q**2 == r**2`` with legs ``p <= q``.

    For a primitive triple, ``generators`` is ``(m, n)`` and the legs are
    ``{m*m - n*n, 2*m*n}`` in whichever order makes ``p <= q``.
    """

    p: int
    q: int
    r: int
    primitive: bool
    generators: Optional[tuple[int, int]] = None


def quartic_residual(x: int, y: int, z: int) -> int:
    return (z**4 - y**4) - x * x


def _scan(z_lo: int, z_hi: int) -> list[tuple[int, int, int]]:
    found = []
    for z in range(max(z_lo, 2), z_hi + 1):
        z4 = z**4
        for y in range(1, z):
            d = z4 - y**4
            x = math.isqrt(d)
            if x * x == d:
                found.append((x, y, z))
    return found


def search_quartic(z_max: int, workers: int = 1) -> list[QuarticCandidate]:
    """Every ``(x, y, z)`` with ``1 <= y < z <= z_max`` and
    ``z**4 - y**4 == x**2``, in ``z`` order.  Expected empty.

    ``workers > 1`` splits the ``z`` range across processes; chunks are
    concatenated in ``z`` order.
    """
    if not isinstance(z_max, int) or z_max < 1:
        raise ValueError(f"z_max must be a positive integer, got {z_max!r}")
    if workers <= 1 or z_max < 64:
        hits = _scan(1, z_max)
    else:
        # equal-work chunks: cost of z is ~z, so split on z**2
        edges = [math.isqrt(z_max * z_max * i // workers) for i in range(workers + 1)]
        edges[-1] = z_max
        bounds = [(edges[i] + 1, edges[i + 1]) for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan, *zip(*bounds)))
        hits = [h for part in parts for h in part]
    return [QuarticCandidate(*h) for h in hits]


def _reduce(x: int, y: int, z: int) -> tuple[int, int, int]:
    """Divide out the largest ``g`` with ``g | y``, ``g | z``, ``g**2 | x``.

    The equation is homogeneous under ``(x, y, z) -> (g*g*x, g*y, g*z)``.
    """
    g = math.gcd(y, z)
    best = 1
    for f in range(g, 0, -1):
        if g % f == 0 and x % (f * f) == 0:
            best = f
            break
    return x // (best * best), y // best, z // best


def descent_audit(candidate: QuarticCandidate) -> DescentReport:
    """Exact residual of a candidate, plus its reduced form.

    A zero residual cannot occur for positive integers.  If it ever did, the
    report carries the strictly smaller solution produced by
    :func:`descent_step`.
    """
    if not isinstance(candidate, QuarticCandidate):
        candidate = QuarticCandidate(*candidate)
    x, y, z = candidate.as_tuple()
    residual = quartic_residual(x, y, z)
    reduced = QuarticCandidate(*_reduce(x, y, z))
    if residual != 0:
        return DescentReport(candidate, False, residual, reduced,
                             FailedCondition.NOT_A_SOLUTION)
    smaller = descent_step(reduced)
    return DescentReport(candidate, True, 0, reduced, FailedCondition.NONE, smaller)


def descent_step(candidate: QuarticCandidate) -> QuarticCandidate:
    """Map a primitive solution of ``z**4 - y**4 = x**2`` to one with
    smaller ``z``.

    ``y`` odd: ``(x, y**2, z**2)`` is primitive with odd leg ``y**2``, so
    ``y**2 = m*m - n*n`` and ``z**2 = m*m + n*n``; then
    ``m**4 - n**4 = (y*z)**2`` with ``m < z``.

    ``y`` even: ``y**2 = 2*m*n`` and ``z**2 = m*m + n*n``.  The even one of
    ``m, n`` is ``2*e*e*f*f`` and the odd one is a square ``g*g``, where
    ``(m, n)`` is itself a triple generated by ``(e*e, f*f)``; then
    ``e**4 - f**4 = g**2`` with ``e < z``.

    Raises :class:`NotATriple` when the input is not a solution.
    """
    x, y, z = candidate.as_tuple()
    if quartic_residual(x, y, z) != 0:
        raise NotATriple(f"{candidate} does not satisfy z^4 - y^4 = x^2")
    if math.gcd(y, z) != 1:
        x, y, z = _reduce(x, y, z)
    m, n = parametrize(x, y * y, z * z)
    if y % 2 == 1:
        return QuarticCandidate(y * z, n, m)
    # (m, n, z) is primitive: m*m + n*n = z*z
    odd, even = (m, n) if m % 2 == 1 else (n, m)
    e, f = parametrize(odd, even, z)
    e_root, f_root, g = math.isqrt(e), math.isqrt(f), math.isqrt(odd)
    if e_root**2 != e or f_root**2 != f or g * g != odd:
        raise NotATriple("descent invariants violated; input was not a primitive solution")
    return QuarticCandidate(g, f_root, e_root)


def primitive_triples(r_max: int) -> list[PythTriple]:
    """Primitive triples with hypotenuse ``<= r_max``, ordered by ``(r, p)``."""
    if not isinstance(r_max, int) or r_max < 1:
        raise ValueError(f"r_max must be a positive integer, got {r_max!r}")
    out = []
    m = 2
    while m * m + 1 <= r_max:
        for n in range(1 + m % 2, m, 2):
            r = m * m + n * n
            if r > r_max:
                break
            if math.gcd(m, n) != 1:
                continue
            a, b = m * m - n * n, 2 * m * n
            out.append(PythTriple(min(a, b), max(a, b), r, True, (m, n)))
        m += 1
    out.sort(key=lambda tr: (tr.r, tr.p))
    return out


def parametrize(p: int, q: int, r: int) -> tuple[int, int]:
    """Generators ``(m, n)`` of a primitive triple.

    The legs are reordered so that ``q`` is the even one; then
    ``p = m*m - n*n``, ``q = 2*m*n``, ``r = m*m + n*n``.
    """
    for v in (p, q, r):
        if not isinstance(v, int) or v < 1:
            raise NotATriple(f"sides must be positive integers, got {(p, q, r)}")
    if p * p + q * q != r * r:
        raise NotATriple(f"{p}^2 + {q}^2 != {r}^2")
    if math.gcd(p, q) != 1:
        raise NotPrimitive(f"gcd({p}, {q}) = {math.gcd(p, q)}")
    if q % 2:
        p, q = q, p
    # m*m = (r + p) / 2, n*n = (r - p) / 2
    mm, nn = (r + p) // 2, (r - p) // 2
    if not (is_square(mm) and is_square(nn)):
        raise NotATriple(f"({p}, {q}, {r}) has no integral generators")
    m, n = math.isqrt(mm), math.isqrt(nn)
    assert m * m - n * n == p and 2 * m * n == q and m > n >= 1
    return m, n
