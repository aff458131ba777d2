"""Pigeonholing by mantissa over a pretend-complete prime basis.

If the primes were exactly the basis, every positive integer would fall into
one of ``4**k`` classes by mantissa, and a monochromatic ``a + b = c`` inside
one class would give ``u(a)**4 + u(b)**4 = u(c)**4``.  Here both halves are
observable: the first integer that is not basis-smooth is a new prime, and
the smooth integers carry no same-mantissa triple.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Optional

from .arith import (
    PrimeBasis,
    decompose,
    factor_over_basis,
    is_prime,
    mantissa_index,
    smooth_numbers,
)
from .errors import MantissaMismatch, NotSmooth, SumMismatch
from .schur import TripleMode

__all__ = [
    "MantissaColoring",
    "EuclidWitness",
    "IdentityRecord",
    "ContradictionCertificate",
    "SweepReport",
    "ProofDemoReport",
    "color_by_mantissa",
    "euclid_witness",
    "verify_no_mono_smooth_triple",
    "contradiction_certificate",
    "equation_chain",
    "run_proof_demo",
]


def color_by_mantissa(m: int, basis: PrimeBasis) -> int:
    """Pigeon-hole of ``m``; raises :class:`NotSmooth` off the smooth numbers."""
    return mantissa_index(decompose(m, basis).residues)


@dataclass(frozen=True)
class MantissaColoring:
    """Partial color function, defined exactly on basis-smooth integers."""

    basis: PrimeBasis

    @property
    def palette(self) -> int:
        return self.basis.n_mantissas

    def __call__(self, m: int) -> int:
        return color_by_mantissa(m, self.basis)


@dataclass(frozen=True)
class EuclidWitness:
    basis: PrimeBasis
    witness: int
    scan_note: str

    def to_dict(self) -> dict:
        return {"basis": list(self.basis.primes), "witness": self.witness,
                "scan_note": self.scan_note}


def euclid_witness(basis: PrimeBasis) -> EuclidWitness:
    """Smallest integer ``>= 2`` that is not smooth over ``basis``.

    It is a prime outside the basis: a proper factorization would give a
    smaller non-smooth integer.
    """
    m = 2
    while True:
        try:
            factor_over_basis(m, basis)
        except NotSmooth as exc:
            cofactor = exc.cofactor
            break
        m += 1
    if not is_prime(m) or m in basis:
        raise AssertionError(f"scan produced {m}, which is not a new prime")
    note = (f"2..{m - 1} are all {basis}-smooth; {m} leaves cofactor {cofactor}"
            if m > 2 else f"2 is not {basis}-smooth")
    return EuclidWitness(basis, m, note)


@dataclass
class SweepReport:
    basis: PrimeBasis
    bound: int
    mode: TripleMode
    triples_examined: int = 0
    violations: list = field(default_factory=list)
    smooth_count: int = 0

    def to_dict(self) -> dict:
        return {
            "basis": list(self.basis.primes),
            "bound": self.bound,
            "mode": self.mode.value,
            "triples_examined": self.triples_examined,
            "violations": [list(v) for v in self.violations],
        }


def verify_no_mono_smooth_triple(basis: PrimeBasis, bound: int,
                                 mode: TripleMode = TripleMode.WEAK) -> SweepReport:
    """Check every smooth ``a + b = c <= bound`` for a shared mantissa.

    Returns the examined-triple count and the violations, as ``(a, b, c)``
    tuples.  The violation list is empty: a shared mantissa would give a
    solution of the Fermat quartic.
    """
    mode = TripleMode.parse(mode)
    if bound < 3:
        raise ValueError(f"bound must be >= 3, got {bound}")
    smooth = smooth_numbers(basis, bound)
    color = {s: color_by_mantissa(s, basis) for s in smooth}
    report = SweepReport(basis, bound, mode, smooth_count=len(smooth))
    strict = mode is TripleMode.WEAK
    for i, a in enumerate(smooth):
        if 2 * a > bound:
            break
        ca = color[a]
        start = i + 1 if strict else i
        stop = bisect.bisect_right(smooth, bound - a)
        for b in smooth[start:stop]:
            cc = color.get(a + b)
            if cc is None:
                continue
            report.triples_examined += 1
            if ca == cc == color[b]:
                report.violations.append((a, b, a + b))
    return report


@dataclass(frozen=True)
class IdentityRecord:
    """One displayed identity, evaluated exactly."""

    label: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def equation_chain(ua: int, ub: int, uc: int, d: int) -> list[IdentityRecord]:
    """The derivation shared mantissa -> Fermat quartic, as evaluated records."""
    return [
        IdentityRecord("u(a)^4 d + u(b)^4 d = u(c)^4 d",
                       ua**4 * d + ub**4 * d, uc**4 * d),
        IdentityRecord("u(a)^4 + u(b)^4 = u(c)^4", ua**4 + ub**4, uc**4),
        IdentityRecord("u(c)^4 - u(b)^4 = (u(a)^2)^2", uc**4 - ub**4, (ua**2) ** 2),
    ]


@dataclass(frozen=True)
class ContradictionCertificate:
    triple: tuple[int, int, int]
    mantissa: int
    u_values: tuple[int, int, int]
    chain: tuple[IdentityRecord, ...]
    fermat_check: bool

    def check(self) -> bool:
        """Re-verify ``a = u(a)**4 * d`` etc. by multiplication."""
        d = self.mantissa
        if any(u**4 * d != v for u, v in zip(self.u_values, self.triple)):
            return False
        ua, ub, uc = self.u_values
        return (all(r.holds for r in self.chain)
                and self.fermat_check == (ua**4 + ub**4 == uc**4))


def contradiction_certificate(a: int, b: int, c: int,
                              basis: PrimeBasis) -> ContradictionCertificate:
    """Run the shared-mantissa derivation on a concrete triple.

    No positive triple meets the preconditions, so in practice this raises
    :class:`SumMismatch`, :class:`NotSmooth` (tagged with the argument) or
    :class:`MantissaMismatch`.
    """
    if a + b != c:
        raise SumMismatch(f"{a} + {b} = {a + b} != {c}")
    if not 0 < a < b:
        raise ValueError(f"need 0 < a < b, got a={a}, b={b}")
    parts = []
    for name, v in (("a", a), ("b", b), ("c", c)):
        try:
            parts.append(decompose(v, basis))
        except NotSmooth as exc:
            raise NotSmooth(exc.m, exc.cofactor, exc.witness, argument=name) from None
    mantissas = [p.mantissa for p in parts]
    if len(set(mantissas)) != 1:
        raise MantissaMismatch(mantissas)
    d = mantissas[0]
    ua, ub, uc = (p.u for p in parts)
    chain = tuple(equation_chain(ua, ub, uc, d))
    return ContradictionCertificate((a, b, c), d, (ua, ub, uc), chain,
                                    ua**4 + ub**4 == uc**4)


@dataclass
class ProofDemoReport:
    basis: PrimeBasis
    bound: int
    witness: int
    first_unpigeonholed: Optional[int]
    smooth_survivors: list[int]
    sweep: SweepReport

    @property
    def coloring_total(self) -> bool:
        return self.first_unpigeonholed is None

    def to_dict(self) -> dict:
        return {
            "basis": list(self.basis.primes),
            "bound": self.bound,
            "witness": self.witness,
            "triples_examined": self.sweep.triples_examined,
            "violations": [list(v) for v in self.sweep.violations],
        }

    def narrative(self) -> str:
        k = self.basis.k
        lines = [
            f"Assume the only primes are {self.basis} (k = {k}).",
            f"Then every m >= 1 is u(m)^4 * M(m) with M(m) one of {4**k} mantissas.",
        ]
        if self.first_unpigeonholed is not None:
            lines.append(
                f"Pigeonholing [1, {self.bound}] fails at {self.first_unpigeonholed}: "
                f"it is not {self.basis}-smooth."
            )
        else:
            lines.append(f"All of [1, {self.bound}] is {self.basis}-smooth.")
        lines.append(f"Euclid witness: {self.witness} is a prime outside the basis.")
        lines.append(
            f"{len(self.smooth_survivors)} smooth integers <= {self.bound}; "
            f"{self.sweep.triples_examined} smooth triples a < b, a + b = c examined."
        )
        if self.sweep.violations:
            lines.append(f"VIOLATIONS: {self.sweep.violations}")
        else:
            lines.append("No triple shares a mantissa, as the quartic obstruction demands.")
        return "\n".join(lines)


def run_proof_demo(basis: PrimeBasis, bound: int) -> ProofDemoReport:
    """Both escape hatches of the argument, computed on ``[1, bound]``."""
    if bound < 3:
        raise ValueError(f"bound must be >= 3, got {bound}")
    witness = euclid_witness(basis).witness
    first = witness if witness <= bound else None
    survivors = smooth_numbers(basis, bound)
    sweep = verify_no_mono_smooth_triple(basis, bound, TripleMode.WEAK)
    return ProofDemoReport(basis, bound, witness, first, survivors, sweep)
