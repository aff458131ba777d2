"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria".

Pinned tolerances: Schur values and witnesses are exact; the t = 4 strong
search must finish within 600 s; search_quartic(2000) within 60 s; the
{2, 3, 5} mantissa sweep to 10**5 within 10 s.
"""

import json
import random
import time

import pytest

from schureuclid.arith import PrimeBasis, factor_over_basis, is_prime
from schureuclid.cli import main, verify_bytes
from schureuclid.descent import parametrize, primitive_triples, search_quartic
from schureuclid.errors import NotSmooth, VerificationError
from schureuclid.pipeline import euclid_witness, verify_no_mono_smooth_triple
from schureuclid.schur import (TripleMode, constant_rule, default_horizon,
                               guaranteed_triple, parity_rule, residue_rule,
                               schur_number)

from conftest import ACCEPTANCE_RESULTS
from oracles import brute_force_schur, plain_schur, primes_below, quartic_by_square_set

STRONG, WEAK = TripleMode.STRONG, TripleMode.WEAK

T4_LIMIT_S = 600.0
QUARTIC_LIMIT_S = 60.0
SWEEP_LIMIT_S = 10.0


def record(name, ok, detail):
    ACCEPTANCE_RESULTS[name] = (ok, detail)
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


def test_strong_schur_numbers(strong4):
    values = [schur_number(t, STRONG).s_value for t in (1, 2, 3)]
    brute = [brute_force_schur(t, strong=True) for t in (1, 2, 3)]
    cert4, elapsed = strong4
    values.append(cert4.s_value)
    ok = values == [1, 4, 13, 44] and brute == [1, 4, 13] and elapsed < T4_LIMIT_S
    record("strong Schur numbers", ok,
           f"S = {values}, brute force t<=3 = {brute}, t=4 in {elapsed:.1f}s "
           f"(limit {T4_LIMIT_S:.0f}s)")


def test_weak_schur_numbers():
    values = [schur_number(t, WEAK).s_value for t in (1, 2, 3)]
    brute = [brute_force_schur(t, strong=False) for t in (1, 2)]
    pruned = plain_schur(3, strong=False)
    ok = values == [2, 8, 23] and brute == [2, 8] and pruned == 23
    record("weak Schur numbers", ok,
           f"WS = {values}, brute force t<=2 = {brute}, plain backtracking t=3 = {pruned}")


def test_quartic_refutation():
    start = time.perf_counter()
    sols = search_quartic(2000)
    elapsed = time.perf_counter() - start
    oracle = quartic_by_square_set(500)
    small = [s.as_tuple() for s in search_quartic(500)]
    ok = sols == [] and oracle == small == [] and elapsed < QUARTIC_LIMIT_S
    record("quartic refutation", ok,
           f"{len(sols)} solutions for z<=2000 in {elapsed:.2f}s "
           f"(limit {QUARTIC_LIMIT_S:.0f}s); square-set oracle to 500 agrees")


def test_mantissa_sweep():
    start = time.perf_counter()
    report = verify_no_mono_smooth_triple(PrimeBasis((2, 3, 5)), 10**5, WEAK)
    elapsed = time.perf_counter() - start
    ok = report.violations == [] and report.triples_examined > 0 and elapsed < SWEEP_LIMIT_S
    record("mantissa sweep", ok,
           f"{len(report.violations)} violations in {report.triples_examined} triples, "
           f"{elapsed:.3f}s (limit {SWEEP_LIMIT_S:.0f}s)")


def test_euclid_witnesses():
    rng = random.Random(20211)
    small = primes_below(100)
    failures = []
    for _ in range(20):
        basis = PrimeBasis.of(rng.sample(small, rng.randint(1, 10)))
        w = euclid_witness(basis).witness
        minimal = all(_smooth(m, basis) for m in range(1, w)) and not _smooth(w, basis)
        if not (is_prime(w) and w not in basis and minimal):
            failures.append((basis.primes, w))
    record("Euclid witnesses", not failures,
           f"20 random bases from primes < 100, failures: {failures}")


def _smooth(m, basis):
    try:
        factor_over_basis(m, basis)
    except NotSmooth:
        return False
    return True


def test_parametrization_round_trip():
    triples = primitive_triples(10**4)
    bad = [tr for tr in triples if parametrize(tr.p, tr.q, tr.r) != tr.generators]
    record("parametrization round trip", not bad and len(triples) > 0,
           f"{len(triples)} primitive triples with r <= 10^4, {len(bad)} mismatches")


def _rules(t):
    rules = [("const", constant_rule)]
    if t >= 2:
        rules.append(("parity", parity_rule))
    rules += [(f"mod{k}", residue_rule(k)) for k in range(1, t + 1)]
    return rules


def test_selector():
    checked, problems = 0, []
    for t in (1, 2, 3, 4):
        for mode in (STRONG, WEAK):
            cap = default_horizon(t, mode)
            for name, rule in _rules(t):
                triple = guaranteed_triple(rule, t, mode)
                a, b, c = triple.a, triple.b, triple.c
                valid = (a + b == c and (a < b if mode is WEAK else a <= b)
                         and rule(a) == rule(b) == rule(c) == triple.color
                         and 0 <= triple.color < t)
                checked += 1
                if not valid or c > cap:
                    problems.append((t, mode.value, name, (a, b, c), cap))
    record("selector", not problems,
           f"{checked} (t, mode, rule) runs, all within certified horizons; problems: {problems}")


SCHUR_RUNS = [(t, "strong") for t in (1, 2, 3, 4)] + [(t, "weak") for t in (1, 2, 3)]


@pytest.fixture(scope="module")
def cli_certificates(tmp_path_factory):
    folder = tmp_path_factory.mktemp("certs")
    docs = {}
    for t, mode in SCHUR_RUNS:
        assert main(["schur", "--colors", str(t), "--mode", mode,
                     "--output-dir", str(folder)]) == 0
        path = folder / f"schur_t{t}_{mode}.json"
        (folder / "schur.json").rename(path)
        docs[path.name] = path
    others = [
        ["sweep-quartic", "--zmax", "300"],
        ["sweep-triples", "--basis", "2,3,5", "--bound", "100000"],
        ["sweep-triples", "--basis", "2,3", "--bound", "3000", "--mode", "strong"],
        ["demo", "--basis", "2,3,5,7", "--bound", "1000"],
        ["witness", "--basis", "2,3,7"],
        ["decompose", "--m", "31104", "--basis", "2,3"],
        ["select", "--rule", "mod3", "--colors", "3", "--mode", "weak"],
    ]
    for i, argv in enumerate(others):
        assert main(argv + ["--output-dir", str(folder)]) == 0
        path = folder / f"{argv[0]}.json"
        target = folder / f"{i}_{argv[0]}.json"
        path.rename(target)
        docs[target.name] = target
    return docs


def _witness_span(data: bytes):
    start = data.index(b'"witness_colors"')
    lo = data.index(b"[", start)
    hi = data.index(b"]", lo)
    return lo + 1, hi


def test_certificate_integrity(cli_certificates, capsys):
    failures = []
    for name, path in cli_certificates.items():
        code = main(["verify", "--certificate", str(path)])
        if code != 0:
            failures.append(f"{name} rejected")
    capsys.readouterr()
    mutations = survived = 0
    for name, path in cli_certificates.items():
        data = path.read_bytes()
        if b'"witness_colors"' not in data:
            continue
        lo, hi = _witness_span(data)
        for pos in range(lo, hi):
            if data[pos : pos + 1].isspace():
                continue
            for value in range(256):
                if value == data[pos]:
                    continue
                mutated = data[:pos] + bytes([value]) + data[pos + 1 :]
                mutations += 1
                try:
                    verify_bytes(mutated)
                except VerificationError:
                    continue
                survived += 1
                failures.append(f"{name}: byte {pos} -> {value} accepted")
    ok = not failures and mutations > 0
    record("certificate integrity", ok,
           f"{len(cli_certificates)} CLI certificates verified; {mutations} single-byte "
           f"witness mutations, {survived} accepted; {failures[:3]}")


def test_cli_certificates_are_exact(cli_certificates):
    doc = json.loads(cli_certificates["schur_t4_strong.json"].read_text())
    assert doc["s_value"] == 44 and doc["searched_through"] == 45
