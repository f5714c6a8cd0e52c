"""Acceptance criteria P1-P10, each at its stated size with zero tolerance.

Every test records one PASS/FAIL line, collected in the terminal summary.
"""

import itertools
import math
import subprocess
import sys
from pathlib import Path

from galois_closure import (
    ClosureSpace,
    adjoint_properties_report,
    alexandrov_closure,
    check_t1_corollary,
    closure_table,
    enumerate_galois_connections,
    enumerate_moore_families,
    enumerate_qosets,
    is_closure_galois_direct,
    is_poset,
    is_qoset_galois,
    is_t1,
    left_adjoint,
    moore_family_from_table,
    right_adjoint,
    specialization_order,
    verify_theorem,
)
from galois_closure.connections import continuity_witness, image_continuity_witness
from galois_closure.enumeration import all_maps
from galois_closure.rng import SplitMix64

import oracles

FAMILIES = {n: list(enumerate_moore_families(n)) for n in range(4)}
SPACES = {n: [ClosureSpace(f) for f in fams] for n, fams in FAMILIES.items()}
QOSETS = {n: list(enumerate_qosets(n)) for n in range(5)}
MAPS = {(n, m): list(all_maps(n, m)) for n in range(4) for m in range(4)}
SAMPLE_SEED = 0x5EED_CAFE


def spaces_upto(k):
    return [s for n in range(k + 1) for s in SPACES[n]]


def qosets_upto(k):
    return [q for n in range(k + 1) for q in QOSETS[n]]


# --------------------------------------------------------------------------


def test_p1_theorem_equivalence(record):
    combos = disagreements = true_count = 0
    for e in SPACES[2]:
        for ep in SPACES[2]:
            for phi in MAPS[2, 2]:
                for psi in MAPS[2, 2]:
                    v = verify_theorem(phi, psi, e, ep)
                    combos += 1
                    true_count += bool(v.cond_direct)
                    if v.cond_direct is None or not v.agree:
                        disagreements += 1
    # every size combination up to 2, not only n = n' = 2
    small = 0
    for e in spaces_upto(2):
        for ep in spaces_upto(2):
            for phi in MAPS[e.n, ep.n]:
                for psi in MAPS[ep.n, e.n]:
                    small += 1
                    if not verify_theorem(phi, psi, e, ep).agree:
                        disagreements += 1

    rng = SplitMix64(SAMPLE_SEED)
    samples, sampled_true = 10_000, 0
    fams3 = SPACES[3]
    for k in range(samples):
        e, ep = fams3[rng.below(len(fams3))], fams3[rng.below(len(fams3))]
        phi = MAPS[3, 3][rng.below(27)]
        psi = None
        if k % 2:
            psi = right_adjoint(phi, specialization_order(e), specialization_order(ep))
        if psi is None:
            psi = MAPS[3, 3][rng.below(27)]
        v = verify_theorem(phi, psi, e, ep)
        sampled_true += bool(v.cond_direct)
        if v.cond_direct is None or not v.agree:
            disagreements += 1
    ok = combos == 784 and disagreements == 0
    record("P1", ok, f"{combos} exhaustive n=n'=2 combos ({true_count} connections), "
                     f"{small} combos n,n'<=2, {samples} sampled n=n'=3 ({sampled_true} connections); "
                     f"disagreements={disagreements}")
    assert ok


def test_p2_qoset_connections_are_closure_connections(record):
    checked = violations = 0
    for p in qosets_upto(3):
        e = alexandrov_closure(p)
        for pp in qosets_upto(3):
            ep = alexandrov_closure(pp)
            for phi in MAPS[p.n, pp.n]:
                for psi in MAPS[pp.n, p.n]:
                    if is_qoset_galois(phi, psi, p, pp):
                        checked += 1
                        if not is_closure_galois_direct(phi, psi, e, ep):
                            violations += 1
    ok = violations == 0 and checked > 0
    record("P2", ok, f"{checked} qoset connections over n,n'<=3; violations={violations}")
    assert ok


def test_p3_closure_connections_are_qoset_connections(record):
    checked = violations = 0
    for e in spaces_upto(2):
        p = specialization_order(e)
        for ep in spaces_upto(2):
            pp = specialization_order(ep)
            for phi in MAPS[e.n, ep.n]:
                for psi in MAPS[ep.n, e.n]:
                    if is_closure_galois_direct(phi, psi, e, ep):
                        checked += 1
                        if not is_qoset_galois(phi, psi, p, pp):
                            violations += 1
    ok = violations == 0 and checked > 0
    record("P3", ok, f"{checked} closure connections over n,n'<=2; violations={violations}")
    assert ok


def test_p4_continuity_criteria_agree(record):
    maps = disagreements = continuous = 0
    for e in spaces_upto(3):
        for ep in spaces_upto(3):
            for f in MAPS[e.n, ep.n]:
                maps += 1
                by_pre = continuity_witness(f, e, ep) is None
                by_img = image_continuity_witness(f, e, ep) is None
                continuous += by_pre
                disagreements += by_pre != by_img
    ok = disagreements == 0
    record("P4", ok, f"{maps} maps over n,n'<=3 ({continuous} continuous); disagreements={disagreements}")
    assert ok


def test_p5_adjoint_properties(record):
    connections = violations = poset_instances = 0
    for e in spaces_upto(3):
        p = specialization_order(e)
        for ep in spaces_upto(3):
            pp = specialization_order(ep)
            posets = is_poset(p) and is_poset(pp)
            for phi, psi in enumerate_galois_connections(e, ep):
                connections += 1
                r = adjoint_properties_report(phi, psi, p, pp)
                if not r.all_hold:
                    violations += 1
                if posets:
                    poset_instances += 1
                    exact_left = (
                        all(psi(phi(x)) == x for x in range(e.n))
                        == phi.is_injective() == psi.is_surjective()
                    )
                    exact_right = (
                        all(phi(psi(xp)) == xp for xp in range(ep.n))
                        == psi.is_injective() == phi.is_surjective()
                    )
                    violations += not (exact_left and exact_right)
    ok = violations == 0 and connections > 0
    record("P5", ok, f"{connections} connections over n,n'<=3 ({poset_instances} on posets); "
                     f"violations={violations}")
    assert ok


def test_p6_round_trips(record):
    qosets = failures = 0
    for q in qosets_upto(4):
        qosets += 1
        failures += specialization_order(alexandrov_closure(q)) != q
    fams = 0
    for n in range(4):
        for fam in FAMILIES[n]:
            fams += 1
            table = closure_table(ClosureSpace(fam))
            back = moore_family_from_table(table)
            failures += back != fam
            failures += closure_table(ClosureSpace(back)) != table
    ok = failures == 0 and qosets == 1 + 1 + 4 + 29 + 355
    record("P6", ok, f"{qosets} qosets n<=4, {fams} families n<=3; failures={failures}")
    assert ok


def test_p7_t1_corollary(record):
    t1 = [s for s in spaces_upto(3) if is_t1(s)]
    pairs = failures = 0
    for e in t1:
        for ep in t1:
            for phi in MAPS[e.n, ep.n]:
                for psi in MAPS[ep.n, e.n]:
                    pairs += 1
                    failures += not check_t1_corollary(phi, psi, e, ep)
    counts = []
    for k in (1, 2, 3):
        d = ClosureSpace.discrete(k)
        found = sum(1 for _ in enumerate_galois_connections(d, d))
        counts.append(found)
        failures += found != math.factorial(k)
    ok = failures == 0
    record("P7", ok, f"{len(t1)} T1 spaces, {pairs} map pairs; discrete connection counts {counts} "
                     f"(expected [1, 2, 6]); failures={failures}")
    assert ok


def test_p8_enumeration_counts(record):
    fam_counts, fam_oracle, q_counts, q_oracle = [], [], [], []
    agree = True
    for n in range(4):
        fams = FAMILIES[n]
        filtered = oracles.filter_moore_families(n)
        fam_counts.append(len(fams))
        fam_oracle.append(len(filtered))
        agree &= {frozenset(oracles.to_sets(n, f.closed)) for f in fams} == set(filtered)
        qs = QOSETS[n]
        qfiltered = oracles.filter_qosets(n)
        q_counts.append(len(qs))
        q_oracle.append(len(qfiltered))
        agree &= {frozenset(q.pairs()) for q in qs} == set(qfiltered)
    ok = (
        agree
        and fam_counts == fam_oracle == [1, 2, 7, 61]
        and q_counts == q_oracle == [1, 1, 4, 29]
    )
    record("P8", ok, f"families {fam_counts} (oracle {fam_oracle}), qosets {q_counts} "
                     f"(oracle {q_oracle}); sets agree={agree}")
    assert ok


def test_p9_adjoint_synthesis(record):
    cases = mismatches = found = 0
    for p in qosets_upto(3):
        for pp in qosets_upto(3):
            for phi in MAPS[p.n, pp.n]:
                cases += 1
                exists = any(is_qoset_galois(phi, psi, p, pp) for psi in MAPS[pp.n, p.n])
                psi = right_adjoint(phi, p, pp)
                found += psi is not None
                mismatches += exists != (psi is not None)
                if psi is not None and not is_qoset_galois(phi, psi, p, pp):
                    mismatches += 1
            for psi in MAPS[pp.n, p.n]:
                cases += 1
                exists = any(is_qoset_galois(phi, psi, p, pp) for phi in MAPS[p.n, pp.n])
                phi = left_adjoint(psi, p, pp)
                found += phi is not None
                mismatches += exists != (phi is not None)
                if phi is not None and not is_qoset_galois(phi, psi, p, pp):
                    mismatches += 1
    ok = mismatches == 0
    record("P9", ok, f"{cases} maps over qosets n,n'<=3 ({found} with adjoints); mismatches={mismatches}")
    assert ok


FIX = Path(__file__).parent / "fixtures"
CLI_CASES = {
    "chain_all": ["check", "chain4.json", "chain2.json", "halve.json", "double_plus_one.json", "--method", "all"],
    "const_all": ["check", "chain4.json", "chain2.json", "const0_phi.json", "const0_psi.json", "--method", "all"],
    "const_all_json": ["check", "chain4.json", "chain2.json", "const0_phi.json", "const0_psi.json",
                       "--method", "all", "--json"],
    "invalid_validate": ["validate", "invalid.json"],
    "invalid_strict": ["validate", "invalid.json", "--strict", "--json"],
    "swap_all": ["check", "discrete2.json", "discrete2.json", "swap.json", "swap.json", "--method", "all"],
    "chain_adjoint": ["adjoint", "chain4.json", "chain2.json", "halve.json", "--side", "right"],
    "swap_adjoint": ["adjoint", "chain2.json", "chain2.json", "swap_chain2.json", "--side", "right"],
    "lattice_discrete": ["derive", "discrete2.json", "--what", "lattice"],
    "spec_chain": ["derive", "chain_ab.json", "--what", "specialization"],
}


def test_p10_cli_fixtures(record):
    failures = []
    for name, args in CLI_CASES.items():
        expected_out = (FIX / "expected" / f"{name}.out").read_bytes()
        expected_code = int((FIX / "expected" / f"{name}.code").read_text())
        runs = [
            subprocess.run([sys.executable, "-m", "galois_closure", *args], cwd=FIX, capture_output=True)
            for _ in range(2)
        ]
        for proc in runs:
            if proc.returncode != expected_code or proc.stdout != expected_out:
                failures.append(name)
                break
    ok = not failures
    record("P10", ok, f"{len(CLI_CASES)} fixture commands, exit codes and byte-identical output over 2 runs; "
                      f"failures={failures}")
    assert ok
