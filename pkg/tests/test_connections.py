import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_closure import (
    ArityMismatchError,
    CapExceededError,
    ClosureSpace,
    NotAnAdjunctionError,
    PointMap,
    PreconditionError,
    Qoset,
    Witness,
    adjoint_properties_report,
    alexandrov_closure,
    check_t1_corollary,
    continuity_witness,
    enumerate_qosets,
    induced_preimage_connection,
    is_closure_galois_direct,
    is_closure_galois_via_qoset,
    is_continuous,
    is_qoset_galois,
    is_t1,
    left_adjoint,
    qoset_galois_witness,
    random_closure_space,
    random_map,
    right_adjoint,
    specialization_order,
    verify_theorem,
)
from galois_closure.enumeration import all_maps

import oracles

P4, P2 = Qoset.chain(4), Qoset.chain(2)
E4, E2 = alexandrov_closure(P4), alexandrov_closure(P2)
HALVE = PointMap(4, 2, [0, 0, 1, 1])
DOUBLE_PLUS_ONE = PointMap(2, 4, [1, 3])
CONST0_PHI = PointMap.constant(4, 2, 0)
CONST0_PSI = PointMap.constant(2, 4, 0)
SWAP = PointMap(2, 2, [1, 0])


def space(n, *sets):
    return ClosureSpace.from_sets(n, sets)


# --------------------------------------------------------------------------
# continuity


@pytest.mark.parametrize("s", [E4, E2, ClosureSpace.discrete(3), ClosureSpace.indiscrete(2), space(3, 0b001, 0b111)])
def test_identity_is_continuous(s):
    assert is_continuous(PointMap.identity(s.n), s, s, exhaustive=True)


def test_maps_into_indiscrete_are_continuous():
    src = space(3, 0b001, 0b111)
    dst = ClosureSpace.indiscrete(2)
    for f in all_maps(3, 2):
        assert is_continuous(f, src, dst, exhaustive=True)


def test_swap_is_not_continuous():
    s = space(2, 0b00, 0b01, 0b11)
    assert not is_continuous(SWAP, s, s, exhaustive=True)
    assert continuity_witness(SWAP, s, s) == 0b01


def test_continuity_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        is_continuous(HALVE, E2, E4)


# --------------------------------------------------------------------------
# quasiorder adjunctions


def test_qoset_galois_examples():
    assert is_qoset_galois(PointMap.identity(4), PointMap.identity(4), P4, P4)
    assert is_qoset_galois(HALVE, DOUBLE_PLUS_ONE, P4, P2)
    assert not is_qoset_galois(HALVE, CONST0_PSI, P4, P2)
    assert qoset_galois_witness(HALVE, CONST0_PSI, P4, P2) == (1, 0)


def test_qoset_galois_matches_oracle():
    rel4, rel2 = set(P4.pairs()), set(P2.pairs())
    for phi in all_maps(4, 2):
        for psi in all_maps(2, 4):
            expected = oracles.galois_qoset(phi.image, psi.image, rel4, rel2, 4, 2)
            assert is_qoset_galois(phi, psi, P4, P2) == expected


def test_qoset_galois_arity():
    with pytest.raises(ArityMismatchError):
        is_qoset_galois(HALVE, HALVE, P4, P2)


# --------------------------------------------------------------------------
# the three characterizations


def test_direct_examples():
    assert is_closure_galois_direct(PointMap.identity(4), PointMap.identity(4), E4, E4)
    assert is_closure_galois_direct(HALVE, DOUBLE_PLUS_ONE, E4, E2)
    assert not is_closure_galois_direct(CONST0_PHI, CONST0_PSI, E4, E2)
    verdict = verify_theorem(CONST0_PHI, CONST0_PSI, E4, E2)
    assert verdict.witnesses["direct"] == Witness("subset", (0b01,))


def test_direct_single_subset_by_hand():
    # A' = {1}: phi^-1(down{1}) is everything, and so is down{psi(1)} = down{3}
    ap = 0b10
    assert HALVE.preimage_of(E2.closure_mask(ap)) == 0b1111
    assert E4.closure_mask(DOUBLE_PLUS_ONE.image_of(ap)) == 0b1111


def test_direct_cap():
    with pytest.raises(CapExceededError):
        is_closure_galois_direct(HALVE, DOUBLE_PLUS_ONE, E4, E2, cap=1)
    verdict = verify_theorem(HALVE, DOUBLE_PLUS_ONE, E4, E2, cap=1)
    assert verdict.cond_direct is None and verdict.agree and verdict.holds


def test_via_qoset_examples():
    assert is_closure_galois_via_qoset(PointMap.identity(4), PointMap.identity(4), E4, E4)
    assert is_closure_galois_via_qoset(HALVE, DOUBLE_PLUS_ONE, E4, E2)
    assert not is_closure_galois_via_qoset(CONST0_PHI, CONST0_PSI, E4, E2)


def test_continuous_pair_that_is_not_adjoint():
    ident, top = PointMap.identity(2), PointMap.constant(2, 2, 1)
    assert is_continuous(ident, E2, E2) and is_continuous(top, E2, E2)
    assert not is_closure_galois_via_qoset(ident, top, E2, E2)
    assert verify_theorem(ident, top, E2, E2).witnesses["qoset"] == Witness("pair", (1, 0))


def test_induced_examples():
    assert induced_preimage_connection(PointMap.identity(4), PointMap.identity(4), E4, E4)
    assert induced_preimage_connection(HALVE, DOUBLE_PLUS_ONE, E4, E2)
    s = space(2, 0b00, 0b01, 0b11)
    assert not induced_preimage_connection(SWAP, SWAP, s, s)
    w = verify_theorem(SWAP, SWAP, s, s).witnesses["induced"]
    assert w == Witness("continuity", ("phi", 0b01))


def test_induced_checks_all_closed_pairs():
    # 5 closed sets on the 4-chain times 3 on the 2-chain
    assert len(E4.closed) * len(E2.closed) == 15
    for f in E4.closed:
        for g in E2.closed:
            lhs = HALVE.preimage_of(g) & ~f == 0
            rhs = g & ~DOUBLE_PLUS_ONE.preimage_of(f) == 0
            assert lhs == rhs


def test_verify_theorem_examples():
    v = verify_theorem(HALVE, DOUBLE_PLUS_ONE, E4, E2)
    assert (v.cond_direct, v.cond_qoset_plus_continuity, v.cond_induced_on_closed_sets) == (True, True, True)
    assert v.witnesses == {}
    v = verify_theorem(CONST0_PHI, CONST0_PSI, E4, E2)
    assert (v.cond_direct, v.cond_qoset_plus_continuity, v.cond_induced_on_closed_sets) == (False, False, False)
    assert set(v.witnesses) == {"direct", "qoset", "induced"}
    v = verify_theorem(PointMap.identity(4), PointMap.identity(4), E4, E4)
    assert v.flags() == {"direct": True, "qoset": True, "induced": True}


def test_verify_theorem_arity():
    with pytest.raises(ArityMismatchError):
        verify_theorem(HALVE, DOUBLE_PLUS_ONE, E2, E4)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2**64 - 1), st.integers(0, 2**64 - 1),
       st.integers(0, 2**64 - 1), st.booleans())
def test_three_conditions_agree_on_random_inputs(n, n_prime, seed, seed_p, seed_map, adjoint):
    if (n == 0) != (n_prime == 0):
        return
    e, ep = random_closure_space(n, seed), random_closure_space(n_prime, seed_p)
    phi = random_map(n, n_prime, seed_map)
    psi = None
    if adjoint:
        psi = right_adjoint(phi, specialization_order(e), specialization_order(ep))
    if psi is None:
        psi = random_map(n_prime, n, seed_map ^ 0x5555)
    v = verify_theorem(phi, psi, e, ep)
    assert v.agree
    expected = oracles.galois_direct(
        phi.image, psi.image, n, oracles.to_sets(n, e.closed), n_prime, oracles.to_sets(n_prime, ep.closed)
    )
    assert v.cond_direct == expected


# --------------------------------------------------------------------------
# adjunction properties


def test_adjoint_report_chain():
    r = adjoint_properties_report(HALVE, DOUBLE_PLUS_ONE, P4, P2)
    assert r.all_hold
    assert DOUBLE_PLUS_ONE(HALVE(3)) == 3


def test_adjoint_report_identity():
    r = adjoint_properties_report(PointMap.identity(3), PointMap.identity(3), Qoset.chain(3), Qoset.chain(3))
    assert r.all_hold
    assert r.details["unit_identity"] and r.details["counit_identity"]


def test_adjoint_report_constant_pair():
    phi, psi = PointMap.constant(2, 2, 0), PointMap.constant(2, 2, 1)
    r = adjoint_properties_report(phi, psi, P2, P2)
    assert r.unit and r.counit and r.all_hold
    assert not r.details["phi_injective"]
    assert not r.details["unit_identity"]
    assert psi(phi(0)) == 1


def test_adjoint_report_rejects_non_adjunction():
    with pytest.raises(NotAnAdjunctionError):
        adjoint_properties_report(HALVE, CONST0_PSI, P4, P2)


def test_adjoint_report_on_quasiorder_uses_equivalence():
    # two equivalent points onto one: phi is not injective but is so up to equivalence
    p = Qoset.from_relation(2, [(0, 1), (1, 0)])
    pp = Qoset.equality(1)
    phi, psi = PointMap.constant(2, 1, 0), PointMap(1, 2, [0])
    r = adjoint_properties_report(phi, psi, p, pp)
    assert r.all_hold
    assert r.details["phi_injective"] and r.details["unit_identity"]


# --------------------------------------------------------------------------
# synthesis


def test_right_adjoint_examples():
    assert right_adjoint(HALVE, P4, P2) == DOUBLE_PLUS_ONE
    assert right_adjoint(PointMap.identity(3), Qoset.chain(3), Qoset.chain(3)) == PointMap.identity(3)
    assert right_adjoint(SWAP, P2, P2) is None
    assert not any(is_qoset_galois(SWAP, psi, P2, P2) for psi in all_maps(2, 2))


def test_left_adjoint_examples():
    assert left_adjoint(DOUBLE_PLUS_ONE, P4, P2) == HALVE
    assert left_adjoint(PointMap.identity(3), Qoset.chain(3), Qoset.chain(3)) == PointMap.identity(3)
    bottom = PointMap.constant(2, 2, 0)
    assert left_adjoint(bottom, P2, P2) is None
    assert not any(is_qoset_galois(phi, bottom, P2, P2) for phi in all_maps(2, 2))


def test_synthesis_picks_smallest_index_among_equivalents():
    p = Qoset.from_relation(2, [(0, 1), (1, 0)])
    pp = Qoset.equality(1)
    assert right_adjoint(PointMap.constant(2, 1, 0), p, pp) == PointMap(1, 2, [0])


def test_adjoints_unique_up_to_equivalence():
    for n, n_prime in itertools.product(range(3), repeat=2):
        for p in enumerate_qosets(n):
            for pp in enumerate_qosets(n_prime):
                for phi in all_maps(n, n_prime):
                    psis = [psi for psi in all_maps(n_prime, n) if is_qoset_galois(phi, psi, p, pp)]
                    for a, b in itertools.combinations(psis, 2):
                        assert all(p.equivalent(a(x), b(x)) for x in range(n_prime))
                        if p.n and all(p.down[x] & p.up[x] == 1 << x for x in range(n)):
                            assert a == b


# --------------------------------------------------------------------------
# T1


def test_is_t1_examples():
    assert is_t1(ClosureSpace.discrete(2))
    assert not is_t1(space(2, 0b00, 0b01, 0b11))
    assert is_t1(ClosureSpace.discrete(0))
    # singletons closed but not discrete
    assert is_t1(space(3, 0b000, 0b001, 0b010, 0b100, 0b111))


def test_t1_corollary_examples():
    d = ClosureSpace.discrete(2)
    assert check_t1_corollary(PointMap.identity(2), PointMap.identity(2), d, d)
    assert check_t1_corollary(SWAP, SWAP, d, d)
    assert is_closure_galois_via_qoset(SWAP, SWAP, d, d)
    c0 = PointMap.constant(2, 2, 0)
    assert check_t1_corollary(c0, c0, d, d)
    assert not is_closure_galois_via_qoset(c0, c0, d, d)


def test_t1_corollary_precondition():
    with pytest.raises(PreconditionError):
        check_t1_corollary(PointMap.identity(2), PointMap.identity(2), E2, E2)


# --------------------------------------------------------------------------
# PointMap


def test_point_map_validation():
    with pytest.raises(ArityMismatchError):
        PointMap(2, 2, [0])
    with pytest.raises(ArityMismatchError):
        PointMap(2, 2, [0, 2])
    assert HALVE.then(DOUBLE_PLUS_ONE).image == (1, 1, 3, 3)
    assert SWAP.is_injective() and SWAP.is_surjective()
    assert not HALVE.is_injective() and HALVE.is_surjective()
