"""Search-engine tests: soundness against the mode rules, completeness
against exhaustive enumeration, parity, criticality and the CNF export."""

from __future__ import annotations

import pytest

from conftest import basis_set, make_ray
from ksets.errors import NotKSError
from ksets.model import KSSet, Projector
from ksets.verify import (
    Mode,
    export_cnf,
    find_assignment,
    is_critical,
    is_ks,
    is_parity,
)
from oracles import brute_force_witness, naive_cnf_satisfiable


def drop_context(s: KSSet, index: int) -> KSSet:
    contexts = [c for i, c in enumerate(s.contexts) if i != index]
    used = {pid for c in contexts for pid in c}
    projs = {pid: p for pid, p in s.projectors.items() if pid in used}
    return KSSet(s.dimension, projs, contexts, name=s.name)


def two_context_toy() -> KSSet:
    # colorable: two interlocking bases of dimension 3
    projs = {
        "1": Projector((make_ray(1, 0, 0),)),
        "2": Projector((make_ray(0, 1, 0),)),
        "3": Projector((make_ray(0, 0, 1),)),
        "4": Projector((make_ray(0, 1, 1),)),
        "5": Projector((make_ray(0, 1, -1),)),
    }
    return KSSet(3, projs, [("1", "2", "3"), ("1", "4", "5")])


def test_single_context_witness():
    s = basis_set(3)
    for mode in Mode:
        asg = find_assignment(s, mode)
        assert asg is not None
        assert sum(asg.values.values()) == 1


def test_witness_on_toy():
    s = two_context_toy()
    asg = find_assignment(s, Mode.FULL)
    assert asg is not None
    assert asg.values["1"] == 1  # the only ray all contexts share


def test_18_9_uncolorable_in_both_modes(s18):
    assert find_assignment(s18, Mode.FULL) is None
    assert find_assignment(s18, Mode.CONTEXT_ONLY) is None


def test_18_9_removal_has_witness(s18):
    sub = drop_context(s18, 0)  # context {1, 2, 17, 18}
    asg = find_assignment(sub, Mode.FULL)
    assert asg is not None
    # confirmed independently by exhaustive enumeration over all 2^18
    # valuations (see test_agrees_with_brute_force_on_removals)


def test_is_ks(s18, s21):
    assert is_ks(s18)
    assert is_ks(s21)
    assert not is_ks(basis_set(4))


def test_is_parity(s18, s21):
    assert is_parity(s18)
    assert is_parity(s21)
    assert not is_parity(basis_set(3))


def test_parity_fails_after_removal(s18):
    assert not is_parity(drop_context(s18, 0))


def test_parity_of_29_16():
    from ksets import catalog

    assert not is_parity(catalog.seed_set("d5-29-16"))  # 16 contexts is even


def test_is_critical_18_9(s18):
    report = is_critical(s18)
    assert report.overall
    assert report.n_colorable == 9
    for removed, witness in enumerate(report.removals):
        assert witness is not None
        for i, ctx in enumerate(s18.contexts):
            if i != removed:
                assert sum(witness.values[pid] for pid in ctx) == 1


def test_is_critical_rejects_colorable():
    with pytest.raises(NotKSError):
        is_critical(basis_set(3))


def test_criticality_context_mode_drops_removed_constraints():
    # removing a context must also remove the exclusions it contributed in
    # context-only mode
    from ksets import catalog

    s = catalog.seed_set("d3-49-36")
    assert is_critical(s, Mode.CONTEXT_ONLY).overall
    assert not is_critical(s, Mode.FULL).overall


def test_mode_monotonicity(s18):
    # a full-mode witness satisfies the context-only rules as well
    for removed in range(s18.n_contexts):
        sub = drop_context(s18, removed)
        full = find_assignment(sub, Mode.FULL)
        ctx = find_assignment(sub, Mode.CONTEXT_ONLY)
        assert full is not None and ctx is not None


def test_witness_serialization_is_sorted(s18):
    sub = drop_context(s18, 0)
    asg = find_assignment(sub, Mode.FULL)
    lines = asg.lines().splitlines()
    assert len(lines) == 18
    ids = [line.split("=")[0] for line in lines]
    assert ids == [str(i) for i in range(1, 19)]


def test_agrees_with_brute_force_on_toys():
    for s in (basis_set(2), basis_set(3), two_context_toy()):
        for mode in Mode:
            ours = find_assignment(s, mode)
            brute = brute_force_witness(s, mode)
            assert (ours is None) == (brute is None)


def test_agrees_with_brute_force_on_18_9(s18):
    for mode in Mode:
        assert brute_force_witness(s18, mode) is None
        assert find_assignment(s18, mode) is None


def test_agrees_with_brute_force_on_removals(s18):
    for removed in (0, 4):
        ours = find_assignment(drop_context(s18, removed), Mode.FULL)
        brute = brute_force_witness(s18, Mode.FULL, removed=removed)
        assert ours is not None and brute is not None


def test_cnf_shape_18_9(s18):
    text = export_cnf(s18, Mode.FULL)
    lines = [l for l in text.splitlines() if not l.startswith("c")]
    header = lines[0].split()
    assert header == ["p", "cnf", "18", "72"]  # 9 contexts + 63 edges
    positive = [l for l in lines[1:] if not l.startswith("-")]
    assert len(positive) == 9
    assert all(len(l.split()) == 5 for l in positive)  # 4 literals + 0


def test_cnf_single_context_d2():
    text = export_cnf(basis_set(2), Mode.FULL)
    lines = [l for l in text.splitlines() if not l.startswith("c")]
    assert lines == ["p cnf 2 2", "1 2 0", "-1 -2 0"]


def test_cnf_context_mode_counts(s18):
    text = export_cnf(s18, Mode.CONTEXT_ONLY)
    lines = [l for l in text.splitlines() if not l.startswith("c")]
    assert lines[0] == "p cnf 18 63"  # 9 contexts + 54 co-context pairs


def test_cnf_agrees_with_enumerator(s18):
    assert not naive_cnf_satisfiable(export_cnf(s18, Mode.FULL))
    assert naive_cnf_satisfiable(export_cnf(basis_set(3), Mode.FULL))
    assert naive_cnf_satisfiable(export_cnf(two_context_toy(), Mode.FULL))
    assert not naive_cnf_satisfiable(export_cnf(s18, Mode.CONTEXT_ONLY))


def test_cnf_variable_order_matches_file_order(s18):
    text = export_cnf(s18, Mode.FULL)
    comments = [l for l in text.splitlines() if l.startswith("c var")]
    assert comments[0] == "c var 1 = projector 1"
    assert comments[17] == "c var 18 = projector 18"
