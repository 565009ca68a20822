"""Colorability, the KS property, parity, and criticality.

A valuation assigns 0/1 to every projector so that each complete context
contains exactly one 1 and (in full mode) no two orthogonal projectors are
both 1.  The search is complete: exhaustive backtracking over contexts with
unit propagation, so absence of a witness is a proof of uncolorability.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import NotKSError
from .model import KSSet, ensure_valid, orthogonality_graph


class Mode(str, Enum):
    """Which at-most-one constraints apply besides one-1-per-context."""

    FULL = "full"          # every orthogonal pair excludes a double 1
    CONTEXT_ONLY = "context"  # only pairs sharing a context exclude it

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


def _natural_key(pid: str):
    return tuple(
        int(part) if part.isdigit() else part
        for part in re.split(r"(\d+)", pid)
        if part
    )


@dataclass(frozen=True)
class Assignment:
    """A 0/1 valuation of projector ids."""

    values: dict[str, int]

    def ones(self) -> list[str]:
        return sorted((p for p, v in self.values.items() if v), key=_natural_key)

    def lines(self) -> str:
        return "\n".join(
            f"{pid}={self.values[pid]}"
            for pid in sorted(self.values, key=_natural_key)
        )


@dataclass
class _Problem:
    ids: list[str]
    index: dict[str, int]
    ctx_masks: list[int]
    mode: Mode
    full_orth: list[int] | None

    def orth_for(self, active: list[int]) -> list[int]:
        """At-most-one masks valid for the given active contexts.  Full-mode
        masks are geometric and context-independent; context-mode masks come
        only from co-membership in an active context."""
        if self.mode is Mode.FULL:
            assert self.full_orth is not None
            return self.full_orth
        orth = [0] * len(self.ids)
        for ci in active:
            cm = self.ctx_masks[ci]
            rest = cm
            while rest:
                bit = rest & -rest
                rest ^= bit
                orth[bit.bit_length() - 1] |= cm & ~bit
        return orth


def _compile(s: KSSet, mode: Mode) -> _Problem:
    ensure_valid(s)
    ids = list(s.projectors)
    index = {pid: i for i, pid in enumerate(ids)}
    ctx_masks = []
    for ctx in s.contexts:
        m = 0
        for pid in ctx:
            m |= 1 << index[pid]
        ctx_masks.append(m)
    full_orth = None
    if mode is Mode.FULL:
        graph = orthogonality_graph(s)
        full_orth = [0] * len(ids)
        for pid, nbrs in graph.items():
            m = 0
            for q in nbrs:
                m |= 1 << index[q]
            full_orth[index[pid]] = m
    return _Problem(ids, index, ctx_masks, mode, full_orth)


def _solve(problem: _Problem, active: list[int], allowed: int) -> int | None:
    """Return a bitmask of projectors valued 1, or None when uncolorable.

    Branches on the unsatisfied context with the fewest undecided members
    (ties to the lowest context index); members are tried in ascending
    projector index, so results are deterministic.
    """
    ctx_masks = problem.ctx_masks
    orth = problem.orth_for(active)

    def propagate(ones: int, zeros: int, pending: list[int]):
        while True:
            while pending:
                v = pending.pop()
                block = orth[v]
                if block & ones:
                    return None
                zeros |= block
            if ones & zeros:
                return None
            for ci in active:
                m = ctx_masks[ci]
                if m & ones:
                    continue
                und = m & ~zeros
                if und == 0:
                    return None
                if und & (und - 1) == 0:
                    ones |= und
                    pending.append(und.bit_length() - 1)
            if not pending:
                return ones, zeros

    def search(ones: int, zeros: int) -> int | None:
        best_und = 0
        best_count = 1 << 62
        for ci in active:
            m = ctx_masks[ci]
            if m & ones:
                continue
            und = m & ~zeros
            count = und.bit_count()
            if count == 0:
                return None
            if count < best_count:
                best_count = count
                best_und = und
        if not best_und:
            return ones
        rest = best_und
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            state = propagate(ones | bit, zeros, [v])
            if state is not None:
                result = search(*state)
                if result is not None:
                    return result
        return None

    state = propagate(0, ~allowed, [])
    if state is None:
        return None
    return search(*state)


def _check(s: KSSet, asg: Assignment, mode: Mode) -> bool:
    """Independent validity re-check of an assignment against the mode rules."""
    for ctx in s.contexts:
        if sum(asg.values[pid] for pid in ctx) != 1:
            return False
    ones = [pid for pid, v in asg.values.items() if v]
    if mode is Mode.FULL:
        graph = orthogonality_graph(s)
        for i, p in enumerate(ones):
            for q in ones[i + 1:]:
                if q in graph[p]:
                    return False
    else:
        members: dict[str, set[int]] = {}
        for ci, ctx in enumerate(s.contexts):
            for pid in ctx:
                members.setdefault(pid, set()).add(ci)
        for i, p in enumerate(ones):
            for q in ones[i + 1:]:
                if members.get(p, set()) & members.get(q, set()):
                    return False
    return True


def find_assignment(s: KSSet, mode: Mode = Mode.FULL) -> Assignment | None:
    """A valid 0/1 assignment for the given mode, or None when none exists."""
    problem = _compile(s, mode)
    mask = _solve(problem, list(range(len(problem.ctx_masks))),
                  (1 << len(problem.ids)) - 1)
    if mask is None:
        return None
    values = {pid: 1 if mask >> i & 1 else 0 for i, pid in enumerate(problem.ids)}
    asg = Assignment(values)
    assert _check(s, asg, mode), "search returned an invalid assignment"
    return asg


def is_ks(s: KSSet) -> bool:
    """True when no valid assignment exists under the full orthogonality rules."""
    return find_assignment(s, Mode.FULL) is None


def is_parity(s: KSSet) -> bool:
    """True when every projector multiplicity is even and the context count
    is odd, which forbids a valid assignment by counting alone."""
    ensure_valid(s)
    if s.n_contexts % 2 == 0:
        return False
    return all(m % 2 == 0 for m in s.multiplicities().values())


@dataclass
class CriticalityReport:
    """Per-context removal outcomes: a witness assignment or None."""

    mode: Mode
    removals: list[Assignment | None]

    @property
    def overall(self) -> bool:
        return all(w is not None for w in self.removals)

    @property
    def n_colorable(self) -> int:
        return sum(1 for w in self.removals if w is not None)


def is_critical(s: KSSet, mode: Mode = Mode.FULL) -> CriticalityReport:
    """Remove each context in turn, restrict to the projectors still used,
    and search for a witness; overall-critical iff every removal has one."""
    ensure_valid(s)
    if find_assignment(s, mode) is not None:
        raise NotKSError("set is colorable; criticality undefined")
    problem = _compile(s, mode)
    n_ctx = len(problem.ctx_masks)
    removals: list[Assignment | None] = []
    for removed in range(n_ctx):
        active = [ci for ci in range(n_ctx) if ci != removed]
        allowed = 0
        for ci in active:
            allowed |= problem.ctx_masks[ci]
        mask = _solve(problem, active, allowed)
        if mask is None:
            removals.append(None)
            continue
        values = {
            problem.ids[i]: 1 if mask >> i & 1 else 0
            for i in range(len(problem.ids))
            if allowed >> i & 1
        }
        removals.append(Assignment(values))
    return CriticalityReport(mode, removals)


def export_cnf(s: KSSet, mode: Mode = Mode.FULL) -> str:
    """DIMACS CNF whose models are exactly the valid assignments.

    Variable i is the i-th projector in file order.  One positive clause per
    context; one binary negative clause per at-most-one pair (context
    internal pairs in context mode, all orthogonality edges in full mode).
    """
    problem = _compile(s, mode)
    n = len(problem.ids)
    pairs: set[tuple[int, int]] = set()
    if mode is Mode.FULL:
        graph = orthogonality_graph(s)
        for pid, nbrs in graph.items():
            i = problem.index[pid]
            for q in nbrs:
                j = problem.index[q]
                if i < j:
                    pairs.add((i, j))
    else:
        for ctx in s.contexts:
            idxs = sorted(problem.index[pid] for pid in ctx)
            for a in range(len(idxs)):
                for b in range(a + 1, len(idxs)):
                    pairs.add((idxs[a], idxs[b]))
    lines = []
    for i, pid in enumerate(problem.ids):
        lines.append(f"c var {i + 1} = projector {pid}")
    lines.append(f"p cnf {n} {len(s.contexts) + len(pairs)}")
    for ctx in s.contexts:
        lits = " ".join(str(problem.index[pid] + 1) for pid in ctx)
        lines.append(f"{lits} 0")
    for i, j in sorted(pairs):
        lines.append(f"-{i + 1} -{j + 1} 0")
    return "\n".join(lines) + "\n"
