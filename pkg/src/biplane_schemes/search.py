"""Exhaustive search for symmetric canonical biplane matrices with full trace.

The head rows and columns of a canonical matrix are forced, and so is
the diagonal once full trace is required, so the only freedom is the
upper triangle of the tail block. The search fills tail rows top to
bottom, mirroring every chosen bit across the diagonal immediately, and
prunes on:

  row_fill     a row cannot reach sum k with the positions left to it
  partial_dot  a partially filled row already meets some earlier row
               in 3 or more columns
  future_row   a later row's forced bits over- or undershoot what its
               remaining free positions can fix
  core_sum     a completed row inside the principal core block carries
               a core line sum other than 3

Any of the four can be disabled individually (the solution set never
changes, only the node count). Two further checks are correctness, not
pruning, and cannot be disabled: completed rows must sum to exactly k,
and every completed row pair must meet in exactly 2 columns. Emitted
solutions are re-verified through the independent biplane verifier;
disagreement raises SearchBugError.

The first tail row's completions partition the space into disjoint
subtrees, which gives the parallel mode (worker processes, merged
counters, canonically sorted solutions) and the checkpoint format (the
list of finished subtrees) for free.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .binmat import BinaryMatrix
from .biplane import (
    VerificationError,
    canonical_head,
    head_width,
    verify_biplane,
)

DISABLEABLE_RULES = ("row_fill", "partial_dot", "future_row", "core_sum")
_COUNTER_KEYS = DISABLEABLE_RULES + ("complete_dot",)

CHECKPOINT_SCHEMA = 1


class SearchBugError(RuntimeError):
    """An emitted solution failed independent re-verification."""


@dataclass(frozen=True)
class SearchConfig:
    k: int
    max_solutions: Optional[int] = None
    node_limit: Optional[int] = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError(f"search needs k >= 3, got {self.k}")
        if self.max_solutions is not None and self.max_solutions < 1:
            raise ValueError("max_solutions must be at least 1")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be at least 1")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


@dataclass(eq=False)
class SearchOutcome:
    k: int
    v: int
    solutions: tuple[BinaryMatrix, ...]
    exhausted: bool
    nodes_visited: int
    prunes_by_rule: dict
    elapsed_seconds: float

    def report(self, include_solutions: bool = True) -> dict:
        out = {
            "k": self.k,
            "v": self.v,
            "solution_count": len(self.solutions),
            "exhausted": self.exhausted,
            "nodes_visited": self.nodes_visited,
            "prunes_by_rule": dict(self.prunes_by_rule),
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }
        if include_solutions:
            out["solutions"] = [m.to_lists() for m in self.solutions]
        return out


class _Searcher:
    """Mutable depth-first state for one search (or one subtree of it)."""

    def __init__(self, k: int, disabled: frozenset[str]):
        self.k = k
        self.v = head_width(k)
        head = canonical_head(k)
        rows = list(head.bits)
        for i in range(k, self.v):
            prefix = 0
            for j in range(k):
                prefix |= ((head.bits[j] >> i) & 1) << j
            rows.append(prefix | (1 << i))
        self.rows = rows
        # bit p of colmask[c]: completed row p has a 1 in column c
        colmask = [0] * self.v
        for p in range(k):
            for c in range(self.v):
                if (head.bits[p] >> c) & 1:
                    colmask[c] |= 1 << p
        self.colmask = colmask
        # principal core line sums are only forced from k = 6 up
        core = range(k + 1, 3 * k - 5) if k >= 6 else range(0)
        self.core_rows = frozenset(core)
        self.core_mask = sum(1 << c for c in core)
        self.enabled = frozenset(DISABLEABLE_RULES) - disabled
        self.nodes = 0
        self.prunes = dict.fromkeys(_COUNTER_KEYS, 0)
        self.solutions: list[tuple[int, ...]] = []
        self.node_limit: Optional[int] = None
        self.max_solutions: Optional[int] = None
        self.stopped = False
        # branch collection: when set, completions of row branch_row are
        # appended here instead of being explored further
        self.branch_sink: Optional[list[int]] = None
        self.branch_row = k

    # -- bookkeeping ---------------------------------------------------------

    def _prune(self, rule: str) -> None:
        self.prunes[rule] += 1

    def _tick(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes >= self.node_limit:
            self.stopped = True
        return not self.stopped

    # -- depth-first fill ----------------------------------------------------

    def explore_row(self, i: int) -> None:
        if self.stopped:
            return
        if i == self.v:
            self._record_solution()
            return
        base = self.rows[i]
        need = self.k - base.bit_count()
        free = list(range(i + 1, self.v))
        if (need < 0 or need > len(free)) and "row_fill" in self.enabled:
            self._prune("row_fill")
            return
        dots = [(base & self.rows[p]).bit_count() for p in range(i)]
        if "partial_dot" in self.enabled and any(d > 2 for d in dots):
            self._prune("partial_dot")
            return
        self._fill(i, free, 0, need, dots)

    def _fill(self, i: int, free: list[int], idx: int, need: int,
              dots: list[int]) -> None:
        if not self._tick():
            return
        if need == 0:
            self._complete_row(i, dots)
            return
        remaining = len(free) - idx
        if remaining < need and "row_fill" in self.enabled:
            self._prune("row_fill")
            return
        if idx == len(free):
            return
        c = free[idx]

        # branch: entry (i, c) = 1, mirrored later at (c, i)
        over = False
        affected = self.colmask[c]
        mm = affected
        while mm:
            p = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            dots[p] += 1
            if dots[p] > 2:
                over = True
        if over and "partial_dot" in self.enabled:
            self._prune("partial_dot")
        else:
            self.rows[i] |= 1 << c
            self._fill(i, free, idx + 1, need - 1, dots)
            self.rows[i] &= ~(1 << c)
        mm = affected
        while mm:
            p = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            dots[p] -= 1
        if self.stopped:
            return

        # branch: entry (i, c) = 0
        self._fill(i, free, idx + 1, need, dots)

    def _complete_row(self, i: int, dots: list[int]) -> None:
        # correctness gates, never disabled
        if any(d != 2 for d in dots):
            self._prune("complete_dot")
            return
        if "future_row" in self.enabled:
            for r in range(i + 1, self.v):
                cur = self.rows[r].bit_count()
                # mirrors from rows i+1..r-1 plus r's own free positions
                if cur > self.k or cur + (r - 1 - i) + (self.v - 1 - r) < self.k:
                    self._prune("future_row")
                    return
        if (
            i in self.core_rows
            and "core_sum" in self.enabled
            and (self.rows[i] & self.core_mask).bit_count() != 3
        ):
            self._prune("core_sum")
            return

        if self.branch_sink is not None and i == self.branch_row:
            self.branch_sink.append(self.rows[i])
            return

        row_bits = self.rows[i]
        mirrored = [c for c in range(i + 1, self.v) if (row_bits >> c) & 1]
        for c in mirrored:
            self.rows[c] |= 1 << i
            self.colmask[c] |= 1 << i
        self.explore_row(i + 1)
        for c in mirrored:
            self.rows[c] &= ~(1 << i)
            self.colmask[c] &= ~(1 << i)

    def _record_solution(self) -> None:
        self.solutions.append(tuple(self.rows))
        if (
            self.max_solutions is not None
            and len(self.solutions) >= self.max_solutions
        ):
            self.stopped = True

    # -- branch plumbing -----------------------------------------------------

    def collect_branches(self) -> list[int]:
        """Enumerate completions of the first tail row without descending."""
        sink: list[int] = []
        self.branch_sink = sink
        self.explore_row(self.k)
        self.branch_sink = None
        return sink

    def apply_branch(self, branch_bits: int) -> None:
        """Fix the first tail row to an enumerated completion."""
        self.rows[self.k] = branch_bits
        for c in range(self.k + 1, self.v):
            if (branch_bits >> c) & 1:
                self.rows[c] |= 1 << self.k
                self.colmask[c] |= 1 << self.k


def _explore_branch(args: tuple[int, int, tuple[str, ...]]) -> tuple:
    """Worker entry: run one subtree to completion (no early stopping)."""
    k, branch_bits, disabled = args
    searcher = _Searcher(k, frozenset(disabled))
    searcher.apply_branch(branch_bits)
    searcher.explore_row(k + 1)
    return searcher.nodes, searcher.prunes, searcher.solutions


def _load_checkpoint(path: str, k: int, disabled: frozenset[str],
                     branches: list[int]) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        state = json.load(fh)
    if state.get("schema_version") != CHECKPOINT_SCHEMA:
        raise ValueError(f"unknown checkpoint schema in {path}")
    if state.get("k") != k or sorted(state.get("disabled_rules", [])) != sorted(disabled):
        raise ValueError(f"checkpoint {path} belongs to a different search")
    if state.get("branches") != branches:
        raise ValueError(f"checkpoint {path} branch list does not match this search")
    return state


def _write_checkpoint(path: str, state: dict) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def search_symmetric_canonical(
    cfg: SearchConfig,
    *,
    disabled_rules: frozenset[str] = frozenset(),
    checkpoint: Optional[str] = None,
) -> SearchOutcome:
    """Run the search described by cfg and return a verified outcome.

    disabled_rules may name any of DISABLEABLE_RULES; correctness
    checks stay on regardless. A node_limit or checkpoint forces
    sequential execution. With several threads, subtrees run in worker
    processes to completion, so max_solutions then truncates the merged
    result instead of stopping early; counters still add up to the
    sequential totals.

    exhausted is True only when every subtree ran to completion with no
    limit tripping.
    """
    unknown = set(disabled_rules) - set(DISABLEABLE_RULES)
    if unknown:
        raise ValueError(f"unknown pruning rules: {sorted(unknown)}")
    disabled = frozenset(disabled_rules)
    start = time.perf_counter()

    enumerator = _Searcher(cfg.k, disabled)
    enumerator.node_limit = cfg.node_limit
    branches = enumerator.collect_branches()
    nodes = enumerator.nodes
    prunes = dict(enumerator.prunes)
    enum_stopped = enumerator.stopped

    solutions: list[tuple[int, ...]] = []
    done: set[int] = set()
    state: Optional[dict] = None
    if checkpoint is not None and os.path.exists(checkpoint):
        state = _load_checkpoint(checkpoint, cfg.k, disabled, branches)
        done = set(state["done"])
        nodes = state["nodes"]
        prunes = dict(state["prunes"])
        solutions = [tuple(bits) for bits in state["solutions"]]

    sequential = cfg.threads == 1 or cfg.node_limit is not None or checkpoint is not None
    stopped = enum_stopped

    if sequential:
        if not enum_stopped:
            for index, branch_bits in enumerate(branches):
                if index in done:
                    continue
                if cfg.node_limit is not None and nodes >= cfg.node_limit:
                    stopped = True
                    break
                if cfg.max_solutions is not None and len(solutions) >= cfg.max_solutions:
                    stopped = True
                    break
                searcher = _Searcher(cfg.k, disabled)
                searcher.apply_branch(branch_bits)
                if cfg.node_limit is not None:
                    searcher.node_limit = cfg.node_limit - nodes
                if cfg.max_solutions is not None:
                    searcher.max_solutions = cfg.max_solutions - len(solutions)
                searcher.explore_row(cfg.k + 1)
                nodes += searcher.nodes
                for key in _COUNTER_KEYS:
                    prunes[key] += searcher.prunes[key]
                solutions.extend(searcher.solutions)
                if searcher.stopped:
                    stopped = True
                    break
                done.add(index)
                if checkpoint is not None:
                    _write_checkpoint(checkpoint, {
                        "schema_version": CHECKPOINT_SCHEMA,
                        "k": cfg.k,
                        "disabled_rules": sorted(disabled),
                        "branches": branches,
                        "done": sorted(done),
                        "nodes": nodes,
                        "prunes": prunes,
                        "solutions": [list(bits) for bits in solutions],
                    })
    else:
        jobs = [(cfg.k, bits, tuple(sorted(disabled))) for bits in branches]
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            for sub_nodes, sub_prunes, sub_solutions in pool.map(_explore_branch, jobs):
                nodes += sub_nodes
                for key in _COUNTER_KEYS:
                    prunes[key] += sub_prunes[key]
                solutions.extend(sub_solutions)
        done = set(range(len(branches)))

    exhausted = not stopped and len(done) == len(branches)

    ordered = sorted(set(solutions))
    if cfg.max_solutions is not None:
        ordered = ordered[: cfg.max_solutions]

    v = head_width(cfg.k)
    verified = []
    for bits in ordered:
        m = BinaryMatrix(v, v, bits)
        try:
            cert = verify_biplane(m)
        except VerificationError as exc:
            raise SearchBugError(f"emitted matrix fails verification: {exc}") from exc
        if not (cert.symmetric and cert.full_trace and cert.canonical):
            raise SearchBugError(
                "emitted matrix lacks symmetry, full trace, or canonical form"
            )
        verified.append(m)

    return SearchOutcome(
        k=cfg.k,
        v=v,
        solutions=tuple(verified),
        exhausted=exhausted,
        nodes_visited=nodes,
        prunes_by_rule=prunes,
        elapsed_seconds=time.perf_counter() - start,
    )


def enumerate_reference(k: int) -> list[BinaryMatrix]:
    """Brute-force enumeration for cross-checking the search at k <= 5.

    Every assignment of the free upper triangle is generated; the only
    shortcut is discarding assignments with a wrong row sum before the
    full verification. 2^15 cases at k=5 is the practical ceiling.
    """
    if not 3 <= k <= 5:
        raise ValueError(f"reference enumeration is feasible only for k in 3..5, got {k}")
    v = head_width(k)
    head = canonical_head(k)
    base = list(head.bits)
    for i in range(k, v):
        prefix = 0
        for j in range(k):
            prefix |= ((head.bits[j] >> i) & 1) << j
        base.append(prefix | (1 << i))
    cells = [(i, j) for i in range(k, v) for j in range(i + 1, v)]
    found = []
    for assignment in product((0, 1), repeat=len(cells)):
        rows = list(base)
        for (i, j), bit in zip(cells, assignment):
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        if any(r.bit_count() != k for r in rows):
            continue
        m = BinaryMatrix(v, v, tuple(rows))
        try:
            cert = verify_biplane(m)
        except VerificationError:
            continue
        if cert.symmetric and cert.full_trace and cert.canonical:
            found.append(m)
    found.sort(key=lambda m: m.bits)
    return found
