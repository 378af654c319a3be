"""In-process storage cluster: place codeword symbols on nodes, fail nodes, repair."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import Ambiguous, ConfigError, LayoutInfeasible
from .lrc_code import LrcCode, encode, erasure_decode
from .repair import RepairRequest, repair


@dataclass(frozen=True)
class ClusterLayout:
    node_count: int
    placement: tuple[int, ...]

    def positions_on(self, nodes) -> list[int]:
        nodes = set(nodes)
        return [p for p, node in enumerate(self.placement) if node in nodes]


def make_layout(code: LrcCode, node_count: int) -> ClusterLayout:
    """Round-robin placement.

    Fibres occupy consecutive positions, so a fibre never repeats a node as
    long as there are at least as many nodes as fibre members.
    """
    if node_count < 1:
        raise LayoutInfeasible("node_count must be >= 1")
    return ClusterLayout(node_count, tuple(p % node_count for p in range(code.n)))


@dataclass(frozen=True)
class FailurePattern:
    kind: str  # "single" or "random"
    count: int = 1

    @classmethod
    def parse(cls, text: str) -> "FailurePattern":
        if text == "single":
            return cls("single", 1)
        kind, _, num = text.partition(":")
        if kind == "random" and num.isdigit() and int(num) >= 1:
            return cls("random", int(num))
        raise ConfigError(f"failure pattern must be 'single' or 'random:K', got {text!r}")

    def draw(self, rng: random.Random, node_count: int) -> list[int]:
        if self.count > node_count:
            raise LayoutInfeasible(f"cannot fail {self.count} of {node_count} nodes")
        return sorted(rng.sample(range(node_count), self.count))


@dataclass
class RepairStats:
    failed_nodes: list[int] = field(default_factory=list)
    objects: int = 0
    lost_symbols: int = 0
    local: int = 0
    fallback: int = 0
    unrecoverable: int = 0
    symbols_read: int = 0
    baseline_reads: int = 0
    verified: int = 0
    mismatches: int = 0
    methods: dict = field(default_factory=dict)

    @property
    def saving_ratio(self) -> float | None:
        if self.symbols_read == 0:
            return None
        return round(self.baseline_reads / self.symbols_read, 2)

    @property
    def reads_per_local_symbol(self) -> float | None:
        if not self.local or self.fallback or self.unrecoverable:
            return None
        return self.symbols_read / self.local


def random_objects(code: LrcCode, count: int, seed: int) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    msgs = rng.integers(0, code.field.q, size=(count, code.dim_V))
    return [encode(code, m) for m in msgs]


def simulate(code: LrcCode, objects: Sequence, node_count: int,
             pattern: FailurePattern | str = "single", seed: int = 0) -> RepairStats:
    """Fail nodes, repair every object, and account the symbols read.

    A fibre with one lost symbol is repaired locally.  Any object with a
    fibre that lost more is decoded globally once, at k reads.
    """
    if isinstance(pattern, str):
        pattern = FailurePattern.parse(pattern)
    layout = make_layout(code, node_count)
    rng = random.Random(seed)
    failed = pattern.draw(rng, node_count)
    lost = layout.positions_on(failed)
    stats = RepairStats(failed_nodes=failed)
    by_fibre: dict[int, list[int]] = {}
    for p in lost:
        by_fibre.setdefault(code.recovery_map[p][0], []).append(p)

    for obj in objects:
        pristine = [int(v) for v in obj]
        word: list[int | None] = list(pristine)
        for p in lost:
            word[p] = None
        stats.objects += 1
        stats.lost_symbols += len(lost)
        stats.baseline_reads += code.k * len(lost)
        repaired = {}
        leftover = []
        for fid in sorted(by_fibre):
            members = by_fibre[fid]
            if len(members) != 1:
                leftover.extend(members)
                continue
            res = repair(RepairRequest(code, word, members[0]))
            repaired[res.position] = res.value
            word[res.position] = res.value
            stats.local += 1
            stats.symbols_read += res.symbols_read
            stats.methods[res.method] = stats.methods.get(res.method, 0) + 1
        if leftover:
            try:
                full = erasure_decode(code, word)
            except Ambiguous:
                stats.unrecoverable += len(leftover)
            else:
                stats.fallback += len(leftover)
                stats.symbols_read += code.k
                stats.methods["global"] = stats.methods.get("global", 0) + len(leftover)
                repaired.update({p: int(full[p]) for p in leftover})
        for p, v in repaired.items():
            if v == pristine[p]:
                stats.verified += 1
            else:
                stats.mismatches += 1
    return stats


_FIELDS = ("failed_nodes", "objects", "lost_symbols", "local", "fallback", "unrecoverable",
           "symbols_read", "baseline_reads", "verified", "mismatches", "methods")


def report(stats: RepairStats) -> dict:
    out = {name: getattr(stats, name) for name in _FIELDS}
    out["methods"] = dict(sorted(stats.methods.items()))
    out["reads_per_local_symbol"] = stats.reads_per_local_symbol
    out["saving_ratio"] = stats.saving_ratio
    return out


def stats_from_dict(data: dict) -> RepairStats:
    return RepairStats(**{name: data[name] for name in _FIELDS})


def format_report(stats: RepairStats) -> str:
    rows = report(stats)
    width = max(len(k) for k in rows)
    lines = [f"{k.ljust(width)}  {json.dumps(v)}" for k, v in rows.items()]
    return "\n".join(lines)
