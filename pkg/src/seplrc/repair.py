"""Local repair of a single erased coordinate inside its fibre."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .curve import Applicability, one_addition_applicable
from .errors import (
    DuplicateAbscissa,
    InconsistentSymbols,
    LengthMismatch,
    MissingSymbols,
    NotApplicable,
)
from .lrc_code import LrcCode


@dataclass(frozen=True)
class RepairRequest:
    code: LrcCode
    word: Sequence[int | None]
    position: int

    def __post_init__(self):
        if len(self.word) != self.code.n:
            raise LengthMismatch(f"word length {len(self.word)} != n = {self.code.n}")
        if not 0 <= self.position < self.code.n:
            raise IndexError(f"position {self.position} outside [0, {self.code.n})")


@dataclass(frozen=True)
class RepairResult:
    position: int
    value: int
    method: str
    symbols_read: int
    read_positions: tuple[int, ...]


@lru_cache(maxsize=64)
def applicability(code: LrcCode) -> Applicability:
    return one_addition_applicable(code.curve, code.vspec.orientation, code.vspec)


def fibre_of(code: LrcCode, position: int) -> range:
    return code.fibre_positions(code.recovery_map[position][0])


def recovery_set(code: LrcCode, position: int) -> list[int]:
    """The r other positions of the fibre with the smallest abscissae."""
    others = [p for p in fibre_of(code, position) if p != position]
    others.sort(key=code.abscissa)
    return others[:code.r]


def _read(req: RepairRequest, positions) -> list[int]:
    missing = [p for p in positions if req.word[p] is None]
    if missing:
        raise MissingSymbols(f"positions {missing} needed to repair {req.position} are erased")
    return [int(req.word[p]) for p in positions]


def recover_lagrange(req: RepairRequest) -> RepairResult:
    code, F = req.code, req.code.field
    R = recovery_set(code, req.position)
    values = _read(req, R)
    xs = [code.abscissa(p) for p in R]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated abscissa among {xs}")
    x0 = code.abscissa(req.position)
    total = 0
    for j, (xj, vj) in enumerate(zip(xs, values)):
        num, den = 1, 1
        for l, xl in enumerate(xs):
            if l != j:
                num = F.mul(num, F.sub(x0, xl))
                den = F.mul(den, F.sub(xj, xl))
        total = F.add(total, F.mul(vj, F.div(num, den)))
    return RepairResult(req.position, total, "lagrange", len(R), tuple(R))


def recover_one_addition(req: RepairRequest) -> RepairResult:
    app = applicability(req.code)
    if not app:
        raise NotApplicable(app.reason)
    F = req.code.field
    R = [p for p in fibre_of(req.code, req.position) if p != req.position]
    total = 0
    for v in _read(req, R):
        total = F.add(total, v)
    return RepairResult(req.position, F.neg(total), "one-addition", len(R), tuple(R))


def repair(req: RepairRequest, cross_check: bool = False) -> RepairResult:
    """One addition when it applies, Lagrange otherwise.

    With ``cross_check`` both run and must agree.
    """
    if not applicability(req.code):
        return recover_lagrange(req)
    fast = recover_one_addition(req)
    if cross_check:
        slow = recover_lagrange(req)
        if slow.value != fast.value:
            raise InconsistentSymbols(
                f"position {req.position}: one-addition {fast.value} != lagrange {slow.value}")
    return fast
