"""Reference configurations and the expected values checked by ``paper-examples``.

Each case builds its codes from embedded configs and compares computed values
with reference numbers.  A check marked ``divergent`` records a reference
value this package does not reproduce (see the README); it is reported as
``expected-divergence`` and never fails the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .brute import brute_min_distance, brute_weight_hierarchy
from .config import build, parse_config
from .funcspace import riemann_gap
from .lrc_code import (
    fibre_bounds_semigroup_form,
    ghw_bounds,
    params,
    rank_indices,
    singleton_defect,
)

GF13 = {"p": 13, "m": 1}
GF16 = {"p": 2, "m": 4}
GF64 = {"p": 2, "m": 6}

ELLIPTIC = {"A": [0, 0, 1], "B": [2, 0, 0, 1]}          # Y^2 = X^3 + 2
CUBIC = {"A": [0, 1], "B": [0, 0, 0, 1]}                # Y = X^3
HERMITIAN = {"A": [0, 0, 0, 0, 0, 1], "B": [0, 1, 0, 0, 1]}  # Y^5 = X^4 + X
KONDO = {"A": [0, 1, 1], "B": [0] * 9 + [1]}            # Y^2 + Y = X^9
QUOTIENT = {"A": [0, 0, 0, 1], "B": [0, 1] + [0] * 6 + [1]}  # Y^3 = X^8 + X

CONFIGS: dict[str, dict] = {
    "cubic-k2": {"field": GF13, "curve": CUBIC, "space": {"epsilons": [1, 1], "ells": [0, 0]},
                 "fibres": [1, 8, 12]},
    "cubic-k4": {"field": GF13, "curve": CUBIC, "space": {"epsilons": [1, 1], "ells": [1, 1]},
                 "fibres": [1, 8, 12]},
    "cubic-k6": {"field": GF13, "curve": CUBIC, "space": {"epsilons": [1, 1], "ells": [2, 2]},
                 "fibres": [1, 8, 12]},
    **{f"elliptic-m{m}": {"field": GF13, "curve": ELLIPTIC, "space": {"complete_m": m},
                          "assertions": {"semigroup": True}} for m in (3, 6, 8, 9, 12, 15)},
    "hermitian-c": {"field": GF16, "curve": HERMITIAN,
                    "space": {"epsilons": [1, 1, 1], "ells": [13, 13, 13]}},
    "hermitian-d": {"field": GF16, "curve": HERMITIAN,
                    "space": {"epsilons": [1, 1, 1], "ells": [16, 15, 14]},
                    "gonality_overrides": {"2": 4}},
    "kondo-50": {"field": GF64, "curve": KONDO, "r": 8, "space": {"complete_m": 50}},
    "quotient-y50": {"field": GF64, "curve": QUOTIENT, "space": {"complete_m": 50}},
    "quotient-x50": {"field": GF64, "curve": QUOTIENT, "orientation": "x",
                     "space": {"epsilons": [1, 1], "ells": [16, 14]}},
}


def built(name: str, strict: bool = False):
    return build(parse_config(CONFIGS[name]), strict=strict)


@dataclass(frozen=True)
class Check:
    case: str
    name: str
    expected: object
    actual: object
    divergent: bool = False
    compare: str = "eq"  # "eq", "le" (actual <= expected), "ge"

    @property
    def ok(self) -> bool:
        if self.compare == "le":
            return self.actual <= self.expected
        if self.compare == "ge":
            return self.actual >= self.expected
        return self.actual == self.expected

    @property
    def status(self) -> str:
        if self.ok:
            return "PASS"
        return "expected-divergence" if self.divergent else "FAIL"


def _ex33a() -> list[Check]:
    out = []
    code = built("cubic-k2").code
    groups = sorted(tuple(f.abscissae) for f in code.fibres)
    out.append(Check("ex3.3a", "split fibres", [(1, 3, 9), (2, 5, 6), (4, 10, 12)], groups))
    for name, k in (("cubic-k2", 2), ("cubic-k4", 4), ("cubic-k6", 6)):
        code = built(name).code
        d = brute_min_distance(code, codeword_cap=1 << 20)
        out.append(Check("ex3.3a", f"{name} (n, k)", (9, k), (code.n, code.k)))
        out.append(Check("ex3.3a", f"{name} defect with exact d", 0, singleton_defect(code.n, code.k, d, code.r)))
    return out


def _ex33b() -> list[Check]:
    out = []
    for m, k in zip((3, 6, 9, 12, 15), (3, 5, 7, 9, 11)):
        code = built(f"elliptic-m{m}").code
        d = brute_min_distance(code, codeword_cap=1 << 20)
        out.append(Check("ex3.3b", f"V_{m} (n, k, r)", (18, k, 2), (code.n, code.k, code.r)))
        out.append(Check("ex3.3b", f"V_{m} defect with exact d", 0, singleton_defect(code.n, code.k, d, code.r)))
    return out


def _ex33c() -> list[Check]:
    b = built("hermitian-c")
    p = params(b.code, b.policy)
    return [
        Check("ex3.3c", "(n, m)", (64, 62), (p.n, p.m)),
        Check("ex3.3c", "k", 42, p.k),
        Check("ex3.3c", "d lower", 2, p.d_lower),
        Check("ex3.3c", "defect upper", 8, p.defect_upper),
    ]


def _ex33d() -> list[Check]:
    b = built("hermitian-d")
    p = params(b.code, b.policy)
    return [
        Check("ex3.3d", "(dim V, m, w)", (48, 66, 1), (p.dim_V, p.m, p.w)),
        Check("ex3.3d", "k", 47, p.k),
        Check("ex3.3d", "kernel", [{"y": 1, "y^16": 1}], b.code.kernel_functions()),
        Check("ex3.3d", "gamma_2", 4, p.gamma["value"]),
        Check("ex3.3d", "d lower", 2, p.d_lower),
        Check("ex3.3d", "defect upper", 1, p.defect_upper),
    ]


def _ex38() -> list[Check]:
    b = built("elliptic-m8")
    code = b.code
    d = brute_min_distance(code, codeword_cap=1 << 20)
    return [
        Check("ex3.8", "(n, k, r, m)", (18, 6, 2, 8), (code.n, code.k, code.r, code.m)),
        Check("ex3.8", "riemann gap", 2, riemann_gap(code.vspec, code.curve)),
        Check("ex3.8", "exact d", 10, d),
        Check("ex3.8", "exact defect", 1, singleton_defect(code.n, code.k, d, code.r)),
    ]


def _ex54() -> list[Check]:
    b = built("elliptic-m8")
    code = b.code
    table = ghw_bounds(code, policy=b.policy)
    exact = brute_weight_hierarchy(code)
    ranks = rank_indices(code.n, code.k, code.r, exact=exact)
    reference = (10, 12, 13, 14, 15, 18)
    out = [
        Check("ex5.4", "lower bound row", [10, 12, 13, 14, 15, 16], table.goppa),
        Check("ex5.4", "upper bound row", [11, 12, 14, 15, 17, 18], table.singleton),
    ]
    for t, (ref, got) in enumerate(zip(reference, exact), 1):
        out.append(Check("ex5.4", f"d_{t}", ref, got, divergent=t in (3, 4, 5)))
    semigroup_form = {t: bound for _, t, bound in fibre_bounds_semigroup_form(code)}
    out.append(Check("ex5.4", "fibre bound d_2 <= 12", 12, semigroup_form.get(2)))
    out.append(Check("ex5.4", "d_5 <= 15", 15, exact[4], divergent=True, compare="le"))
    out.append(Check("ex5.4", "optimal rank", 2, ranks.opt_rank))
    out.append(Check("ex5.4", "MDS rank = k - r + 1", code.k - code.r + 1, ranks.mds_rank))
    out.append(Check("ex5.4", "rank-optimal only at t in {2, 6}", [2, 6], ranks.optimal_ts, divergent=True))
    return out


def _ex61() -> list[Check]:
    b = built("kondo-50")
    p = params(b.code, b.policy)
    lo, up = ghw_bounds(b.code, 5, b.policy).lower, ghw_bounds(b.code, 5, b.policy).upper
    return [
        Check("ex6.1", "(n, k, r)", (126, 43, 8), (p.n, p.k, p.r)),
        Check("ex6.1", "d lower", 76, p.d_lower),
        Check("ex6.1", "defect upper", 3, p.defect_upper),
        Check("ex6.1", "d_1 bracket", (76, 79), (lo[0], up[0])),
        Check("ex6.1", "d_2 bracket", (78, 80), (lo[1], up[1])),
        Check("ex6.1", "d_3 upper", 81, up[2]),
        Check("ex6.1", "d_4 lower", 82, lo[3]),
        Check("ex6.1", "d_5", (84, 84), (lo[4], up[4])),
    ]


def _ex62() -> list[Check]:
    b = built("quotient-y50")
    p = params(b.code, b.policy)
    return [
        Check("ex6.2", "(n, r)", (176, 7), (p.n, p.r)),
        Check("ex6.2", "k", 40, p.k),
        Check("ex6.2", "d lower", 126, p.d_lower),
        Check("ex6.2", "defect upper", 6, p.defect_upper),
    ]


def _ex63() -> list[Check]:
    b = built("quotient-x50")
    p = params(b.code, b.policy)
    return [
        Check("ex6.3", "(n, r, ells)", (168, 2, (16, 14)), (p.n, p.r, b.vspec.ells)),
        Check("ex6.3", "k", 32, p.k),
        Check("ex6.3", "d lower", 120, p.d_lower, divergent=True),
        Check("ex6.3", "defect upper", 2, p.defect_upper, divergent=True),
    ]


CASES: dict[str, Callable[[], list[Check]]] = {
    "ex3.3a": _ex33a,
    "ex3.3b": _ex33b,
    "ex3.3c": _ex33c,
    "ex3.3d": _ex33d,
    "ex3.8": _ex38,
    "ex5.4": _ex54,
    "ex6.1": _ex61,
    "ex6.2": _ex62,
    "ex6.3": _ex63,
}


def run_cases(selected: list[str] | None = None) -> list[Check]:
    names = list(CASES) if not selected else selected
    unknown = [n for n in names if n not in CASES]
    if unknown:
        raise KeyError(unknown[0])
    out = []
    for name in names:
        out.extend(CASES[name]())
    return out
