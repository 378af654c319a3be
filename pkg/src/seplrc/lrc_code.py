"""Evaluation codes C(P, V) on split fibres and their parameter bounds."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .curve import Fibre, SepCurve, one_addition_applicable
from .errors import (
    Ambiguous,
    FibreNotSplit,
    InconsistentSymbols,
    LengthMismatch,
    NoSplitFibres,
    UncertifiedGonality,
)
from .funcspace import VSpec, dim_V, is_complete, m_of_V, monomial_name
from .galois import FieldSpec
from .linalg import combine, left_kernel, rank, row_reduce, solve_left


@dataclass(frozen=True, eq=False)
class LrcCode:
    curve: SepCurve
    vspec: VSpec
    fibres: tuple[Fibre, ...]
    points: tuple
    basis: tuple[tuple[int, int], ...]
    G: np.ndarray
    k: int
    kernel: np.ndarray
    recovery_map: tuple[tuple[int, int], ...]

    @property
    def field(self) -> FieldSpec:
        return self.curve.field

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dim_V(self) -> int:
        return len(self.basis)

    @property
    def r(self) -> int:
        return self.vspec.r

    @property
    def m(self) -> int:
        return m_of_V(self.vspec, self.curve)

    @property
    def fibre_size(self) -> int:
        return self.curve.pole_orders(self.vspec.orientation)[0]

    def fibre_positions(self, fid: int) -> range:
        s = self.fibre_size
        return range(fid * s, (fid + 1) * s)

    def abscissa(self, pos: int) -> int:
        fid, idx = self.recovery_map[pos]
        return self.fibres[fid].abscissae[idx]

    def kernel_functions(self) -> list[dict[str, int]]:
        """Kernel basis as {monomial name: coefficient} dictionaries."""
        return [
            {monomial_name(self.vspec, mono): int(c) for mono, c in zip(self.basis, vec) if c}
            for vec in self.kernel
        ]

    def generator_basis(self) -> np.ndarray:
        """k linearly independent rows spanning the code (reduced echelon form)."""
        R, piv = row_reduce(self.field, self.G)
        return R[:len(piv)]


def build_code(C: SepCurve, V: VSpec, fibres: str | Sequence[int] = "all") -> LrcCode:
    F = C.field
    axis = V.orientation
    candidates = C.fibres(axis)
    if fibres == "all" or fibres is None:
        chosen = [f for f in candidates if f.split]
        if not chosen:
            raise NoSplitFibres(f"no totally split fibres along {axis.value}")
    else:
        by_base = {f.base: f for f in candidates}
        bases = sorted(set(int(b) for b in fibres))
        if not bases:
            raise NoSplitFibres("empty fibre selection")
        chosen = []
        for base in bases:
            f = by_base.get(base)
            if f is None or not f.split:
                size = 0 if f is None else len(f)
                raise FibreNotSplit(f"fibre over {base} has {size} points, needs {C.pole_orders(axis)[0]}")
            chosen.append(f)
    points, phi1, phi2, rmap = [], [], [], []
    for fid, fib in enumerate(chosen):
        for idx, (P, t) in enumerate(zip(fib.points, fib.abscissae)):
            points.append(P)
            phi1.append(fib.base)
            phi2.append(t)
            rmap.append((fid, idx))
    phi1 = np.array(phi1, dtype=np.int64)
    phi2 = np.array(phi2, dtype=np.int64)
    basis = V.basis()
    top_i = max(i for i, _ in basis)
    top_j = max(j for _, j in basis)
    pow1 = [np.ones_like(phi1)]
    for _ in range(top_j):
        pow1.append(F.vmul(pow1[-1], phi1))
    pow2 = [np.ones_like(phi2)]
    for _ in range(top_i):
        pow2.append(F.vmul(pow2[-1], phi2))
    G = np.array([F.vmul(pow2[i], pow1[j]) for i, j in basis], dtype=np.int64)
    k = rank(F, G)
    kernel = left_kernel(F, G) if k < len(basis) else np.zeros((0, len(basis)), dtype=np.int64)
    return LrcCode(C, V, tuple(chosen), tuple(points), tuple(basis), G, k, kernel, tuple(rmap))


def encode(code: LrcCode, message: Sequence[int]) -> np.ndarray:
    """message (one coefficient per basis monomial) times G."""
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape[-1] != code.dim_V:
        raise LengthMismatch(f"message length {msg.shape[-1]} != dim V = {code.dim_V}")
    for v in msg.ravel().tolist():
        code.field.check(v)
    return combine(code.field, msg, code.G)


def fibre_product_witness(code: LrcCode, count: int | None = None) -> np.ndarray:
    """Codeword of prod (phi1 - beta) over the first ``count`` selected fibres.

    With ``count = ell_0`` this function lies in V and its weight is exactly
    n - ell_0 * v(phi1).
    """
    F = code.field
    count = code.vspec.ells[0] if count is None else count
    bases = [f.base for f in code.fibres[:count]]
    phi1 = np.array([code.fibres[fid].base for fid, _ in code.recovery_map], dtype=np.int64)
    out = np.ones(code.n, dtype=np.int64)
    for b in bases:
        out = F.vmul(out, F.vsub(phi1, b))
    return out


def support_size(code: LrcCode) -> int:
    """Number of coordinates where some codeword is nonzero (= d_k)."""
    return int(np.count_nonzero(code.G.any(axis=0)))


# --- gonality -------------------------------------------------------------

@dataclass(frozen=True)
class Gamma:
    t: int
    value: int
    rung: str
    certified: bool


@dataclass(frozen=True)
class GonalityPolicy:
    """How gamma_t is resolved.

    Rungs, first match wins: t = 1 is always 0; the semigroup value h_t for
    genus <= 1 or hyperelliptic curves (min(a, b) = 2); a user override table;
    h_t = t + g - 1 once t >= 2g - 1; else the floor gamma_t >= t - 1.  The
    semigroup rungs count as certified only when H = <a, b> is.  ``strict``
    turns any uncertified or floor value into an error.
    """

    overrides: dict = field(default_factory=dict)
    strict: bool = False

    def resolve(self, C: SepCurve, t: int) -> Gamma:
        g = C.genus
        if t <= 1:
            return Gamma(t, 0, "trivial", True)
        if g <= 1 or min(C.a, C.b) == 2:
            out = Gamma(t, C.semigroup.element_at(t), "hyperelliptic-semigroup", C.semigroup_certified)
        elif t in self.overrides:
            out = Gamma(t, int(self.overrides[t]), "override", True)
        elif t >= 2 * g - 1:
            out = Gamma(t, t + g - 1, "riemann-roch", C.semigroup_certified)
        else:
            out = Gamma(t, t - 1, "floor", True)
        if self.strict and (out.rung == "floor" or not out.certified):
            raise UncertifiedGonality(f"gamma_{t} only available via rung '{out.rung}'")
        return out


# --- parameters -----------------------------------------------------------

@dataclass
class ParamReport:
    n: int
    k: int
    r: int
    m: int
    dim_V: int
    w: int
    kernel_dim: int
    semigroup: str
    semigroup_certificate: str
    gamma: dict
    goppa_bound: int
    d_lower: int
    d_upper: int | None
    d_upper_fibre_product: int | None
    d_upper_singleton_like: int
    abundant_by_ell0: bool
    defect_upper: int
    defect_closed_form: int | None
    closed_form_branch: str | None
    closed_form_consistent: bool | None
    complete: bool
    dimension_is_full: bool | None
    abundance_within_w: bool | None
    one_addition: bool
    one_addition_reason: str
    mds_rank_lower: int
    fibre_bounds: list = field(default_factory=list)
    labels: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def singleton_defect(n: int, k: int, d: int, r: int) -> int:
    return n + 2 - (k + d + math.ceil(k / r))


def abundance(code: LrcCode) -> int:
    """iota(m - n): a lower bound on l((m - n)Q), exact when H = <a, b>."""
    m, n = code.m, code.n
    return code.curve.semigroup.iota(m - n) if m >= n else 0


def fibre_vanishing_bounds(code: LrcCode) -> list[tuple[int, int, int]]:
    """(mu, t, bound): the functions of V vanishing on mu whole fibres give a
    t-dimensional subcode of weight <= n - mu * v(phi1).

    Such a function is divisible by (phi1 - beta) in every phi2-component, so
    the subspace has dimension sum_i eps_i * max(0, ell_i + 1 - mu); the kernel
    of the evaluation map lies inside it.
    """
    V = code.vspec
    v1 = code.fibre_size
    deficit = code.dim_V - code.k
    out = []
    for mu in range(1, len(code.fibres) + 1):
        s = sum(max(0, V.ells[i] + 1 - mu) for i in V.active)
        t = s - deficit
        if t < 1:
            break
        out.append((mu, t, code.n - mu * v1))
    return out


def fibre_bounds_semigroup_form(code: LrcCode) -> list[tuple[int, int, int]]:
    """(mu, t, bound) with t = iota(m - mu * v(phi1)) - w, for mu * v(phi1) < m.

    Valid when V = L(mQ).  For smaller V the subcode it presumes can be
    too large, so these values are reported
    for comparison only and never enter the bound tables.
    """
    v1 = code.fibre_size
    H = code.curve.semigroup
    w = abundance(code)
    out = []
    for mu in range(1, len(code.fibres) + 1):
        if mu * v1 >= code.m:
            break
        t = H.iota(code.m - mu * v1) - w
        if t >= 1:
            out.append((mu, t, code.n - mu * v1))
    return out


def _cor_closed_form(code: LrcCode) -> tuple[int | None, str | None]:
    C, V = code.curve, code.vspec
    v1, v2 = C.pole_orders(V.orientation)
    m, n, g = code.m, code.n, C.genus
    if not (C.semigroup_certified and m < n and V.r == v1 - 1 and is_complete(V, C)) or v1 < 2:
        return None, None
    edge = v2 * (v1 - 1)
    if m < edge:
        return g + 1 - math.ceil((m + 1 - g) / (v1 - 1)), "below-edge"
    top = (m - edge) // v1
    return g + 2 + top - math.ceil((m - g - top) / (v1 - 1)), "above-edge"


def params(code: LrcCode, policy: GonalityPolicy | None = None) -> ParamReport:
    policy = policy or GonalityPolicy()
    C, V = code.curve, code.vspec
    n, k, r, m = code.n, code.k, code.r, code.m
    v1 = code.fibre_size
    w = abundance(code)
    gamma = policy.resolve(C, w + 1)
    goppa = n - m + gamma.value
    d_lower = max(goppa, 1)

    single = n + 2 - k - math.ceil(k / r)
    fibre_up = None
    abundant_ell0 = False
    if V.epsilons[0]:
        if V.ells[0] * v1 < n:
            fibre_up = n - V.ells[0] * v1
        else:
            abundant_ell0 = True
    d_upper = min(x for x in (single, fibre_up) if x is not None)

    closed, branch = _cor_closed_form(code)
    defect = singleton_defect(n, k, d_lower, r)
    return ParamReport(
        n=n, k=k, r=r, m=m, dim_V=code.dim_V, w=w,
        kernel_dim=code.dim_V - k,
        semigroup=repr(C.semigroup),
        semigroup_certificate=C.weierstrass_certificate,
        gamma=asdict(gamma),
        goppa_bound=goppa,
        d_lower=d_lower,
        d_upper=d_upper,
        d_upper_fibre_product=fibre_up,
        d_upper_singleton_like=single,
        abundant_by_ell0=abundant_ell0,
        defect_upper=defect,
        defect_closed_form=closed,
        closed_form_branch=branch,
        closed_form_consistent=None if closed is None else defect <= closed,
        complete=is_complete(V, C),
        dimension_is_full=(k == code.dim_V) if m < n else None,
        abundance_within_w=(code.dim_V - k <= w) if (m >= n and C.semigroup_certified) else None,
        one_addition=bool(one_addition_applicable(C, V.orientation, V)),
        one_addition_reason=one_addition_applicable(C, V.orientation, V).reason,
        mds_rank_lower=k - r + 1,
        fibre_bounds=[list(x) for x in fibre_vanishing_bounds(code)],
        labels={
            "d_lower": f"goppa: n - m + gamma_(w+1), gamma via {gamma.rung}",
            "d_upper_fibre_product": "weight of prod(phi1 - beta) over ell_0 fibres",
            "d_upper_singleton_like": "k + d + ceil(k/r) <= n + 2",
            "defect_upper": "n + 2 - k - d_lower - ceil(k/r)",
            "defect_closed_form": "complete-space defect formula (needs H = <a,b>, m < n)",
            "fibre_bounds": "d_t <= n - mu*v(phi1), t = dim of V vanishing on mu fibres minus kernel",
        },
    )


# --- generalized Hamming weights ------------------------------------------

@dataclass
class GhwTable:
    t: list[int]
    goppa: list[int]
    singleton: list[int]
    fibre: list[int | None]
    lower: list[int]
    upper: list[int]
    rungs: list[str]

    def brackets(self) -> list[tuple[int, int]]:
        return list(zip(self.lower, self.upper))

    def to_dict(self) -> dict:
        return asdict(self)


def ghw_bounds(code: LrcCode, t_max: int | None = None,
               policy: GonalityPolicy | None = None) -> GhwTable:
    """Bounds on d_1..d_t_max.

    ``goppa``, ``singleton`` and ``fibre`` are the raw rule values.  ``lower``
    and ``upper`` combine them with d_t >= t, strict monotonicity of the
    hierarchy and the exact d_k (the support size of the code).
    """
    policy = policy or GonalityPolicy()
    n, k, r, m = code.n, code.k, code.r, code.m
    t_max = k if t_max is None else min(t_max, k)
    w = abundance(code)
    ts = list(range(1, k + 1))
    gammas = [policy.resolve(code.curve, w + t) for t in ts]
    goppa = [n - m + g.value for g in gammas]
    single = [n + t + 1 - k - math.ceil((k - t + 1) / r) for t in ts]
    fib: list[int | None] = [None] * k
    for _, t, bound in fibre_vanishing_bounds(code):
        if t <= k and (fib[t - 1] is None or bound < fib[t - 1]):
            fib[t - 1] = bound
    supp = support_size(code)

    lower, prev = [], 0
    for t, g in zip(ts, goppa):
        prev = max(g, t, prev + 1)
        lower.append(prev)
    lower[-1] = max(lower[-1], supp)

    upper = [min(s, supp - (k - t)) for t, s in zip(ts, single)]
    for t, b in enumerate(fib, 1):
        if b is not None:
            upper[t - 1] = min(upper[t - 1], b)
    for i in range(k - 2, -1, -1):
        upper[i] = min(upper[i], upper[i + 1] - 1)

    cut = slice(0, t_max)
    return GhwTable(ts[cut], goppa[cut], single[cut], fib[cut], lower[cut], upper[cut],
                    [g.rung for g in gammas][cut])


@dataclass
class RankInfo:
    mds_rank: int | None
    mds_rank_range: tuple[int, int | None]
    opt_rank: int | None
    opt_rank_range: tuple[int, int | None]
    optimal_ts: list[int] | None
    dk_minus_r_ok: bool | None

    def to_dict(self) -> dict:
        return asdict(self)


def rank_indices(n: int, k: int, r: int, exact: Sequence[int] | None = None,
                 table: GhwTable | None = None) -> RankInfo:
    """MDS rank and optimal rank from an exact hierarchy, or ranges from bounds."""
    single = {t: n + t + 1 - k - math.ceil((k - t + 1) / r) for t in range(1, k + 1)}
    mds_lo = max(1, k - r + 1)
    if exact is not None:
        d = {t: v for t, v in enumerate(exact, 1)}
        mds = next((t for t in sorted(d) if d[t] == n - k + t), None)
        opt_ts = [t for t in sorted(d) if d[t] == single[t]]
        opt = opt_ts[0] if opt_ts else None
        dkr = d.get(k - r) if k - r >= 1 else None
        return RankInfo(mds, (mds, mds), opt, (opt, opt), opt_ts,
                        None if dkr is None else dkr <= n - r - 1)
    if table is None:
        raise ValueError("need an exact hierarchy or a bound table")
    lo = dict(zip(table.t, table.lower))
    up = dict(zip(table.t, table.upper))
    mds_possible = [t for t in table.t if t >= mds_lo and up[t] >= n - k + t]
    mds_certain = [t for t in table.t if lo[t] >= n - k + t]
    opt_possible = [t for t in table.t if up[t] >= single[t]]
    opt_certain = [t for t in table.t if lo[t] >= single[t]]
    return RankInfo(
        None,
        (mds_possible[0] if mds_possible else mds_lo, mds_certain[0] if mds_certain else None),
        None,
        (opt_possible[0] if opt_possible else 1, opt_certain[0] if opt_certain else None),
        None,
        None,
    )


# --- global erasure decoding ----------------------------------------------

def erasure_decode(code: LrcCode, word: Sequence[int | None]) -> np.ndarray:
    """Complete a word whose erased coordinates are None.

    Raises :class:`Ambiguous` carrying a nonzero codeword supported inside the
    erased set when the completion is not unique.
    """
    if len(word) != code.n:
        raise LengthMismatch(f"word length {len(word)} != n = {code.n}")
    F = code.field
    known = [i for i, v in enumerate(word) if v is not None]
    if len(known) == code.n:
        return np.array(word, dtype=np.int64)
    G = code.generator_basis()
    GK = G[:, known]
    values = np.array([word[i] for i in known], dtype=np.int64)
    coeffs = solve_left(F, GK, values)
    if coeffs is None:
        raise InconsistentSymbols("known symbols are not the restriction of a codeword")
    K = left_kernel(F, GK)
    if len(K):
        raise Ambiguous(combine(F, K[0], G))
    return combine(F, coeffs, G)


def format_generator_matrix(code: LrcCode) -> str:
    lines = [f"# q={code.field.q} n={code.n} rows={code.dim_V} k={code.k}"]
    lines += [" ".join(str(int(v)) for v in row) for row in code.G]
    return "\n".join(lines) + "\n"
