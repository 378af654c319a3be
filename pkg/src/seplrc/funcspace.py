"""Evaluation spaces V = sum_i eps_i <1, phi1, ..., phi1^ell_i> phi2^i.

A basis monomial is stored as ``(i, j)`` meaning ``phi2^i * phi1^j``; its pole
order is ``j * v(phi1) + i * v(phi2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve import Axis, SepCurve
from .errors import InvalidSpace, UncertifiedSemigroup


@dataclass(frozen=True)
class VSpec:
    orientation: Axis
    r: int
    epsilons: tuple[int, ...]
    ells: tuple[int, ...]

    @property
    def active(self) -> list[int]:
        return [i for i, e in enumerate(self.epsilons) if e]

    def basis(self) -> list[tuple[int, int]]:
        """Monomials (i, j), i ascending then j ascending."""
        return [(i, j) for i in self.active for j in range(self.ells[i] + 1)]

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation.value,
            "r": self.r,
            "space": {"epsilons": list(self.epsilons), "ells": list(self.ells)},
        }


def monomial_xy(V: VSpec, mono: tuple[int, int]) -> tuple[int, int]:
    """(x exponent, y exponent) of phi2^i phi1^j."""
    i, j = mono
    return (i, j) if V.orientation is Axis.Y else (j, i)


def monomial_name(V: VSpec, mono: tuple[int, int]) -> str:
    parts = []
    for var, e in zip("xy", monomial_xy(V, mono)):
        if e:
            parts.append(var if e == 1 else f"{var}^{e}")
    return "*".join(parts) or "1"


def make_vspec(C: SepCurve, orientation, epsilons: Sequence[int], ells: Sequence[int],
               r: int | None = None) -> VSpec:
    orientation = Axis.parse(orientation)
    v1, v2 = C.pole_orders(orientation)
    epsilons = [int(e) for e in epsilons]
    ells = [int(l) for l in ells]
    if len(ells) != len(epsilons):
        raise InvalidSpace("epsilons and ells must have equal length")
    if r is None:
        r = len(epsilons) if epsilons else v1 - 1
    if not 1 <= r <= v1 - 1:
        raise InvalidSpace(f"locality r = {r} outside [1, {v1 - 1}]")
    if len(epsilons) > r:
        if any(epsilons[r:]):
            raise InvalidSpace(f"phi2 exponents must stay below r = {r}")
        epsilons, ells = epsilons[:r], ells[:r]
    epsilons += [0] * (r - len(epsilons))
    ells += [0] * (r - len(ells))
    if any(e not in (0, 1) for e in epsilons):
        raise InvalidSpace("epsilons must be 0 or 1")
    if not any(epsilons):
        raise InvalidSpace("at least one eps_i must be 1")
    if any(l < 0 for l, e in zip(ells, epsilons) if e):
        raise InvalidSpace("ells must be nonnegative")
    ells = [l if e else 0 for l, e in zip(ells, epsilons)]
    V = VSpec(orientation, r, tuple(epsilons), tuple(ells))
    orders = [pole_order(C, V, mono) for mono in V.basis()]
    if len(set(orders)) != len(orders):
        raise InvalidSpace("basis monomials share a pole order; the sum is not direct")
    return V


def pole_order(C: SepCurve, V: VSpec, mono: tuple[int, int]) -> int:
    v1, v2 = C.pole_orders(V.orientation)
    i, j = mono
    return j * v1 + i * v2


def m_of_V(V: VSpec, C: SepCurve) -> int:
    v1, v2 = C.pole_orders(V.orientation)
    return max(V.ells[i] * v1 + i * v2 for i in V.active)


def dim_V(V: VSpec) -> int:
    return sum(1 + V.ells[i] for i in V.active)


def completion(m: int, C: SepCurve, orientation, r: int | None = None) -> VSpec:
    """The complete space V_m: everything of pole order <= m with phi2-degree < r."""
    if m < 0:
        raise InvalidSpace("m must be >= 0")
    orientation = Axis.parse(orientation)
    v1, v2 = C.pole_orders(orientation)
    r = v1 - 1 if r is None else r
    top = min(r - 1, m // v2)
    eps = [1 if i <= top else 0 for i in range(r)]
    ells = [(m - i * v2) // v1 if i <= top else 0 for i in range(r)]
    return make_vspec(C, orientation, eps, ells, r=r)


def is_complete(V: VSpec, C: SepCurve) -> bool:
    return completion(m_of_V(V, C), C, V.orientation, V.r) == V


def _require_semigroup(C: SepCurve):
    if not C.semigroup_certified:
        raise UncertifiedSemigroup(
            "H = <a, b> is neither certified nor asserted for this curve")


def riemann_gap(V: VSpec, C: SepCurve) -> int:
    """l(mQ) - l(V) for m = m(V).

    For an incomplete V this is the gap of its completion plus the monomials
    V lacks relative to that completion.
    """
    _require_semigroup(C)
    return C.semigroup.iota(m_of_V(V, C)) - dim_V(V)


def riemann_gap_closed_form(V: VSpec, C: SepCurve) -> int:
    """Closed form of the gap for a complete V with r = v(phi1) - 1."""
    _require_semigroup(C)
    v1, v2 = C.pole_orders(V.orientation)
    if not is_complete(V, C) or V.r != v1 - 1:
        raise InvalidSpace("closed form holds only for complete spaces with r = v(phi1) - 1")
    m = m_of_V(V, C)
    edge = v2 * (v1 - 1)
    return 0 if m < edge else 1 + (m - edge) // v1


def equals_riemann_space(V: VSpec, C: SepCurve) -> bool:
    return riemann_gap(V, C) == 0
