"""JSON code configurations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .curve import Axis, SepCurve, make_curve
from .errors import ConfigError, LrcError
from .funcspace import VSpec, completion, make_vspec
from .galois import make_field
from .lrc_code import GonalityPolicy, LrcCode, build_code

_TOP_KEYS = {"field", "curve", "orientation", "r", "space", "fibres",
             "gonality_overrides", "assertions"}


@dataclass(frozen=True)
class CodeConfig:
    p: int
    m: int
    modulus: tuple[int, ...] | None
    A: tuple[int, ...]
    B: tuple[int, ...]
    orientation: Axis = Axis.Y
    r: int | None = None
    complete_m: int | None = None
    epsilons: tuple[int, ...] | None = None
    ells: tuple[int, ...] | None = None
    fibres: str | tuple[int, ...] = "all"
    gonality_overrides: dict = field(default_factory=dict)
    assert_semigroup: bool = False

    def to_dict(self) -> dict:
        fld = {"p": self.p, "m": self.m}
        if self.modulus is not None:
            fld["modulus"] = list(self.modulus)
        space = ({"complete_m": self.complete_m} if self.complete_m is not None
                 else {"epsilons": list(self.epsilons), "ells": list(self.ells)})
        return {
            "field": fld,
            "curve": {"A": list(self.A), "B": list(self.B)},
            "orientation": self.orientation.value,
            "r": self.r,
            "space": space,
            "fibres": self.fibres if self.fibres == "all" else list(self.fibres),
            "gonality_overrides": {str(t): g for t, g in sorted(self.gonality_overrides.items())},
            "assertions": {"semigroup": self.assert_semigroup},
        }


def _keys(obj, allowed: set, where: str, required: set = frozenset()):
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be an object")
    unknown = set(obj) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {sorted(unknown)}")
    missing = set(required) - set(obj)
    if missing:
        raise ConfigError(f"missing key(s) in {where}: {sorted(missing)}")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where} must be an integer")
    return value


def _int_list(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise ConfigError(f"{where} must be a list of integers")
    return tuple(_int(v, f"{where}[{i}]") for i, v in enumerate(value))


def parse_config(data: dict) -> CodeConfig:
    _keys(data, _TOP_KEYS, "config", {"field", "curve", "space"})
    fld = data["field"]
    _keys(fld, {"p", "m", "modulus"}, "field", {"p"})
    crv = data["curve"]
    _keys(crv, {"A", "B"}, "curve", {"A", "B"})
    space = data["space"]
    _keys(space, {"complete_m", "epsilons", "ells"}, "space")
    if ("complete_m" in space) == ("ells" in space or "epsilons" in space):
        raise ConfigError("space needs either complete_m or epsilons + ells")
    try:
        orientation = Axis.parse(data.get("orientation", "y"))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    r = data.get("r")
    fibres = data.get("fibres", "all")
    if fibres != "all":
        fibres = _int_list(fibres, "fibres")
    overrides = data.get("gonality_overrides", {})
    if not isinstance(overrides, dict):
        raise ConfigError("gonality_overrides must be an object")
    try:
        overrides = {int(t): _int(g, f"gonality_overrides[{t}]") for t, g in overrides.items()}
    except ValueError:
        raise ConfigError("gonality_overrides keys must be integers") from None
    assertions = data.get("assertions", {})
    _keys(assertions, {"semigroup"}, "assertions")
    sg = assertions.get("semigroup", False)
    if not isinstance(sg, bool):
        raise ConfigError("assertions.semigroup must be true or false")
    if "complete_m" in space:
        complete_m, eps, ells = _int(space["complete_m"], "space.complete_m"), None, None
    else:
        if "epsilons" not in space or "ells" not in space:
            raise ConfigError("space needs both epsilons and ells")
        complete_m = None
        eps, ells = _int_list(space["epsilons"], "space.epsilons"), _int_list(space["ells"], "space.ells")
    return CodeConfig(
        p=_int(fld["p"], "field.p"),
        m=_int(fld.get("m", 1), "field.m"),
        modulus=_int_list(fld["modulus"], "field.modulus") if "modulus" in fld else None,
        A=_int_list(crv["A"], "curve.A"),
        B=_int_list(crv["B"], "curve.B"),
        orientation=orientation,
        r=None if r is None else _int(r, "r"),
        complete_m=complete_m,
        epsilons=eps,
        ells=ells,
        fibres=fibres,
        gonality_overrides=overrides,
        assert_semigroup=sg,
    )


def load_config(path: str | Path) -> CodeConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_config(data)


@dataclass(frozen=True)
class Built:
    curve: SepCurve
    vspec: VSpec
    code: LrcCode
    policy: GonalityPolicy


def build(cfg: CodeConfig, strict: bool = False) -> Built:
    """Field, curve, space and code for a config.  Library errors become ConfigError."""
    try:
        F = make_field(cfg.p, cfg.m, cfg.modulus)
        C = make_curve(F, cfg.A, cfg.B, assert_semigroup=cfg.assert_semigroup)
        if cfg.complete_m is not None:
            V = completion(cfg.complete_m, C, cfg.orientation, cfg.r)
        else:
            V = make_vspec(C, cfg.orientation, cfg.epsilons, cfg.ells, cfg.r)
        code = build_code(C, V, cfg.fibres)
    except LrcError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"{type(exc).__name__}: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return Built(C, V, code, GonalityPolicy(cfg.gonality_overrides, strict))
