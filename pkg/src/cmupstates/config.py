"""Numeric tolerances shared by the solvers, plus a flat key=value loader."""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

from .numerics.quadrature import QuadratureRule

__all__ = ["CONFIG_ENV_VAR", "SolverConfig", "DEFAULT_CONFIG", "load_config"]

CONFIG_ENV_VAR = "CMUP_TOLERANCE_CONFIG"


@dataclass(frozen=True)
class SolverConfig:
    """Every tunable tolerance in one immutable record.

    ``small_control_floor`` is the most negative signed control the solvers
    will use; it bounds the achievable small-uncertainty range.
    """

    series_tail_tol: float = 1e-16
    residual_tol: float = 1e-10
    root_tol: float = 1e-12
    nodes_per_panel: int = 32
    panels: int = 64
    a_max: float = 20.0
    small_control_floor: float = -8.0
    max_series_radius: float = 30.0
    max_series_terms: int = 5000
    scan_points: int = 4000

    def __post_init__(self):
        if not self.series_tail_tol > 0 or not self.root_tol > 0:
            raise ValueError("tolerances must be positive")
        if not self.a_max > 0:
            raise ValueError("a_max must be positive")
        if not self.small_control_floor < 0:
            raise ValueError("small_control_floor must be negative")
        QuadratureRule(self.nodes_per_panel, self.panels)

    @property
    def quadrature(self) -> QuadratureRule:
        return QuadratureRule(self.nodes_per_panel, self.panels)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)

    def replace(self, **changes) -> "SolverConfig":
        return dataclasses.replace(self, **changes)


DEFAULT_CONFIG = SolverConfig()


def load_config(path: str | os.PathLike | None = None) -> SolverConfig:
    """Read a config file of ``key = value`` lines.

    With no ``path`` the file named by ``$CMUP_TOLERANCE_CONFIG`` is used, and
    without that the defaults are returned. Blank lines and ``#`` comments
    are ignored; unknown keys are an error.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
        if not path:
            return DEFAULT_CONFIG
    types = {f.name: f.type for f in dataclasses.fields(SolverConfig)}
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        if key not in types:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = int(value) if types[key] == "int" else float(value)
    return SolverConfig(**values)
