"""Tabular datasets from which each published figure can be replotted.

Every builder returns a :class:`FigureBundle`: an ordered mapping of file
name to ``(header, rows)`` plus free-text notes for the run manifest.
Intelligent-state curves are not part of this model, so figure 4 has no
builder and figures 3 and 5 carry CMUP curves only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import airyapprox
from .cmup import FLAT_DELTA_PHI, Regime, solve_for_delta_phi, sweep
from .config import DEFAULT_CONFIG, SolverConfig
from .errors import RegimeError

__all__ = ["FIGURE_IDS", "FigureBundle", "build_figure"]

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig5", "fig6", "fig7")

Table = tuple[list[str], list[list]]


@dataclass
class FigureBundle:
    figure_id: str
    tables: dict[str, Table] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _large_sweep(config: SolverConfig, points: int):
    rows = sweep(config.a_max / points, config.a_max, points, config)
    return [r for r in rows if r.ok]


def _airy_rows(lambdas, config: SolverConfig):
    out = []
    for lam in lambdas:
        try:
            st = airyapprox.airy_state(float(lam))
            dphi, prod = airyapprox.airy_uncertainty_product(float(lam))
        except RegimeError:
            continue
        out.append((float(lam), st, dphi, prod))
    return out


def _fig1(config: SolverConfig) -> FigureBundle:
    targets = [0.8, 1.2, 1.6, FLAT_DELTA_PHI, 2.2, 2.6, 3.0]
    phi = np.linspace(-math.pi, math.pi, 721)
    header = ["phi"]
    columns = []
    for t in targets:
        st = solve_for_delta_phi(t, 1e-10, config)
        header.append(f"psi_{st.regime.value}_dphi_{t:.4f}")
        columns.append(np.asarray(st.psi(phi), dtype=float))
    rows = [[p, *(c[i] for c in columns)] for i, p in enumerate(phi)]
    return FigureBundle("fig1", {"fig1_wavefunctions.csv": (header, rows)})


def _fig2(config: SolverConfig) -> FigureBundle:
    rows = [[FLAT_DELTA_PHI, math.pi ** 2 / 3.0, "numeric"]]
    rows += [[r.delta_phi, r.mu_over_lambda, "numeric"] for r in _large_sweep(config, 120)]
    lambdas = np.geomspace(2.0 * airyapprox.validity_threshold(), 1e6, 120)
    rows += [[d, st.ratio_sqrt ** 2, "airy"] for _, st, d, _ in _airy_rows(lambdas, config)]
    return FigureBundle(
        "fig2", {"fig2_mu_over_lambda.csv": (["delta_phi", "mu_over_lambda", "source"], rows)}
    )


def _fig3(config: SolverConfig) -> FigureBundle:
    recs = sweep(config.small_control_floor, config.a_max, 300, config)
    rows = [[r.delta_phi, r.product, r.bound, r.regime] for r in recs if r.ok]
    return FigureBundle(
        "fig3",
        {"fig3_product.csv": (["delta_phi", "product", "bound", "regime"], rows)},
        ["CMUP curve only; intelligent-state comparison curves are out of scope"],
    )


def _fig5(config: SolverConfig) -> FigureBundle:
    recs = sweep(config.small_control_floor, config.a_max, 300, config)
    rows = []
    for r in recs:
        if not r.ok or r.regime == Regime.FLAT.value:
            continue
        rows.append([r.delta_lz, r.product, r.delta_phi, r.regime, "numeric"])
    lambdas = np.geomspace(1.0, 1e5, 100)
    for lam, st, d, prod in _airy_rows(lambdas, config):
        rows.append([math.sqrt(st.lz_variance), prod, d, Regime.LARGE.value, "airy"])
    return FigureBundle(
        "fig5",
        {"fig5_product_vs_delta_lz.csv": (["delta_lz", "product", "delta_phi", "branch", "source"], rows)},
        [
            "CMUP curves only; intelligent-state curves are out of scope",
            "small-uncertainty Gaussian limit is not emitted",
        ],
    )


def _fig6(config: SolverConfig) -> FigureBundle:
    phi = np.linspace(0.0, math.pi, 361)
    header = ["phi"]
    columns = []
    for t in (2.8, 3.0):
        num = solve_for_delta_phi(t, 1e-10, config)
        airy = airyapprox.airy_state(abs(num.lam))
        header += [f"psi_numeric_dphi_{t:.4f}", f"psi_airy_dphi_{t:.4f}"]
        columns += [np.asarray(num.psi(phi)), np.asarray(airy.psi(phi))]
    wave = [[p, *(c[i] for c in columns)] for i, p in enumerate(phi)]
    inset = []
    a1 = airyapprox.first_zero_ai_prime()
    for lam in np.geomspace(1.0, 1e4, 80):
        lam = float(lam)
        r = airyapprox.ratio_from_lambda_approx(lam)
        k = (2.0 * lam * r) ** (1.0 / 3.0)
        arg = -k * (math.pi - r)
        dphi = airyapprox.airy_state(lam).delta_phi
        inset.append([lam, dphi, arg, arg - a1])
    return FigureBundle(
        "fig6",
        {
            "fig6_wavefunctions.csv": (header, wave),
            "fig6_inset.csv": (["lambda", "delta_phi", "argument_at_pi", "deviation"], inset),
        },
        ["inset uses the leading-order turning point pi - |a1| (2 lambda pi)^(-1/3)"],
    )


def _fig7(config: SolverConfig) -> FigureBundle:
    rows = [[r.delta_phi, r.product, "numeric"] for r in _large_sweep(config, 120)]
    lambdas = np.geomspace(1.0, 1e6, 150)
    rows += [[d, prod, "airy"] for _, _, d, prod in _airy_rows(lambdas, config)]
    return FigureBundle(
        "fig7",
        {"fig7_product_large.csv": (["delta_phi", "product", "source"], rows)},
        [f"numeric rows stop at the configured ceiling a_max={config.a_max:g}"],
    )


_BUILDERS = {
    "fig1": _fig1,
    "fig2": _fig2,
    "fig3": _fig3,
    "fig5": _fig5,
    "fig6": _fig6,
    "fig7": _fig7,
}


def build_figure(figure_id: str, config: SolverConfig = DEFAULT_CONFIG) -> FigureBundle:
    try:
        builder = _BUILDERS[figure_id]
    except KeyError:
        raise ValueError(f"unknown figure {figure_id!r}; valid ids: {', '.join(FIGURE_IDS)}") from None
    return builder(config)
