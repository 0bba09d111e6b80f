"""Anytime-valid confidence sequences for means of [0,1]-bounded streams."""

from ._core import (
    BettingConfig,
    BettingEngine,
    BootstrapConfig,
    BootstrapEngine,
    Interval,
    PredictableStats,
    PrEbEngine,
    batch_index,
    bootstrap_ci,
    gen_bernoulli_stream,
    gen_beta_stream,
    predictable_fraction,
    psi_e,
    quantile,
)

__version__ = "0.1.0"

__all__ = [
    "BettingConfig",
    "BettingEngine",
    "BootstrapConfig",
    "BootstrapEngine",
    "Interval",
    "PredictableStats",
    "PrEbEngine",
    "batch_index",
    "bootstrap_ci",
    "gen_bernoulli_stream",
    "gen_beta_stream",
    "predictable_fraction",
    "psi_e",
    "quantile",
]
