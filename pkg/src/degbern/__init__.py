"""Exact degenerate Bernoulli, Stirling, Fubini and poly-Bernoulli polynomials."""

from .bernoulli import (
    beta_deg_at_r,
    beta_deg_gf,
    beta_deg_number,
    beta_deg_poly,
    carlitz_beta,
    fubini_deg,
    fubini_neg_arg,
    integrated_fubini,
)
from .identities import CATALOG, Limits, run_identity, run_suite
from .polybern import poly_bernoulli, poly_bernoulli_at_neg_r, poly_bernoulli_closed, poly_bernoulli_gf
from .reports import IdentityReport
from .rings import LAM, X, Y, Poly
from .series import TruncatedSeries
from .stirling import rstirling2_deg, stirling2_deg, stirling_poly

__all__ = [
    "CATALOG",
    "IdentityReport",
    "LAM",
    "Limits",
    "Poly",
    "TruncatedSeries",
    "X",
    "Y",
    "beta_deg_at_r",
    "beta_deg_gf",
    "beta_deg_number",
    "beta_deg_poly",
    "carlitz_beta",
    "fubini_deg",
    "fubini_neg_arg",
    "integrated_fubini",
    "poly_bernoulli",
    "poly_bernoulli_at_neg_r",
    "poly_bernoulli_closed",
    "poly_bernoulli_gf",
    "rstirling2_deg",
    "run_identity",
    "run_suite",
    "stirling2_deg",
    "stirling_poly",
]
