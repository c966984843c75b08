"""Conjunction, Born-rule and CHSH analysis of annotated count data."""

import json as _json
from os import PathLike as _PathLike

from ._qcog import (  # noqa: F401
    angle_from_probability,
    chsh_statistic,
    classify_overextension,
    degenerate_identity_check,
    enumerate_strategies,
    expectation,
    kolmogorov_interval,
    lhv_chsh_bound,
    local_membership,
    loss,
    measure_check,
    model_expectations,
    probability_from_angle,
    relative_frequency,
)
from . import _qcog

__all__ = [
    "angle_from_probability",
    "chsh_statistic",
    "classify_overextension",
    "conjunction_reports",
    "degenerate_identity_check",
    "enumerate_strategies",
    "expectation",
    "fit",
    "fit_item",
    "kolmogorov_interval",
    "lhv_chsh_bound",
    "local_membership",
    "loss",
    "measure_check",
    "membership_report",
    "model_expectations",
    "probability_from_angle",
    "relative_frequency",
    "run_suite",
]


def _read(source):
    if isinstance(source, (str, _PathLike)) and not str(source).lstrip().startswith(("{", "concept_a")):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return str(source)


def conjunction_reports(source):
    """Reports for every dataset in a conjunction CSV (path or CSV text)."""
    return _json.loads(_qcog._conjunction_reports(_read(source)))


def run_suite(source):
    """Full CHSH trace for a suite file (path or JSON text)."""
    return _json.loads(_qcog._run_suite(_read(source)))


def fit_item(item, p_a, p_ab, p_b):
    return _json.loads(_qcog._fit_item(item, p_a, p_ab, p_b))


def membership_report(expectations):
    return _json.loads(_qcog._membership_report(tuple(expectations)))


def fit(target):
    """Singlet-model least-squares fit to (E_AB, E_AB', E_A'B, E_A'B')."""
    return _json.loads(_qcog._fit(tuple(target)))
