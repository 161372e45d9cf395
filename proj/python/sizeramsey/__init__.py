"""Size-Ramsey path workbench.

Thin wrapper over the compiled core. Operations that produce structured
reports return them as dicts decoded from the same JSON documents the
command line tool writes, so the two front ends can never drift apart.
"""

import json as _json

from ._core import (
    CapExceededError,
    Colouring,
    Graph,
    InvalidArgumentError,
    InvariantViolationError,
    OutOfRegimeError,
    RamseyParams,
    RetryExhaustedError,
    adversary_colour,
    derive_seed,
    expected_pair_edges,
    geometric_r_grid,
    longest_path,
    minimize_parametric_c,
    sample_gnp,
    splitmix64,
    union_bound_coefficient,
    union_bound_log_failure,
)
from ._core import arrows_decide as _arrows_decide
from ._core import bound_table as _bound_table
from ._core import build_host as _build_host
from ._core import chernoff_failure_bound as _chernoff_failure_bound
from ._core import check_expansion_exact as _check_expansion_exact
from ._core import check_expansion_monte_carlo as _check_expansion_monte_carlo
from ._core import find_monochromatic_path as _find_monochromatic_path
from ._core import min_size_ramsey as _min_size_ramsey
from ._core import phase_run as _phase_run
from ._core import run_ramsey_trials as _run_ramsey_trials
from ._core import trial_chain as _trial_chain


def build_host(params, seed, retry_limit=100):
    """Sample a host graph; returns (Graph, report dict)."""
    graph, report = _build_host(params, seed, retry_limit)
    return graph, _json.loads(report)


def chernoff_failure_bound(params):
    """Per-pair tail bound as (log_exact, log_simplified)."""
    return _chernoff_failure_bound(params)


def check_expansion_exact(graph, n, budget, pair_cap=100_000_000):
    return _json.loads(_check_expansion_exact(graph, n, budget, pair_cap))


def check_expansion_monte_carlo(graph, n, budget, trials, seed):
    return _json.loads(_check_expansion_monte_carlo(graph, n, budget, trials, seed))


def find_monochromatic_path(graph, colouring, n, try_all_colours=False):
    """Majority-colour phase search; returns the certificate as a dict."""
    return _json.loads(_find_monochromatic_path(graph, colouring, n, try_all_colours))


def phase_run(graph, colouring, colour, n, phase_count):
    return _json.loads(_phase_run(graph, colouring, colour, n, phase_count))


def trial_chain(graph, colouring, params):
    """Certificate plus the numeric contradiction-chain report."""
    return _json.loads(_trial_chain(graph, colouring, params))


def arrows_decide(graph, n, r, canonicalize=True, colouring_cap=1 << 20, path_cap=16):
    return _json.loads(_arrows_decide(graph, n, r, canonicalize, colouring_cap, path_cap))


def min_size_ramsey(n, r, vertex_cap):
    return _json.loads(_min_size_ramsey(n, r, vertex_cap))


def bound_table(rs, c=None):
    return _json.loads(_bound_table(rs, c))


def run_ramsey_trials(params, strategy, trials, seed):
    return _json.loads(_run_ramsey_trials(params, strategy, trials, seed))


__all__ = [
    "CapExceededError",
    "Colouring",
    "Graph",
    "InvalidArgumentError",
    "InvariantViolationError",
    "OutOfRegimeError",
    "RamseyParams",
    "RetryExhaustedError",
    "adversary_colour",
    "arrows_decide",
    "bound_table",
    "build_host",
    "chernoff_failure_bound",
    "check_expansion_exact",
    "check_expansion_monte_carlo",
    "derive_seed",
    "expected_pair_edges",
    "find_monochromatic_path",
    "geometric_r_grid",
    "longest_path",
    "min_size_ramsey",
    "minimize_parametric_c",
    "phase_run",
    "run_ramsey_trials",
    "sample_gnp",
    "splitmix64",
    "trial_chain",
    "union_bound_coefficient",
    "union_bound_log_failure",
]
