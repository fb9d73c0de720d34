"""Exact computations in noncommutative invariant theory."""

import json

from ._ncinv import (
    InternalError,
    ResourceError,
    UsageError,
    bound_thm_3_2,
    bound_thm_3_4,
    holds_in_algebra,
    nh_member,
    normalize,
    nu,
    power_certificate,
    quotient_dimension,
)
from ._ncinv import run_task_json as _run_task_json

__all__ = [
    "InternalError",
    "ResourceError",
    "UsageError",
    "bound_thm_3_2",
    "bound_thm_3_4",
    "holds_in_algebra",
    "nh_member",
    "normalize",
    "nu",
    "power_certificate",
    "quotient_dimension",
    "run_task",
]


def run_task(config, *, threads=None, seed=None, degree_cap=None):
    """Run a task described by a config dict and return the report dict."""
    text = config if isinstance(config, str) else json.dumps(config)
    return json.loads(_run_task_json(text, threads, seed, degree_cap))
