"""Cohomology of log symplectic manifolds with normal crossing divisors."""

import json

from ._logsym import (
    Error,
    InputError,
    Model,
    ParseError,
    ResourceError,
    b_cohomology,
    commands,
    de_rham_betti_oracle,
    enumerate_index_sets,
    run,
    torus_b_cohomology,
    truncated_lichnerowicz,
)

__all__ = [
    "Error",
    "InputError",
    "Model",
    "ParseError",
    "ResourceError",
    "b_cohomology",
    "commands",
    "de_rham_betti_oracle",
    "enumerate_index_sets",
    "load",
    "poisson_cohomology",
    "report",
    "run",
    "torus_b_cohomology",
    "truncated_lichnerowicz",
]


def load(path):
    return Model.load(str(path))


def report(command, model, **flags):
    """JSON report of a CLI command as a dict, exit code included."""
    _, text = run(command, model, format="json", **flags)
    return json.loads(text)


def poisson_cohomology(model, strict_jk=False):
    result = report("poisson-cohomology", model, strict_jk=strict_jk)
    if result["exit_code"] != 0:
        raise Error(f"poisson-cohomology failed with status {result['status']}")
    return result["dims"]
