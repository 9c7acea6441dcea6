"""Topological invariants of nodal and random partitions of grid surfaces."""

import json

from ._nodalpart import (
    InstabilityError,
    InvalidInput,
    InvariantViolation,
    NodalpartError,
    ResolutionError,
    run_cli,
)
from . import _nodalpart

__all__ = [
    "InstabilityError",
    "InvalidInput",
    "InvariantViolation",
    "NodalpartError",
    "ResolutionError",
    "invariants",
    "random_partition",
    "run",
    "run_cli",
    "stable_invariants",
    "verify",
]


def _doc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def invariants(partition):
    """Invariants, singular vertices and domain types of a partition dict."""
    return json.loads(_nodalpart.partition_report(_doc(partition)))


def verify(partition):
    """Like invariants(), plus the verdict for the partition's surface."""
    return json.loads(_nodalpart.verify(_doc(partition)))


def random_partition(surface, seed, k):
    """Seeded flood-fill partition; surface is e.g. {"surface": "moebius", "width": 32, "height": 32}."""
    return json.loads(_nodalpart.random_partition(_doc(surface), seed, k))


def stable_invariants(function, surface="moebius", resolution=64, max_refine=5):
    """Invariants of an eigenfunction's sign pattern, refined until they settle.

    `function` is {"family": "phi", "beta": b, "theta": t}, {"family": "bands", "m": m}
    or an explicit {"terms": [...]} document.
    """
    return json.loads(_nodalpart.stable_invariants(_doc(function), surface, resolution, max_refine))


def run(*args):
    """Run a CLI subcommand in-process. Returns (exit_code, parsed JSON or None, stderr)."""
    code, out, err = run_cli([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None), err
