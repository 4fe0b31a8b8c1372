"""Enumeration caps.

Defaults can be overridden with ``SYMPOLY_BUDGET``, a comma separated list
of ``key=value`` pairs, e.g. ``SYMPOLY_BUDGET=cycles=5000000,flat_edges=24``.
"""

from __future__ import annotations

import os

DEFAULTS: dict[str, int] = {
    "cycles": 10**6,        # simple cycles enumerated per graph
    "flat_edges": 20,       # max |E| for lattice-of-flats enumeration
    "face_dim": 8,          # max polytope dimension for face lattices
    "lattice_n": 8,         # max vertex count for lattice-point scans
    "words": 10**7,         # max k**n for brute-force word counts
    "flows": 10**7,         # max (2k-2)**|E| for brute-force flow counts
    "section_dim": 4,       # max dimension of a KR section
}


def _parse(spec: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULTS:
            raise ValueError(f"bad SYMPOLY_BUDGET entry: {item!r}")
        out[key] = int(value)
    return out


def limit(key: str) -> int:
    """Current cap for ``key``, honouring the environment override."""
    overrides = _parse(os.environ.get("SYMPOLY_BUDGET", ""))
    return overrides.get(key, DEFAULTS[key])
