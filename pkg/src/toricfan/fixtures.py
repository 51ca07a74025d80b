"""Small named fans used by the tests and reachable from the CLI via ``--fixture``.

Each entry is a FanFile-shaped dict (``dim``, ``rays``, ``cones``, ``name``).
"""

from __future__ import annotations

FIXTURES: dict[str, dict] = {
    "p1": {
        "name": "P1",
        "dim": 1,
        "rays": [[1], [-1]],
        "cones": [[0], [1]],
    },
    "p2": {
        "name": "P2",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1]],
        "cones": [[0, 1], [1, 2], [0, 2]],
    },
    "p1xp1": {
        "name": "P1 x P1",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
        "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
    },
    "f1": {
        "name": "Hirzebruch F1",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]],
        "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
    },
    "p3": {
        "name": "P3",
        "dim": 3,
        "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
        "cones": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
    },
    "p1xp1xp1": {
        "name": "P1 x P1 x P1",
        "dim": 3,
        "rays": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
        "cones": [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)],
    },
    "weighted_p2": {
        "name": "P(1,1,2)-type complete simplicial, not smooth",
        "dim": 2,
        "rays": [[1, 0], [1, 2], [-1, 0], [0, -1]],
        "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
    },
    "orthant": {
        "name": "affine plane",
        "dim": 2,
        "rays": [[1, 0], [0, 1]],
        "cones": [[0, 1]],
    },
    "antipodal": {
        "name": "antipodal quadrants",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
        "cones": [[0, 1], [2, 3]],
    },
    "half_plane": {
        "name": "upper half-plane",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 0]],
        "cones": [[0, 1], [1, 2]],
    },
    "three_quadrants": {
        "name": "three quadrants",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
        "cones": [[0, 1], [0, 3], [2, 3]],
    },
    "p2_minus_cone": {
        "name": "P2 with one maximal cone removed",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1]],
        "cones": [[0, 1], [1, 2], [0], [2]],
    },
}

COMPLETE_EVEN = ("p1", "p2", "p1xp1", "f1", "p3", "p1xp1xp1")


def fixture_fan(name: str):
    from .cli import fan_from_dict

    return fan_from_dict(FIXTURES[name])
