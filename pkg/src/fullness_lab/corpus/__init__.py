"""Bundled problem files with embedded expected values.

`example_4_1` is a parameterized family (integers a, b, c >= 2); its
invariants are independent of the parameters, and the corpus ships the
default (2,2,2) instance plus a (2,3,4) instance as a cross-check.
"""
from __future__ import annotations

import json
from importlib import resources

_FILES = (
    "example_4_1.json",
    "example_4_1_234.json",
    "example_4_2_I.json",
    "example_4_2_L.json",
    "example_4_3.json",
    "regular_2d.json",
    "regular_3d_parameter.json",
)


def make_example_4_1(a: int = 2, b: int = 2, c: int = 2) -> dict:
    """Two-dimensional rational-singularity presentation with a 2-generated
    minimal reduction of m; the invariants are (n1, n2, n3) = (1, 0, 1) for
    every choice of parameters >= 2."""
    if min(a, b, c) < 2:
        raise ValueError("parameters must be at least 2")
    name = "example_4_1" if (a, b, c) == (2, 2, 2) else f"example_4_1_{a}{b}{c}"
    return {
        "name": name,
        "description": (
            "2-dimensional Cohen-Macaulay local ring (rational triple point); "
            f"parameters (a, b, c) = ({a}, {b}, {c}); I is a minimal reduction of m"
        ),
        "slow": False,
        "ring": {
            "characteristic": 32003,
            "variables": ["x", "y", "z", "t"],
            "relations": [
                f"x*y - t^{a + b}",
                f"x*z - t^{a + c} + z*t^{a}",
                f"y*z - y*t^{c} + z*t^{b}",
            ],
        },
        "ideals": {"I": ["x + y + z", "t"]},
        "task": "dao",
        "options": {"ideal": "I", "seed": 20260808, "trials": 5, "assert_dim": 2, "assert_minimal": True},
        "expected": {"r": 1, "s": 1, "n1": 1, "n2": 0, "n3": 1},
    }


def _read(name: str) -> dict:
    with resources.files(__package__).joinpath(name).open("r", encoding="utf-8") as fh:
        return json.load(fh)


def load(name: str) -> dict:
    """Load a bundled problem by name (with or without the .json suffix)."""
    fname = name if name.endswith(".json") else f"{name}.json"
    if fname not in _FILES:
        raise KeyError(f"no bundled problem named {name!r}")
    return _read(fname)


def path(name: str) -> str:
    fname = name if name.endswith(".json") else f"{name}.json"
    return str(resources.files(__package__).joinpath(fname))


def listing() -> list[dict]:
    out = []
    for fname in _FILES:
        problem = _read(fname)
        out.append(
            {
                "name": problem["name"],
                "path": path(fname),
                "task": problem.get("task"),
                "slow": bool(problem.get("slow", False)),
                "description": problem.get("description", ""),
                "expected": problem.get("expected"),
            }
        )
    return out
