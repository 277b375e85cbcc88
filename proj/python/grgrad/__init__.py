"""Graded Jacobson radicals, socles and chain conditions over groupoid-graded rings.

Ring documents are JSON text (see ``build``); analyses return plain dicts.
"""

import json
from typing import Optional, Sequence

from ._grgrad import (
    DEFAULT_BUDGET,
    ConsistencyError,
    DocumentError,
    InputError,
    ResourceError,
    ValidationError,
    build,
    canonicalize,
    classify_chains_json,
    run_json,
    witness_json,
)

__all__ = [
    "DEFAULT_BUDGET",
    "ConsistencyError",
    "DocumentError",
    "InputError",
    "ResourceError",
    "ValidationError",
    "build",
    "canonicalize",
    "run",
    "classify_chains",
    "witness",
    "COMMANDS",
]

COMMANDS = (
    "validate",
    "radical",
    "socle",
    "loewy",
    "compseries",
    "semisimple",
    "semilocal",
    "fitting",
    "injective",
)


def run(
    command: str,
    document: str,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    module: Optional[str] = None,
) -> dict:
    """Run an analysis command on a ring document."""
    return json.loads(run_json(command, document, budget, seed, module))


def classify_chains(
    poset: str,
    side: Optional[str] = None,
    cond: Optional[str] = None,
    coeff_fails: Sequence[str] = (),
) -> dict:
    """Chain-condition verdicts for UT over a poset descriptor."""
    return json.loads(classify_chains_json(poset, side, cond, list(coeff_fails)))


def witness(poset: str, item: int, length: int = 10, base: Optional[str] = None) -> dict:
    """Certified strict chain of one-sided ideals for a failing item."""
    return json.loads(witness_json(poset, item, length, base))
