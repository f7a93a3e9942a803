"""Antiprimitive BCH codes: cosets, code construction, distance certificates."""

import json
from pathlib import Path

from . import _core
from ._core import (
    AntibchError,
    bch_bound,
    coset,
    dimension_formula,
    esp_distance_condition,
    gcd_special,
    is_leader_closed_form,
    largest_leaders_m2,
    set_thread_count,
    thread_count,
)

__version__ = _core.__version__

_GOLDEN = Path(__file__).with_name("golden_cases.json")


def cosets(q, m):
    return json.loads(_core.cosets_json(q, m))


def code(q, m, delta, b):
    return json.loads(_core.code_json(q, m, delta, b))


def certify(q, m, delta, b, **budgets):
    return json.loads(_core.certificate_json(q, m, delta, b, **budgets))


def block_set(q, k, l, budget=1 << 26):
    return json.loads(_core.block_set_json(q, k, l, budget))


def zetterberg(p, m, wmax, budget=1 << 26):
    return json.loads(_core.zetterberg_json(p, m, wmax, budget))


def verify(suite="paper-examples", seed=7):
    if _GOLDEN.exists():
        return json.loads(_core.verify_json(suite, seed, str(_GOLDEN)))
    return json.loads(_core.verify_json(suite, seed))
