"""Exact fair-division toolkit: JSON-first wrapper over the C++ core.

Instances and allocations are plain dicts matching the CLI's JSON schemas;
every rational value is a string like "3/4".
"""

import json

from . import _fairdiv
from ._fairdiv import BudgetExhausted, ParseError

NOTIONS = ("ef", "ef1", "efx", "prop", "mms", "eef", "mma", "mma1", "mmax")
DEFAULT_MAX_NODES = 100_000_000


def check(instance, allocation, notion, alpha="1", max_nodes=DEFAULT_MAX_NODES):
    """Evaluate a fairness notion; returns the full per-agent report."""
    return json.loads(
        _fairdiv.check(json.dumps(instance), json.dumps(allocation), notion, str(alpha), max_nodes)
    )


def mms(instance, agent=1, k=2, max_nodes=DEFAULT_MAX_NODES):
    return json.loads(_fairdiv.partition(json.dumps(instance), "mms", agent, k, max_nodes))


def leximin(instance, agent=1, k=2, max_nodes=DEFAULT_MAX_NODES):
    return json.loads(_fairdiv.partition(json.dumps(instance), "leximin", agent, k, max_nodes))


def minimax(instance, agent=1, k=2, max_nodes=DEFAULT_MAX_NODES):
    return json.loads(_fairdiv.partition(json.dumps(instance), "minimax", agent, k, max_nodes))


def solve(instance, algo="matching", max_nodes=DEFAULT_MAX_NODES):
    """Run an allocation algorithm: matching, three-agents, or identical-leximin."""
    return json.loads(_fairdiv.solve(json.dumps(instance), algo, max_nodes))


def search(instance, notion, alpha="1", max_nodes=DEFAULT_MAX_NODES):
    """Exhaustively decide whether an allocation satisfying the notion exists."""
    return json.loads(_fairdiv.search(json.dumps(instance), notion, str(alpha), max_nodes))


def generate(valuation_class="additive", n=3, m=6, seed=0, index=0):
    """Deterministically generate a random instance of the given class."""
    return json.loads(_fairdiv.generate(valuation_class, n, m, seed, index))


def catalog():
    """The bundled worked instances with their reference allocations."""
    return json.loads(_fairdiv.catalog())


__all__ = [
    "BudgetExhausted",
    "ParseError",
    "NOTIONS",
    "check",
    "mms",
    "leximin",
    "minimax",
    "solve",
    "search",
    "generate",
    "catalog",
]
