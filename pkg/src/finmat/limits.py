"""Blow-up guard: configurable budgets on exact-scalar size.

Congruence-image computations are cheap, but the exact side can explode:
word evaluation over a function field multiplies polynomial entries, and
rational entries accumulate bits.  Every matrix-level operation checks its
result against the installed budget and aborts with ResourceLimitError when
an integer exceeds ``max_bits`` bits or a polynomial exceeds ``max_terms``
terms.  The error is a resource signal, distinct from any math verdict.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass

from .errors import ResourceLimitError

DEFAULT_MAX_BITS = 1 << 20
DEFAULT_MAX_TERMS = 1 << 14


@dataclass(frozen=True)
class ResourceBudget:
    max_bits: int = DEFAULT_MAX_BITS
    max_terms: int = DEFAULT_MAX_TERMS


_current = ResourceBudget()


def current_budget() -> ResourceBudget:
    return _current


def set_budget(budget: ResourceBudget) -> None:
    global _current
    _current = budget


@contextmanager
def budget(max_bits: int = DEFAULT_MAX_BITS, max_terms: int = DEFAULT_MAX_TERMS):
    """Temporarily install a budget (tests and CLI entry points use this)."""
    global _current
    old = _current
    _current = ResourceBudget(max_bits, max_terms)
    try:
        yield _current
    finally:
        _current = old


def check_bits(n: int) -> None:
    if n.bit_length() > _current.max_bits:
        raise ResourceLimitError(
            f"integer of {n.bit_length()} bits exceeds the {_current.max_bits}-bit budget"
        )


def check_terms(count: int) -> None:
    if count > _current.max_terms:
        raise ResourceLimitError(
            f"polynomial with {count} terms exceeds the {_current.max_terms}-term budget"
        )


def check_size(bits: int) -> None:
    """Like check_bits but for a precomputed bit count."""
    if bits > _current.max_bits:
        raise ResourceLimitError(
            f"scalar of {bits} bits exceeds the {_current.max_bits}-bit budget"
        )
