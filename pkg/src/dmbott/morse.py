"""Discrete Morse function validation and critical-cell extraction.

A function is discrete Morse when irregular facet pairs strictly
increase its value in both directions and every cell has at most one
noncritical cofacet and at most one noncritical facet.  Verdicts carry
every violation, with witnesses, so fixtures can assert exactly which
condition failed where.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet

from .cw import CellId, Complex
from .errors import NotMorse
from .functions import (
    CellFunction,
    down_degree,
    is_critical,
    nc_cofacets,
    nc_facets,
    require_same_complex,
    up_degree,
)

# Condition codes shared with the Morse-Bott checker.
IRREGULAR_UP = "irregular_up"      # an irregular face above does not increase the value
EXCESS_UP = "excess_up"            # more than one noncritical cofacet
IRREGULAR_DOWN = "irregular_down"  # an irregular face below does not increase the value
EXCESS_DOWN = "excess_down"        # more than one noncritical facet


@dataclass(frozen=True)
class Violation:
    cell: CellId
    condition: str
    witnesses: tuple[CellId, ...]


@dataclass(frozen=True)
class MorseVerdict:
    is_morse: bool
    violations: tuple[Violation, ...]


def check_morse(complex: Complex, f: CellFunction) -> MorseVerdict:
    """Check the four discrete Morse conditions on every cell.

    Irregularity is tested at facet level only; the Morse-Bott checker
    is the one that ranges over arbitrary dimension gaps.
    """
    require_same_complex(complex, f)
    violations: list[Violation] = []
    for sigma in complex.cell_ids():
        for tau in sorted(complex.irregular_cofacets(sigma)):
            if f[sigma] >= f[tau]:
                violations.append(Violation(sigma, IRREGULAR_UP, (tau,)))
        ups = nc_cofacets(f, sigma)
        if len(ups) > 1:
            violations.append(Violation(sigma, EXCESS_UP, tuple(sorted(ups))))
        for nu in sorted(complex.irregular_facets(sigma)):
            if f[nu] >= f[sigma]:
                violations.append(Violation(sigma, IRREGULAR_DOWN, (nu,)))
        downs = nc_facets(f, sigma)
        if len(downs) > 1:
            violations.append(Violation(sigma, EXCESS_DOWN, tuple(sorted(downs))))
    return MorseVerdict(not violations, tuple(violations))


def require_morse(complex: Complex, f: CellFunction) -> None:
    verdict = check_morse(complex, f)
    if not verdict.is_morse:
        first = verdict.violations[0]
        raise NotMorse(
            f"function is not discrete Morse ({len(verdict.violations)} violations, "
            f"first: {first.condition} at {first.cell!r})"
        )


def check_pairing_bound(complex: Complex, f: CellFunction) -> tuple[bool, CellId | None]:
    """For a Morse function each cell sits in at most one noncritical pair.

    Returns (True, None) or (False, witness).  A witness indicates an
    invalid complex or an internal error, since the bound is a theorem.
    """
    require_morse(complex, f)
    for sigma in complex.cell_ids():
        if up_degree(f, sigma) + down_degree(f, sigma) > 1:
            return False, sigma
    return True, None


def critical_cells(
    complex: Complex, f: CellFunction, within: AbstractSet[CellId] | None = None
) -> dict[int, tuple[CellId, ...]]:
    """Cells with no noncritical cofacet and no noncritical facet, by dimension."""
    require_same_complex(complex, f)
    graded: dict[int, tuple[CellId, ...]] = {k: () for k in range(complex.max_dim + 1)}
    for sigma in complex.cell_ids():
        if within is not None and sigma not in within:
            continue
        if is_critical(f, sigma, within):
            graded[complex.dim_of(sigma)] += (sigma,)
    return graded


def critical_counts(
    complex: Complex, f: CellFunction, within: AbstractSet[CellId] | None = None
) -> list[int]:
    graded = critical_cells(complex, f, within)
    return [len(graded[k]) for k in range(complex.max_dim + 1)]
