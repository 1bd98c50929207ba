"""Collections, Morse-Bott validation, and reduced collections.

A collection is a maximal set of equal-valued cells linked by facet
relations inside the level set; the collections of any function
partition the complex.  A function is discrete Morse-Bott when
irregular comparable pairs (any dimension gap) strictly increase its
value and, relative to each cell's own collection, at most one
noncritical cofacet and at most one noncritical facet lie outside.

Reducing a collection removes its upward noncritical cells (exactly one
noncritical cofacet outside) and downward noncritical cells (same,
below).  For a Morse-Bott function no cell is both, so the reduction is
well defined; violations of that trichotomy signal non-Morse-Bott
input.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import AbstractSet

from .cw import CellId, Complex
from .errors import NotMorseBott, SubcomplexViolation, TrichotomyViolation
from .functions import (
    CellFunction,
    nc_facets_outside,
    nc_cofacets_outside,
    require_same_complex,
    up_degree_outside,
)
from .morse import (
    EXCESS_DOWN,
    EXCESS_UP,
    IRREGULAR_DOWN,
    IRREGULAR_UP,
    Violation,
    check_morse,
)


@dataclass(frozen=True)
class Collection:
    """One block of the level-set partition, optionally with its reduction."""

    value: Fraction
    cells: frozenset[CellId]
    reduced: frozenset[CellId] | None = None
    removed_up: frozenset[CellId] | None = None
    removed_down: frozenset[CellId] | None = None

    def __len__(self) -> int:
        return len(self.cells)

    def sort_key(self) -> tuple:
        return (self.value, tuple(sorted(self.cells)))


@dataclass(frozen=True)
class MorseBottVerdict:
    is_morse_bott: bool
    violations: tuple[Violation, ...]


def collections(
    complex: Complex, f: CellFunction, within: AbstractSet[CellId] | None = None
) -> tuple[Collection, ...]:
    """Partition the (restricted) complex into collections of ``f``.

    Components are computed per level set, joining two cells when one is
    a facet of the other; maximality in the definition is exactly
    connectedness under that relation.
    """
    require_same_complex(complex, f)
    domain = frozenset(complex.cell_ids()) if within is None else frozenset(within)
    levels: dict[Fraction, list[CellId]] = {}
    for cid in complex.cell_ids():
        if cid in domain:
            levels.setdefault(f[cid], []).append(cid)

    result: list[Collection] = []
    for value, members in levels.items():
        member_set = set(members)
        seen: set[CellId] = set()
        for start in members:
            if start in seen:
                continue
            component: set[CellId] = set()
            stack = [start]
            while stack:
                cur = stack.pop()
                if cur in component:
                    continue
                component.add(cur)
                neighbours = complex.facets(cur) | complex.cofacets(cur)
                stack.extend(n for n in neighbours if n in member_set and n not in component)
            seen |= component
            result.append(Collection(value, frozenset(component)))
    result.sort(key=Collection.sort_key)
    return tuple(result)


def collection_map(cols: tuple[Collection, ...]) -> dict[CellId, Collection]:
    mapping: dict[CellId, Collection] = {}
    for col in cols:
        for cid in col.cells:
            mapping[cid] = col
    return mapping


def check_morse_bott(complex: Complex, f: CellFunction) -> MorseBottVerdict:
    """Check the four Morse-Bott conditions against the actual partition.

    The irregular conditions range over the full comparable relation
    (any dimension gap); the counter conditions exclude each cell's own
    collection.
    """
    require_same_complex(complex, f)
    cols = collections(complex, f)
    violations: list[Violation] = []
    for col in cols:
        for sigma in sorted(col.cells):
            for tau in sorted(complex.irregular_up(sigma)):
                if f[sigma] >= f[tau]:
                    violations.append(Violation(sigma, IRREGULAR_UP, (tau,)))
            ups = nc_cofacets_outside(f, sigma, col.cells)
            if len(ups) > 1:
                violations.append(Violation(sigma, EXCESS_UP, tuple(sorted(ups))))
            for nu in sorted(complex.irregular_down(sigma)):
                if f[nu] >= f[sigma]:
                    violations.append(Violation(sigma, IRREGULAR_DOWN, (nu,)))
            downs = nc_facets_outside(f, sigma, col.cells)
            if len(downs) > 1:
                violations.append(Violation(sigma, EXCESS_DOWN, tuple(sorted(downs))))
    violations.sort(key=lambda v: (v.cell, v.condition))
    return MorseBottVerdict(not violations, tuple(violations))


def require_morse_bott(complex: Complex, f: CellFunction) -> None:
    verdict = check_morse_bott(complex, f)
    if not verdict.is_morse_bott:
        first = verdict.violations[0]
        raise NotMorseBott(
            f"function is not discrete Morse-Bott ({len(verdict.violations)} violations, "
            f"first: {first.condition} at {first.cell!r})"
        )


def reduce_collection(
    complex: Complex,
    f: CellFunction,
    col: Collection,
    within: AbstractSet[CellId] | None = None,
) -> Collection:
    """Classify and delete the upward/downward noncritical cells of ``col``.

    Assumes ``f`` is Morse-Bott on the (restricted) complex; a cell that
    is both upward and downward noncritical contradicts that and raises
    TrichotomyViolation.
    """
    up: set[CellId] = set()
    down: set[CellId] = set()
    for sigma in col.cells:
        if len(nc_cofacets_outside(f, sigma, col.cells, within)) == 1:
            up.add(sigma)
        if len(nc_facets_outside(f, sigma, col.cells, within)) == 1:
            down.add(sigma)
    overlap = up & down
    if overlap:
        raise TrichotomyViolation(
            f"cells both upward and downward noncritical: {sorted(overlap)}; "
            "the function is not Morse-Bott"
        )
    return replace(
        col,
        reduced=frozenset(col.cells - up - down),
        removed_up=frozenset(up),
        removed_down=frozenset(down),
    )


def reduce_all(
    complex: Complex, f: CellFunction, within: AbstractSet[CellId] | None = None
) -> tuple[Collection, ...]:
    return tuple(
        reduce_collection(complex, f, col, within)
        for col in collections(complex, f, within)
    )


def morse_equivalence_check(complex: Complex, f: CellFunction) -> bool:
    """Cross-validate the Morse/Morse-Bott structure equivalence.

    Returns whether [f is Morse] agrees with [f is Morse-Bott and every
    collection is a singleton, or equals its own reduction with exactly
    two cells].  Agreement is a theorem, so False flags a bug.
    """
    lhs = check_morse(complex, f).is_morse
    if not check_morse_bott(complex, f).is_morse_bott:
        return lhs is False
    rhs = True
    for col in reduce_all(complex, f):
        if len(col.cells) == 1:
            continue
        if len(col.cells) == 2 and col.reduced == col.cells:
            continue
        rhs = False
        break
    return lhs == rhs


def closure_difference(complex: Complex, f: CellFunction, col: Collection) -> frozenset[CellId]:
    """The closure of the reduced collection minus the reduction itself.

    Validates two facts about the difference: it is a subcomplex, and
    every difference cell at the collection's own value is upward
    noncritical in its own collection.  Failures signal invalid input or
    an implementation bug.
    """
    if col.reduced is None:
        col = reduce_collection(complex, f, col)
    assert col.reduced is not None
    diff = complex.closure(col.reduced) - col.reduced
    if not complex.is_subcomplex(diff):
        raise SubcomplexViolation(
            f"closure difference of collection at value {col.value} is not a subcomplex"
        )
    level_map = collection_map(collections(complex, f))
    for sigma in diff:
        if f[sigma] != col.value:
            continue
        own = level_map[sigma]
        if up_degree_outside(f, sigma, own.cells) != 1:
            raise SubcomplexViolation(
                f"difference cell {sigma!r} at the collection value is not upward noncritical"
            )
    return diff
