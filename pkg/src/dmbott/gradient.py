"""Combinatorial vector fields, descent paths, and Morse synthesis.

A vector field is a partial matching of cells to regular cofacets that
is injective and whose image is unmatched.  Its descent structure is a
digraph on matched cells: one step goes up along the matching and back
down to a different facet.  On a finite complex the field is positively
bounded exactly when that digraph is acyclic, and an acyclic field is
the downhill gradient of a discrete Morse function, which
``synthesize_morse`` constructs with exact dyadic values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .cw import CellId, Complex
from .errors import ClosedOrbitPresent, InvalidField, NonUniqueCofacet, UnknownCell
from .functions import CellFunction, nc_cofacets, snc_cofacets
from .morse import require_morse
from .bott import require_morse_bott


class VectorField:
    """A partial matching cell -> cofacet, compared by its set of arrows."""

    def __init__(self, matching: Mapping[CellId, CellId] | Iterable[tuple[CellId, CellId]] = ()) -> None:
        self.matching = dict(matching)

    def __len__(self) -> int:
        return len(self.matching)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.matching == other.matching

    def __repr__(self) -> str:
        return f"VectorField({len(self.matching)} arrows)"

    def pairs(self) -> tuple[tuple[CellId, CellId], ...]:
        return tuple(sorted(self.matching.items()))

    def image(self) -> frozenset[CellId]:
        return frozenset(self.matching.values())


# Vector-field condition codes.
IMAGE_MATCHED = "image_matched"          # a cell in the image is itself matched
NOT_REGULAR_FACET = "not_regular_facet"  # matched cell is not a regular facet of its target
NOT_INJECTIVE = "not_injective"          # two cells share a target


@dataclass(frozen=True)
class FieldViolation:
    condition: str
    cell: CellId
    witness: CellId


@dataclass(frozen=True)
class FieldVerdict:
    is_valid: bool
    violations: tuple[FieldViolation, ...]


def validate_vector_field(complex: Complex, field: VectorField) -> FieldVerdict:
    for sigma, tau in field.matching.items():
        for ref in (sigma, tau):
            if ref not in complex:
                raise UnknownCell(f"matching references unknown cell {ref!r}")
    violations: list[FieldViolation] = []
    image = field.image()
    for sigma, tau in field.pairs():
        if sigma in image:
            violations.append(FieldViolation(IMAGE_MATCHED, sigma, tau))
        if not complex.is_facet(sigma, tau) or not complex.is_regular_face(sigma, tau):
            violations.append(FieldViolation(NOT_REGULAR_FACET, sigma, tau))
    targets: dict[CellId, CellId] = {}
    for sigma, tau in field.pairs():
        if tau in targets:
            violations.append(FieldViolation(NOT_INJECTIVE, sigma, targets[tau]))
        else:
            targets[tau] = sigma
    return FieldVerdict(not violations, tuple(violations))


def require_valid_field(complex: Complex, field: VectorField) -> None:
    verdict = validate_vector_field(complex, field)
    if not verdict.is_valid:
        first = verdict.violations[0]
        raise InvalidField(
            f"invalid vector field ({len(verdict.violations)} violations, "
            f"first: {first.condition} at {first.cell!r})"
        )


# -- gradients of functions ---------------------------------------------------

def morse_gradient(complex: Complex, f: CellFunction) -> VectorField:
    """Match every cell to its noncritical cofacet, for a Morse function."""
    require_morse(complex, f)
    matching: dict[CellId, CellId] = {}
    for sigma in complex.cell_ids():
        ups = nc_cofacets(f, sigma)
        if len(ups) > 1:
            raise NonUniqueCofacet(f"{sigma!r} has {len(ups)} noncritical cofacets")
        if ups:
            (matching[sigma],) = ups
    return VectorField(matching)


def strict_gradient(complex: Complex, f: CellFunction) -> VectorField:
    """Match every cell to its strictly-noncritical cofacet, for Morse-Bott f.

    Uniqueness follows from the collection-relative counter bound: a
    strict drop leaves the cell's own collection.
    """
    require_morse_bott(complex, f)
    matching: dict[CellId, CellId] = {}
    for sigma in complex.cell_ids():
        ups = snc_cofacets(f, sigma)
        if len(ups) > 1:
            raise NonUniqueCofacet(f"{sigma!r} has {len(ups)} strict noncritical cofacets")
        if ups:
            (matching[sigma],) = ups
    return VectorField(matching)


# -- descent structure --------------------------------------------------------

def descent_digraph(complex: Complex, field: VectorField) -> dict[CellId, tuple[CellId, ...]]:
    """Successor map between matched cells: up the matching, down to another facet."""
    matched = set(field.matching)
    graph: dict[CellId, tuple[CellId, ...]] = {}
    for sigma, tau in field.pairs():
        nexts = [s for s in complex.facets(tau) if s != sigma and s in matched]
        graph[sigma] = tuple(sorted(nexts))
    return graph


def find_closed_orbit(complex: Complex, field: VectorField) -> tuple[CellId, ...] | None:
    """A cycle of matched cells realizing a closed descent path, or None."""
    graph = descent_digraph(complex, field)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {node: WHITE for node in graph}
    parent: dict[CellId, CellId] = {}
    for root in sorted(graph):
        if colour[root] != WHITE:
            continue
        stack: list[tuple[CellId, int]] = [(root, 0)]
        colour[root] = GREY
        while stack:
            node, idx = stack[-1]
            if idx < len(graph[node]):
                stack[-1] = (node, idx + 1)
                nxt = graph[node][idx]
                if colour[nxt] == GREY:
                    cycle = [nxt]
                    cur = node
                    while cur != nxt:
                        cycle.append(cur)
                        cur = parent[cur]
                    cycle.reverse()
                    return tuple(cycle)
                if colour[nxt] == WHITE:
                    colour[nxt] = GREY
                    parent[nxt] = node
                    stack.append((nxt, 0))
            else:
                colour[node] = BLACK
                stack.pop()
    return None


def has_closed_orbit(complex: Complex, field: VectorField) -> tuple[bool, tuple[CellId, ...] | None]:
    orbit = find_closed_orbit(complex, field)
    return orbit is not None, orbit


def is_positively_bounded(complex: Complex, field: VectorField) -> bool:
    """On a finite complex: no closed orbit, i.e. all descent paths are finite."""
    return find_closed_orbit(complex, field) is None


def descent_depth(complex: Complex, field: VectorField) -> dict[CellId, int]:
    """Longest descent-path length from each matched cell.

    A path may end on an unmatched facet, which still counts one step;
    well defined only for fields without closed orbits.
    """
    matched = set(field.matching)
    depth: dict[CellId, int] = {}

    def resolve(sigma: CellId) -> int:
        if sigma in depth:
            return depth[sigma]
        best = 0
        for nu in complex.facets(field.matching[sigma]):
            if nu == sigma:
                continue
            best = max(best, 1 + (resolve(nu) if nu in matched else 0))
        depth[sigma] = best
        return best

    for sigma in sorted(matched):
        resolve(sigma)
    return depth


def synthesize_morse(complex: Complex, field: VectorField) -> CellFunction:
    """Build a discrete Morse function whose downhill gradient is ``field``.

    Skeleton by skeleton: unmatched cells take their dimension as value;
    a matched cell is lifted above its dimension by the dyadic sum
    1/2 + ... + 1/2^depth, and its target copies that value.  Depths
    strictly decrease along descent edges, which makes every unmatched
    facet relation strictly increasing while matched pairs tie.
    """
    require_valid_field(complex, field)
    orbit = find_closed_orbit(complex, field)
    if orbit is not None:
        raise ClosedOrbitPresent(f"closed orbit through {', '.join(orbit)}")
    depth = descent_depth(complex, field)
    values: dict[CellId, Fraction] = {}
    for cell in complex.cells:
        if cell.id in field.matching:
            values[cell.id] = cell.dim + 1 - Fraction(1, 2 ** depth[cell.id])
    for sigma, tau in field.matching.items():
        values[tau] = values[sigma]
    for cell in complex.cells:
        values.setdefault(cell.id, Fraction(cell.dim))
    return CellFunction(complex, values)


def realize_strict_gradient(complex: Complex, f: CellFunction) -> CellFunction:
    """A Morse function whose gradient equals the strict gradient of ``f``.

    ``f`` must be Morse-Bott; the synthesized function is validated by
    the round trip back through ``morse_gradient``.
    """
    field = strict_gradient(complex, f)
    g = synthesize_morse(complex, field)
    round_trip = morse_gradient(complex, g)
    if round_trip != field:
        raise NonUniqueCofacet("synthesized function does not reproduce the strict gradient")
    return g
