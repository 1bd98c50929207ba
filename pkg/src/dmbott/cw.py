"""Combinatorial model of a finite CW complex.

A complex is a graded poset of cells.  Covering pairs (facets, dimension
gap one) carry an integer incidence number and a regularity flag;
comparable pairs with gap two or more are regular by default and may be
declared irregular as input data.  The face order is the transitive
closure of the covering pairs, so every comparable pair with gap >= 2
factors through intermediate cells.

Complexes are immutable after construction and safe for concurrent
reads.  Validation happens once, at build time:

* ids are unique and all references resolve,
* covering pairs drop dimension by exactly one,
* regular covering pairs have incidence +1 or -1,
* the boundary-square condition holds: for every comparable pair with
  gap two, the signed count of intermediate cells vanishes,
* regular comparable pairs with gap >= 2 have a nonempty open interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import (
    BoundarySquareNonzero,
    DanglingReference,
    DuplicateId,
    EmptyIntervalViolation,
    EmptySimplex,
    GradingViolation,
    NotAFace,
    NotASubcomplex,
    NotComparable,
    RegularityInconsistent,
    UnknownCell,
)

CellId = str


@dataclass(frozen=True, order=True)
class Cell:
    id: CellId
    dim: int


@dataclass(frozen=True, order=True)
class CoveringPair:
    """A facet relation face < cell with dim(cell) = dim(face) + 1.

    ``incidence`` is the integer coefficient the cell contributes to the
    boundary matrix entry [cell : face].  ``regular`` facets must have
    incidence +1 or -1; irregular ones may have any integer, e.g. 0 for
    the one-cell circle whose attaching map hits its vertex twice.
    """

    face: CellId
    cell: CellId
    incidence: int
    regular: bool = True


class Complex:
    """A validated finite CW complex presented combinatorially."""

    def __init__(
        self,
        cells: Iterable[Cell],
        coverings: Iterable[CoveringPair] = (),
        deep_irregular: Iterable[tuple[CellId, CellId]] = (),
    ) -> None:
        cells = tuple(cells)
        dims: dict[CellId, int] = {}
        for cell in cells:
            if cell.id in dims:
                raise DuplicateId(f"cell id {cell.id!r} declared twice")
            if cell.dim < 0:
                raise GradingViolation(f"cell {cell.id!r} has negative dimension")
            dims[cell.id] = cell.dim

        facets: dict[CellId, dict[CellId, int]] = {c.id: {} for c in cells}
        cofacets: dict[CellId, dict[CellId, int]] = {c.id: {} for c in cells}
        irr_facet_pairs: set[tuple[CellId, CellId]] = set()
        for pair in coverings:
            for ref in (pair.face, pair.cell):
                if ref not in dims:
                    raise DanglingReference(f"covering pair references unknown cell {ref!r}")
            if dims[pair.cell] != dims[pair.face] + 1:
                raise GradingViolation(
                    f"covering pair ({pair.face!r}, {pair.cell!r}) has dimension gap "
                    f"{dims[pair.cell] - dims[pair.face]}, expected 1"
                )
            if pair.face in facets[pair.cell]:
                raise DuplicateId(f"covering pair ({pair.face!r}, {pair.cell!r}) declared twice")
            if pair.regular and abs(pair.incidence) != 1:
                raise RegularityInconsistent(
                    f"regular facet ({pair.face!r}, {pair.cell!r}) has incidence {pair.incidence}"
                )
            facets[pair.cell][pair.face] = pair.incidence
            cofacets[pair.face][pair.cell] = pair.incidence
            if not pair.regular:
                irr_facet_pairs.add((pair.face, pair.cell))

        # Transitive closure by increasing dimension; covering pairs drop
        # exactly one dimension, so the order is graded and acyclic.
        faces: dict[CellId, frozenset[CellId]] = {}
        for cell in sorted(cells, key=lambda c: (c.dim, c.id)):
            below: set[CellId] = set()
            for face in facets[cell.id]:
                below.add(face)
                below |= faces[face]
            faces[cell.id] = frozenset(below)
        cofaces: dict[CellId, set[CellId]] = {c.id: set() for c in cells}
        for cid, below in faces.items():
            for face in below:
                cofaces[face].add(cid)

        deep_irr: set[tuple[CellId, CellId]] = set()
        for low, high in deep_irregular:
            for ref in (low, high):
                if ref not in dims:
                    raise DanglingReference(f"deep irregular pair references unknown cell {ref!r}")
            if low not in faces[high]:
                raise NotAFace(f"deep irregular pair ({low!r}, {high!r}) is not comparable")
            if dims[high] - dims[low] < 2:
                raise NotAFace(
                    f"deep irregular pair ({low!r}, {high!r}) has gap 1; "
                    "flag the covering pair instead"
                )
            deep_irr.add((low, high))

        self._cells = tuple(sorted(cells, key=lambda c: (c.dim, c.id)))
        self._dims = dims
        self._facets = facets
        self._cofacets = cofacets
        self._faces = faces
        self._cofaces = {cid: frozenset(s) for cid, s in cofaces.items()}
        self._irr_facet_pairs = frozenset(irr_facet_pairs)
        self._deep_irr = frozenset(deep_irr)
        self._by_dim: dict[int, tuple[CellId, ...]] = {}
        for cell in self._cells:
            self._by_dim.setdefault(cell.dim, ())
        for cell in self._cells:
            self._by_dim[cell.dim] += (cell.id,)
        self.max_dim = max((c.dim for c in cells), default=-1)

        self._check_boundary_square()
        self._check_regular_intervals()

    # -- validation ---------------------------------------------------

    def _check_boundary_square(self) -> None:
        for tau in self._dims:
            for nu in self._faces[tau]:
                if self._dims[tau] - self._dims[nu] != 2:
                    continue
                total = 0
                for alpha, inc_ta in self._facets[tau].items():
                    inc_an = self._facets[alpha].get(nu)
                    if inc_an is not None:
                        total += inc_ta * inc_an
                if total != 0:
                    raise BoundarySquareNonzero(
                        f"boundary square is {total} on pair ({nu!r}, {tau!r})"
                    )

    def _check_regular_intervals(self) -> None:
        # Necessary condition for deep regularity: something must sit
        # strictly between.  Vacuous while the order is the transitive
        # closure of coverings, but guards representation changes.
        for tau in self._dims:
            for nu in self._faces[tau]:
                if self._dims[tau] - self._dims[nu] < 2:
                    continue
                if (nu, tau) in self._deep_irr:
                    continue
                if not any(nu in self._faces[alpha] for alpha in self._facets[tau]):
                    raise EmptyIntervalViolation(
                        f"regular pair ({nu!r}, {tau!r}) has an empty open interval"
                    )

    # -- basic queries --------------------------------------------------

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, cell_id: CellId) -> bool:
        return cell_id in self._dims

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self):
        return (self._cells, self.covering_pairs(), tuple(sorted(self._deep_irr)))

    def __repr__(self) -> str:
        counts = " ".join(str(len(self._by_dim.get(k, ()))) for k in range(self.max_dim + 1))
        return f"Complex({len(self._cells)} cells, per dim {counts or '-'})"

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self._cells

    def cell_ids(self) -> tuple[CellId, ...]:
        return tuple(c.id for c in self._cells)

    def cells_of_dim(self, dim: int) -> tuple[CellId, ...]:
        return self._by_dim.get(dim, ())

    def dim_of(self, cell_id: CellId) -> int:
        self._require(cell_id)
        return self._dims[cell_id]

    def covering_pairs(self) -> tuple[CoveringPair, ...]:
        pairs = [
            CoveringPair(face, cell, inc, (face, cell) not in self._irr_facet_pairs)
            for cell, row in self._facets.items()
            for face, inc in row.items()
        ]
        return tuple(sorted(pairs))

    def deep_irregular_pairs(self) -> tuple[tuple[CellId, CellId], ...]:
        return tuple(sorted(self._deep_irr))

    def _require(self, *cell_ids: CellId) -> None:
        for cid in cell_ids:
            if cid not in self._dims:
                raise UnknownCell(f"unknown cell {cid!r}")

    # -- order structure ------------------------------------------------

    def facets(self, tau: CellId) -> frozenset[CellId]:
        self._require(tau)
        return frozenset(self._facets[tau])

    def cofacets(self, sigma: CellId) -> frozenset[CellId]:
        self._require(sigma)
        return frozenset(self._cofacets[sigma])

    def faces(self, tau: CellId) -> frozenset[CellId]:
        """All cells strictly below ``tau`` in the face order."""
        self._require(tau)
        return self._faces[tau]

    def cofaces(self, sigma: CellId) -> frozenset[CellId]:
        self._require(sigma)
        return self._cofaces[sigma]

    def is_face(self, low: CellId, high: CellId) -> bool:
        self._require(low, high)
        return low in self._faces[high]

    def is_facet(self, low: CellId, high: CellId) -> bool:
        self._require(low, high)
        return low in self._facets[high]

    def interval(self, low: CellId, high: CellId) -> frozenset[CellId]:
        """Open interval: cells strictly between ``low`` and ``high``."""
        self._require(low, high)
        if low not in self._faces[high]:
            raise NotComparable(f"{low!r} is not a face of {high!r}")
        return frozenset(a for a in self._faces[high] if low in self._faces[a])

    def incidence(self, tau: CellId, sigma: CellId) -> int:
        """Incidence number [tau : sigma] of a covering pair."""
        self._require(tau, sigma)
        inc = self._facets[tau].get(sigma)
        if inc is None:
            raise NotAFace(f"{sigma!r} is not a facet of {tau!r}")
        return inc

    # -- regularity -------------------------------------------------------

    def is_regular_face(self, low: CellId, high: CellId) -> bool:
        self._require(low, high)
        if low not in self._faces[high]:
            raise NotAFace(f"{low!r} is not a face of {high!r}")
        if low in self._facets[high]:
            return (low, high) not in self._irr_facet_pairs
        return (low, high) not in self._deep_irr

    def irregular_cofacets(self, sigma: CellId) -> frozenset[CellId]:
        self._require(sigma)
        return frozenset(t for t in self._cofacets[sigma] if (sigma, t) in self._irr_facet_pairs)

    def irregular_facets(self, tau: CellId) -> frozenset[CellId]:
        self._require(tau)
        return frozenset(s for s in self._facets[tau] if (s, tau) in self._irr_facet_pairs)

    def irregular_up(self, sigma: CellId) -> frozenset[CellId]:
        """Cells above ``sigma`` in the full irregular relation, any gap."""
        self._require(sigma)
        deep = {t for (s, t) in self._deep_irr if s == sigma}
        return self.irregular_cofacets(sigma) | deep

    def irregular_down(self, tau: CellId) -> frozenset[CellId]:
        self._require(tau)
        deep = {s for (s, t) in self._deep_irr if t == tau}
        return self.irregular_facets(tau) | deep

    # -- subcomplexes ------------------------------------------------------

    def closure(self, cell_ids: Iterable[CellId]) -> frozenset[CellId]:
        """The given cells together with all of their faces."""
        closed: set[CellId] = set()
        for cid in cell_ids:
            self._require(cid)
            closed.add(cid)
            closed |= self._faces[cid]
        return frozenset(closed)

    def is_subcomplex(self, cell_ids: Iterable[CellId]) -> bool:
        cell_set = frozenset(cell_ids)
        return self.closure(cell_set) == cell_set


def build_complex(
    cells: Iterable[Cell],
    coverings: Iterable[CoveringPair] = (),
    deep_irregular: Iterable[tuple[CellId, CellId]] = (),
) -> Complex:
    return Complex(cells, coverings, deep_irregular)


def simplex_id(vertices: Iterable[Hashable]) -> CellId:
    return "-".join(sorted(str(v) for v in vertices))


def from_simplicial(facet_list: Sequence[Iterable[Hashable]]) -> Complex:
    """Build the simplicial complex generated by the given simplices.

    Every subset of every listed simplex is included.  Incidence numbers
    follow the alternating-sign rule on vertex lists sorted by their
    string form, and every face pair is regular.  Cell ids join the
    sorted vertex labels with ``-``.
    """
    if not facet_list:
        raise EmptySimplex("facet list is empty")
    simplices: set[tuple[str, ...]] = set()
    for facet in facet_list:
        vertices = tuple(sorted({str(v) for v in facet}))
        if not vertices:
            raise EmptySimplex("a simplex needs at least one vertex")
        for size in range(1, len(vertices) + 1):
            simplices.update(combinations(vertices, size))

    cells = [Cell("-".join(s), len(s) - 1) for s in simplices]
    coverings = []
    for simplex in simplices:
        if len(simplex) == 1:
            continue
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            coverings.append(
                CoveringPair("-".join(face), "-".join(simplex), (-1) ** i, regular=True)
            )
    return Complex(cells, coverings)


def restrict_check(complex: Complex, cell_ids: Iterable[CellId] | None) -> frozenset[CellId]:
    """Normalize an optional subcomplex restriction, validating closedness."""
    if cell_ids is None:
        return frozenset(complex.cell_ids())
    subset = frozenset(cell_ids)
    for cid in subset:
        complex._require(cid)
    if not complex.is_subcomplex(subset):
        raise NotASubcomplex("restriction set is not closed under faces")
    return subset
