"""Exact-valued cell functions and the noncritical face relations.

Values are exact rationals so that equality of values is decidable:
level sets and collections are defined by exact equality, and floats
would corrupt that partition.  A facet pair is *noncritical* (nc) when
the value fails to increase strictly upward; the strict variant (snc)
requires an actual drop.
"""

from __future__ import annotations

from fractions import Fraction
from typing import AbstractSet, Iterator, Mapping, Union

from .cw import CellId, Complex
from .errors import (
    CellNotInCollection,
    DomainMismatch,
    ParseError,
    PartialFunction,
    UnknownCell,
)

RationalLike = Union[int, str, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    """Convert an exact literal (int, Fraction, 'p', 'p/q' or decimal string)."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a cell value")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("float values are inexact; pass int, Fraction or string")
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class CellFunction:
    """A total map from the cells of one complex to exact rationals."""

    def __init__(self, complex: Complex, values: Mapping[CellId, RationalLike]) -> None:
        vals: dict[CellId, Fraction] = {}
        for cid, v in values.items():
            if cid not in complex:
                raise UnknownCell(f"value given for unknown cell {cid!r}")
            vals[cid] = as_fraction(v)
        missing = [cid for cid in complex.cell_ids() if cid not in vals]
        if missing:
            raise PartialFunction(f"no value for cells: {', '.join(missing)}")
        self.complex = complex
        self._values = vals

    def __getitem__(self, cell_id: CellId) -> Fraction:
        try:
            return self._values[cell_id]
        except KeyError:
            raise UnknownCell(f"unknown cell {cell_id!r}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CellFunction):
            return NotImplemented
        return self.complex == other.complex and self._values == other._values

    def __repr__(self) -> str:
        return f"CellFunction(on {len(self._values)} cells)"

    def items(self) -> Iterator[tuple[CellId, Fraction]]:
        for cell in self.complex.cells:
            yield cell.id, self._values[cell.id]

    def level_sets(self) -> dict[Fraction, frozenset[CellId]]:
        levels: dict[Fraction, set[CellId]] = {}
        for cid, v in self._values.items():
            levels.setdefault(v, set()).add(cid)
        return {v: frozenset(s) for v, s in levels.items()}

    def rescaled(self, scale: RationalLike = 1, shift: RationalLike = 0) -> "CellFunction":
        a, b = as_fraction(scale), as_fraction(shift)
        return CellFunction(self.complex, {c: a * v + b for c, v in self._values.items()})


def require_same_complex(complex: Complex, f: CellFunction) -> None:
    if f.complex is not complex and f.complex != complex:
        raise DomainMismatch("cell function was built against a different complex")


# -- noncritical relations ------------------------------------------------

def is_nc_facet(f: CellFunction, face: CellId, cell: CellId) -> bool:
    """face is a facet of cell and the value does not increase."""
    K = f.complex
    return K.is_facet(face, cell) and f[face] >= f[cell]


def is_snc(f: CellFunction, face: CellId, cell: CellId) -> bool:
    """face is a face of cell (any gap) and the value strictly drops."""
    K = f.complex
    return K.is_face(face, cell) and f[face] > f[cell]


def is_snc_facet(f: CellFunction, face: CellId, cell: CellId) -> bool:
    K = f.complex
    return K.is_facet(face, cell) and f[face] > f[cell]


def _member(within: AbstractSet[CellId] | None, cid: CellId) -> bool:
    return within is None or cid in within


def nc_cofacets(
    f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None
) -> frozenset[CellId]:
    return frozenset(
        t for t in f.complex.cofacets(sigma) if _member(within, t) and f[sigma] >= f[t]
    )


def nc_facets(
    f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None
) -> frozenset[CellId]:
    return frozenset(
        n for n in f.complex.facets(sigma) if _member(within, n) and f[n] >= f[sigma]
    )


def snc_cofacets(
    f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None
) -> frozenset[CellId]:
    return frozenset(
        t for t in f.complex.cofacets(sigma) if _member(within, t) and f[sigma] > f[t]
    )


def snc_facets(
    f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None
) -> frozenset[CellId]:
    return frozenset(
        n for n in f.complex.facets(sigma) if _member(within, n) and f[n] > f[sigma]
    )


def up_degree(f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None) -> int:
    """Number of noncritical cofacets of ``sigma`` (restricted to ``within``)."""
    return len(nc_cofacets(f, sigma, within))


def down_degree(f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None) -> int:
    return len(nc_facets(f, sigma, within))


def nc_cofacets_outside(
    f: CellFunction,
    sigma: CellId,
    collection_cells: AbstractSet[CellId],
    within: AbstractSet[CellId] | None = None,
) -> frozenset[CellId]:
    """Noncritical cofacets lying outside the given collection."""
    if sigma not in collection_cells:
        raise CellNotInCollection(f"{sigma!r} is not in the given collection")
    return frozenset(t for t in nc_cofacets(f, sigma, within) if t not in collection_cells)


def nc_facets_outside(
    f: CellFunction,
    sigma: CellId,
    collection_cells: AbstractSet[CellId],
    within: AbstractSet[CellId] | None = None,
) -> frozenset[CellId]:
    if sigma not in collection_cells:
        raise CellNotInCollection(f"{sigma!r} is not in the given collection")
    return frozenset(n for n in nc_facets(f, sigma, within) if n not in collection_cells)


def up_degree_outside(
    f: CellFunction,
    sigma: CellId,
    collection_cells: AbstractSet[CellId],
    within: AbstractSet[CellId] | None = None,
) -> int:
    return len(nc_cofacets_outside(f, sigma, collection_cells, within))


def down_degree_outside(
    f: CellFunction,
    sigma: CellId,
    collection_cells: AbstractSet[CellId],
    within: AbstractSet[CellId] | None = None,
) -> int:
    return len(nc_facets_outside(f, sigma, collection_cells, within))


def is_critical(f: CellFunction, sigma: CellId, within: AbstractSet[CellId] | None = None) -> bool:
    return up_degree(f, sigma, within) == 0 and down_degree(f, sigma, within) == 0
