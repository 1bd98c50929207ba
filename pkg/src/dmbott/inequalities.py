"""Count statistics and the exact Morse / Morse-Bott polynomial identities.

Both identity checkers recompute every ingredient from scratch (counts,
ranks, collection reductions) so a failure localizes the faulty stage
rather than trusting cached values.  All arithmetic is exact; equality
of polynomials is literal coefficient equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Mapping

from .cw import CellId, Complex, restrict_check
from .errors import NotACycle
from .functions import (
    CellFunction,
    nc_cofacets,
    nc_facets,
    require_same_complex,
    snc_facets,
    snc_cofacets,
)
from .morse import require_morse
from .bott import collection_map, collections, reduce_all, require_morse_bott
from .homology import (
    IntPolynomial,
    ONE_PLUS_T,
    chain_complex,
    poincare,
    rank_profile,
    reduced_chain_complex,
)


@dataclass(frozen=True)
class CountProfile:
    """Per-dimension counts over a subcomplex.

    ``up``/``down`` count noncritical facet pairs from below/above;
    ``strict_up``/``strict_down`` their strict variants; ``critical``
    counts cells with no noncritical pair at all; ``reduced_cells``
    counts cells surviving the reduction of their collection (relative
    to the subcomplex), or is None when the restricted function is not
    Morse-Bott and reductions are undefined.
    """

    cells: tuple[int, ...]
    critical: tuple[int, ...]
    up: tuple[int, ...]
    down: tuple[int, ...]
    reduced_cells: tuple[int, ...] | None
    strict_up: tuple[int, ...]
    strict_down: tuple[int, ...]
    is_morse: bool
    is_morse_bott: bool


def count_profile(
    complex: Complex, f: CellFunction, subset: AbstractSet[CellId] | None = None
) -> CountProfile:
    """Exact counts over a subcomplex, with the decomposition identities checked.

    The plain decomposition cells = critical + up + down holds when the
    restricted function is Morse; the strict one holds when it is
    Morse-Bott.  The shift identities up_k = down_{k+1} hold always.
    """
    require_same_complex(complex, f)
    members = restrict_check(complex, subset)
    top = complex.max_dim
    cells = [0] * (top + 1)
    critical = [0] * (top + 1)
    up = [0] * (top + 1)
    down = [0] * (top + 1)
    strict_up = [0] * (top + 1)
    strict_down = [0] * (top + 1)
    for sigma in sorted(members):
        k = complex.dim_of(sigma)
        cells[k] += 1
        n_up = len(nc_cofacets(f, sigma, members))
        n_down = len(nc_facets(f, sigma, members))
        up[k] += n_up
        down[k] += n_down
        strict_up[k] += len(snc_cofacets(f, sigma, members))
        strict_down[k] += len(snc_facets(f, sigma, members))
        if n_up == 0 and n_down == 0:
            critical[k] += 1

    for k in range(top):
        assert up[k] == down[k + 1]
        assert strict_up[k] == strict_down[k + 1]
    assert up[top] == 0 and strict_up[top] == 0

    is_morse = check_morse_restricted(complex, f, members)
    is_mb = check_morse_bott_restricted(complex, f, members)

    reduced_cells: list[int] | None = None
    if is_mb:
        reduced_cells = [0] * (top + 1)
        for col in reduce_all(complex, f, members):
            assert col.reduced is not None
            for sigma in col.reduced:
                reduced_cells[complex.dim_of(sigma)] += 1
        for k in range(top + 1):
            assert cells[k] == reduced_cells[k] + strict_up[k] + strict_down[k]
    if is_morse:
        for k in range(top + 1):
            assert cells[k] == critical[k] + up[k] + down[k]

    return CountProfile(
        cells=tuple(cells),
        critical=tuple(critical),
        up=tuple(up),
        down=tuple(down),
        reduced_cells=tuple(reduced_cells) if reduced_cells is not None else None,
        strict_up=tuple(strict_up),
        strict_down=tuple(strict_down),
        is_morse=is_morse,
        is_morse_bott=is_mb,
    )


def check_morse_restricted(
    complex: Complex, f: CellFunction, members: AbstractSet[CellId]
) -> bool:
    """Morse conditions for the restriction of ``f`` to a subcomplex."""
    for sigma in members:
        if any(t in members and f[sigma] >= f[t] for t in complex.irregular_cofacets(sigma)):
            return False
        if any(n in members and f[n] >= f[sigma] for n in complex.irregular_facets(sigma)):
            return False
        if len(nc_cofacets(f, sigma, members)) > 1 or len(nc_facets(f, sigma, members)) > 1:
            return False
    return True


def check_morse_bott_restricted(
    complex: Complex, f: CellFunction, members: AbstractSet[CellId]
) -> bool:
    for col in collections(complex, f, members):
        for sigma in col.cells:
            if any(t in members and f[sigma] >= f[t] for t in complex.irregular_up(sigma)):
                return False
            if any(n in members and f[n] >= f[sigma] for n in complex.irregular_down(sigma)):
                return False
            if len(nc_cofacets(f, sigma, members) - col.cells) > 1:
                return False
            if len(nc_facets(f, sigma, members) - col.cells) > 1:
                return False
    return True


@dataclass(frozen=True)
class IdentityReport:
    """One polynomial identity: lhs = poincare + (1 + t) * residual."""

    lhs: IntPolynomial
    poincare: IntPolynomial
    residual: IntPolynomial
    holds: bool
    nonnegative: bool


def _identity_report(
    lhs: IntPolynomial, p_complex: IntPolynomial, residual: IntPolynomial
) -> IdentityReport:
    holds = lhs == p_complex + ONE_PLUS_T * residual
    return IdentityReport(lhs, p_complex, residual, holds, residual.is_nonnegative())


def morse_identity(complex: Complex, f: CellFunction) -> IdentityReport:
    """Critical-count polynomial against the Poincare polynomial.

    The residual in degree k-1 is (rank of the (k-1)-boundaries) minus
    the count of noncritical facet pairs into dimension k; exact
    equality and coefficientwise nonnegativity are theorems for Morse
    input.
    """
    require_morse(complex, f)
    profile = count_profile(complex, f)
    ranks = rank_profile(chain_complex(complex))
    top = complex.max_dim
    lhs = IntPolynomial(profile.critical)
    residual = IntPolynomial(
        [ranks.boundaries[k - 1] - profile.down[k] for k in range(1, top + 1)]
    )
    return _identity_report(lhs, poincare(chain_complex(complex)), residual)


def morse_bott_identity(complex: Complex, f: CellFunction) -> IdentityReport:
    """Sum of reduced-collection Poincare polynomials against the complex's.

    The residual in degree k-1 subtracts, from the rank of the
    (k-1)-boundaries, the strict facet-pair count into dimension k and
    every collection's reduced boundary rank.
    """
    require_morse_bott(complex, f)
    profile = count_profile(complex, f)
    ranks = rank_profile(chain_complex(complex))
    top = complex.max_dim
    cols = reduce_all(complex, f)
    lhs = IntPolynomial([0])
    collection_boundary_rank = [0] * (top + 2)
    for col in cols:
        cc = reduced_chain_complex(complex, f, col)
        lhs = lhs + poincare(cc)
        col_ranks = rank_profile(cc)
        for k in range(cc.max_dim + 1):
            collection_boundary_rank[k] += col_ranks.boundaries[k]
    residual = IntPolynomial(
        [
            ranks.boundaries[k - 1] - profile.strict_down[k] - collection_boundary_rank[k - 1]
            for k in range(1, top + 1)
        ]
    )
    return _identity_report(lhs, poincare(chain_complex(complex)), residual)


def morse_reduction_check(complex: Complex, f: CellFunction) -> bool:
    """For Morse input the Morse-Bott identity collapses into the Morse one.

    Verifies the two collapse equalities: the reduced-collection
    Poincare sum equals the critical-count polynomial, and the plain
    down-count splits into the strict down-count plus the reduced
    boundary ranks, dimension by dimension.
    """
    require_morse(complex, f)
    profile = count_profile(complex, f)
    top = complex.max_dim
    lhs = IntPolynomial([0])
    collection_boundary_rank = [0] * (top + 2)
    for col in reduce_all(complex, f):
        cc = reduced_chain_complex(complex, f, col)
        lhs = lhs + poincare(cc)
        col_ranks = rank_profile(cc)
        for k in range(cc.max_dim + 1):
            collection_boundary_rank[k] += col_ranks.boundaries[k]
    if lhs != IntPolynomial(profile.critical):
        return False
    for k in range(top + 1):
        below = collection_boundary_rank[k - 1] if k >= 1 else 0
        if profile.down[k] != profile.strict_down[k] + below:
            return False
    return True


def cycle_restriction_check(
    complex: Complex, f: CellFunction, chain: Mapping[CellId, int], dim: int
) -> bool:
    """Restrict a cycle to the reduced collection of its top-value cell.

    ``chain`` must be a nonzero cycle supported in dimension ``dim``.
    For every maximal-value support cell that survives its collection's
    reduction, the restriction of the cycle to that reduction must again
    be a nonzero cycle of the reduced boundary; returns False (no claim)
    when no maximal-value support cell survives reduction.
    """
    require_morse_bott(complex, f)
    support = {cid: c for cid, c in chain.items() if c != 0}
    if not support:
        raise NotACycle("the zero chain is excluded")
    for cid in support:
        if complex.dim_of(cid) != dim:
            raise NotACycle(f"support cell {cid!r} is not {dim}-dimensional")
    boundary: dict[CellId, int] = {}
    for cid, coeff in support.items():
        for face in complex.facets(cid):
            boundary[face] = boundary.get(face, 0) + coeff * complex.incidence(cid, face)
    if any(boundary.values()):
        raise NotACycle("the chain has nonzero boundary")

    cols = reduce_all(complex, f)
    by_cell = collection_map(cols)
    top_value = max(f[cid] for cid in support)
    qualified = False
    for alpha in sorted(support):
        if f[alpha] != top_value:
            continue
        col = by_cell[alpha]
        assert col.reduced is not None
        if alpha not in col.reduced:
            continue
        qualified = True
        restricted = {cid: c for cid, c in support.items() if cid in col.reduced}
        assert restricted, "restriction lost the qualifying cell"
        reduced_boundary: dict[CellId, int] = {}
        for cid, coeff in restricted.items():
            for face in complex.facets(cid):
                if face in col.reduced:
                    reduced_boundary[face] = (
                        reduced_boundary.get(face, 0) + coeff * complex.incidence(cid, face)
                    )
        if any(reduced_boundary.values()):
            raise NotACycle(
                f"restriction to the reduction of {alpha!r}'s collection is not a cycle"
            )
    return qualified
