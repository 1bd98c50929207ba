"""Integer chain complexes, Smith normal form, and Poincare polynomials.

Boundary matrices are built from the complex's incidence numbers, either
over a genuine subcomplex or over a reduced collection (keeping only
facets inside the reduction; that the square of the restricted boundary
vanishes is a theorem, so a nonzero square flags invalid input).  Ranks
are computed over the integers by Smith normal form with Python's
arbitrary-precision ints; torsion is reported but the identities in this
package only consume ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

from .cw import CellId, Complex, restrict_check
from .errors import BoundarySquareNonzero
from .functions import CellFunction
from .bott import Collection, reduce_collection

Matrix = list[list[int]]


class IntPolynomial:
    """Integer-coefficient polynomial in one variable, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coeff(k) - other.coeff(k) for k in range(n)]
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                t = "t" if k == 1 else f"t^{k}"
                body = t if abs(c) == 1 else f"{abs(c)}{t}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


ONE_PLUS_T = IntPolynomial([1, 1])


# -- integer linear algebra -------------------------------------------------

def _nearest_quotient(numerator: int, divisor: int) -> int:
    """Quotient whose remainder has magnitude at most half the divisor."""
    q, r = divmod(numerator, divisor)
    if 2 * abs(r) > abs(divisor):
        q += 1
    return q


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form: nonnegative, each dividing the next.

    Exact integer row/column operations.  The pivot is re-selected as
    the globally smallest nonzero entry whenever a reduction leaves a
    remainder; symmetric remainders at most halve it, so each corner
    settles in logarithmically many rounds and entries stay tame.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        head = m[t][t]
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t]:
                q = _nearest_quotient(m[i][t], head)
                if q:
                    for j in range(t, cols):
                        m[i][j] -= q * m[t][j]
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if m[t][j]:
                q = _nearest_quotient(m[t][j], head)
                if q:
                    for i in range(t, rows):
                        m[i][j] -= q * m[i][t]
                if m[t][j]:
                    dirty = True
        if dirty:
            continue
        # Divisibility: fold one non-multiple row into the pivot row and redo;
        # the next reduction pass then shrinks the pivot strictly.
        offender = None
        for i in range(t + 1, rows):
            if any(m[i][j] % head for j in range(t + 1, cols)):
                offender = i
                break
        if offender is not None:
            for j in range(t, cols):
                m[t][j] += m[offender][j]
            continue
        diag.append(abs(head))
        t += 1
    return diag


def smith_ranks(matrix: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """(rank over the rationals, invariant factors in divisibility order)."""
    diag = smith_normal_form(matrix)
    return len(diag), tuple(diag)


def torsion_factors(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(d for d in smith_normal_form(matrix) if d > 1)


def matrix_product(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a or not b:
        return []
    assert len(a[0]) == len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


# -- chain complexes --------------------------------------------------------

class ChainComplexZ:
    """Graded integer chain complex with validated boundary matrices.

    ``basis[k]`` lists the k-cells in order; ``boundary[k]`` maps
    ``basis[k]`` into ``basis[k-1]`` (rows indexed by the lower basis).
    The square of the boundary is checked at construction.
    """

    def __init__(self, basis: dict[int, tuple[CellId, ...]], boundary: dict[int, Matrix]) -> None:
        self.max_dim = max((k for k, cells in basis.items() if cells), default=0)
        self.basis = {k: tuple(basis.get(k, ())) for k in range(self.max_dim + 1)}
        self.boundary = {k: boundary.get(k, []) for k in range(self.max_dim + 1)}
        for k in range(2, self.max_dim + 1):
            lower, upper = self.boundary[k - 1], self.boundary[k]
            if not lower or not upper:
                continue
            square = matrix_product(lower, upper)
            for i, row in enumerate(square):
                for j, entry in enumerate(row):
                    if entry:
                        raise BoundarySquareNonzero(
                            f"boundary square nonzero at dimension {k}, entry ({i}, {j})"
                        )

    def cells_per_dim(self) -> list[int]:
        return [len(self.basis[k]) for k in range(self.max_dim + 1)]


def _boundary_matrices(
    complex: Complex, members: AbstractSet[CellId]
) -> tuple[dict[int, tuple[CellId, ...]], dict[int, Matrix]]:
    chosen = sorted(members, key=lambda c: (complex.dim_of(c), c))
    basis: dict[int, tuple[CellId, ...]] = {}
    for cid in chosen:
        basis.setdefault(complex.dim_of(cid), ())
        basis[complex.dim_of(cid)] += (cid,)
    top = max(basis, default=0)
    boundary: dict[int, Matrix] = {}
    for k in range(1, top + 1):
        lower = basis.get(k - 1, ())
        upper = basis.get(k, ())
        index = {cid: i for i, cid in enumerate(lower)}
        mat = [[0] * len(upper) for _ in lower]
        for j, tau in enumerate(upper):
            for sigma in complex.facets(tau):
                if sigma in members:
                    mat[index[sigma]][j] = complex.incidence(tau, sigma)
        boundary[k] = mat
    return basis, boundary


def chain_complex(complex: Complex, cells: AbstractSet[CellId] | None = None) -> ChainComplexZ:
    """Chain complex of the whole complex or of a validated subcomplex."""
    members = restrict_check(complex, cells)
    basis, boundary = _boundary_matrices(complex, members)
    return ChainComplexZ(basis, boundary)


def reduced_chain_complex(complex: Complex, f: CellFunction, col: Collection) -> ChainComplexZ:
    """Chain complex of a reduced collection.

    The basis is the reduction; the boundary keeps only facets inside
    it.  The reduction is generally not a subcomplex, but for Morse-Bott
    input the restricted boundary still squares to zero.
    """
    if col.reduced is None:
        col = reduce_collection(complex, f, col)
    assert col.reduced is not None
    basis, boundary = _boundary_matrices(complex, col.reduced)
    return ChainComplexZ(basis, boundary)


@dataclass(frozen=True)
class RankProfile:
    """Per-dimension ranks: cells, cycles, boundaries, and Betti numbers."""

    cells: tuple[int, ...]
    cycles: tuple[int, ...]
    boundaries: tuple[int, ...]
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]


def rank_profile(cc: ChainComplexZ) -> RankProfile:
    top = cc.max_dim
    cells = [len(cc.basis[k]) for k in range(top + 1)]
    boundary_rank = [0] * (top + 2)
    factors: list[tuple[int, ...]] = [()] * (top + 2)
    for k in range(1, top + 1):
        rank, invariants = smith_ranks(cc.boundary[k])
        boundary_rank[k] = rank
        factors[k] = tuple(d for d in invariants if d > 1)
    cycles = [cells[k] - boundary_rank[k] for k in range(top + 1)]
    boundaries = [boundary_rank[k + 1] for k in range(top + 1)]
    betti = [cycles[k] - boundaries[k] for k in range(top + 1)]
    for k in range(top + 1):
        # rank-nullity bookkeeping; failures mean the boundary data is corrupt
        assert cells[k] == cycles[k] + boundary_rank[k]
        assert betti[k] >= 0
    return RankProfile(
        cells=tuple(cells),
        cycles=tuple(cycles),
        boundaries=tuple(boundaries),
        betti=tuple(betti),
        torsion=tuple(factors[k + 1] for k in range(top + 1)),
    )


def betti_numbers(cc: ChainComplexZ) -> tuple[int, ...]:
    return rank_profile(cc).betti


def poincare(cc: ChainComplexZ) -> IntPolynomial:
    return IntPolynomial(rank_profile(cc).betti)


def poincare_of_complex(complex: Complex, cells: AbstractSet[CellId] | None = None) -> IntPolynomial:
    return poincare(chain_complex(complex, cells))
