"""Seeded generators and independent oracles for property testing.

Everything here is deterministic under a fixed seed.  The Morse
generator goes through an acyclic matching and the synthesizer, so its
outputs are Morse by construction; the Morse-Bott generator merges
values of a Morse function one facet pair at a time, keeping only
merges that still validate, which produces genuinely non-Morse
functions (collections of three or more cells) at a healthy rate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .cw import Complex, from_simplicial
from .errors import FaceStructureViolation, GenerationExhausted
from .functions import CellFunction
from .morse import check_morse
from .bott import check_morse_bott
from .gradient import VectorField, find_closed_orbit, synthesize_morse


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_vertices: int = 6
    max_dim: int = 2
    edge_density: float = 0.55
    max_cells: int = 30
    merge_attempts: int | None = None  # default: 3x the cell count

    def rng(self, salt: int = 0) -> random.Random:
        return random.Random(self.seed * 1_000_003 + salt)


def random_simplicial(cfg: GenConfig) -> Complex:
    """A small random simplicial complex, closed under faces by construction."""
    rng = cfg.rng(1)
    if cfg.max_dim <= 0:
        n = rng.randint(1, max(1, cfg.max_vertices))
        return from_simplicial([{f"v{i}"} for i in range(n)])
    n = rng.randint(3, max(3, cfg.max_vertices))
    vertices = [f"v{i}" for i in range(n)]
    simplices: dict[int, list[tuple[str, ...]]] = {0: [(v,) for v in vertices]}
    for dim in range(1, cfg.max_dim + 1):
        simplices[dim] = []
        present = set(simplices[dim - 1])
        for candidate in combinations(vertices, dim + 1):
            if all(candidate[:i] + candidate[i + 1 :] in present for i in range(dim + 1)):
                if rng.random() < cfg.edge_density:
                    simplices[dim].append(candidate)
        if not simplices[dim]:
            break

    def cell_count() -> int:
        return sum(len(v) for v in simplices.values())

    for dim in sorted(simplices, reverse=True):
        while cell_count() > cfg.max_cells and simplices[dim]:
            simplices[dim].pop(rng.randrange(len(simplices[dim])))
    facets = [set(s) for group in simplices.values() for s in group]
    return from_simplicial(facets)


def random_acyclic_matching(complex: Complex, cfg: GenConfig) -> VectorField:
    """Greedy random matching on regular facet pairs, rejecting cycles."""
    rng = cfg.rng(2)
    candidates = [
        (pair.face, pair.cell) for pair in complex.covering_pairs() if pair.regular
    ]
    rng.shuffle(candidates)
    matching: dict[str, str] = {}
    used: set[str] = set()
    for sigma, tau in candidates:
        if sigma in used or tau in used:
            continue
        matching[sigma] = tau
        field = VectorField(matching)
        if find_closed_orbit(complex, field) is None:
            used.update((sigma, tau))
        else:
            del matching[sigma]
    return VectorField(matching)


def random_morse(complex: Complex, cfg: GenConfig) -> CellFunction:
    """Morse by construction: synthesize from a random acyclic matching."""
    return synthesize_morse(complex, random_acyclic_matching(complex, cfg))


def random_morse_bott(
    complex: Complex, cfg: GenConfig, require_non_morse: bool = False, retries: int = 40
) -> CellFunction:
    """Merge facet-pair values of a random Morse function while validity holds.

    With ``require_non_morse`` the generation is retried on fresh
    sub-seeds until the result fails the Morse check, raising
    GenerationExhausted after ``retries`` attempts.
    """
    for attempt in range(retries if require_non_morse else 1):
        f = _merged_morse_bott(complex, cfg, attempt)
        if not require_non_morse or not check_morse(complex, f).is_morse:
            return f
    raise GenerationExhausted(
        f"no non-Morse function after {retries} attempts at seed {cfg.seed}"
    )


def _merged_morse_bott(complex: Complex, cfg: GenConfig, salt: int) -> CellFunction:
    rng = cfg.rng(3 + 101 * salt)
    base = random_morse(complex, GenConfig(seed=cfg.seed + 7919 * salt, max_dim=cfg.max_dim))
    values = {cid: v for cid, v in base.items()}
    pairs = [(p.face, p.cell) for p in complex.covering_pairs()]
    if not pairs:
        return base
    attempts = cfg.merge_attempts if cfg.merge_attempts is not None else 3 * len(complex)
    for _ in range(attempts):
        sigma, tau = pairs[rng.randrange(len(pairs))]
        if values[sigma] == values[tau]:
            continue
        candidate = dict(values)
        if rng.random() < 0.5:
            candidate[tau] = values[sigma]
        else:
            candidate[sigma] = values[tau]
        g = CellFunction(complex, candidate)
        if check_morse_bott(complex, g).is_morse_bott:
            values = candidate
    return CellFunction(complex, values)


def rank_oracle(matrix: Sequence[Sequence[int]]) -> int:
    """Rank by exact fraction Gaussian elimination, independent of the
    Smith-normal-form path."""
    rows = [[Fraction(x) for x in row] for row in matrix if row]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class FaceStructureReport:
    chain_triples: int
    deep_regular_pairs: int
    facet_triples: int
    intervals_checked: int


def check_face_structure(complex: Complex) -> FaceStructureReport:
    """Exhaustively verify the face-poset facts that hold when every pair
    is regular (e.g. for simplicial complexes).

    * a two-step facet chain admits an alternative middle cell,
    * comparable pairs with gap >= 2 have a nonempty open interval,
    * below a facet of tau there is always a cell of (nu, tau) not under it,
    * no open interval of a gap >= 2 pair has exactly one element.

    Raises FaceStructureViolation with a witness on the first failure.
    """
    chain_triples = facet_triples = deep_pairs = intervals = 0
    for tau in complex.cell_ids():
        for sigma in complex.facets(tau):
            if not complex.is_regular_face(sigma, tau):
                continue
            for nu in complex.facets(sigma):
                if not complex.is_regular_face(nu, sigma):
                    continue
                chain_triples += 1
                others = [
                    s for s in complex.interval(nu, tau) if s != sigma and complex.is_facet(nu, s)
                ]
                if not others:
                    raise FaceStructureViolation(
                        f"no alternative middle cell for {nu!r} < {sigma!r} < {tau!r}"
                    )
            for nu in complex.faces(sigma):
                facet_triples += 1
                interval = complex.interval(nu, tau)
                if not any(
                    beta != sigma and not complex.is_face(beta, sigma) for beta in interval
                ):
                    raise FaceStructureViolation(
                        f"every cell of ({nu!r}, {tau!r}) lies under the facet {sigma!r}"
                    )
        for nu in complex.faces(tau):
            if complex.dim_of(tau) - complex.dim_of(nu) < 2:
                continue
            intervals += 1
            interval = complex.interval(nu, tau)
            if complex.is_regular_face(nu, tau):
                deep_pairs += 1
                if not interval:
                    raise FaceStructureViolation(
                        f"regular pair ({nu!r}, {tau!r}) with empty interval"
                    )
            if len(interval) == 1:
                raise FaceStructureViolation(
                    f"open interval of ({nu!r}, {tau!r}) has exactly one cell "
                    f"{next(iter(interval))!r}, impossible in an all-regular complex"
                )
    return FaceStructureReport(chain_triples, deep_pairs, facet_triples, intervals)
