"""Acceptance suite: one test per criterion, each printing a PASS line
with its elapsed time (run with -s to see them) and enforcing its
runtime budget.  All identities are checked with exact arithmetic.

DMB_CORPUS_SIZE overrides the corpus size (default 1000) for quick
local iteration; the stated criteria require the full corpus."""

import os
import random
import time
from dataclasses import dataclass

import pytest

from dmbott.bott import (
    check_morse_bott,
    closure_difference,
    collection_map,
    collections,
    morse_equivalence_check,
    reduce_all,
)
from dmbott.cw import Complex
from dmbott.functions import CellFunction, down_degree, up_degree
from dmbott.gen import (
    GenConfig,
    random_acyclic_matching,
    random_morse,
    random_morse_bott,
    random_simplicial,
    rank_oracle,
)
from dmbott.gradient import (
    VectorField,
    find_closed_orbit,
    morse_gradient,
    realize_strict_gradient,
    strict_gradient,
    synthesize_morse,
)
from dmbott.homology import (
    IntPolynomial,
    ONE_PLUS_T,
    chain_complex,
    poincare,
    rank_profile,
    reduced_chain_complex,
    smith_ranks,
)
from dmbott.inequalities import (
    cycle_restriction_check,
    morse_bott_identity,
    morse_identity,
    morse_reduction_check,
)
from dmbott.morse import check_morse

CORPUS_SIZE = int(os.environ.get("DMB_CORPUS_SIZE", "1000"))


@dataclass(frozen=True)
class Sample:
    seed: int
    complex: Complex
    matching: VectorField
    morse: CellFunction
    morse_bott: CellFunction


@pytest.fixture(scope="session")
def corpus():
    samples = []
    for seed in range(CORPUS_SIZE):
        cfg = GenConfig(seed=seed)
        K = random_simplicial(cfg)
        V = random_acyclic_matching(K, cfg)
        samples.append(
            Sample(
                seed=seed,
                complex=K,
                matching=V,
                morse=synthesize_morse(K, V),
                morse_bott=random_morse_bott(K, cfg),
            )
        )
    return samples


def finish(number: int, description: str, t0: float, budget: float) -> None:
    elapsed = time.monotonic() - t0
    print(f"PASS criterion {number} ({elapsed:.2f}s < {budget:.0f}s): {description}")
    assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_1_square_left(square, square_left):
    t0 = time.monotonic()
    assert check_morse_bott(square, square_left).is_morse_bott
    cols = reduce_all(square, square_left)
    table = {tuple(sorted(c.cells)): tuple(sorted(c.reduced)) for c in cols}
    assert table == {
        ("A", "A-B"): ("A",),
        ("B", "B-C", "B-D"): (),
        ("A-C", "C", "C-D", "D"): ("A-C", "C-D"),
    }
    report = morse_bott_identity(square, square_left)
    assert report.lhs == IntPolynomial([1, 2])
    assert report.poincare == IntPolynomial([1, 2])
    assert report.residual == IntPolynomial()
    assert report.holds and report.nonnegative
    finish(1, "square-left analysis matches the worked figure", t0, 1.0)


def test_criterion_2_square_right(square, square_right):
    t0 = time.monotonic()
    verdict = check_morse_bott(square, square_right)
    assert not verdict.is_morse_bott
    assert len(verdict.violations) == 1
    violation = verdict.violations[0]
    assert violation.cell == "C"  # the top-left vertex of the figure
    assert violation.condition == "excess_up"
    assert len(violation.witnesses) == 2  # the counter value that fails
    finish(2, "square-right fails with a single counter violation of two", t0, 1.0)


def test_criterion_3_triangles(triangle, triangle_pinched, triangle_crested):
    t0 = time.monotonic()
    pinched = next(c for c in reduce_all(triangle, triangle_pinched) if c.value == 2)
    assert pinched.reduced == {"n0", "n0-n1"}
    crested = next(
        c for c in reduce_all(triangle, triangle_crested) if len(c.cells) == 3
    )
    assert crested.reduced == crested.cells == {"n0-n2", "n1-n2", "n0-n1-n2"}
    assert poincare(
        reduced_chain_complex(triangle, triangle_crested, crested)
    ) == IntPolynomial([0, 1])
    for f in (triangle_pinched, triangle_crested):
        report = morse_bott_identity(triangle, f)
        assert report.holds and report.nonnegative
        assert report.poincare == IntPolynomial([1])
    finish(3, "both triangle fixtures reduce and satisfy the identity", t0, 1.0)


def test_criterion_4_morse_mb_equivalence(corpus):
    t0 = time.monotonic()
    for sample in corpus:
        assert morse_equivalence_check(sample.complex, sample.morse), sample.seed
        assert morse_equivalence_check(sample.complex, sample.morse_bott), sample.seed
    finish(4, f"structure equivalence on {2 * len(corpus)} functions", t0, 60.0)


def test_criterion_5_lemma_suite(corpus):
    t0 = time.monotonic()
    for sample in corpus:
        K = sample.complex

        # each cell of a Morse function sits in at most one noncritical pair
        for sigma in K.cell_ids():
            assert up_degree(sample.morse, sigma) + down_degree(sample.morse, sigma) <= 1

        for f in (sample.morse, sample.morse_bott):
            cols = reduce_all(K, f)  # trichotomy asserted inside

            for col in cols:
                # upward noncriticality propagates down facets inside a collection
                for sigma in col.removed_up:
                    for nu in K.facets(sigma):
                        if nu in col.cells:
                            assert nu in col.removed_up, (sample.seed, sigma, nu)

                # the closure difference is a subcomplex whose cells at the
                # collection value are upward noncritical
                closure_difference(K, f, col)

                # restricted boundary squares to zero; cell counts decompose
                cc = reduced_chain_complex(K, f, col)
                profile = rank_profile(cc)
                residual = IntPolynomial(
                    [profile.boundaries[k - 1] for k in range(1, cc.max_dim + 1)]
                )
                assert residual.is_nonnegative()
                assert IntPolynomial(cc.cells_per_dim()) == poincare(cc) + ONE_PLUS_T * residual

            # every strict comparable drop admits a strict facet-step drop
            for tau in K.cell_ids():
                for nu in K.faces(tau):
                    if f[nu] > f[tau]:
                        steps = K.interval(nu, tau) | {tau}
                        assert any(
                            K.is_facet(nu, sigma) and f[nu] > f[sigma] for sigma in steps
                        ), (sample.seed, nu, tau)
    finish(5, f"structural facts hold on {len(corpus)} complexes", t0, 120.0)


def test_criterion_6_morse_identity(corpus):
    t0 = time.monotonic()
    for sample in corpus:
        K = sample.complex
        report = morse_identity(K, sample.morse)
        assert report.holds, sample.seed
        assert report.nonnegative, sample.seed
        euler = sum((-1) ** k * len(K.cells_of_dim(k)) for k in range(K.max_dim + 1))
        assert report.lhs.evaluate(-1) == euler
        assert report.poincare.evaluate(-1) == euler
    finish(6, f"critical-count identity exact on {len(corpus)} Morse functions", t0, 60.0)


def test_criterion_7_morse_bott_identity(corpus):
    t0 = time.monotonic()
    non_morse = 0
    for sample in corpus:
        K = sample.complex
        if not check_morse(K, sample.morse_bott).is_morse:
            non_morse += 1
        report = morse_bott_identity(K, sample.morse_bott)
        assert report.holds, sample.seed
        assert report.nonnegative, sample.seed
        top = max(report.lhs.degree, report.poincare.degree)
        for k in range(top + 1):
            assert report.lhs.coeff(k) >= report.poincare.coeff(k), sample.seed
    assert non_morse >= 100, f"only {non_morse} genuinely non-Morse samples"
    finish(
        7,
        f"reduced-sum identity exact on {len(corpus)} functions ({non_morse} non-Morse)",
        t0,
        120.0,
    )


def test_criterion_8_round_trips(corpus):
    t0 = time.monotonic()
    for sample in corpus:
        K = sample.complex
        assert morse_gradient(K, synthesize_morse(K, sample.matching)) == sample.matching
        strict = strict_gradient(K, sample.morse_bott)
        assert find_closed_orbit(K, strict) is None, sample.seed
        g = realize_strict_gradient(K, sample.morse_bott)
        assert morse_gradient(K, g) == strict, sample.seed
    finish(8, f"gradient round trips on {len(corpus)} matchings", t0, 60.0)


def test_criterion_9_reduction_to_morse(corpus):
    t0 = time.monotonic()
    for sample in corpus:
        assert morse_reduction_check(sample.complex, sample.morse), sample.seed
    finish(9, f"identity collapse verified on {len(corpus)} Morse functions", t0, 60.0)


def test_criterion_10_rank_oracle_agreement(corpus):
    t0 = time.monotonic()
    checked = 0
    for sample in corpus:
        cc = chain_complex(sample.complex)
        for k in range(1, cc.max_dim + 1):
            rank, _ = smith_ranks(cc.boundary[k])
            assert rank == rank_oracle(cc.boundary[k]), sample.seed
            checked += 1
    rng = random.Random(2024)
    for _ in range(1000):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        matrix = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        rank, _ = smith_ranks(matrix)
        assert rank == rank_oracle(matrix), matrix
        checked += 1
    finish(10, f"rank agreement on {checked} matrices", t0, 30.0)
