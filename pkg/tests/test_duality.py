import pytest

from shellball.complexes import build_complex, mask_of, minimal_nonface_masks, vertices_of
from shellball.duality import (
    alexander_dual,
    dual_matrix,
    maximal_minor_diagonals,
    minimal_vertex_covers,
    verify_dual_theorem,
)
from shellball.paths import MinorSpec, path_complex
from shellball.polarization import power_ideal_complex
from tests.test_complexes import MINOR23


def test_dual_of_square_is_two_edges():
    cx = build_complex([{0, 1}, {1, 2}, {2, 3}, {0, 3}], 4)
    dual = alexander_dual(cx)
    assert [vertices_of(f) for f in dual.facets] == [(0, 2), (1, 3)]


def test_dual_full_simplex_errors():
    with pytest.raises(ValueError, match="zero ideal"):
        alexander_dual(build_complex([{0, 1, 2}], 3))


def test_dual_generators_are_vertex_covers_minor23():
    cx = build_complex(MINOR23, 6)
    dual = alexander_dual(cx)
    gens = sorted(vertices_of(m) for m in minimal_nonface_masks(dual))
    assert gens == [(0, 1), (0, 5), (4, 5)]
    supports = minimal_nonface_masks(cx)
    covers = sorted(
        vertices_of(c) for c in minimal_vertex_covers(supports, cx.n)
    )
    assert gens == covers


def dual_instances():
    yield build_complex([{0, 1}, {1, 2}, {2, 3}, {0, 3}], 4)
    yield build_complex(MINOR23, 6)
    for m, n, r in [(3, 4, 1), (3, 4, 2), (3, 5, 1)]:
        yield path_complex(MinorSpec.diagonal(m, n, r))[0]
    for n, t in [(2, 2), (3, 2), (2, 3), (3, 3)]:
        yield power_ideal_complex(n, t)[0]


def test_dual_is_an_involution():
    for cx in dual_instances():
        assert alexander_dual(alexander_dual(cx)) == cx


def test_generator_cover_duality():
    for cx in dual_instances():
        dual = alexander_dual(cx)
        gens = sorted(minimal_nonface_masks(dual, over_universe=True))
        covers = sorted(
            minimal_vertex_covers(minimal_nonface_masks(cx, over_universe=True), cx.n)
        )
        assert gens == covers


def test_minimal_vertex_covers_simple():
    covers = minimal_vertex_covers([mask_of([0, 1]), mask_of([1, 2])], 3)
    assert sorted(vertices_of(c) for c in covers) == [(0, 2), (1,)]
    assert minimal_vertex_covers([], 3) == [0]


def test_dual_matrix_3x4_matches_known_identification():
    dm = dual_matrix(3, 4)
    assert dm.shape == (2, 4)
    ident = dm.identified_entries()
    assert ident[(1, 1)] == (1, 1) and ident[(1, 2)] == (2, 2) and ident[(1, 3)] == (3, 3)
    assert ident[(2, 2)] == (1, 2) and ident[(2, 3)] == (2, 3) and ident[(2, 4)] == (3, 4)
    assert dm.free_entries() == [(1, 4), (2, 1)]


def test_dual_matrix_square():
    dm = dual_matrix(3, 3)
    assert dm.shape == (1, 3)
    assert dm.identified_entries() == {(1, 1): (1, 1), (1, 2): (2, 2), (1, 3): (3, 3)}
    assert dm.free_entries() == []


def test_dual_of_dual_recovers_original_entries():
    # the double dual Z of X has Z[k,c] = Y[c-k+1, c]; composing the two
    # identifications lands back on X[k,c]
    for m, n in [(3, 5), (2, 4), (3, 4)]:
        dm = dual_matrix(m, n)
        back = dual_matrix(n - m + 1, n)
        for (k, c), (i, j) in back.identified_entries().items():
            assert j == c
            if dm.is_identified(i, c):
                assert dm.x_entry(i, c) == (k, c)


def test_diagonal_entries_always_identified():
    for m, n in [(2, 3), (2, 4), (3, 4), (3, 5), (2, 5)]:
        dm = dual_matrix(m, n)
        rows = n - m + 1
        from itertools import combinations

        for cols in combinations(range(1, n + 1), rows):
            for k, c in enumerate(cols, start=1):
                assert dm.is_identified(k, c)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (2, 4), (3, 4), (3, 5)])
def test_dual_theorem(m, n):
    verdict = verify_dual_theorem(m, n)
    assert verdict.passed, verdict.failures
    from math import comb

    assert verdict.diagonal_count == comb(n, n - m + 1) == verdict.cover_count


def test_dual_theorem_verdict_json():
    js = verify_dual_theorem(3, 4).to_json_dict()
    assert js["passed"] is True and js["m"] == 3 and js["n"] == 4


def test_maximal_minor_diagonals():
    diags = maximal_minor_diagonals(2, 3)
    assert diags == [
        ((1, 1), (2, 2)),
        ((1, 1), (2, 3)),
        ((1, 2), (2, 3)),
    ]
