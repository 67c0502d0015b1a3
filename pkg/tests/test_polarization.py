import pytest

from shellball.complexes import boundary_complex, minimal_nonfaces, vertices_of
from shellball.polarization import (
    grid_index,
    multicomplex_facets,
    polarize,
    power_generators,
    power_ideal_complex,
    theta,
)
from shellball.shelling import verify_ball, verify_shelling


def test_polarize_basic():
    # x1^2 * x2 on a 2x2 grid: cells (1,1), (1,2), (2,1)
    assert polarize((2, 1), 2) == (0, 1, 2)
    assert polarize((0, 0), 2) == ()
    with pytest.raises(ValueError, match="grid too small"):
        polarize((3,), 2)


def test_power_generators():
    assert power_generators(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(power_generators(3, 3)) == 10


def test_polarized_square_generators():
    gens = sorted(polarize(g, 2) for g in power_generators(2, 2))
    assert gens == [(0, 1), (0, 2), (2, 3)]


def test_multicomplex_facets_22():
    assert multicomplex_facets(2, 2) == [(0, 0), (0, 1), (1, 0)]


def test_multicomplex_facets_counts():
    from math import comb

    for n, t in [(1, 4), (2, 3), (3, 2), (3, 3)]:
        assert len(multicomplex_facets(n, t)) == comb(n + t - 1, n)
    assert multicomplex_facets(1, 4) == [(0,), (1,), (2,), (3,)]


def test_multicomplex_order_is_degree_then_lex():
    fac = multicomplex_facets(3, 3)
    degs = [sum(a) for a in fac]
    assert degs == sorted(degs)
    for a, b in zip(fac, fac[1:]):
        assert (sum(a), a) < (sum(b), b)


def test_theta_22():
    assert theta((0, 0), 2, 2) == (grid_index(1, 2, 2), grid_index(2, 2, 2))
    assert theta((1, 0), 2, 2) == (grid_index(1, 1, 2), grid_index(2, 2, 2))
    assert theta((0, 1), 2, 2) == (grid_index(1, 2, 2), grid_index(2, 1, 2))


def test_power_complex_22_is_a_path():
    cx, order = power_ideal_complex(2, 2)
    assert [vertices_of(f) for f in cx.facets] == [(0, 3), (1, 2), (1, 3)]
    assert minimal_nonfaces(cx) == [(0, 1), (0, 2), (2, 3)]
    bd = boundary_complex(cx)
    assert [vertices_of(f) for f in bd.facets] == [(0,), (2,)]
    assert verify_ball(cx, order).ok
    # minimal inside faces are the two interior vertices of the path
    from shellball.complexes import minimal_inside_faces

    assert minimal_inside_faces(cx) == [(1,), (3,)]


def test_power_complex_32():
    cx, order = power_ideal_complex(3, 2)
    assert len(cx.facets) == 4 and cx.dim == 2 and cx.n == 6
    assert verify_ball(cx, order).ok


def test_power_complex_23():
    cx, order = power_ideal_complex(2, 3)
    assert len(cx.facets) == 6 and cx.dim == 3 and cx.n == 6
    assert verify_ball(cx, order).ok


@pytest.mark.parametrize("n,t", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_power_complex_certified(n, t):
    cx, order = power_ideal_complex(n, t, certify=True)
    assert len(cx.facets) == len(order)
    # minimal nonfaces are exactly the polarized degree-t generators
    gens = sorted(polarize(g, t) for g in power_generators(n, t))
    assert [tuple(nf) for nf in minimal_nonfaces(cx)] == gens


@pytest.mark.parametrize("n,t", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_gluing_steps_follow_neighbour_structure(n, t):
    # each glued ridge at step k drops a cell (i,j) with j <= a_k(i); its
    # unique earlier facet is a_k with coordinate i lowered to j-1, and the
    # unglued ridge drops column t in the first row with entry < t-1
    gamma = multicomplex_facets(n, t)
    images = [theta(a, n, t) for a in gamma]
    cx, order = power_ideal_complex(n, t)
    cert = verify_shelling(cx, order)
    assert cert.ok
    facet_of_step = {step.position: gamma[step.position] for step in cert.steps}
    image_masks = []
    for img in images:
        m = 0
        for v in img:
            m |= 1 << v
        image_masks.append(m)
    for step in cert.steps:
        a = facet_of_step[step.position]
        fmask = image_masks[step.position]
        assert len(step.glued) == sum(a)
        for g in step.glued:
            dropped = fmask & ~g.ridge
            v = dropped.bit_length() - 1
            i, j = v // t + 1, v % t + 1
            assert j <= a[i - 1], "glued ridge must drop a cell at or below the exponent"
            neighbour = list(a)
            neighbour[i - 1] = j - 1
            assert gamma[g.in_earlier[0]] == tuple(neighbour)
        q = next(i for i in range(n) if a[i] < t - 1)
        unglued = frozenset(images[step.position]) - {grid_index(q + 1, t, t)}
        assert all(frozenset(vertices_of(g.ridge)) != unglued for g in step.glued)


def test_vertex_cap():
    with pytest.raises(ValueError, match="cap"):
        power_ideal_complex(20, 20)
