"""Randomized invariants over generated complexes (all seeded via hypothesis)."""

from hypothesis import given, settings
from hypothesis import strategies as st

from shellball.bounds import check_conjecture
from shellball.complexes import (
    boundary_complex,
    boundary_h_from_h,
    build_complex,
    f_from_h,
    f_vector,
    h_vector,
    multiplicity,
    vector_profile,
)
from shellball.paths import MinorSpec, enumerate_facets, path_complex, random_shelling_orders
from shellball.polarization import power_ideal_complex
from shellball.shelling import verify_ball, verify_shelling


@st.composite
def complexes(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    n_facets = draw(st.integers(min_value=1, max_value=5))
    facets = [
        draw(st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1, max_size=n))
        for _ in range(n_facets)
    ]
    return build_complex(facets, n)


@st.composite
def pure_complexes(draw, max_n=7):
    n = draw(st.integers(min_value=2, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    n_facets = draw(st.integers(min_value=1, max_value=6))
    facets = [
        draw(
            st.sets(
                st.integers(min_value=0, max_value=n - 1), min_size=k, max_size=k
            )
        )
        for _ in range(n_facets)
    ]
    return build_complex(facets, n)


@given(complexes())
def test_f_h_round_trip(cx):
    f = f_vector(cx)
    d = len(f)
    assert f_from_h(h_vector(f, d), d) == f


@given(pure_complexes())
def test_h_sums_to_facet_count(cx):
    if not cx.is_pure:
        return
    f = f_vector(cx)
    assert sum(h_vector(f, len(f))) == len(cx.facets) == multiplicity(cx)


MINOR_INSTANCES = [(2, 3, 1), (3, 4, 1), (3, 4, 2), (3, 5, 1)]
POLAR_INSTANCES = [(2, 2), (3, 2), (2, 3), (3, 3)]


@given(st.sampled_from(MINOR_INSTANCES), st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=25, deadline=None)
def test_minor_extensions_shell(params, seed):
    m, n, r = params
    spec = MinorSpec.diagonal(m, n, r)
    fams = enumerate_facets(spec)
    cx, _ = path_complex(spec, fams)
    pos = {mask: k for k, mask in enumerate(cx.facets)}
    (ordered,) = random_shelling_orders(fams, 1, seed=seed)
    order = [pos[f.mask] for f in ordered]
    assert verify_shelling(cx, order).ok
    assert verify_ball(cx, order).ok


@given(st.sampled_from(MINOR_INSTANCES + [(4, 5, 2)]))
@settings(max_examples=10, deadline=None)
def test_ball_boundary_h_identity(params):
    m, n, r = params
    cx, order = path_complex(MinorSpec.diagonal(m, n, r))
    assert verify_ball(cx, order).ok
    d = cx.dim + 1
    bd = boundary_complex(cx)
    direct = h_vector(f_vector(bd), d - 1)
    assert boundary_h_from_h(h_vector(f_vector(cx), d), d) == direct
    assert vector_profile(direct).symmetric


@given(st.sampled_from(POLAR_INSTANCES))
@settings(max_examples=8, deadline=None)
def test_polar_boundary_h_identity(params):
    n, t = params
    cx, order = power_ideal_complex(n, t)
    assert verify_ball(cx, order).ok
    d = cx.dim + 1
    bd = boundary_complex(cx)
    direct = h_vector(f_vector(bd), d - 1)
    assert boundary_h_from_h(h_vector(f_vector(cx), d), d) == direct
    assert vector_profile(direct).symmetric


@given(st.sampled_from(MINOR_INSTANCES), st.sampled_from([0, 2, 3]))
@settings(max_examples=12, deadline=None)
def test_verdicts_are_field_independent(params, char):
    m, n, r = params
    cx, order = path_complex(MinorSpec.diagonal(m, n, r))
    rep = check_conjecture(cx, order, field_char=char, max_vertices=12)
    assert rep.verdict == "PASS"
