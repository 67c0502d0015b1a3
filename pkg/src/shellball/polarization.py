"""Polarization of powers of the graded maximal ideal and their ball complexes.

Polarizing a monomial spreads the exponent of each variable across a row of
an n x t grid of squarefree variables.  The monomials of total degree at
most t-1 (the standard monomials of the t-th power) biject with the facets
of a simplicial complex on the grid: exponent vector ``a`` maps to the set
of grid cells (i, j) with j != a[i]+1.  Ordering the facets by total degree
then lexicographically shells the complex as a ball, and its minimal
nonfaces are exactly the polarized degree-t generators.
"""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex, build_complex, mask_of, minimal_nonfaces
from .shelling import verify_ball


def grid_index(i: int, j: int, t: int) -> int:
    """Vertex index of grid cell (i, j), rows i = 1..n, columns j = 1..t."""
    return (i - 1) * t + (j - 1)


def grid_labels(n: int, t: int) -> tuple[str, ...]:
    return tuple(f"x_{i}_{j}" for i in range(1, n + 1) for j in range(1, t + 1))


def polarize(exponents, t: int) -> tuple[int, ...]:
    """Support of the polarized monomial on the n x t grid, as vertex indices."""
    out = []
    for i, a in enumerate(exponents, start=1):
        if a > t:
            raise ValueError(f"grid too small: exponent {a} exceeds t={t}")
        out.extend(grid_index(i, j, t) for j in range(1, a + 1))
    return tuple(sorted(out))


def power_generators(n: int, t: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-t monomials in n variables, lex order."""
    out = []
    for bars in combinations(range(t + n - 1), n - 1):
        prev = -1
        vec = []
        for b in bars:
            vec.append(b - prev - 1)
            prev = b
        vec.append(t + n - 2 - prev)
        out.append(tuple(vec))
    return sorted(out)


def multicomplex_facets(n: int, t: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree <= t-1, by degree then lex.

    This is the shelling order of the associated complex; the count is
    binomial(n+t-1, n).
    """
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, budget: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a in range(budget + 1):
            prefix.append(a)
            rec(prefix, remaining - 1, budget - a)
            prefix.pop()

    rec([], n, t - 1)
    out.sort(key=lambda a: (sum(a), a))
    return out


def theta(a, n: int, t: int) -> tuple[int, ...]:
    """Facet attached to an exponent vector: grid cells (i,j) with j != a[i]+1."""
    if len(a) != n:
        raise ValueError("exponent vector length must be n")
    return tuple(
        grid_index(i, j, t)
        for i in range(1, n + 1)
        for j in range(1, t + 1)
        if j != a[i - 1] + 1
    )


def power_ideal_complex(
    n: int, t: int, max_vertices: int = 128, certify: bool = False
) -> tuple[SimplicialComplex, list[int]]:
    """Complex of the polarized t-th power plus its degree-then-lex shelling order.

    Always asserts that the minimal nonfaces are exactly the polarized
    degree-t generators; with ``certify`` the ball gluing conditions are
    checked as well (linear-resolution certification is left to callers,
    since it needs a Betti table within the homology vertex cap).
    """
    if n * t > max_vertices:
        raise ValueError(f"grid size {n * t} exceeds vertex cap {max_vertices}")
    gamma = multicomplex_facets(n, t)
    images = [theta(a, n, t) for a in gamma]
    assert len(set(images)) == len(images), "facet map must be injective"
    cx = build_complex(images, n * t, labels=grid_labels(n, t))
    mask_pos = {mask: k for k, mask in enumerate(cx.facets)}
    order = [mask_pos[mask_of(img)] for img in images]
    expected = sorted(polarize(g, t) for g in power_generators(n, t))
    assert [
        tuple(nf) for nf in minimal_nonfaces(cx)
    ] == expected, "minimal nonfaces must be the polarized generators"
    if certify:
        cert = verify_ball(cx, order)
        assert cert.ok, f"ball certification failed: {cert.reason}"
    return cx, order
