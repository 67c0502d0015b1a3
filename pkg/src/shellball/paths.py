"""Facet families of determinantal initial complexes as lattice-path systems.

The complex attached to a minor [a_1..a_r | b_1..b_r] of an m x n generic
matrix has vertex set the grid points (i,j) and facets the families of r
pairwise disjoint monotone paths, path i running from (a_i, n) to (m, b_i)
by unit steps that increase the row or decrease the column.

A *corner* of a path is a point whose upper and left neighbours both lie on
the same path.  Corners drive everything here: the facet partial order and
its shelling extensions, the flip move that grows a path's corner set, the
non-flippable facets whose point sets minus corners are the minimal inside
faces, the corner-count h-vector, and the prefix boundary test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .complexes import SimplicialComplex, mask_of

Point = tuple[int, int]

DEFAULT_FACET_CAP = 200_000


@dataclass(frozen=True)
class MinorSpec:
    """A minor [rows | cols] of an m x n matrix of indeterminates."""

    m: int
    n: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise ValueError("need 1 <= m <= n")
        r = len(self.rows)
        if r == 0 or len(self.cols) != r:
            raise ValueError("rows and cols must be nonempty and of equal length")
        if list(self.rows) != sorted(set(self.rows)) or list(self.cols) != sorted(set(self.cols)):
            raise ValueError("row and column indices must be strictly increasing")
        if self.rows[-1] > self.m or self.cols[-1] > self.n or self.rows[0] < 1 or self.cols[0] < 1:
            raise ValueError("minor indices out of matrix range")
        if r > self.m:
            raise ValueError("minor size exceeds row count")

    @classmethod
    def diagonal(cls, m: int, n: int, r: int) -> "MinorSpec":
        """The minor [1..r | 1..r]; its ideal is generated by all (r+1)-minors."""
        if not 1 <= r <= m:
            raise ValueError(f"need 1 <= r <= m, got r={r}, m={m}")
        idx = tuple(range(1, r + 1))
        return cls(m, n, idx, idx)

    @classmethod
    def parse(cls, text: str) -> "MinorSpec":
        """Parse "m=<int> n=<int> sigma=<a1,..|b1,..>" or the shorthand "r=<int>"."""
        kv = {}
        for tok in text.split():
            if "=" not in tok:
                raise ValueError(f"bad token {tok!r}")
            k, v = tok.split("=", 1)
            kv[k] = v
        m, n = int(kv["m"]), int(kv["n"])
        if "sigma" in kv:
            a, b = kv["sigma"].split("|")
            rows = tuple(int(x) for x in a.split(","))
            cols = tuple(int(x) for x in b.split(","))
            return cls(m, n, rows, cols)
        return cls.diagonal(m, n, int(kv["r"]))

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def facet_size(self) -> int:
        return self.r * (self.m + self.n + 1) - sum(self.rows) - sum(self.cols)

    def endpoints(self, i: int) -> tuple[Point, Point]:
        """Start and end point of path i (0-based index into the minor)."""
        return (self.rows[i], self.n), (self.m, self.cols[i])

    def vertex_index(self, pt: Point) -> int:
        i, j = pt
        return (i - 1) * self.n + (j - 1)

    def point_of(self, v: int) -> Point:
        return (v // self.n + 1, v % self.n + 1)

    def grid_labels(self) -> tuple[str, ...]:
        return tuple(f"X_{i}_{j}" for i in range(1, self.m + 1) for j in range(1, self.n + 1))


def path_corners(path: tuple[Point, ...]) -> frozenset[Point]:
    """Points whose upper and left neighbours both lie on the same path."""
    pts = set(path)
    return frozenset(p for p in path if (p[0] - 1, p[1]) in pts and (p[0], p[1] - 1) in pts)


@dataclass(frozen=True)
class PathFamily:
    """A facet: r disjoint monotone paths with the prescribed endpoints."""

    spec: MinorSpec
    paths: tuple[tuple[Point, ...], ...]

    @cached_property
    def points(self) -> frozenset[Point]:
        return frozenset(p for path in self.paths for p in path)

    @cached_property
    def corners(self) -> frozenset[Point]:
        out: set[Point] = set()
        for path in self.paths:
            out |= path_corners(path)
        return frozenset(out)

    @property
    def corner_count(self) -> int:
        return len(self.corners)

    @cached_property
    def index_tuple(self) -> tuple[int, ...]:
        return tuple(sorted(self.spec.vertex_index(p) for p in self.points))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.index_tuple)

    def __len__(self) -> int:
        return len(self.index_tuple)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_facets(spec: MinorSpec, max_facets: int = DEFAULT_FACET_CAP) -> list[PathFamily]:
    """All families of disjoint paths, canonically ordered by vertex-index sets."""
    m, n, r = spec.m, spec.n, spec.r
    out: list[PathFamily] = []
    acc: list[tuple[Point, ...]] = []

    def walk(idx: int, pt: Point, occupied: set[Point], current: list[Point]) -> None:
        if pt in occupied:
            return
        current.append(pt)
        occupied.add(pt)
        target = (m, spec.cols[idx])
        if pt == target:
            acc.append(tuple(current))
            if idx + 1 == r:
                if len(out) >= max_facets:
                    raise ValueError(
                        f"facet cap {max_facets} exceeded (partial count {len(out)})"
                    )
                out.append(PathFamily(spec, tuple(acc)))
            else:
                walk(idx + 1, (spec.rows[idx + 1], n), occupied, [])
            acc.pop()
        else:
            i, j = pt
            if j > spec.cols[idx]:
                walk(idx, (i, j - 1), occupied, current)
            if i < m:
                walk(idx, (i + 1, j), occupied, current)
        occupied.discard(pt)
        current.pop()

    walk(0, (spec.rows[0], n), set(), [])
    expected = spec.facet_size
    for fam in out:
        assert len(fam) == expected, "facet cardinality violates the closed formula"
    out.sort(key=lambda fam: fam.index_tuple)
    return out


def corners(family: PathFamily) -> frozenset[Point]:
    return family.corners


# ---------------------------------------------------------------------------
# flips


def _sorted_path(points) -> tuple[Point, ...]:
    return tuple(sorted(points, key=lambda p: (p[0], -p[1])))


def _is_valid_path(path: tuple[Point, ...]) -> bool:
    for (i1, j1), (i2, j2) in zip(path, path[1:]):
        if not ((i2, j2) == (i1 + 1, j1) or (i2, j2) == (i1, j1 - 1)):
            return False
    return True


def flip(path: tuple[Point, ...], v: Point) -> tuple[Point, ...]:
    """Replace v by v+(1,1); legal when v, v+(1,0), v+(0,1) lie on the path
    and neither neighbour is a corner.  The corner set strictly grows."""
    pts = set(path)
    down, right = (v[0] + 1, v[1]), (v[0], v[1] + 1)
    crn = path_corners(path)
    if v not in pts or down not in pts or right not in pts or down in crn or right in crn:
        raise ValueError(f"not flippable at {v}")
    new = _sorted_path(pts - {v} | {(v[0] + 1, v[1] + 1)})
    assert _is_valid_path(new)
    assert crn < path_corners(new), "flip must strictly enlarge the corner set"
    return new


def path_is_non_flippable(path: tuple[Point, ...]) -> bool:
    pts = set(path)
    crn = path_corners(path)
    for v in path:
        down, right = (v[0] + 1, v[1]), (v[0], v[1] + 1)
        if down in pts and right in pts and down not in crn and right not in crn:
            return False
    return True


def is_non_flippable(family: PathFamily) -> bool:
    """No path of the family admits a flip, ignoring the sibling paths."""
    return all(path_is_non_flippable(p) for p in family.paths)


def admits_family_flip(family: PathFamily) -> bool:
    """Some path admits a flip whose new point misses the sibling paths."""
    allpts = family.points
    for path in family.paths:
        pts = set(path)
        crn = path_corners(path)
        for v in path:
            down, right = (v[0] + 1, v[1]), (v[0], v[1] + 1)
            if down in pts and right in pts and down not in crn and right not in crn:
                if (v[0] + 1, v[1] + 1) not in allpts - pts:
                    return True
    return False


def is_corner_maximal(family: PathFamily, facets: list[PathFamily]) -> bool:
    """No facet of the complex has a strictly larger corner set."""
    return not any(o.corners > family.corners for o in facets if o.mask != family.mask)


def nonflippable_discrepancies(facets: list[PathFamily]) -> list[PathFamily]:
    """Facets where per-path non-flippability and corner-maximality disagree.

    A path flip can be blocked by a sibling path occupying the flipped
    point; such facets are corner-maximal yet per-path flippable, so the
    two notions genuinely differ and callers should say which they mean.
    """
    return [
        fam
        for fam in facets
        if is_non_flippable(fam) != is_corner_maximal(fam, facets)
    ]


# ---------------------------------------------------------------------------
# facet partial order and shellings


def facet_leq(f1: PathFamily, f2: PathFamily) -> bool:
    """f1 <= f2 iff every point of f2's path i is weakly below-right of f1's path i."""
    if f1.spec != f2.spec:
        raise ValueError("mismatched specs")
    for c, d in zip(f1.paths, f2.paths):
        for (x, y) in d:
            if not any(u <= x and v <= y for (u, v) in c):
                return False
    return True


def _less_matrix(facets: list[PathFamily]) -> list[list[bool]]:
    t = len(facets)
    less = [[False] * t for _ in range(t)]
    for i in range(t):
        for j in range(t):
            if i != j and facet_leq(facets[i], facets[j]):
                less[i][j] = True
    for i in range(t):
        for j in range(i + 1, t):
            if less[i][j] and less[j][i]:
                raise ValueError("facet order inconsistency: antisymmetry violated")
    return less


def _extension(less: list[list[bool]], pick) -> list[int]:
    t = len(less)
    indeg = [sum(less[i][j] for i in range(t)) for j in range(t)]
    ready = sorted(j for j in range(t) if indeg[j] == 0)
    order: list[int] = []
    while ready:
        j = pick(ready)
        ready.remove(j)
        order.append(j)
        for k in range(t):
            if less[j][k]:
                indeg[k] -= 1
                if indeg[k] == 0:
                    ready.append(k)
        ready.sort()
    if len(order) != t:
        raise ValueError("facet order inconsistency: cycle detected")
    return order


def shelling_order(facets: list[PathFamily]) -> list[PathFamily]:
    """Deterministic linear extension of the facet order (lexicographic tie-break)."""
    order = _extension(_less_matrix(facets), lambda ready: ready[0])
    return [facets[i] for i in order]


def random_shelling_orders(
    facets: list[PathFamily], count: int, seed: int
) -> list[list[PathFamily]]:
    """Seeded random linear extensions of the facet order."""
    rng = random.Random(seed)
    less = _less_matrix(facets)
    return [
        [facets[i] for i in _extension(less, rng.choice)] for _ in range(count)
    ]


# ---------------------------------------------------------------------------
# canonical module data and corner counts


def canonical_generators(facets: list[PathFamily]) -> list[tuple[tuple[Point, ...], int]]:
    """(face, degree) pairs F - corners(F) over the corner-maximal facets.

    Corner-maximality, not per-path non-flippability, is what indexes the
    minimal inside faces: a per-path flip may be blocked by a sibling path,
    leaving the facet corner-maximal although a path of it is flippable in
    isolation.
    """
    out = []
    for fam in facets:
        if is_corner_maximal(fam, facets):
            face = tuple(sorted(fam.points - fam.corners))
            out.append((face, len(face)))
    out.sort(key=lambda fd: (fd[1], fd[0]))
    return out


def h_via_corners(facets: list[PathFamily]) -> tuple[int, ...]:
    """h-vector read off as the number of facets with each corner count."""
    if not facets:
        raise ValueError("no facets")
    d = len(facets[0])
    counts: dict[int, int] = {}
    for fam in facets:
        counts[fam.corner_count] = counts.get(fam.corner_count, 0) + 1
    return tuple(counts.get(i, 0) for i in range(d + 1))


def corner_spectrum(m: int, n: int, r: int, facets: list[PathFamily] | None = None) -> set[int]:
    """Corner counts realized by non-flippable facets of the [1..r|1..r] complex."""
    if not 1 <= r <= m - 1 or m > n:
        raise ValueError("need 1 <= r <= m-1 and m <= n")
    if facets is None:
        facets = enumerate_facets(MinorSpec.diagonal(m, n, r))
    return {fam.corner_count for fam in facets if is_non_flippable(fam)}


def _path_from_corners(
    a: int, b: int, m: int, n: int, corner_list: list[Point]
) -> tuple[Point, ...]:
    """Reconstruct the unique path from (a, n) to (m, b) with the given corners."""
    cs = sorted(corner_list)
    rows = [c[0] for c in cs]
    colseq = [c[1] for c in cs]
    if rows != sorted(set(rows)) or colseq != sorted(set(colseq), reverse=True):
        raise ValueError(f"corner set not a staircase: {cs}")
    pts: list[Point] = []
    row, col = a, n
    first = True
    for (cr, cc) in cs:
        start_col = col if first else col - 1
        if cr <= row or cc > start_col:
            raise ValueError(f"corner {(cr, cc)} unreachable from {(row, col)}")
        pts.extend((row, j) for j in range(start_col, cc - 1, -1))
        pts.extend((i, cc) for i in range(row + 1, cr + 1))
        row, col = cr, cc
        first = False
    if cs and col <= b:
        raise ValueError("last corner is not strictly right of the end column")
    pts.extend((row, j) for j in range(col - 1 if cs else col, b - 1, -1))
    pts.extend((i, b) for i in range(row + 1, m + 1))
    path = tuple(pts)
    assert _is_valid_path(path) and path[0] == (a, n) and path[-1] == (m, b)
    assert path_corners(path) == frozenset(cs)
    return path


def construct_nonflippable(m: int, n: int, r: int, t: int) -> PathFamily:
    """A non-flippable facet of the [1..r|1..r] complex with exactly t corners.

    Writes t = r + p*(m-r-1) + q and places maximal zig-zags on the last p
    paths, a diagonal run of q+1 corners on path r-p and a single corner on
    each remaining path.
    """
    if not 1 <= r <= m - 1 or m > n:
        raise ValueError("need 1 <= r <= m-1 and m <= n")
    if not r <= t <= r * (m - r):
        raise ValueError(f"t outside range [{r}, {r * (m - r)}]")
    if m - r - 1 == 0:
        p, q = 0, 0
    else:
        p, q = divmod(t - r, m - r - 1)
    if p >= 1 and n <= m:
        raise ValueError("maximal zig-zag construction needs n > m")
    spec = MinorSpec.diagonal(m, n, r)
    corner_sets: dict[int, list[Point]] = {}
    for k in range(p):
        corner_sets[r - k] = [(r - k + s, n - k - s) for s in range(1, m - r + 1)]
    if p < r:
        corner_sets[r - p] = [(r - p + 1 + u, r - p + 1 + q - u) for u in range(q + 1)]
    for i in range(1, r - p):
        corner_sets[i] = [(i + 1, i + 1)]
    paths = tuple(
        _path_from_corners(i, i, m, n, corner_sets[i]) for i in range(1, r + 1)
    )
    seen: set[Point] = set()
    for path in paths:
        for pt in path:
            if pt in seen:
                raise ValueError(f"constructed paths collide at {pt}")
            seen.add(pt)
    fam = PathFamily(spec, paths)
    assert fam.corner_count == t
    assert is_non_flippable(fam)
    return fam


# ---------------------------------------------------------------------------
# Stanley-Reisner generators and boundary membership


def sr_generators(spec: MinorSpec) -> list[tuple[Point, ...]]:
    """Main-diagonal supports of the minors outside the upper order ideal of sigma.

    These are the minimal monomial generators of the initial ideal, hence
    the minimal nonfaces of the complex.  Minors of size above r+1 never
    contribute minimal generators: any of their (r+1)-subdiagonals already
    violates the order.
    """
    m, n, r = spec.m, spec.n, spec.r
    cands: list[tuple[Point, ...]] = []
    for s in range(1, r + 2):
        for rows in combinations(range(1, m + 1), s):
            for cols in combinations(range(1, n + 1), s):
                geq = s <= r and all(
                    spec.rows[i] <= rows[i] and spec.cols[i] <= cols[i] for i in range(s)
                )
                if not geq:
                    cands.append(tuple(zip(rows, cols)))
    cands.sort(key=len)
    kept: list[tuple[Point, ...]] = []
    kept_sets: list[frozenset[Point]] = []
    for diag in cands:
        dset = frozenset(diag)
        if any(ks <= dset for ks in kept_sets):
            continue
        kept.append(diag)
        kept_sets.append(dset)
    return sorted(kept, key=lambda d: (len(d), d))


def boundary_via_corners(facets: list[PathFamily], i: int):
    """Membership test for the boundary of the length-i shelling prefix.

    A face G of the prefix lies on the boundary iff no prefix facet F
    containing G has F - G inside the corner set of F.  Returns a predicate
    on point collections; faces outside the prefix test False.
    """
    data = [(fam.points, fam.corners) for fam in facets[:i]]

    def predicate(face_points) -> bool:
        fp = frozenset(face_points)
        in_prefix = False
        for pts, crn in data:
            if fp <= pts:
                in_prefix = True
                if pts - fp <= crn:
                    return False
        return in_prefix

    return predicate


# ---------------------------------------------------------------------------
# bridging to simplicial complexes


def path_complex(
    spec: MinorSpec,
    facets: list[PathFamily] | None = None,
    max_facets: int = DEFAULT_FACET_CAP,
) -> tuple[SimplicialComplex, list[int]]:
    """The simplicial complex of a minor plus a shelling order (facet indices)."""
    if facets is None:
        facets = enumerate_facets(spec, max_facets)
    cx = SimplicialComplex(
        spec.m * spec.n, [fam.mask for fam in facets], labels=spec.grid_labels()
    )
    pos = {mask: k for k, mask in enumerate(cx.facets)}
    order = [pos[fam.mask] for fam in shelling_order(facets)]
    return cx, order


def render_ascii(family: PathFamily) -> str:
    """Matrix-coordinate sketch: path letters a, b, ...; corners in upper case."""
    m, n = family.spec.m, family.spec.n
    grid = [["."] * n for _ in range(m)]
    for k, path in enumerate(family.paths):
        crn = path_corners(path)
        for (i, j) in path:
            ch = chr(ord("a") + k)
            grid[i - 1][j - 1] = ch.upper() if (i, j) in crn else ch
    return "\n".join(" ".join(row) for row in grid)
