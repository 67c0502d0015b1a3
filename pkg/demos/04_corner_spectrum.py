"""Corner counts of non-flippable facets and explicit constructions.

A facet whose corner set is maximal cannot trade any point for its
diagonal neighbour; the possible corner counts of such facets fill the
whole interval [r, r(m-r)], and each value is realized by an explicit
staircase placement, rendered here for the 6x7 grid with r = 3.
"""

import shellball as sb

for m, n, r in [(2, 3, 1), (4, 5, 2), (6, 7, 3)]:
    facets = sb.enumerate_facets(sb.MinorSpec.diagonal(m, n, r))
    spectrum = sorted(sb.corner_spectrum(m, n, r, facets))
    print(
        f"{m}x{n}, r={r}: {len(facets)} facets, "
        f"non-flippable corner counts {spectrum} "
        f"(expected {list(range(r, r * (m - r) + 1))})"
    )

print("\nconstructed non-flippable facets on the 6x7 grid (corners upper-case):\n")
for t in (3, 6, 9):
    fam = sb.construct_nonflippable(6, 7, 3, t)
    print(f"t = {t}: corners {sorted(fam.corners)}")
    print(sb.render_ascii(fam))
    print()

fams = sb.enumerate_facets(sb.MinorSpec.diagonal(3, 4, 2))
disc = sb.nonflippable_discrepancies(fams)
print("facets where per-path flips and corner-maximality disagree (3x4, r=2):")
for fam in disc:
    print(f"  corners {sorted(fam.corners)}: a flip exists per-path but lands on the sibling path")
