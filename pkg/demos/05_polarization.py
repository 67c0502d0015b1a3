"""From powers of the maximal ideal to shellable linear balls.

Exponent vectors of degree < t biject with the facets of the polarization
complex; ordering them by total degree shells it as a ball whose minimal
nonfaces are exactly the polarized degree-t monomials.
"""

import shellball as sb
from shellball.polarization import power_generators

n, t = 3, 2
print(f"polarizing the {t}-th power of the maximal ideal in {n} variables\n")

gens = power_generators(n, t)
print("degree-t exponent vectors and their polarized supports:")
for g in gens:
    print(f"  {g} -> vertices {sb.polarize(g, t)}")

print("\nfacets via the exponent-vector bijection (degree, vector, image):")
for a in sb.multicomplex_facets(n, t):
    print(f"  deg {sum(a)}: {a} -> {sb.theta(a, n, t)}")

cx, order = sb.power_ideal_complex(n, t)
cert = sb.verify_ball(cx, order)
print(f"\nball certificate: {cert.ok}")
table = sb.hochster_betti_table(cx)
print(f"linear resolution in degree {t}: {sb.has_linear_resolution(table, t)}")

rep = sb.check_conjecture(cx, order, instance=f"polar n={n} t={t}")
print(
    f"boundary sphere: e = {rep.e}, h' = {rep.boundary_h}, "
    f"bounds [{rep.L}, {rep.U}], verdict {rep.verdict}"
)
