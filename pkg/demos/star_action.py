"""The star action of the prime p0 = (x, y - 1) on the lattice modules.

For each class representative a, rho_p0 is the monic right gcd of rho_x and
rho_(y-1).  The image module has the j-value of p0^-1 a, so the action
permutes the j-table like multiplication by the inverse class.
"""

from drinfeld_j.drinfeld import DrinfeldModule, intertwining_residual, star_action
from drinfeld_j.function_field import load_curve
from drinfeld_j.ideals import class_group, ideal_from_generators
from drinfeld_j.zeta import j_table

PREC = 30

E = load_curve("elliptic")
p0 = ideal_from_generators([E.x(), E.y() - E.one()])
G = class_group(E)
table = j_table(E, PREC, table=G)

for k, rep in enumerate(G.reps):
    mod = DrinfeldModule.from_lattice(rep, 3, PREC)
    iso, image = star_action(mod, p0)
    ok = all(intertwining_residual(iso, image, a).is_zero() for a in E.ring_generators())
    J = image.J()
    hit = [e.class_index for e in table.entries if (J - e.J).truncate(PREC).is_zero()]
    print(f"class {k}: deg rho_p0 = {iso.degree()}, intertwines: {ok}, image class {hit}, "
          f"class of p0^-1 a: {G.index(p0.inverse() * rep)}")
