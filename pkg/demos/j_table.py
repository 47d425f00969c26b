"""The j-invariant on the class group of y^2 = x^3 + x + 1 over F_3.

Cl(A) is cyclic of order 4.  Each class gets a j-value in K_inf; they are
pairwise distinct, and multiplying a representative by a principal ideal
leaves its value unchanged.
"""

from drinfeld_j.function_field import load_curve
from drinfeld_j.ideals import class_group
from drinfeld_j.zeta import j_invariant, j_table

PREC = 30

E = load_curve("elliptic")
G = class_group(E)
print("h =", G.h, "structure", G.structure)

table = j_table(E, PREC, table=G)
for e in table.entries:
    print(f"class {e.class_index}: {e.ideal}")
    print("   j =", e.j)
for pair, v in table.separation.items():
    print(f"classes {pair} separate at u^{v}")

rep = G.reps[1]
other = j_invariant(rep * (E.y() + E.x() * 2), PREC)
print("j((y + 2x) a) = j(a):", (other.j - table.entries[1].j).is_zero())
