"""Recover the Carlitz module from the lattice F_3[T] inside K_inf.

The lattice A itself gives an exponential whose module has rho_T = T + g1 tau
with g1 a Laurent series at infinity; rescaling by the sign normalization makes the
top coefficient 1 and reproduces rho_T = T + tau.
"""

from drinfeld_j.drinfeld import (DrinfeldModule, carlitz_reference, sign_normalization_analysis,
                                 verify_functional_equation)
from drinfeld_j.function_field import load_curve
from drinfeld_j.ideals import unit_ideal

PREC = 30

R = load_curve("rational")
T = R.x()
mod = DrinfeldModule.from_lattice(unit_ideal(R), 3, PREC)
print("lattice module, rho_T =", mod.rho(T))

fe = verify_functional_equation(mod, T, 3)
print("e(Tz) = rho_T(e(z)) through z^27:", fe["pass"])

an = sign_normalization_analysis(mod)
print("w = xi^(q-1) =", an["w"])
normed = an["module"]
print("normalized rho_T =", normed.rho(T))

ref = carlitz_reference(R, PREC)
same = all((a - b).is_zero() for a, b in zip(normed.c[1:4], ref.c[1:4]))
print("normalized c_1..c_3 equal the Carlitz coefficients 1/(T^3-T), ...:", same)
