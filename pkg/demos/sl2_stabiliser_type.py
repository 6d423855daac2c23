# The torus of SL_2 in characteristic 2: it is not the stabiliser of anything.
from decompclasses.fields import FiniteField
from decompclasses.root_datum import (
    build_sl, center_of_levi, generic_phi, is_stabiliser_type, phi_y, torus_levi,
)

sl2 = build_sl(2)
print(sl2.roots, sl2.coroots)   # alpha reads (2) against the coroot basis

for p in (2, 3, 5):
    centre = center_of_levi(sl2, p, torus_levi())     # no equations: all of t
    print("p =", p, "generic Phi:", sorted(generic_phi(sl2, p, centre)),
          "stabiliser-type:", is_stabiliser_type(sl2, p, torus_levi()))

# point check: d alpha(y) = 2y vanishes for every y once 2 = 0
F = FiniteField(2, 3)
print([sorted(phi_y(sl2, 2, [y])) for y in F.elements()])
