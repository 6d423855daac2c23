# Induced nilpotent orbits: the partition formula against random matrices.
import itertools

from decompclasses.engine import closure_leq, enumerate_classes
from decompclasses.oracle import class_closure_member_oracle, generic_induced_type
from decompclasses.partitions import compositions, induce, partitions_of

n = 4
bad = 0
for comp in compositions(n):                       # ordered blocks = a parabolic
    for lams in itertools.product(*(partitions_of(m) for m in comp)):
        sampled = generic_induced_type([(0, lam) for lam in lams], seed=11)[0]
        bad += sampled != induce(lams)
print("induction mismatches for n =", n, ":", bad)

# Richardson orbits: induced from zero, transpose of the block sizes
print(induce([(1, 1), (1,)]), generic_induced_type([(0, (1, 1)), (0, (1,))]).as_dict())

# closure order of classes vs the rank-criterion oracle
data = enumerate_classes(3)
print(sum(closure_leq(a, b) != class_closure_member_oracle(a, b) for a in data for b in data), "closure mismatches")
