"""
Fillings of a single lens space
===============================

Z(p, q) lists the minimal fillings of L(p, q). Each one comes with the rank
of its second homology, a blowdown certificate and a few flags.
"""
from lensfill import atlas
from lensfill.records import CatalogueRecord, to_table
from lensfill.topology import chain_boundary, plumbing_boundary

# L(4,1) has two fillings: the disk bundle and a rational homology ball
print(to_table(CatalogueRecord.from_atlas(atlas(4, 1))))
print()

# L(p^2, p-1): the canonical resolution and the rational blowdown ball
for p in (3, 4, 5):
    a = atlas(p * p, p - 1)
    print(f"L({p * p},{p - 1})", [(f.n, f.rank_h2) for f in a.fillings])

# all a_i >= 5: only the Artin word survives
a = atlas(29, 5)
print(a.lens.a_string, a.z_set, a.kollar_certified)

# b = (3,3,3,3,3): the n(r,s) family gives k - 3 = 2 fillings told apart by rank
a = atlas(144, 89)
print(a.nrs_members, a.filling_count_lower_bound, len(a.fillings))

# every index word presents S^1 x S^2 as a chain; the a-string plumbs to L(p,q)
print({str(chain_boundary(f.n)) for f in a.fillings})
print(plumbing_boundary(a.lens.a_string))
