"""
Sweeping many lens spaces
=========================

Atlases stream in ascending (p, q) order; filters pick out the interesting
ones. The same sweep is available as ``lensfill sweep``.
"""
from collections import Counter

from lensfill import sweep
from lensfill.records import CatalogueRecord

sizes = Counter(len(a.fillings) for a in sweep(60))
print("how many fillings, p <= 60:", sorted(sizes.items()))

balls = [(a.lens.p, a.lens.q) for a in sweep(40, "qhb-present")]
print("rational balls, p <= 40:", balls)

most = max(sweep(80), key=lambda a: len(a.fillings))
print("most fillings, p <= 80:", most.lens.p, most.lens.q, len(most.fillings))

# JSON lines, one record per lens space
for a in sweep(5):
    print(CatalogueRecord.from_atlas(a).to_json())
