"""Split a connected graph into d+1 classes that each d-dominate it.

    python demos/02_level_partition.py
"""

from distdom import cycle, level_partition, verify_partition
from distdom.constructions import double_star

for name, g, d in [("C_8", cycle(8), 2), ("D_(2,3)", double_star(2, 3), 1)]:
    parts = level_partition(g, d)
    print(f"{name}, d={d}:")
    for i, part in enumerate(parts):
        print(f"  S{i}: {list(part)}")
    print("  every class dominates:", verify_partition(g, parts, d))
    print("  smallest class:", min(len(p) for p in parts), "<= n/(d+1) =", f"{g.order}/{d + 1}")
