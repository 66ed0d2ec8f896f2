"""Build a corona, recognize it again and recover its base graph.

    python demos/03_coronas.py
"""

from distdom import corona, cycle, gamma, path
from distdom.recognizers import corona_base, in_B_d, in_T_d, is_corona
from distdom.canon import is_isomorphic

d = 2
for name, h in [("P_3", path(3)), ("C_4", cycle(4))]:
    g, cert = corona(h, d)
    found = is_corona(g, d)
    base = corona_base(g, found)
    value = gamma(g, (d, 1)).value
    print(f"{name} o P_{d}: order {g.order}, anchors {list(found.anchors)}")
    print(f"  base isomorphic to {name}: {is_isomorphic(base, h)}")
    print(f"  gamma_{d}^1 = {value} = n/(d+1) = {g.order // (d + 1)}")
    print(f"  in B_{d}: {in_B_d(g, d)}")
    if h.size == h.order - 1:
        print(f"  in T_{d}: {in_T_d(g, d)}")

print("P_7 is a 2-corona:", is_corona(path(7), 2) is not None)
