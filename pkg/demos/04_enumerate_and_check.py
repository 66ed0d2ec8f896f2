"""Scan every tree up to 10 vertices and compare the equality set with T_2.

    python demos/04_enumerate_and_check.py
"""

from distdom import gamma
from distdom.enumeration import trees_upto
from distdom.recognizers import in_T_d

d = 2
equal, members = set(), set()
for code, t in trees_upto(10):
    if t.order < d + 1:
        continue
    if gamma(t, (d, 1)).value * (d + 1) == t.order:
        equal.add(code)
    if t.order == d + 1 or in_T_d(t, d):
        members.add(code)

print(f"trees with gamma_{d}^1 = n/{d + 1}: {len(equal)}")
print(f"trees of order {d + 1} or in T_{d}: {len(members)}")
print("sets agree:", equal == members)
