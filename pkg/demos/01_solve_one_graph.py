"""Compute gamma_d^p on a few small graphs and show the witness sets.

    python demos/01_solve_one_graph.py
"""

from distdom import cycle, counterexample_gnkd, gamma, is_d_dominating, is_p_packing, path


def show(name, g, d, p):
    r = gamma(g, (d, p))
    print(f"{name:10s} d={d} p={p}: gamma = {r.to_dict()['value']}, witness {list(r.witness)}")
    if r.finite:
        assert is_d_dominating(g, r.witness, d) and is_p_packing(g, r.witness, p)


show("P_6", path(6), 2, 1)
show("C_6", cycle(6), 2, 1)
show("C_4", cycle(4), 1, 1)  # no 1-packing dominates C_4 at distance 1
show("C_4", cycle(4), 1, 0)

g = counterexample_gnkd(4, 2, 2)
print(f"G_(4,2,2) has {g.order} vertices")
show("G_(4,2,2)", g, 2, 0)
show("G_(4,2,2)", g, 2, 1)
print("the packing constraint pushes the value above n/(d+1) =", f"{g.order}/3")
