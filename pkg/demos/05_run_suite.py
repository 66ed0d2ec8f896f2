"""Run a small verification suite and print the TSV summary.

    python demos/05_run_suite.py
"""

from distdom import harness

CONFIG = """
checks = cor22, thm35, thm41, cor43_44_45, conjecture
d = 2, 3
tree_n_max = 10
bipartite_n_max = 7
"""

reports = harness.run_suite(CONFIG)
print(harness.tsv_summary(reports), end="")
print("exit status:", harness.suite_status(reports))
