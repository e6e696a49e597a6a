"""Cell data for one weight: i_pi, e_pi and the per-degree verification summary."""

import sys

from klrcell import RootVector, root_partitions
from klrcell.cellular import cell_datum, verify_cell_chain, verify_cellular_basis

alpha = RootVector.parse(sys.argv[1] if len(sys.argv) > 1 else "1:2,2:1")
for pi in root_partitions(alpha):
    c = cell_datum(pi)
    print(f"{pi}: i_pi = {c.i_pi}, e_pi = {c.e_pi}")

for report in (verify_cell_chain(alpha, 4), verify_cellular_basis(alpha, 4)):
    print(f"[{report.name}]")
    print("\n".join("  " + line for line in report.summary_lines()))
