"""Graded dimensions three ways for every weight of height <= 3 on vertices 1, 2."""

from klrcell.combinatorics import weights_up_to
from klrcell.dimension import dim_check

for alpha in weights_up_to(3, (1, 2)):
    print(dim_check(alpha, 6).table())
    print()
