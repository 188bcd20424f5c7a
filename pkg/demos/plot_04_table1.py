"""
Counting diagrams of the G_t digraphs
=====================================

G_t = C(m(m-1); 1+m, 1+mt, 1+mt^2) with m = 2 + t + t^2, unweighted and
with weights equal to the steps. Rows with t >= 7 take minutes.
"""

import sys

from lshapes.family import table1_rows

max_t = int(sys.argv[1]) if len(sys.argv) > 1 else 5
print("t,N,mdd_unweighted,mdd_weighted")
for row in table1_rows(max_t):
    print(",".join(map(str, row)))
