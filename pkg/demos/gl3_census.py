# Decomposition classes of gl_3: dims, levels, closure order, sheets.
from decompclasses.engine import hasse, pgl_transport, sheets

h = hasse(3)
for i, c in enumerate(h.nodes):
    print(i, c.datum, "dim", c.dim, "level", c.level)

# cover edges go from the smaller class to the larger one
for lo, hi in h.covers:
    print(h.nodes[lo].datum, "<", h.nodes[hi].datum)

# one sheet per partition of 3, each with its own nilpotent orbit
for level, members in sheets(3):
    for c in members:
        if c.is_sheet_dense:
            print("level", level, "sheet", c.datum, "->", c.sheet_nilpotent, "(isolated)" if c.is_isolated else "")

# same picture for pgl_3, every dim one lower
print([c.dim for c in pgl_transport(h).nodes])

# DOT for graphviz:  python3 gl3_census.py | tail -n +N | dot -Tpng
print(h.to_dot())
