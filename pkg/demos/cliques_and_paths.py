"""Tangles of complete graphs, and how branch-width and treewidth bracket each other."""

from math import ceil

from tanglekit.bits import items_of
from tanglekit.branchwidth import verify_duality, verify_inequalities
from tanglekit.connectivity import make_system
from tanglekit.generators import complete, cycle, grid, path
from tanglekit.tangles import check_graph_tangle, tangle_of_set

# %% orienting every separation towards the whole clique works up to about 2n/3
for n in range(3, 7):
    g = complete(n)
    ok = [k for k in range(1, ceil(2 * n / 3) + 2) if check_graph_tangle(g, tangle_of_set(g, g.vertices, k)).passed]
    print(f"K{n}: clique family is a tangle for orders {ok}")

k6 = complete(6)
report = check_graph_tangle(k6, tangle_of_set(k6, k6.vertices, 5))
trip = report.witness("GT2")
print("K6 order 5 fails GT2; three small sides cover the graph:",
      [items_of(s.verts_a) for s in trip])

# %% bw <= tw + 1 <= max(3/2 bw, 2)
print(f"{'graph':<10}{'bw':>4}{'tw':>4}  left tight  right tight")
for name, g in [("P4", path(4)), ("C6", cycle(6)), ("K6", k6), ("grid3", grid(3, 3))]:
    r = verify_inequalities(g)
    print(f"{name:<10}{r.branch_width:>4}{r.treewidth:>4}  {r.left_tight!s:<11} {r.right_tight}")

# %% duality for the other connectivity functions
for kind in ("edge-conn", "cut-rank", "matroid"):
    rep = verify_duality(make_system(kind, complete(5)))
    print(f"K5 {kind}: branch-width {rep.branch_width}, max tangle order {rep.max_tangle_order}")
