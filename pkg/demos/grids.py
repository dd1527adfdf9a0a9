"""The 3x3 grid row tangle and the honeycomb patch."""

from tanglekit.brambles import Subgraph, SubgraphFamily, min_hitting_set, touches
from tanglekit.branchwidth import branch_width
from tanglekit.connectivity import make_system
from tanglekit.generators import grid, grid_rows, hexgrid
from tanglekit.separations import is_k_connected, is_quasi_4_connected, k_blocks
from tanglekit.tangles import check_graph_tangle, enumerate_graph_tangles, example_tangle

# %% the rows of a grid form an order-3 tangle
g = grid(3, 3)
t = example_tangle(g, "grid", grid_rows(3, 3), 3)
print("row tangle passes the axioms:", check_graph_tangle(g, t).passed)
print("it is the only order-3 tangle:", enumerate_graph_tangles(g, 3) == [t])
rows = [Subgraph.induced(g, r) for r in grid_rows(3, 3)]
print("rows touch pairwise:", touches(g, rows, "pairwise"),
      "| hitting number:", min_hitting_set(g, SubgraphFamily(tuple(rows))))
print("branch-width of the grid:", branch_width(make_system("vertex-conn", g))[0])

# %% the honeycomb is highly connected without any 3-block
h = hexgrid(2)
print(f"hexgrid: {h.n} vertices, {h.m} edges")
print("3-connected:", is_k_connected(h, 3), "| 4-connected:", is_k_connected(h, 4))
print("quasi-4-connected:", is_quasi_4_connected(h))
print("3-blocks:", len(k_blocks(h, 3)))
