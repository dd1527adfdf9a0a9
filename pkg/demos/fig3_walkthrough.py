"""Walk through the small graph with a bridge: blocks, tangles, edge-set tangles, a decomposition."""

from tanglekit.bits import items_of
from tanglekit.branchwidth import branch_width, fig4_decomposition, verify_duality, width
from tanglekit.connectivity import make_system
from tanglekit.generators import FIG3_LABELLED_EDGES, fig3
from tanglekit.kappa import ExceptionalCase, enumerate_kappa_tangles, g_to_kappa
from tanglekit.separations import k_blocks
from tanglekit.tangles import enumerate_graph_tangles, minimal_separations, tangle_core

g = fig3()
print(f"graph: {g.n} vertices, {g.m} edges")
print("labelled edges:", FIG3_LABELLED_EDGES)

# %% biconnected components are the 1-blocks
for blk in k_blocks(g, 1):
    print("1-block", sorted(blk))

# %% one tangle of order 1, one of order 2 per biconnected component
for k in (1, 2, 3):
    tangles = enumerate_graph_tangles(g, k)
    print(f"order {k}: {len(tangles)} tangle(s)")
    for t in tangles:
        mins = [(items_of(s.separator), items_of(s.verts_b)) for s in minimal_separations(g, t)]
        print("   core", sorted(tangle_core(g, t)), "minimal members", mins)

# %% the vertex-connectivity function lives on edge sets
sys = make_system("vertex-conn", g)
print("edge-set tangles of order 2:", len(enumerate_kappa_tangles(sys, 2)))
for t in enumerate_graph_tangles(g, 2):
    image = g_to_kappa(g, t)
    core = sorted(tangle_core(g, t))
    if isinstance(image, ExceptionalCase):
        print("   core", core, "->", image.tag, "at edge", image.witness)
    else:
        print("   core", core, "-> edge-set tangle with", len(image), "members")

# %% the drawn decomposition and the optimum agree
print("width of the drawn tree:", width(sys, fig4_decomposition()))
bw, d = branch_width(sys)
print("branch-width:", bw, "with a witness on", d.tree.nodes, "nodes")
rep = verify_duality(sys)
print("duality:", rep.branch_width, "=", rep.max_tangle_order, "holds" if rep.holds else "FAILS")
