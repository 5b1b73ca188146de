"""The phi-graph on S_{(2,2,0,0),(1,1,1,1)} and the pairing psi.

Writes ``phi_graph.dot`` next to this script; render with
``dot -Tpng phi_graph.dot -o phi_graph.png`` if graphviz is around.
"""
from pathlib import Path

from kfpoly import build_graph, fixed_points, to_dot
from kfpoly.phi_graph import psi_map

g = build_graph((2, 2, 0, 0), (1, 1, 1, 1), 4)
print(f"{len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.components)} components\n")

table = psi_map(g)
for comp in g.components:
    print(f"component at {comp.source}, source labels {list(comp.labels) or '-'}")
    for v in comp.vertices:
        partner = table[v]
        note = "fixed" if partner == v else f"<-> {partner}"
        print(f"    {v}  k={g.k(v)}  {note}")

# psi fixes exactly the id-vertices that every phi_i kills
print("\nfixed points:", ", ".join(str(v) for v in fixed_points(g)))

out = Path(__file__).with_name("phi_graph.dot")
out.write_text(to_dot(g))
print(f"wrote {out}")
