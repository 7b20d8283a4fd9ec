"""Probe the floor(n/2) question on all small graphs.

ceil(n/2) paths always suffice at max degree <= 5; the open question is
whether floor(n/2) suffices for everything except the odd semi-cliques
(cliques on 2k+1 vertices missing at most k-1 edges, which provably need
k+1 paths).  This scans every small connected graph, tries the floor
target exactly, and reports how each failure is classified.  An
unclassified failure would be a discovery; none is expected.
"""

from gallai import enumerate_connected, run_floor_search, write_graph6

max_n = 6

graphs = []
for n in range(1, max_n + 1):
    graphs += [(write_graph6(g), g) for g in enumerate_connected(n, 5)]

report = run_floor_search(graphs)
misses = [r for r in report.records if r.paths is None]
print(f"{len(report.records)} graphs; {len(misses)} need more than floor(n/2):")
for record in misses:
    print(f"  {record.graph_id}  n={record.n} m={record.m}  -> {record.note}")
print("unclassified findings:", len(report.findings))
