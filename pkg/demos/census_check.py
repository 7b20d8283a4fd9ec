"""Exhaustively verify the ceil(n/2) guarantee over a small census.

Enumerates one representative per isomorphism class of connected graphs
with max degree <= 5, solves each, verifies each, and prints the
configuration histogram.  Push max_n up to 8 for the full desk-scale run
(enumeration itself then takes a minute or two).
"""

from gallai import enumerate_connected, run_check, write_graph6

max_n = 6

graphs = []
for n in range(1, max_n + 1):
    graphs += [(write_graph6(g), g) for g in enumerate_connected(n, 5)]
print(f"{len(graphs)} connected graphs with n <= {max_n}, max degree <= 5")

report = run_check(graphs)
counts = report.counters()
print(f"verified {counts['verified']}/{counts['graphs']}, "
      f"findings: {counts['findings']}")
print("reduction histogram:")
for key, value in sorted(counts.items()):
    if "/" in key:
        print(f"  {key:24s} {value}")

slowest = max(report.records, key=lambda r: r.seconds)
print(f"slowest graph: {slowest.graph_id} ({slowest.seconds * 1000:.1f} ms)")
