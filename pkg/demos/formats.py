"""The three text formats: graph6, edge lists, decomposition files.

graph6 packs the upper triangle of the adjacency matrix into printable
bytes and is the interchange format for graph streams; edge lists are the
convenient hand-written input; decompositions are one path per line.
"""

from gallai import (
    Graph,
    format_decomposition,
    parse_edgelist,
    parse_graph6,
    solve,
    write_graph6,
)

wheel = parse_edgelist("""
# a 4-wheel: hub 0, rim 1-2-3-4
0 1
0 2
0 3
0 4
1 2
2 3
3 4
4 1
""")
print("edge list parsed: n =", wheel.n, "m =", wheel.m)

line = write_graph6(wheel)
print("as graph6:", line)
assert parse_graph6(line) == wheel, "round trip must be exact"

result = solve(wheel)
print("decomposition file:")
print(format_decomposition(result.decomposition), end="")

print("K2 is", repr(write_graph6(Graph.from_edges(2, [(0, 1)]))))
