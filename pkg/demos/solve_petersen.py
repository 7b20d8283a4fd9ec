"""Decompose the Petersen graph and inspect the result.

The Petersen graph is 3-regular, so all ten vertices have odd degree and
every vertex must end some path: five paths are forced, and five paths are
also the ceil(n/2) guarantee.  It contains none of the reducible
configurations, so the solver goes straight to exact search.
"""

from gallai import Graph, detect, solve, verify

outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
petersen = Graph.from_edges(10, outer + spokes + inner)

print("configuration present:", detect(petersen))

result = solve(petersen)
print(f"decomposed into {len(result.decomposition)} paths "
      f"(bound {(petersen.n + 1) // 2}):")
for p in result.decomposition:
    print("  ", " - ".join(map(str, p.vertices)))

report = verify(petersen, result.decomposition)
print("verifier says:", report)
print("base case:", result.trace.base_case)
