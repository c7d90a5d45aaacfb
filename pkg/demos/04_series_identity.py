# # Weighted identity and generating functions
#
# Summing weights over orientations and over fourientations gives the same
# polynomial. Specialised to complete graphs it ties strongly connected
# tournaments to strongly connected digraphs through exponential generating
# functions.

from fourientations import (
    ArcWeights,
    ExactSeries,
    Multigraph,
    count_scc_digraphs,
    count_scc_tournaments,
    eval_identity,
    ira_series,
    random_weights,
    series_exp,
    series_log,
)

triangle = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
print("acyclic fourientations:", eval_identity(triangle, ArcWeights.constant(triangle, 1, 0)))
print("totally cyclic fourientations:", eval_identity(triangle, ArcWeights.constant(triangle, 0, 1)))
for seed in range(3):
    print("random weights, seed", seed, "->", eval_identity(triangle, random_weights(triangle, seed)))

print("strongly connected tournaments:", [count_scc_tournaments(n) for n in range(1, 6)])
print("strongly connected digraphs:   ", [count_scc_digraphs(n) for n in range(1, 5)])

r = ira_series(4)
print("left coefficients: ", [str(x) for x in r.lhs.coeffs])
print("right coefficients:", [str(x) for x in r.rhs.coeffs])

# Series arithmetic is exact: log undoes exp to the truncation order.
a = ExactSeries((0, 1, 3, -2))
print(series_log(series_exp(a)) == a)
