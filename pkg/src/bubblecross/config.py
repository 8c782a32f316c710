"""Shared defaults: dimension guards and the fixed seed for randomized suites."""

DEFAULT_SEED = 1729

# Full graph materialization walks n! vertices; 10! is the desk-scale ceiling.
GRAPH_GUARD = 10

# Exhaustive mesh search walks (n-2)! lost-anchor sequences.
ENUMERATION_GUARD = 11

# Bound table rows grow like ((n-1)!)^2 in digit count; still instant at 200.
TABLE_LIMIT = 200
