"""Counting Motzkin words by factor occurrences with the cluster engine.

Run with: python demos/cluster_method.py
"""

from motzkinperm import (
    ClusterSpec,
    cluster_count_gf,
    cluster_gfs,
    enumerate_motzkin,
    f123_inv,
    subword_count,
)
from motzkinperm.genfun import CLUSTER_123, CLUSTER_132, ClusterError

print("A cluster is a word covered by a chain of overlapping marked")
print("occurrences of the factor set.  The engine enumerates clusters by")
print("dynamic programming, splits them by the step they reduce to and by")
print("depth, and assembles the full distribution from the standard")
print("inclusion-exclusion identity.")
print()

print(f"Factor set {CLUSTER_123.words} (consecutive 123 over involutions):")
gfs = cluster_gfs(CLUSTER_123, 7)
print("clusters reducing to H (all depths):")
for n in range(8):
    poly = gfs.horizontal.format_coefficient(n)
    if poly != "0":
        print(f"  [n={n}] {poly}")
print()

series = cluster_count_gf(CLUSTER_123, 7)
print("Motzkin words by length, occurrences (t), and H steps (z):")
for n in range(8):
    print(f"  [n={n}] {series.format_coefficient(n)}")
print()
print("equals the closed-form pattern series:", series == f123_inv(7))
print()

print(f"Factor set {CLUSTER_132.words}: the only clusters are the two")
print("factors themselves (no overlaps are possible), so the cluster")
print("series are monomials:")
gfs = cluster_gfs(CLUSTER_132, 7)
print(f"  reduce to H: {gfs.horizontal.format_coefficient(2)} at n=2, depth -1")
print(f"  reduce to U: {gfs.up.format_coefficient(2)} at n=2, depth 0")
print()

print("Any valid factor set works.  Census check for {UHD}:")
spec = ClusterSpec(("UHD",))
series = cluster_count_gf(spec, 6)
ok = True
for n in range(7):
    census = {}
    for w in enumerate_motzkin(n):
        key = (subword_count(w, "UHD"), w.count("H"))
        census[key] = census.get(key, 0) + 1
    ok = ok and series.coefficient(n) == census
print("  engine equals brute-force census for n <= 6:", ok)
print()

print("Families whose clusters fail to reduce to a single step (or dive")
print("below depth -1) are rejected with a witness:")
try:
    cluster_count_gf(ClusterSpec(("UU",)), 6)
except ClusterError as exc:
    print(f"  {exc}")
