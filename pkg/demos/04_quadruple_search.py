"""
Searching for quadruples
========================

Stage one: for x = e/f and m = g/h, integer points on ``curve_AB`` give
triples (x, y, z).  Stage two: integer points on an integral model of
``w_curve(x, y)`` give w pairing with x and y.  The remaining identity
for (z, w) decides between a full quadruple and a near miss.

Pass ``--open`` to run the from-scratch search over x, m of height up to
18 and 5 (a few minutes on one core).
"""

# %%
import collections
import sys
import tempfile
import time
from pathlib import Path

from eulerian_squares.search import SearchBounds, run_search, search

# Directed run over the single work unit x = 18, m = 5.
bounds = SearchBounds(18, 5, (74000, 75000), (-12000, 3000), units=((18, 1, 5, 1),))
for hit in search(bounds):
    print(hit.cls, [str(r) for r in hit.roots])

# %%
# Small open search: lots of near misses.
bounds = SearchBounds(5, 5, (-20000, 20000), (-20000, 20000))
t0 = time.monotonic()
hits = list(search(bounds))
print(collections.Counter(h.cls for h in hits), f"{time.monotonic() - t0:.1f}s")
print([str(r) for r in hits[0].roots])

# %%
# Checkpointed runs can be interrupted and resumed.
with tempfile.TemporaryDirectory() as tmp:
    out, ck = Path(tmp) / "hits.jsonl", Path(tmp) / "ck.json"
    print(run_search(bounds, out, ck, max_units=50))
    print(run_search(bounds, out, ck))

# %%
if "--open" in sys.argv:
    bounds = SearchBounds(18, 5, (-160000, 160000), (-20000, 20000))
    full = [h for h in search(bounds) if h.cls == "Full"]
    print([[str(r) for r in h.roots] for h in full])
