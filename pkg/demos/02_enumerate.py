"""Enumerate every arrangement class with up to 10 intersection points.

Each level is produced from the previous one by the crossing operation
(pushing an arc of one curve across an arc of the other inside a shared
region) and deduplicated by canonical key.  The class counts per level
are 1, 1, 2, 4, 13.
"""

import time

from circlepairs import enumerate_up_to, format_catalog

t0 = time.time()
levels = enumerate_up_to(10)
print(f"enumerated in {time.time() - t0:.2f}s")
print()
print("points  classes")
for level in levels:
    print(f"{level.n_points:>6}  {len(level.classes)}")
print()

print("the catalog of 6-point classes:")
print(format_catalog(next(l for l in levels if l.n_points == 6)))

print("representatives at 10 points:")
for cls in next(l for l in levels if l.n_points == 10).classes:
    marker = "symmetric " if cls.symmetric else "ASYMMETRIC"
    print(f"  {marker}  {cls.gp1}")
