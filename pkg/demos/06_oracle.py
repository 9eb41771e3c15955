"""Cross-check the generator against an independent brute-force search.

The oracle iterates every curve-2 visiting order times every sign vector,
keeps the codes that close up as a sphere, and canonicalises the
survivors.  Its class sets must equal the generator's level by level.

2n = 8 scans 7! * 2^8 ~ 1.3M codes (seconds).  The 2n = 10 scan is
gated behind allow_long (hundreds of millions of codes); run it with

    CIRCLEPAIRS_ORACLE10=1 python demos/06_oracle.py
"""

import os

from circlepairs import brute_force, enumerate_up_to

levels = enumerate_up_to(10)

print("points  generator  oracle  accepted  elapsed  match")
for level in levels:
    if level.n_points > 8:
        continue
    result = brute_force(level.n_points)
    match = result.class_keys == level.config_keys()
    print(
        f"{level.n_points:>6}  {len(level.classes):>9}  {len(result.class_keys):>6}"
        f"  {result.raw_accepted:>8}  {result.elapsed:>6.2f}s  {match}"
    )

if os.environ.get("CIRCLEPAIRS_ORACLE10"):
    result = brute_force(10, jobs=os.cpu_count() or 1, allow_long=True)
    level10 = levels[-1]
    match = result.class_keys == level10.config_keys()
    print(
        f"{10:>6}  {len(level10.classes):>9}  {len(result.class_keys):>6}"
        f"  {result.raw_accepted:>8}  {result.elapsed:>6.0f}s  {match}"
    )
else:
    print("    10  (set CIRCLEPAIRS_ORACLE10=1 for the long cross-check)")
