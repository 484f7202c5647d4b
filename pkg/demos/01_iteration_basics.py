"""Where everything starts: the map z -> z**2 + c and its escape test.

A parameter c either keeps the orbit of 0 bounded forever or flings it
off to infinity, and radius 2 is the point of no return: once an iterate
leaves the disk |z| <= 2 it can never come back.  The escape test is
strict (|z| > 2), which matters right at the edge -- the orbit of c = 1
touches 2 exactly and is only counted out one step later.

Run:  python demos/01_iteration_basics.py
"""

from powerfractal import IterationConfig, critical_orbit, escape_time, quadratic_step

cfg = IterationConfig(max_iterations=1000)

print("One update at a time:")
z = 0j
for step in range(4):
    print(f"  z_{step} = {z}")
    z = quadratic_step(z, 1 + 0j)
print("  the orbit of c=1 runs 0, 1, 2, 5, ... and |2| > 2 is false,")
print("  so the strict test only fires at index 3:")
print(f"  {escape_time(0j, 1 + 0j, cfg)}")
print()

print("A bounded parameter never fires at all:")
print(f"  c=-1 cycles 0, -1, 0, -1, ...  ->  {critical_orbit(-1 + 0j, cfg)}")
print(f"  c=i settles into -1+i, -i, ... ->  {critical_orbit(1j, cfg)}")
print()

print("Anything with |c| > 2 is gone after the very first update:")
for c in (3 + 0j, -2.5 + 0.1j, 2.1j):
    out = critical_orbit(c, cfg)
    print(f"  c={c}: escaped at index {out.escape_index}, final {out.final_value}")
print()

print("Seeds come into play for Julia sets; the seed itself is never tested,")
print("only post-update iterates, so one uniform code path serves both uses:")
out = escape_time(5 + 0j, 0j, cfg)
print(f"  escape_time(5, c=0) -> index {out.escape_index} (first update squares it to {out.final_value})")
