"""Closed-form bounds on the intersection-to-length ratio.

Three layers of estimates: any-curvature bounds from volume, systole and
diameter; hyperbolic bounds from the systole alone; and the small-systole
asymptotics, where both hyperbolic bounds scale like 1/(l1 * |log l1|).
The collar-constant sweep at the end certifies the numeric inequalities
the cylinder arguments rely on.

Run:  python3 demos/bound_tables.py
"""

import math

from intnorm import (
    SurfaceParams,
    asymptotic_profile,
    collar_constants_check,
    full_bound_report,
    hyperbolic_bounds,
    parse_grid,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


# -- general bounds on a concrete torus ---------------------------------------

show("Any-curvature bounds (unit square torus)")
p = SurfaceParams(genus=1, l1=1.0, diameter=math.sqrt(2) / 2, volume=1.0)
rep = full_bound_report(p)
print(f"  ratio >= 1/volume          = {rep.inv_vol:.6f}")
print(f"  ratio >= 1/(2*l1*diameter) = {rep.lower_l1d:.6f}")
print(f"  ratio <= 9/l1^2            = {rep.upper_l1sq:.6f}")
print("  (the true value on this torus is exactly 1)")

# -- hyperbolic bounds ----------------------------------------------------------

show("Hyperbolic-surface bounds from the systole alone")
print(f"  {'genus':>5} {'l1':>8} {'lower':>12} {'upper':>12} "
      f"{'collar rate':>12}")
for s in (2, 3, 5):
    for l1 in (0.1, 0.01):
        hb = hyperbolic_bounds(s, l1)
        print(f"  {s:>5} {l1:>8} {hb.lower:>12.6f} {hb.upper:>12.2f} "
              f"{hb.collar_rate:>12.4f}")

# -- small-systole asymptotics --------------------------------------------------

show("Profiles normalized by l1*|log l1| (genus 2)")
grid = parse_grid("1e-2:1e-12:6", geometric=True)
rows = asymptotic_profile(2, grid)
print(f"  {'l1':>10} {'lower*scale':>12} {'upper*scale':>12} "
      f"{'lower tail':>12} {'upper tail':>12}")
for r in rows:
    print(f"  {r.l1:>10.1e} {r.lower_profile:>12.6f} "
          f"{r.upper_profile:>12.4f} {r.lower_profile_tail:>12.6f} "
          f"{r.upper_profile_tail:>12.4f}")
print("  tail columns approach 1/(4(s-1)) = 0.25 and 18(s-1) = 18")

# -- collar constants ------------------------------------------------------------

show("Collar-constant certification")
check = collar_constants_check()
print(f"  {check.points_checked} grid points on (0, 0.25] and "
      f"{check.mono_points_checked} on (0, 2*arsinh(1)]")
print(f"  minimal width margin      {check.min_width_margin:.6f}")
print(f"  minimal boundary margin   {check.min_boundary_margin:.6f}")
print(f"  minimal monotone decrement {check.min_mono_decrement:.3e}")
print(f"  all inequalities hold: {check.ok}")
