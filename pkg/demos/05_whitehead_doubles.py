"""Mountain ranges of Whitehead doubles of the (-13,3) torus knot."""

from __future__ import annotations

from legsat.atlas import bundled_profile, range_from_engine, range_whitehead_double, render
from legsat.satellite import Whitehead

prof = bundled_profile()
for m in (-70, -77, -80, -81):
    rng = range_whitehead_double(prof, m)
    print(f"m={m}, max tb {rng.max_tb}")
    print(render(rng))

same = all(range_from_engine(prof, Whitehead(m), 9) == range_whitehead_double(prof, m, 9) for m in range(-84, -69))
print("general counting engine agrees with the closed forms for m=-84..-70:", same)
