"""Transverse Whitehead doubles and braided satellites."""

from __future__ import annotations

from legsat.atlas import bundled_profile, render, transverse_braid_satellite, transverse_whitehead_double
from legsat.braid import BraidWord

prof = bundled_profile()
for m in (-80, -72, -77):
    print(f"transverse Whitehead double, m={m}")
    print(render(transverse_whitehead_double(prof, m, 3)))

w = BraidWord.from_ints(2, (1, 1, 1))
sl, simple = transverse_braid_satellite(prof, w)
print(f"braided satellite by sigma_1^3: max sl {sl}, transversely simple: {simple}")
