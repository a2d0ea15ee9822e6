"""Legendrian simple satellites: every class is determined by (tb, rot)."""

from __future__ import annotations

from legsat.atlas import bundled_profile, range_cable, range_two_braid_satellite, render

prof = bundled_profile()
print("2-braid satellite m=-79: sixteen maximal classes at tb=-158")
print(render(range_two_braid_satellite(prof, -79, 1)))
print("2-braid satellite m=-77 (above twice the max tb): one class per companion peak")
print(render(range_two_braid_satellite(prof, -77, 1)))
print("(-118,3)-cable, slope below the max tb")
print(render(range_cable(prof, -118, 3, 1)))
print("(-115,3)-cable, slope above the max tb")
print(render(range_cable(prof, -115, 3, 1)))
