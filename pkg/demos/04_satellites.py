"""Classical invariants of satellites, from censuses and from the closed formula."""

from __future__ import annotations

from legsat.atlas import bundled_profile
from legsat.legtangle import DiagramStats
from legsat.satellite import (
    CompanionInvariants,
    PatternInvariants,
    TwoBraid,
    Whitehead,
    compose_stats,
    max_tb_satellite,
    satellite_classical,
)

trefoil = DiagramStats(u=2, d=2, c=4, xp=3, wp=1)
pattern = DiagramStats(xp=3, wp=2)
print("trefoil companion with tb=1, pattern of three crossings on two strands")
sat = compose_stats(pattern, trefoil)
print("  satellite census:", sat)
print("  census invariants:", sat.invariants())
print("  formula:", satellite_classical(PatternInvariants(2, 3, 0), CompanionInvariants(1, 0)))

prof = bundled_profile()
print(f"\ncompanion {prof.name}, max tb {prof.t_bar}")
for spec in (Whitehead(-80), Whitehead(-70), TwoBraid(-77), TwoBraid(-81)):
    print(f"  {spec}: max tb of the satellite = {max_tb_satellite(prof, spec)}")
