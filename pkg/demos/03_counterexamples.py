"""Two actions where every prime has a p-regular orbit yet none is regular.

The first is an odd-order wreath group on 2^10 points in characteristic 2;
the second an even-order central product on 7^4 points in characteristic 7.
Flipping either parity to odd/odd makes the phenomenon impossible, which
the seeded search in demo 04's sibling config never contradicts.
"""

from orbitforge.action import enumerate_orbits, orbit_implication_report
from orbitforge.constructions import build_example1, build_example2

for name, builder in (("wreath on GF(2)^10", build_example1),
                      ("central product on GF(7)^4", build_example2)):
    instance = builder()
    report = enumerate_orbits(instance)
    implication = orbit_implication_report(instance)
    print(f"== {name} ==")
    print(f"|G| = {report.group_order}, {report.point_count} points")
    print("orbit lengths:", report.orbit_lengths)
    print("p-regular:", report.p_regular, " regular exists:", report.regular_exists)
    print("faithful:", implication.faithful, " irreducible:", implication.irreducible)
    print("counterexample:", implication.is_counterexample,
          f"(odd order: {implication.odd_order}, odd characteristic: {implication.odd_characteristic})")
    print()
