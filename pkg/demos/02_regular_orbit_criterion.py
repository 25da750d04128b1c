"""The algebraic regular-orbit criterion versus brute force.

A subgroup of the semilinear group has a regular orbit on the field
exactly when no relevant prime s traps the whole norm-one subgroup N_s
inside the multiplication part.  When the criterion says no, a single
prime covers every vector with an order-s fixer.
"""

from orbitforge import semilinear as sl
from orbitforge.field import make_field

ctx = make_field(2, 1, 4)  # GF(16) over GF(2)

# the multiplications act freely: regular orbit, witness is the first point
decision = sl.regular_orbit_criterion(ctx, sl.scalar_maps(ctx))
print("multiplications of GF(16):", decision)

# the obstruction subgroup: order-2 Galois part over its norm-one kernel
gn = sl.gn_subgroup(ctx, 2)
print(f"\nobstruction group has order {len(gn)};",
      "norm-one subgroup order", sl.norm_one_subgroup(ctx, 2).order)
decision = sl.regular_orbit_criterion(ctx, gn)
print("criterion:", decision)

witness = sl.covering_prime_witness(ctx, gn)
print(f"covering prime {witness.prime}: every one of the {len(witness.fixers)} points",
      "is fixed by an element of that order, e.g. point 3 by", witness.fixers[3])

# standardization in action: a twisted generator becomes a pure Galois map
ctx4 = make_field(2, 1, 2)
sub = sl.subgroup_closure(ctx4, [(1, 1)])
std = sl.standardize_subgroup(ctx4, sub)
print(f"\nconjugating {sub} by g^{std.conjugator} gives {std.subgroup}")
print("pure Galois elements by prime:", std.pure_by_prime)

# the prime structure of a norm-one subgroup: a Frobenius pairing
analysis = sl.norm_subgroup_prime_analysis(make_field(2, 1, 6), 3)
print(f"\n|N| = {analysis.subgroup_order} over GF(64), s = 3:")
for entry in analysis.factors:
    print("  prime", entry.prime, "congruence holds:", entry.congruence_holds,
          "Frobenius confirmed:", entry.frobenius_confirmed)
