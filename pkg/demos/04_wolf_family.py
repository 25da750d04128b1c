"""A whole family without regular orbits: cyclic groups wreathed by Z_m.

Take the full multiplication group of GF(q^n) (any prime power above 2),
wreathe it by Z_m with gcd(q^n - 1, m) = 1, and act on m blocks.  The
all-nonzero vectors form one orbit C of size |G|/m covering the primes of
q^n - 1; the single-support orbit D covers the primes of m; and no vector
escapes a stabilizer.
"""

from orbitforge.constructions import wolf_family

print(f"{'field':>6} {'m':>2} {'|G|':>8} {'|C|':>7} {'|D|':>6}  claims")
for (p, k, n, m) in [(2, 1, 2, 2), (2, 1, 3, 2), (3, 1, 1, 3), (2, 1, 2, 5),
                     (5, 1, 1, 3), (2, 1, 4, 2), (3, 1, 2, 3)]:
    instance, record = wolf_family(p, k, n, m)
    print(f"{record.field_size:>6} {record.m:>2} {record.group_order:>8} "
          f"{record.c_size:>7} {record.d_size:>6}  "
          f"{'all hold' if record.all_claims_hold else 'VIOLATED'}")

print("\nper-prime coverage for field size 4, m = 5:")
_, record = wolf_family(2, 1, 2, 5)
print("  C covers primes", record.c_regular_primes, "(dividing q^n - 1)")
print("  D covers primes", record.d_regular_primes, "(dividing m)")
print("  regular orbit exists:", record.regular_exists)
