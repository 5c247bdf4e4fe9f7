"""Alternating orderings of paths against the series of tan(x/2 + pi/4).

Run: python3 demos/zigzag_series.py
"""
from gammacone.series import check_a_series, evaluate_family_series, zigzag_series, zigzag_series_via_integral

# Two exact routes to the same coefficients.
assert zigzag_series(12) == zigzag_series_via_integral(12)
print("n!*[x^n] tan(x/2 + pi/4):", [int(c) for c in zigzag_series(12).scaled()])

ok, rows = check_a_series(9)
print("\npath(n): direct count vs series")
for r in rows:
    print(f"  n={r.n}: {r.direct:>5} {str(r.series):>5}  {'ok' if r.match else 'MISMATCH'}")
print("all match:", ok)

# The D and E generating functions are reported side by side; nothing is asserted.
for fam in ("D", "E"):
    print(f"\n{fam}(n): direct vs series")
    for r in evaluate_family_series(fam, 9):
        direct = "-" if r.direct is None else r.direct
        print(f"  n={r.n}: {direct!s:>5} {r.series!s:>6}  match={r.match}")
