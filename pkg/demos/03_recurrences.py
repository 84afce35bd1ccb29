# Guessing recurrences from data
#
# Fitting a constant-coefficient recurrence to terms of one digit length
# recovers the order-3 recurrence of that block.  Data that straddles two
# blocks admits no such recurrence.

from apconcat import NATURALS, Kind, fit_recurrence, oracle_eval, recurrence_for, verify_basis

sm = [oracle_eval(Kind.RIGHT, NATURALS, n) for n in range(120)]

print("1-digit terms  :", fit_recurrence(sm[0:8], 3))
print("2-digit terms  :", fit_recurrence(sm[9:17], 3))
print("3-digit terms  :", fit_recurrence(sm[99:107], 3))
print("mixed 1/2-digit:", fit_recurrence(sm[0:16], 3))

for kind in Kind:
    spec = recurrence_for(kind, 2)
    print(f"{kind.value:>12} l=2:", spec.coeffs, "basis ok:", verify_basis(kind, 2, range(11)))
