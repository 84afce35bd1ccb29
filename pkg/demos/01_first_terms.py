# Closed-form terms of the three concatenation kinds
#
# Every term below comes from a per-block formula, not from string building.
# The naive oracle is printed alongside as a check.

from apconcat import NATURALS, ArithmeticProgression, Kind, evaluate, oracle_eval

odds = ArithmeticProgression(1, 2)

for kind in Kind:
    print(f"{kind.value:>12}:", [evaluate(kind, NATURALS, n) for n in range(6)])

print("odd numbers :", [evaluate(Kind.RIGHT, odds, n) for n in range(6)])

# Index 9 is the first term that contains a two-digit number.
print("Sm(9)       :", evaluate(Kind.RIGHT, NATURALS, 9))

# Progressions with a large step skip whole digit lengths; the short blocks
# are bridged by direct concatenation.
sparse = ArithmeticProgression(7, 45)
for n in range(5):
    fast = evaluate(Kind.LEFT, sparse, n)
    assert fast == oracle_eval(Kind.LEFT, sparse, n)
    print(f"left 7+45n, n={n}:", fast)
