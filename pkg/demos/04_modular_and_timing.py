# Residues of enormous terms, and timing against the naive build
#
# The billionth right concatenation has about 8.9 billion digits, but its
# residue modulo a prime needs only a few modular exponentiations.

import time

from apconcat import NATURALS, CoefficientCache, Kind, concat_digit_count, evaluate, evaluate_mod, oracle_eval

p = 10 ** 9 + 7
for kind in Kind:
    t0 = time.perf_counter()
    r = evaluate_mod(kind, NATURALS, 10 ** 9, p)
    print(f"{kind.value:>12}(10^9) mod p = {r}  "
          f"({concat_digit_count(kind, NATURALS, 10 ** 9):,} digits, {time.perf_counter() - t0:.4f}s)")

for e in (4, 5, 6):
    n = 10 ** e - 1
    cache = CoefficientCache()
    t0 = time.perf_counter()
    fast = evaluate(Kind.RIGHT, NATURALS, n, cache)
    cold = time.perf_counter() - t0
    t0 = time.perf_counter()
    naive = oracle_eval(Kind.RIGHT, NATURALS, n)
    slow = time.perf_counter() - t0
    assert fast == naive
    print(f"Sm(10^{e}-1): closed form {cold:.4f}s, string build {slow:.4f}s")
