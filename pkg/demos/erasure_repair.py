"""Build an optimal cyclic LRC code over GF(13), erase a symbol and repair it
from its recovering set."""

import numpy as np

from cyclrc import code_from_zeros, locality_exact, min_weight, optimal_cyclic_lrc


def main():
    c = optimal_cyclic_lrc(13, 12, 6, 2, l=0, b=1, j=0)
    print(f"zeros {sorted(c.zeros)}  ->  [{c.n},{c.k},{min_weight(c.code).d}] over GF(13)")
    rep = locality_exact(c)
    print(f"locality r = {rep.r}")

    rng = np.random.default_rng(1)
    word = c.code.encode(rng.integers(0, 13, (1, c.k)))[0]
    print("codeword      ", word.tolist())
    target = 5
    rs = rep.recovering_sets[target]
    damaged = word.copy()
    damaged[target] = 0
    print(f"erase position {target}; helpers {rs.helpers}")
    print(f"recovered {rs.recover(damaged)} (was {word[target]})")

    # binary codes need a larger locator field for their roots of unity
    b = code_from_zeros(2, 21, [0, 1, 7])
    print(f"\nbinary [21,{b.k}] code, locator {b.locator_field}, r = {locality_exact(b).r}")


if __name__ == "__main__":
    main()
