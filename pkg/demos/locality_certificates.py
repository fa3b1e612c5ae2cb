"""Compare the coset certificate, the trace-subspace bound and the exact
locality on the four binary codes whose locality the simplex bound pins down."""

from cyclrc import binary_simplex_locality, code_from_zeros, coset_locality_certificate, locality_exact

ROWS = [(35, [1, 15], 3), (45, [1], 4), (27, [1, 9], 2), (63, [1, 9, 11, 15, 23], 3)]


def main():
    print(f"{'n':>3} {'k':>3} {'coset r<=':>9} {'trace r<=':>9} {'exact r':>7} {'w':>3}")
    for n, zeros, z in ROWS:
        c = code_from_zeros(2, n, zeros)
        s = 2**z - 1
        cert = coset_locality_certificate(c, s - 1)
        sim = binary_simplex_locality(c, z)
        print(f"{n:>3} {c.k:>3} {cert.r_bound:>9} {sim.r_bound:>9} {locality_exact(c).r:>7} {sim.subspace.w:>3}")


if __name__ == "__main__":
    main()
