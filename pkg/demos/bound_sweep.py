"""Shortening and linear-programming bounds on k for binary length-45 codes,
swept over distance and locality."""

from cyclrc import lp_bound, shortening_bound


def main():
    n = 45
    print(f"{'d':>2} {'r':>2} {'shortening':>10} {'LP k':>5} {'log2 M':>7}")
    for d in (3, 4, 5):
        for r in (4, 8, 14):
            sh = shortening_bound(2, n, d, r)
            lp = lp_bound(2, n, d, r, relaxed=True)
            print(f"{d:>2} {r:>2} {sh.k:>10} {lp.k_bound:>5} {lp.log_q:>7.2f}")


if __name__ == "__main__":
    main()
