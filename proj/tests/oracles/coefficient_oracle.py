"""Reference coefficients for the regression tests, computed without the
recurrence used by the library.

* (1 - x - y)^(-beta): generalized binomial times binomial, exact fractions.
* 1 - 2x(1+y) - x^2(1-y)^2: F = (1 + u)^(-1/2) = sum_k C(-1/2, k) u^k with
  u = H - 1, expanded with integer polynomial powers.
* Central binomial C(2r, r) against 4^r / sqrt(pi r) via mpmath.
"""
from fractions import Fraction
from math import comb

import mpmath

mpmath.mp.dps = 40


def gen_binom(a, k):
    out = Fraction(1)
    for i in range(k):
        out *= (a - i)
        out /= (i + 1)
    return out


def linear_entry(beta, r, s):
    n = r + s
    return gen_binom(-beta, n) * comb(n, r) * (-1) ** n


def sci(x, digits=17):
    return mpmath.nstr(mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else x, digits)


def coloring_entries(r_max, s_max, targets):
    # u = H - 1 = -2x - 2xy - x^2 + 2x^2y - x^2y^2, as {(i, j): int}
    u = {(1, 0): -2, (1, 1): -2, (2, 0): -1, (2, 1): 2, (2, 2): -1}
    f = {(0, 0): Fraction(1)}
    power = {(0, 0): 1}
    for k in range(1, r_max + 1):
        nxt = {}
        for (i, j), c in power.items():
            for (a, b), d in u.items():
                key = (i + a, j + b)
                if key[0] <= r_max and key[1] <= s_max:
                    nxt[key] = nxt.get(key, 0) + c * d
        power = nxt
        coef = gen_binom(Fraction(-1, 2), k)
        for key, c in power.items():
            f[key] = f.get(key, Fraction(0)) + coef * c
    g = {(0, 0): 1, (1, 0): -1, (1, 1): -1}
    out = {}
    for r, s in targets:
        total = Fraction(0)
        for (a, b), d in g.items():
            total += d * f.get((r - a, s - b), Fraction(0))
        out[(r, s)] = total
    return out


if __name__ == "__main__":
    half = Fraction(1, 2)
    print("(1-x-y)^(-1/2) [1,1] =", linear_entry(half, 1, 1))
    for r in (25, 50, 100, 200):
        exact = linear_entry(half, r, r)
        est = mpmath.mpf(2) ** (2 * r - mpmath.mpf(1) / 2) / (mpmath.pi * r)
        ex = mpmath.mpf(exact.numerator) / exact.denominator
        print(f"r={r}: exact {mpmath.nstr(ex, 17)} estimate {mpmath.nstr(est, 17)} ratio-1 {mpmath.nstr(est / ex - 1, 10)}")
    vals = coloring_entries(70, 35, [(70, 35), (10, 5), (1, 0), (2, 1)])
    for key, v in vals.items():
        print(f"coloring G*H^(-1/2) {key}: {v if v.denominator < 10**6 else ''} ~ {mpmath.nstr(mpmath.mpf(v.numerator) / v.denominator, 17)}")
    est = mpmath.mpf(4) ** 70 / (70 * mpmath.pi * mpmath.sqrt(3))
    ex = vals[(70, 35)]
    print("coloring (70, 35) exact:", ex.numerator, "/", ex.denominator)
    print("coloring estimate", mpmath.nstr(est, 17), "ratio", mpmath.nstr(est / (mpmath.mpf(ex.numerator) / ex.denominator), 17))
    for r in (100,):
        cb = mpmath.binomial(2 * r, r)
        est = mpmath.mpf(4) ** r / mpmath.sqrt(mpmath.pi * r)
        print(f"central binomial r={r}: exact {mpmath.nstr(cb, 17)} estimate {mpmath.nstr(est, 17)}")


def conjugate_pair_example(r):
    """[x^r y^r] (1 + x^2 - y)^(-1/2): only even powers of x appear.

    Expanding in u = x^2 - y: C(-1/2, n) C(n, k) x^(2k) (-y)^(n-k).
    """
    if r % 2:
        return Fraction(0)
    k = r // 2
    n = k + r
    return gen_binom(Fraction(-1, 2), n) * comb(n, k) * (-1) ** (n - k)


if __name__ == "__main__":
    for r in (100, 200):
        v = conjugate_pair_example(r)
        print(f"(1 + x^2 - y)^(-1/2) [{r},{r}] ~ {mpmath.nstr(mpmath.mpf(v.numerator) / v.denominator, 17)}")
    r = mpmath.mpf(1660000)
    log10_est = (2 * r - mpmath.mpf(1) / 2) * mpmath.log10(2) - mpmath.log10(mpmath.pi * r)
    print("1-x-y log10 estimate at r = 1660000:", mpmath.nstr(log10_est, 17))
