"""Reference values for the smoothing weight V, computed with mpmath quadrature."""
from mpmath import mp, mpf, mpc, gamma, zeta, pi, quad, exp, log

mp.dps = 20


def xi(s):
    return s * (s - 1) / 2 * pi ** (-s / 2) * gamma(s / 2) * zeta(s)


def weight(x, alpha, beta, lemma):
    def G(s):
        if lemma:
            P = lambda z: (z - 0.5 + alpha) * (z - 0.5 + beta) * (z + 0.5 + alpha) * (z + 0.5 + beta)
        else:
            P = lambda z: z * z - (alpha - beta) ** 2
        return P(s) / P(0) * xi(0.5 + s) / xi(mpf(0.5))

    def g(s):
        return pi ** (-s) * gamma((0.5 + s + alpha) / 2) * gamma((0.5 + s + beta) / 2) / (
            gamma((0.5 + alpha) / 2) * gamma((0.5 + beta) / 2))

    c = 2
    f = lambda t: G(mpc(c, t)) * g(mpc(c, t)) * exp(-mpc(c, t) * log(x)) / mpc(c, t)
    # The integrand is below 1e-25 beyond |t| = 40.
    return quad(f, [-40, -20, -10, -5, 0, 5, 10, 20, 40]) / (2 * pi)


if __name__ == "__main__":
    for x in (0.5, 3):
        print("lemma zero", x, weight(mpf(x), 0, 0, True))
    print("printed shifted", 2, weight(mpf(2), mpf("0.03"), mpf("-0.02"), False))
