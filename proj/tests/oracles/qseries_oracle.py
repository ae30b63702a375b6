"""Independent high-precision oracle for the q-series values frozen into the C++ tests.

Run: python3 tests/oracles/qseries_oracle.py
"""
import itertools
from mpmath import mp, mpf, mpc, exp, pi, sin, log, fabs, binomial

mp.dps = 40


def poch(a, q, m):
    if m == 'inf':
        r, k = mpf(1), 0
        while True:
            t = a * q**k
            if fabs(t) < mpf(10)**(-45):
                return r
            r *= 1 - t
            k += 1
    if m >= 0:
        r = mpf(1)
        for k in range(m):
            r *= 1 - a * q**k
        return r
    r = mpf(1)
    for k in range(1, -m + 1):
        r *= 1 - a * q**(-k)
    return 1 / r


def qpow(q, w):
    return exp(w * log(q))


def pos_roots(N):
    return [(i, j) for i in range(N + 1) for j in range(i + 1, N + 1)]


def pair_root_weight(i, j, l):
    return sum(l[i:j])


def truncated_aim(N, q, g, radius):
    lhs = mpf(0)
    for l in itertools.product(range(radius + 1), repeat=N):
        if sum(l) > radius:
            continue
        term = mpf(1)
        two_rho_mu = 0
        for (i, j) in pos_roots(N):
            h = j - i
            k = pair_root_weight(i, j, l)
            two_rho_mu += k
            term *= (1 - qpow(q, h * g + k)) / (1 - qpow(q, h * g))
            term *= poch(qpow(q, g + h * g), q, k) / poch(qpow(q, 1 - g + h * g), q, k)
        term *= qpow(q, -g * two_rho_mu)
        lhs += term
    rhs = (N + 1)
    for n in range(1, N + 1):
        rhs *= poch(qpow(q, 1 + n * g), q, 'inf') / poch(qpow(q, -n * g), q, 'inf')
    return lhs, rhs


def terminating(N, M, g):
    alpha = 2 * pi / ((N + 1) * g + M)
    s = lambda z: sin(alpha / 2 * z)
    total = mpf(0)
    for l in itertools.product(range(M + 1), repeat=N):
        if sum(l) > M:
            continue
        term = mpf(1)
        for (i, j) in pos_roots(N):
            h = j - i
            k = pair_root_weight(i, j, l)
            num = s(h * g + k)
            den = s(h * g)
            for m in range(1, k + 1):
                num *= s(h * g + g + m - 1)
                den *= s(h * g - g + m)
            term *= num / den
        total += term
    prod = mpf(2)**(N * (M - 1)) * (N + 1)
    for m in range(1, M):
        for n in range(1, N + 1):
            prod *= s(m + n * g)
    return total, prod


def terminating_q(N, M, g):
    alpha = 2 * pi / ((N + 1) * g + M)
    Q = lambda w: exp(1j * alpha * w)  # q^w without a logarithm branch
    total = mpc(0)
    for l in itertools.product(range(M + 1), repeat=N):
        if sum(l) > M:
            continue
        term = mpc(1)
        two_rho_mu = 0
        for (i, j) in pos_roots(N):
            h = j - i
            k = pair_root_weight(i, j, l)
            two_rho_mu += k
            term *= (1 - Q(h * g + k)) / (1 - Q(h * g))
            for m in range(k):
                term *= (1 - Q(g + h * g + m)) / (1 - Q(1 - g + h * g + m))
        term *= Q(-g * two_rho_mu)
        total += term
    rhs = mpc(N + 1)
    for n in range(1, N + 1):
        for m in range(M - 1):
            rhs *= 1 - Q(1 + n * g + m)
    return total, rhs


def gamma_roots(N, q, g):
    P = lambda w: poch(qpow(q, w), q, 'inf')
    r = mpf(N + 1)
    for (i, j) in pos_roots(N):
        h = j - i
        d = 1 if h == 1 else 0
        r *= P(1 - g - h * g) / P(1 - h * g) * P(d + g - h * g) / P(-h * g)
    return r


def gamma_compact(N, q, g):
    P = lambda w: poch(qpow(q, w), q, 'inf')
    r = mpf(N + 1)
    for n in range(1, N + 1):
        r *= P(1) / P(1 - g) * P(1 - (n + 1) * g) / P(-n * g)
    return r


def a5(q, g, z, radius):
    lhs = 0
    for m in range(-radius, radius + 1):
        lhs += qpow(q, -g * m) * (1 - qpow(q, z + m)) / (1 - qpow(q, z)) * \
            poch(qpow(q, g + z), q, m) / poch(qpow(q, 1 - g + z), q, m)
    P = lambda a: poch(a, q, 'inf')
    rhs = 2 * P(qpow(q, 1 + z)) * P(qpow(q, 1 - z)) / (P(qpow(q, 1 - g + z)) * P(qpow(q, 1 - g - z))) \
        * P(qpow(q, 1 - 2 * g)) / P(qpow(q, 1 - g)) * P(q) / P(qpow(q, -g))
    return lhs, rhs


def a7(M, g):
    alpha = pi / (g + mpf(M) / 2)
    Q = lambda w: exp(1j * alpha * w)
    up = lambda a, m: mp.fprod([1 - Q(a + k) for k in range(m)])
    lhs = mpc(0)
    for m in range(M + 1):
        lhs += Q(-g * m) * (1 - Q(g + m)) / (1 - Q(g)) * up(2 * g, m) / up(1, m)
    return lhs, 2 * up(1 + g, M - 1)


def a6(q, g, terms):
    lhs = 0
    for m in range(terms):
        lhs += qpow(q, -g * m) * (1 - qpow(q, g + m)) / (1 - qpow(q, g)) * \
            poch(qpow(q, 2 * g), q, m) / poch(q, q, m)
    rhs = 2 * poch(qpow(q, 1 + g), q, 'inf') / poch(qpow(q, -g), q, 'inf')
    return lhs, rhs


if __name__ == '__main__':
    print('(q;q)_inf at q=0.5:', poch(mpf('0.5'), mpf('0.5'), 'inf'))
    for N, q, g in [(1, mpf('0.2'), mpf('-0.3')), (2, mpf('0.3'), mpf('-0.5')), (2, mpf('0.3'), mpf('-0.4'))]:
        l, r = truncated_aim(N, q, g, 40)
        print('truncated AIM', N, q, g, l, r, fabs(l - r))
    for N, M, g in [(1, 1, mpf('0.4')), (2, 5, mpf('0.7')), (3, 4, mpf('1.0')), (2, 3, mpf('0.6'))]:
        s, p = terminating(N, M, g)
        sq, pq = terminating_q(N, M, g)
        print('terminating', N, M, g, s, p, sq, pq)
    print('gamma', gamma_roots(2, mpf('0.3'), mpf('-0.4')), gamma_compact(2, mpf('0.3'), mpf('-0.4')))
    for M, g in [(3, mpf('0.4')), (5, mpf('1.0'))]:
        l, r = a7(M, g)
        print('A7', M, g, l, r)
    l, r = a5(mpf('0.2'), mpf('-0.3'), mpf('0.17'), 80)
    print('A5', l, r, fabs(l - r))
    l, r = a6(mpf('0.2'), mpf('-0.3'), 60)
    print('A6', l, r, fabs(l - r) / fabs(r))
