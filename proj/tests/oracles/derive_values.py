"""Independent high-precision oracle for the frozen expected values in the test suites.

Run with `python3 tests/oracles/derive_values.py`. Uses mpmath only; nothing here
touches the C++ implementation.
"""
import mpmath as mp

mp.mp.dps = 40


def ml(alpha, beta, z, terms=400):
    return mp.nsum(lambda k: mp.mpf(z) ** k / mp.gamma(alpha * k + beta), [0, mp.inf])


def small_c(p, beta, gamma):
    return mp.mpf(2) ** (beta + gamma - 1 / p) / (1 - gamma * p) ** (1 / p)


def show(name, value):
    print(f"{name:48s} {mp.nstr(value, 20)}")


a = mp.mpf("0.75")
show("gamma(0.75)", mp.gamma(a))
show("gamma(0.75) via Euler integral", mp.quad(lambda t: t ** (a - 1) * mp.e ** (-t), [0, 1, mp.inf]))
show("beta(0.75,0.75)", mp.beta(a, a))
show("beta(0.75,0.25)", mp.beta(a, 1 - a))
show("E_{0.75,0.75}(1)", ml(a, a, 1))
show("gamma(0.75)*E_{0.75,0.75}(1)", mp.gamma(a) * ml(a, a, 1))
show("E_{0.75,1}(-1)", ml(a, 1, -1))
show("E_{0.5,1}(-2)", ml(mp.mpf("0.5"), 1, -2))
show("erfc check e^4 erfc(2)", mp.e ** 4 * mp.erfc(2))

# Bounds chain at alpha=0.75
g = 1 - a
for p in (mp.mpf("1.5"), mp.mpf(4) / 3):
    q = p / (p - 1)
    c = small_c(p, g, g)
    C = 4 * c
    D = C + mp.beta(a, a)
    E = D / mp.gamma(a)
    show(f"small_c p={mp.nstr(p,6)}", c)
    show(f"big_C p={mp.nstr(p,6)}", C)
    show(f"big_D L=1 p={mp.nstr(p,6)}", D)
    show(f"big_E L=1 p={mp.nstr(p,6)}", E)

rhs = lambda al: mp.gamma(al) / (mp.mpf(2) ** (2 * (2 - al)) + mp.beta(al, al))
show("fite_rhs(0.75)", rhs(a))
show("fite_rhs(0.6)", rhs(mp.mpf("0.6")))
show("fite_rhs(0.9)", rhs(mp.mpf("0.9")))
show("min_length(0.75,1,1.5) = rhs^(3/2)", rhs(a) ** mp.mpf(1.5))
show("min_length(0.75,1,4/3) = rhs^(4/3)", rhs(a) ** (mp.mpf(4) / 3))
show("fite_lhs(0.75,1.5,1,0.5)", mp.mpf("0.5") ** (mp.mpf(2) / 3))

# q_operator with A(s) = s - a, f = 1, gamma = 0, beta = 0.25, t - a = 1
show("int_0^1 s (1-s)^-0.25 ds", mp.quad(lambda s: s * (1 - s) ** mp.mpf("-0.25"), [0, 1]))
show("B(2,0.75)", mp.beta(2, mp.mpf("0.75")))

# rl_derivative of f = 1: (t-a)^-zeta / Gamma(1-zeta); regularized = 1/Gamma(1-zeta)
show("1/gamma(0.25)", 1 / mp.gamma(mp.mpf("0.25")))
show("1/gamma(1.75)", 1 / mp.gamma(mp.mpf("1.75")))
