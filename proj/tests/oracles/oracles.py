"""Independent sympy values frozen into the C++ unit tests."""
import itertools

import sympy as sp

q, t = sp.symbols("q t")


def qint(n):
    return sp.simplify((q**n - q**-n) / (q - 1 / q))


def qfact(n):
    out = sp.Integer(1)
    for i in range(1, n + 1):
        out *= qint(i)
    return out


def qbinom(n, r):
    return sp.expand(sp.cancel(qfact(n) / (qfact(r) * qfact(n - r))))


def hall_littlewood(lam, n):
    xs = sp.symbols(f"x1:{n + 1}")
    lam = list(lam) + [0] * (n - len(lam))
    total = 0
    for w in itertools.permutations(range(n)):
        y = [xs[i] for i in w]
        term = sp.Mul(*[y[i] ** lam[i] for i in range(n)])
        for i in range(n):
            for j in range(i + 1, n):
                term *= (y[i] - t * y[j]) / (y[i] - y[j])
        total += term
    norm = 1
    for part in set(lam):
        m = lam.count(part)
        for j in range(1, m + 1):
            norm *= (1 - t**j) / (1 - t)
    return sp.expand(sp.cancel(sp.together(total / norm)).subs(t, q**2))


def psi_plus(N, v, order):
    # level-v eigenvalue of psi^+(z): prod_{u<v} (q^-1 z - q x_u)/(z - x_u) prod_{t>=v} (q z - q^-1 x_t)/(z - x_t)
    xs = sp.symbols(f"x1:{N + 1}")
    y = sp.symbols("y")
    f = 1
    for u in range(N):
        a, b = (1 / q, q) if u < v else (q, 1 / q)
        f *= (a - b * xs[u] * y) / (1 - xs[u] * y)
    s = sp.series(f, y, 0, order + 1).removeO()
    return [sp.factor(sp.expand(s.coeff(y, n))) for n in range(order + 1)]


def e0_two_vars():
    # e_0 on the level-1 vacuum of N = 2
    x1, x2 = sp.symbols("x1 x2")
    e = x1**-2 * (q * x1 - x2 / q) / (x1 - x2) + x2**-2 * (q * x2 - x1 / q) / (x2 - x1)
    return sp.expand(sp.cancel(sp.together(e)))


def cartan_A(n):
    return sp.Matrix(n, n, lambda i, j: 2 if i == j else (-1 if abs(i - j) == 1 else 0))


def dim_quiver(C, v, w):
    v = sp.Matrix(v)
    w = sp.Matrix(w)
    return (v.T * (2 * w - C * v))[0]


if __name__ == "__main__":
    print("[4 2]_q =", qbinom(4, 2))
    print("[5 2]_q =", qbinom(5, 2))
    print("[3]_q! =", sp.expand(sp.cancel(qfact(3))))
    print("P_(2)(x1,x2) =", hall_littlewood([2], 2))
    print("P_(1,1)(x1,x2) =", hall_littlewood([1, 1], 2))
    print("P_(2,1)(x1,x2,x3) =", hall_littlewood([2, 1], 3))
    print("P_(1)(x1,x2,x3) =", hall_littlewood([1], 3))
    print("psi+ N=2 v=1 order 2 =", psi_plus(2, 1, 2))
    print("psi+ N=1 v=0 order 2 =", psi_plus(1, 0, 2))
    print("e_0 1, N=2 v=1 =", e0_two_vars())
    print("dim A2 v=(1,1) w=(1,1) =", dim_quiver(cartan_A(2), [1, 1], [1, 1]))
    print("dim A3 v=(1,1,1) w=(1,0,1) =", dim_quiver(cartan_A(3), [1, 1, 1], [1, 0, 1]))
    print("dim A1 v=1 w=2 =", dim_quiver(cartan_A(1), [1], [2]))
    print("dim A2 v=(1,2) w=(0,3) =", dim_quiver(cartan_A(2), [1, 2], [0, 3]))
