"""Independent reference computations built on sympy.

Nothing here imports the package's calculus or quadrature.  Fields are
converted to sympy matrices; derivatives and cross products are sympy's,
and box integrals use the closed-form monomial antiderivative.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import sympy as sp

x1, x2, x3 = XS = sp.symbols("x1 x2 x3")


def rat(v) -> sp.Rational:
    v = Fraction(v)
    return sp.Rational(v.numerator, v.denominator)


def to_fraction(v) -> Fraction:
    v = sp.Rational(v)
    return Fraction(int(v.p), int(v.q))


def poly_expr(p) -> sp.Expr:
    """A package Poly (or a plain number) as a sympy expression."""
    if not hasattr(p, "terms"):
        return rat(p)
    out = sp.Integer(0)
    for (a, b, c), coeff in p.terms.items():
        out += rat(coeff) * x1**a * x2**b * x3**c
    return out


def field_expr(F) -> sp.Matrix:
    F = np.asarray(F, dtype=object)
    if F.ndim == 1:
        return sp.Matrix([poly_expr(v) for v in F])
    return sp.Matrix([[poly_expr(F[i, j]) for j in range(3)] for i in range(3)])


def as_fractions(M) -> np.ndarray:
    """sympy Matrix of constants to an object array of Fractions."""
    M = sp.Matrix(M)
    arr = np.empty(M.shape, dtype=object)
    for idx in np.ndindex(*M.shape):
        arr[idx] = to_fraction(M[idx])
    return arr.reshape(-1) if 1 in M.shape and M.shape[1] == 1 else arr


def _qq(expr) -> sp.Poly:
    return sp.Poly(expr, *XS, domain="QQ")


def _span(lo: Fraction, hi: Fraction, n: int) -> Fraction:
    return (hi ** (n + 1) - lo ** (n + 1)) / (n + 1)


def _integrate_terms(expr, fixed: dict[int, Fraction], spans: dict[int, tuple[Fraction, Fraction]]):
    """Integrate monomial by monomial: ``fixed`` axes are substituted, ``spans`` integrated."""
    total = Fraction(0)
    for exps, coeff in _qq(expr).terms():
        term = Fraction(int(coeff.numerator), int(coeff.denominator))
        for k, n in enumerate(exps):
            if k in fixed:
                term *= fixed[k] ** n
            else:
                lo, hi = spans[k]
                term *= _span(lo, hi, n)
        total += term
    return rat(total)


def box_integral(expr, center, L):
    h = Fraction(L) / 2
    spans = {k: (Fraction(center[k]) - h, Fraction(center[k]) + h) for k in range(3)}
    return _integrate_terms(expr, {}, spans)


def face_integral(expr, center, L, axis, sign):
    h = Fraction(L) / 2
    fixed = {axis: Fraction(center[axis]) + sign * h}
    spans = {k: (Fraction(center[k]) - h, Fraction(center[k]) + h) for k in range(3) if k != axis}
    return _integrate_terms(expr, fixed, spans)


# face n = 1..6 -> (axis, sign); outward normals +e1, +e2, +e3, -e1, -e2, -e3
FACE_AXES = [(0, 1), (1, 1), (2, 1), (0, -1), (1, -1), (2, -1)]


def traction(S: sp.Matrix, axis, sign) -> sp.Matrix:
    return S[:, axis] * sign


def face_couple(S: sp.Matrix, center, L, n) -> sp.Matrix:
    """Couple of the tractions on face n about that face's centre."""
    axis, sign = FACE_AXES[n - 1]
    r = sp.Matrix([XS[k] - rat(center[k]) for k in range(3)])
    r[axis] = 0
    integrand = r.cross(traction(S, axis, sign))
    return sp.Matrix([face_integral(integrand[i], center, L, axis, sign) for i in range(3)])


def moment_about_center(S: sp.Matrix, center, L) -> sp.Matrix:
    r = sp.Matrix([XS[k] - rat(center[k]) for k in range(3)])
    total = sp.zeros(3, 1)
    for axis, sign in FACE_AXES:
        integrand = r.cross(traction(S, axis, sign))
        total += sp.Matrix([face_integral(integrand[i], center, L, axis, sign) for i in range(3)])
    return total


def moment_about(S: sp.Matrix, center, L, lever: sp.Matrix) -> sp.Matrix:
    total = sp.zeros(3, 1)
    for axis, sign in FACE_AXES:
        integrand = lever.cross(traction(S, axis, sign))
        total += sp.Matrix([face_integral(integrand[i], center, L, axis, sign) for i in range(3)])
    return total


def traction_sum(S: sp.Matrix, center, L) -> sp.Matrix:
    total = sp.zeros(3, 1)
    for axis, sign in FACE_AXES:
        t = traction(S, axis, sign)
        total += sp.Matrix([face_integral(t[i], center, L, axis, sign) for i in range(3)])
    return total


def at(expr, point):
    return sp.sympify(expr).subs({XS[k]: rat(point[k]) for k in range(3)})


def div(S: sp.Matrix) -> sp.Matrix:
    """Row-wise divergence, (Div S)_i = S_ij,j."""
    if S.shape[1] == 1:
        return sp.Matrix([sum(sp.diff(S[j], XS[j]) for j in range(3))])
    return sp.Matrix([sum(sp.diff(S[i, j], XS[j]) for j in range(3)) for i in range(3)])


def grad(v: sp.Matrix) -> sp.Matrix:
    return sp.Matrix(3, 3, lambda i, j: sp.diff(v[i], XS[j]))


def curl(v: sp.Matrix) -> sp.Matrix:
    return sp.Matrix([
        sp.diff(v[2], x2) - sp.diff(v[1], x3),
        sp.diff(v[0], x3) - sp.diff(v[2], x1),
        sp.diff(v[1], x1) - sp.diff(v[0], x2),
    ])


def axl(A: sp.Matrix) -> sp.Matrix:
    return sp.Matrix([(A[2, 1] - A[1, 2]) / 2, (A[0, 2] - A[2, 0]) / 2, (A[1, 0] - A[0, 1]) / 2])


def anti(a) -> sp.Matrix:
    return sp.Matrix([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])


def skew(A: sp.Matrix) -> sp.Matrix:
    return (A - A.T) / 2


def sym(A: sp.Matrix) -> sp.Matrix:
    return (A + A.T) / 2


def dev(A: sp.Matrix) -> sp.Matrix:
    return A - sp.eye(3) * A.trace() / 3


# -- Taylor pieces, rebuilt from sympy derivatives ------------------------------------


def taylor_pieces(S: sp.Matrix, x0, L) -> dict[str, sp.Matrix]:
    """The seven expansion pieces about x0, classified entry by entry."""
    d = [XS[k] - rat(x0[k]) for k in range(3)]
    pt = [rat(v) for v in x0]
    names = ("sigma0", "np", "p1", "p2", "b1", "b2", "q")
    out = {name: sp.zeros(3, 3) for name in names}
    for i in range(3):
        for j in range(3):
            P = _qq(S[i, j])
            acc = {name: sp.Integer(0) for name in names}
            acc["sigma0"] = P.eval(dict(zip(XS, pt)))
            for k in range(3):
                Pk = P.diff(XS[k])
                name = "np" if j == k else ("p1" if i == k else "p2")
                acc[name] += Pk.eval(dict(zip(XS, pt))) * d[k]
                acc["q"] += Pk.diff(XS[k]).eval(dict(zip(XS, pt))) * d[k] ** 2 / 2
            for k, l in ((0, 1), (0, 2), (1, 2)):
                m = 3 - k - l
                g = P.diff(XS[k]).diff(XS[l]).eval(dict(zip(XS, pt)))
                name = "b2" if (j in (k, l) and (i == j or i == m)) else "b1"
                acc[name] += g * d[k] * d[l]
            for name in names:
                out[name][i, j] = sp.expand(acc[name])
    return out


def boxed_m(S: sp.Matrix, L) -> sp.Matrix:
    """Couple stress written out from its component formula, as a field."""
    g = lambda i, j, k: sp.diff(S[i - 1, j - 1], XS[k - 1])  # noqa: E731  (1-based)
    rows = [
        [g(3, 1, 2) - g(2, 1, 3), -g(2, 2, 3), g(3, 3, 2)],
        [g(1, 1, 3), g(1, 2, 3) - g(3, 2, 1), -g(3, 3, 1)],
        [-g(1, 1, 2), g(2, 2, 1), g(2, 3, 1) - g(1, 3, 2)],
    ]
    return sp.Matrix(rows) * rat(L) ** 2 / 12


def hessians_at_origin(S: sp.Matrix) -> list:
    """``H[a][b][p, q] = d2 S_ab / dx_p dx_q`` at the origin."""
    out = [[None] * 3 for _ in range(3)]
    zero = dict.fromkeys(XS, 0)
    for a in range(3):
        for b in range(3):
            P = _qq(S[a, b])
            out[a][b] = sp.Matrix(3, 3, lambda p, q: P.diff(XS[p]).diff(XS[q]).eval(zero))
    return out


def chi_of_pushforward(S: sp.Matrix, Q: sp.Matrix, L) -> sp.Matrix:
    """chi at the origin of ``x -> Q S(Q^T x) Q^T``, by the chain rule.

    With ``y = Q^T x``, ``dy_p/dx_k = Q_kp`` so
    ``S'_ik,kk = sum Q_ia Q_kb Q_kp Q_kq S_ab,pq``.
    """
    H = hessians_at_origin(S)
    out = sp.zeros(3, 3)
    for i in range(3):
        for k in range(3):
            qk = Q[k, :]
            total = sp.Integer(0)
            for a in range(3):
                for b in range(3):
                    total += Q[i, a] * Q[k, b] * (qk * H[a][b] * qk.T)[0, 0]
            out[i, k] = total * rat(L) ** 2 / 12
    return out


def chi_at_origin(S: sp.Matrix, L) -> sp.Matrix:
    H = hessians_at_origin(S)
    return sp.Matrix(3, 3, lambda i, k: H[i][k][k, k] * rat(L) ** 2 / 12)
