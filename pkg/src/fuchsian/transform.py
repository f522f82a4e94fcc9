"""Normal forms and change of variables for second-order linear ODEs.

A `LinearODE` is psi'' + p psi' + q psi = 0 with rational p, q.  Its
normal form psi'' = Q psi removes the first-derivative term; `Q` is kept
as an exact rational function.  Changes of the independent variable are
supported in three flavours: an explicit inverse substitution x = S(z),
a forward substitution z = R(x) (with exact descent of the result to a
rational function of z when one exists), and a general algebraic relation
F(x, z) = 0 handled by exact implicit differentiation on the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    BiPoly,
    BiRat,
    RatFunc,
    UPoly,
    birat_from_ratfunc,
    cross_difference,
    divides,
    squarefree_decomposition,
)


@dataclass(frozen=True)
class LinearODE:
    """psi'' + p psi' + q psi = 0."""

    p: RatFunc
    q: RatFunc


@dataclass(frozen=True)
class NormalODE:
    """psi'' = Q psi."""

    Q: RatFunc

    def is_fuchsian(self) -> bool:
        """All finite poles of Q of order <= 2 and Q = O(1/x^2) at infinity."""
        den = self.Q.den
        if any(m > 2 for _, m in squarefree_decomposition(den)):
            return False
        return den.degree - self.Q.num.degree >= 2 or self.Q.is_zero()

    def eval(self, x: complex) -> complex:
        return self.Q.eval_complex(x)


def to_normal_form(ode: LinearODE) -> NormalODE:
    """Remove the first-derivative term: Q = p^2/4 + p'/2 - q.

    The substitution psi = m Psi with m = exp(-int p/2) turns
    Psi'' + p Psi' + q Psi = 0 into psi'' = Q psi.
    """
    p, q = ode.p, ode.q
    return NormalODE(p * p * Fraction(1, 4) + p.deriv() * Fraction(1, 2) - q)


def schwarzian(f: RatFunc) -> RatFunc:
    """Schwarzian derivative f'''/f' - (3/2)(f''/f')^2 of a rational map."""
    f1 = f.deriv()
    if f1.is_zero():
        raise ValueError("Schwarzian of a constant map")
    f2 = f1.deriv()
    f3 = f2.deriv()
    r = f2 / f1
    return f3 / f1 - r * r * Fraction(3, 2)


def transform_inverse(src: NormalODE, S: RatFunc) -> NormalODE:
    """Pull back psi'' = Q psi through x = S(z).

    The new normal form is Q~(z) = Q(S(z)) S'(z)^2 - (1/2){S, z}.
    """
    S1 = S.deriv()
    return NormalODE(src.Q.compose(S) * S1 * S1 - schwarzian(S) * Fraction(1, 2))


def _match_through(G: RatFunc, R: RatFunc, max_degree: int) -> RatFunc | None:
    """Solve H(R(x)) = G(x) for rational H by linear algebra, if possible."""
    for d in range(max_degree + 1):
        # ansatz H = N/D with deg N, deg D <= d; unknowns are 2(d+1) coeffs
        # condition: N(R) * den(G) - D(R) * num(G) = 0 as a rational function
        pow_r = [RatFunc.const(1)]
        for _ in range(d):
            pow_r.append(pow_r[-1] * R)
        cols: list[RatFunc] = []
        for k in range(d + 1):
            cols.append(pow_r[k] * G.den)
        for k in range(d + 1):
            cols.append(-(pow_r[k] * G.num))
        lcm_den = UPoly.const(1)
        for c in cols:
            g = _poly_lcm(lcm_den, c.den)
            lcm_den = g
        rows_len = 0
        mats: list[list[Fraction]] = []
        col_polys = [c.num * lcm_den.divexact(c.den) for c in cols]
        rows_len = max(p.degree for p in col_polys) + 1
        for i in range(rows_len):
            mats.append([cp[i] for cp in col_polys])
        sol = _nullspace_vector(mats, 2 * (d + 1))
        if sol is None:
            continue
        N = UPoly(sol[: d + 1])
        D = UPoly(sol[d + 1 :])
        if D.is_zero():
            continue
        H = RatFunc(N, D)
        if H.compose(R) == G:
            return H
    return None


def _poly_lcm(a: UPoly, b: UPoly) -> UPoly:
    from .exact import u_gcd

    if a.is_zero() or b.is_zero():
        return UPoly()
    return (a * b).divexact(u_gcd(a, b)).monic()


def _nullspace_vector(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """One nonzero rational kernel vector of the row system, or None."""
    m = [row[:] for row in rows]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    if not free:
        return None
    sol = [Fraction(0)] * ncols
    sol[free[0]] = Fraction(1)
    for rr, cc in reversed(pivots):
        sol[cc] = -sum(m[rr][c] * sol[c] for c in range(cc + 1, ncols))
    return sol


def transform_forward(src: NormalODE, R: RatFunc):
    """Push psi'' = Q psi through z = R(x).

    Returns a NormalODE in z when (Q + (1/2){R, x}) / R'^2 is expressible
    as a rational function of R(x); otherwise falls back to the algebraic
    engine on the graph curve of R.
    """
    R1 = R.deriv()
    if R1.is_zero():
        raise ValueError("substitution must be non-constant")
    G = (src.Q + schwarzian(R) * Fraction(1, 2)) / (R1 * R1)
    if G.is_zero():
        return NormalODE(RatFunc.const(0))
    degR = max(R.num.degree, R.den.degree)
    degG = max(G.num.degree, G.den.degree)
    bound = max(2, degG // max(degR, 1) + 2)
    H = _match_through(G, R, bound)
    if H is not None:
        return NormalODE(H)
    ident = RatFunc.x()
    return transform_algebraic(src, cross_difference(R, ident))


@dataclass(frozen=True)
class AlgebraicODE:
    """Normal form pulled back through an algebraic relation F(x, z) = 0.

    `Qxz` is the transformed coefficient as a bivariate rational
    expression whose restriction to the curve gives Q~(z) on each branch
    x(z).  `seeds` optionally records labelled points on the curve.
    """

    source: NormalODE
    curve: BiPoly
    Qxz: BiRat
    seeds: tuple[tuple[complex, complex], ...] = ()

    def eval(self, x: complex, z: complex) -> complex:
        return self.Qxz.eval_mp(x, z)

    def reduces_to(self, target: RatFunc) -> RatFunc | None:
        """Return `target` if Qxz == target(z) identically on the curve.

        The difference is cleared of denominators and tested for
        divisibility by the curve polynomial, an exact certificate.
        """
        t = birat_from_ratfunc(target, "z")
        diff = self.Qxz - t
        if divides(self.curve, diff.num, "x"):
            return target
        return None


def implicit_derivatives(F: BiPoly) -> tuple[BiRat, BiRat, BiRat]:
    """dx/dz, d2x/dz2, d3x/dz3 on F(x, z) = 0 as bivariate rationals.

    Differentiating F(x(z), z) = 0 repeatedly and clearing denominators
    leaves F_x powers as the only denominators:

        x'   = -F_z / F_x
        x''  = -(F_xx F_z^2 - 2 F_xz F_x F_z + F_zz F_x^2) / F_x^3
        x''' = n3 / F_x^5

    with n3 collecting the third-order expansion terms.
    """
    Fx = F.deriv("x")
    Fz = F.deriv("z")
    if Fx.is_zero():
        raise ValueError("curve does not determine x locally (F_x = 0)")
    Fxx = Fx.deriv("x")
    Fxz = Fx.deriv("z")
    Fzz = Fz.deriv("z")
    x1 = BiRat(-Fz, Fx)
    n2 = -(Fxx * Fz * Fz - 2 * Fxz * Fx * Fz + Fzz * Fx * Fx)
    x2 = BiRat(n2, Fx**3)
    Fxxx = Fxx.deriv("x")
    Fxxz = Fxx.deriv("z")
    Fxzz = Fxz.deriv("z")
    Fzzz = Fzz.deriv("z")
    n3 = -(
        -Fxxx * Fz**3 * Fx
        + 3 * Fxxz * Fz * Fz * Fx * Fx
        - 3 * Fxzz * Fz * Fx**3
        + Fzzz * Fx**4
        + 3 * n2 * (Fxz * Fx - Fxx * Fz)
    )
    x3 = BiRat(n3, Fx**5)
    return x1, x2, x3


def curve_schwarzian(F: BiPoly) -> BiRat:
    """{x, z} along the branch x(z) of F(x, z) = 0, as a bivariate rational."""
    x1, x2, x3 = implicit_derivatives(F)
    n2, n3 = x2.num, x3.num
    Fx, Fz = F.deriv("x"), F.deriv("z")
    num = -(n3 * Fz + Fraction(3, 2) * n2 * n2)
    return BiRat(num, Fx**4 * Fz * Fz)


def partial_schwarzian(F: BiPoly, var: str) -> BiRat:
    """Schwarzian of F in one variable with the other held fixed."""
    F1 = F.deriv(var)
    if F1.is_zero():
        raise ValueError(f"F is constant in {var}")
    F2 = F1.deriv(var)
    F3 = F2.deriv(var)
    num = F3 * F1 - Fraction(3, 2) * F2 * F2
    return BiRat(num, F1 * F1)


def transform_algebraic(src: NormalODE, F: BiPoly) -> AlgebraicODE:
    """Pull psi'' = Q psi back through the relation F(x, z) = 0.

    On each local branch x = x(z) of the curve the new normal form is
    Q~ = Q(x) x'^2 - (1/2){x, z}, with the Schwarzian evaluated by exact
    implicit differentiation.  The result is a bivariate rational
    expression valid on the whole curve.
    """
    x1, x2, x3 = implicit_derivatives(F)
    Fx, Fz = F.deriv("x"), F.deriv("z")
    schw_num = -(x3.num * Fz + Fraction(3, 2) * x2.num * x2.num)
    schw = BiRat(schw_num, Fx**4 * Fz * Fz)
    Qb = birat_from_ratfunc(src.Q, "x")
    Qt = (Qb * x1 * x1 - schw * BiRat.const(Fraction(1, 2))).scaled()
    return AlgebraicODE(source=src, curve=F, Qxz=Qt)


def split_curve_parts(F: BiPoly) -> tuple[UPoly, UPoly] | None:
    """If F = X(x) - Z(z), return (X, Z); otherwise None.

    Mixed monomials disqualify; the constant term is assigned to X.
    """
    xs: dict[int, Fraction] = {}
    zs: dict[int, Fraction] = {}
    for (i, j), c in F.terms.items():
        if i and j:
            return None
        if j == 0:
            xs[i] = c
        else:
            zs[j] = -c
    X = UPoly([xs.get(k, 0) for k in range(max(xs, default=0) + 1)])
    Z = UPoly([zs.get(k, 0) for k in range(max(zs, default=0) + 1)])
    return X, Z


def transform_split(src: NormalODE, X: UPoly, Z: UPoly) -> AlgebraicODE:
    """Pull back through the split relation X(x) = Z(z).

    Uses the composition rule for Schwarzians: with w = X(x) = Z(z),
    {x, z} = {Z, z} - {X, x} x'^2 and x' = Z'(z)/X'(x), so the cross
    terms of the general implicit formula drop out.
    """
    sX = schwarzian(RatFunc(X, 1))
    sZ = schwarzian(RatFunc(Z, 1))
    x1 = BiRat(BiPoly.from_upoly(Z.deriv(), "z"), BiPoly.from_upoly(X.deriv(), "x"))
    schw = birat_from_ratfunc(sZ, "z") - birat_from_ratfunc(sX, "x") * x1 * x1
    Qb = birat_from_ratfunc(src.Q, "x")
    Qt = (Qb * x1 * x1 - schw * BiRat.const(Fraction(1, 2))).scaled()
    F = BiPoly.from_upoly(X, "x") - BiPoly.from_upoly(Z, "z")
    return AlgebraicODE(source=src, curve=F.primitive(), Qxz=Qt)


def numeric_transform_point(
    src: NormalODE, F: BiPoly, z0: complex, x0: complex
) -> complex:
    """Independent pointwise oracle for the algebraic pullback.

    Solves F(x, z0) = 0 near x0 by Newton, then computes dx/dz, d2x/dz2,
    d3x/dz3 from the expanded implicit-differentiation identities using
    only point values of the partial derivatives of F, and returns
    Q(x) x'^2 - (1/2){x, z} at the point.
    """
    Fx = F.deriv("x")
    x = complex(x0)
    for _ in range(80):
        fv = F.eval(x, z0)
        dv = Fx.eval(x, z0)
        if dv == 0:
            break
        step = fv / dv
        x -= step
        if abs(step) < 1e-14 * (1 + abs(x)):
            break
    d = {}
    for name, p in {
        "x": Fx,
        "z": F.deriv("z"),
        "xx": Fx.deriv("x"),
        "xz": Fx.deriv("z"),
        "zz": F.deriv("z").deriv("z"),
        "xxx": Fx.deriv("x").deriv("x"),
        "xxz": Fx.deriv("x").deriv("z"),
        "xzz": Fx.deriv("z").deriv("z"),
        "zzz": F.deriv("z").deriv("z").deriv("z"),
    }.items():
        d[name] = p.eval(x, z0)
    x1 = -d["z"] / d["x"]
    x2 = -(d["xx"] * x1 * x1 + 2 * d["xz"] * x1 + d["zz"]) / d["x"]
    x3 = -(
        d["xxx"] * x1**3
        + 3 * d["xxz"] * x1 * x1
        + 3 * d["xzz"] * x1
        + d["zzz"]
        + 3 * x2 * (d["xx"] * x1 + d["xz"])
    ) / d["x"]
    schw = x3 / x1 - 1.5 * (x2 / x1) ** 2
    return src.Q.eval_complex(x) * x1 * x1 - 0.5 * schw


def hypergeometric_seed() -> LinearODE:
    """Second-order equation on the J-line with singular points 0, 1,
    infinity and local exponent differences 1/3, 1/2, 0; the pullbacks
    of its normal form along the J-invariant families reproduce the four
    base equations."""
    J = UPoly.x()
    den = J * (J - 1)
    p = RatFunc(UPoly([-4, 7]), den * 6)
    q = RatFunc(UPoly.const(1), den * 144)
    return LinearODE(p=p, q=q)


def hypergeometric_normal_form() -> NormalODE:
    return to_normal_form(hypergeometric_seed())
