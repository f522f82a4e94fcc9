"""Exact polynomial and rational-function arithmetic over the rationals.

Univariate polynomials (`UPoly`), reduced rational functions (`RatFunc`),
bivariate polynomials (`BiPoly`) and unreduced bivariate quotients (`BiRat`)
with Fraction coefficients throughout.  Includes gcd and squarefree
machinery, fraction-free Sylvester resultants, floating root extraction
with multiplicities, and a small text grammar for round-tripping
expressions such as ``3/2*x^2*z - z + 7``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Rat = Fraction
Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact scalar: {v!r}")


# ---------------------------------------------------------------------------
# univariate polynomials


class UPoly:
    """Univariate polynomial over Q, coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors

    @staticmethod
    def const(v: Scalar) -> "UPoly":
        return UPoly([_frac(v)])

    @staticmethod
    def x() -> "UPoly":
        return UPoly([0, 1])

    @staticmethod
    def monomial(k: int, c: Scalar = 1) -> "UPoly":
        return UPoly([0] * k + [_frac(c)])

    # -- structure

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UPoly.const(other)
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({upoly_str(self)})"

    # -- ring operations

    def __add__(self, other) -> "UPoly":
        other = _as_upoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UPoly":
        return self + (-_as_upoly(other))

    def __rsub__(self, other) -> "UPoly":
        return _as_upoly(other) - self

    def __mul__(self, other) -> "UPoly":
        other = _as_upoly(other)
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d = other.degree
        lc = other.lead()
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for j, b in enumerate(other.coeffs):
                r[k + j] -= f * b
            r.pop()
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(_as_upoly(other))[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(_as_upoly(other))[1]

    def divexact(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- calculus and evaluation

    def deriv(self) -> "UPoly":
        return UPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, v):
        """Horner evaluation; works for Fraction, complex, UPoly, RatFunc."""
        if isinstance(v, (UPoly, RatFunc)):
            acc = v * 0 if isinstance(v, RatFunc) else UPoly()
            for c in reversed(self.coeffs):
                acc = acc * v + c
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def eval_complex(self, v: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * v + complex(c)
        return acc

    # -- normal forms

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        lc = self.lead()
        return UPoly([c / lc for c in self.coeffs])

    def primitive(self) -> "UPoly":
        """Integer-coefficient scalar multiple with content 1, positive lead."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return UPoly([Fraction(n, g) for n in ints])

    def int_coeffs(self) -> list[int]:
        p = self.primitive()
        return [int(c) for c in p.coeffs]


def _as_upoly(v) -> UPoly:
    if isinstance(v, UPoly):
        return v
    return UPoly.const(_frac(v))


def u_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd over Q by the Euclidean algorithm."""
    a, b = a.monic() if a else a, b.monic() if b else b
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: UPoly) -> UPoly:
    if p.degree <= 0:
        return p.monic() if not p.is_zero() else p
    return p.divexact(u_gcd(p, p.deriv())).monic()


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Musser decomposition: monic pairwise-coprime factors with multiplicities."""
    if p.degree <= 0:
        return []
    p = p.monic()
    w = u_gcd(p, p.deriv())
    c = p.divexact(w)
    out: list[tuple[UPoly, int]] = []
    i = 1
    while c.degree > 0:
        y = u_gcd(w, c)
        z = c.divexact(y)
        if z.degree > 0:
            out.append((z, i))
        c = y
        if not w.is_zero():
            w = w.divexact(y)
        i += 1
    return out


# ---------------------------------------------------------------------------
# rational functions in one variable


class RatFunc:
    """Reduced quotient of two UPoly: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced: bool = False):
        num = _as_upoly(num)
        den = _as_upoly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UPoly.const(1)
            else:
                g = u_gcd(num, den)
                if g.degree > 0:
                    num = num.divexact(g)
                    den = den.divexact(g)
            lc = den.lead()
            if lc != 1:
                num = num * (1 / lc)
                den = den.monic()
        self.num = num
        self.den = den

    @staticmethod
    def const(v: Scalar) -> "RatFunc":
        return RatFunc(UPoly.const(v), 1, _reduced=True)

    @staticmethod
    def x() -> "RatFunc":
        return RatFunc(UPoly.x(), 1, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        return self.num[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({ratfunc_str(self)})"

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "RatFunc":
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return _as_ratfunc(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_ratfunc(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def deriv(self) -> "RatFunc":
        return RatFunc(
            self.num.deriv() * self.den - self.num * self.den.deriv(),
            self.den * self.den,
        )

    def compose(self, inner: "RatFunc") -> "RatFunc":
        """Substitute `inner` for the variable."""
        n = self.num.eval(inner)
        d = self.den.eval(inner)
        return n / d

    def eval(self, v):
        n = self.num.eval(v)
        d = self.den.eval(v)
        return n / d

    def eval_complex(self, v: complex) -> complex:
        return self.num.eval_complex(v) / self.den.eval_complex(v)


def _as_ratfunc(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, UPoly):
        return RatFunc(v, 1, _reduced=True)
    return RatFunc.const(_frac(v))


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Polynomial in (x, z) over Q as a monomial dict {(i, j): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Scalar] | None = None):
        t: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                c = _frac(c)
                if c:
                    t[(int(i), int(j))] = c
        self.terms = t

    @staticmethod
    def const(v: Scalar) -> "BiPoly":
        return BiPoly({(0, 0): v})

    @staticmethod
    def x() -> "BiPoly":
        return BiPoly({(1, 0): 1})

    @staticmethod
    def z() -> "BiPoly":
        return BiPoly({(0, 1): 1})

    @staticmethod
    def from_upoly(p: UPoly, var: str) -> "BiPoly":
        if var == "x":
            return BiPoly({(k, 0): c for k, c in enumerate(p.coeffs)})
        if var == "z":
            return BiPoly({(0, k): c for k, c in enumerate(p.coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPoly({bipoly_str(self)})"

    def deg(self, var: str) -> int:
        if not self.terms:
            return -1
        k = 0 if var == "x" else 1
        return max(m[k] for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def __add__(self, other) -> "BiPoly":
        other = _as_bipoly(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, Fraction(0)) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        out = BiPoly()
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        out = BiPoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "BiPoly":
        return self + (-_as_bipoly(other))

    def __rsub__(self, other) -> "BiPoly":
        return _as_bipoly(other) - self

    def __mul__(self, other) -> "BiPoly":
        other = _as_bipoly(other)
        t: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                s = t.get(m, Fraction(0)) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        out = BiPoly()
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def transposed(self) -> "BiPoly":
        """Swap the roles of the two variables."""
        out = BiPoly()
        out.terms = {(j, i): c for (i, j), c in self.terms.items()}
        return out

    def is_even_in(self, var: str) -> bool:
        k = 0 if var == "x" else 1
        return all(m[k] % 2 == 0 for m in self.terms)

    def deriv(self, var: str) -> "BiPoly":
        k = 0 if var == "x" else 1
        t: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[k]
            if e:
                m = (i - 1, j) if k == 0 else (i, j - 1)
                t[m] = c * e
        out = BiPoly()
        out.terms = t
        return out

    # -- views and evaluation

    def coeffs_in(self, var: str) -> list[UPoly]:
        """Ascending coefficients in `var`, each a UPoly in the other variable."""
        d = self.deg(var)
        if d < 0:
            return []
        rows: list[dict[int, Fraction]] = [dict() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            if var == "x":
                rows[i][j] = c
            else:
                rows[j][i] = c
        out = []
        for row in rows:
            n = max(row) + 1 if row else 0
            out.append(UPoly([row.get(k, 0) for k in range(n)]))
        return out

    def subs_x(self, v: Scalar) -> UPoly:
        """Evaluate x exactly, returning a UPoly in z."""
        v = _frac(v)
        acc: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            acc[j] = acc.get(j, Fraction(0)) + c * v**i
        n = max(acc) + 1 if acc else 0
        return UPoly([acc.get(k, 0) for k in range(n)])

    def subs_z(self, v: Scalar) -> UPoly:
        v = _frac(v)
        acc: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            acc[i] = acc.get(i, Fraction(0)) + c * v**j
        n = max(acc) + 1 if acc else 0
        return UPoly([acc.get(k, 0) for k in range(n)])

    def subs(self, xv: "UPoly | RatFunc", zv: "UPoly | RatFunc"):
        """Substitute univariate expressions for both variables."""
        acc = None
        for (i, j), c in self.terms.items():
            term = _as_ratfunc(c) * _as_ratfunc(xv) ** i * _as_ratfunc(zv) ** j
            acc = term if acc is None else acc + term
        return acc if acc is not None else RatFunc.const(0)

    def eval(self, xv: complex, zv: complex) -> complex:
        acc = 0j
        for (i, j), c in self.terms.items():
            acc += complex(c) * xv**i * zv**j
        return acc

    def eval_mp(self, xv, zv, dps: int | None = None):
        """Evaluate in arbitrary precision (mpmath.mpc).

        Unreduced quotient representations can carry enormous integer
        coefficients whose float evaluation cancels catastrophically;
        the working precision is sized to the coefficient magnitudes.
        """
        import mpmath as mp

        if dps is None:
            bits = max(
                (max(c.numerator.bit_length(), c.denominator.bit_length())
                 for c in self.terms.values()),
                default=1,
            )
            size = max(abs(complex(xv)), abs(complex(zv)), 1.0)
            dps = min(300, int(bits * 0.302) + int((self.total_degree() + 1)
                                                   * math.log10(1.0 + size)) + 30)
        with mp.workdps(dps):
            X = mp.mpc(xv)
            Z = mp.mpc(zv)
            acc = mp.mpc(0)
            for (i, j), c in self.terms.items():
                acc += mp.mpf(c.numerator) / mp.mpf(c.denominator) * X**i * Z**j
            return acc

    def eval_exact(self, xv: Scalar, zv: Scalar) -> Fraction:
        xv, zv = _frac(xv), _frac(zv)
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * xv**i * zv**j
        return acc

    # -- normal forms

    def primitive(self) -> "BiPoly":
        """Integer coefficients with content 1; leading monomial positive.

        Leading monomial taken in graded lexicographic order with x > z.
        """
        if not self.terms:
            return self
        den = math.lcm(*(c.denominator for c in self.terms.values()))
        ints = {m: c.numerator * (den // c.denominator) for m, c in self.terms.items()}
        g = math.gcd(*ints.values())
        lead = max(ints, key=lambda m: (m[0] + m[1], m[0]))
        if ints[lead] < 0:
            g = -g
        out = BiPoly()
        out.terms = {m: Fraction(v, g) for m, v in ints.items()}
        return out

    def to_float_grid(self) -> np.ndarray:
        """Dense coefficient array A[i, j] as floats (x-degree rows)."""
        dx, dz = self.deg("x"), self.deg("z")
        A = np.zeros((max(dx, 0) + 1, max(dz, 0) + 1))
        scale = max((abs(c) for c in self.terms.values()), default=Fraction(1))
        for (i, j), c in self.terms.items():
            A[i, j] = float(c / scale)
        return A


def _as_bipoly(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, UPoly):
        raise TypeError("ambiguous variable; use BiPoly.from_upoly")
    return BiPoly.const(_frac(v))


def divides(F: BiPoly, G: BiPoly, var: str = "x") -> bool:
    """True iff F | G in Q[x, z], by fraction-free pseudo-division in `var`.

    Requires F to carry no factor free of `var` (checked); then the
    pseudo-remainder of G by F vanishes exactly when F divides G, since
    the leading coefficient powers introduced by pseudo-division share no
    factor with F.
    """
    if G.is_zero():
        return True
    if F.is_zero():
        return False
    fc = F.coeffs_in(var)
    gc = G.coeffs_in(var)
    df, dg = len(fc) - 1, len(gc) - 1
    if df < 0 or df > dg:
        return False
    if df == 0:
        return all(c % fc[0] == UPoly() for c in gc)
    content = fc[0]
    for c in fc[1:]:
        content = u_gcd(content, c)
        if content.degree == 0:
            break
    if content.degree > 0:
        raise ValueError("divisor has a factor free of the division variable")
    lead = fc[-1]
    rem = list(gc)
    for k in range(dg, df - 1, -1):
        top = rem[k]
        if top.is_zero():
            continue
        rem = [c * lead for c in rem]
        for t in range(df + 1):
            rem[k - df + t] = rem[k - df + t] - top * fc[t]
    return all(r.is_zero() for r in rem)


# ---------------------------------------------------------------------------
# bivariate rational expressions (unreduced quotients)


class BiRat:
    """Quotient of two BiPoly, kept unreduced apart from content scaling."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        den = den if den is not None else BiPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("BiRat with zero denominator")
        if num.is_zero():
            den = BiPoly.const(1)
        self.num = num
        self.den = den

    @staticmethod
    def const(v: Scalar) -> "BiRat":
        return BiRat(BiPoly.const(v))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "BiRat":
        other = _as_birat(other)
        if self.den == other.den:
            return BiRat(self.num + other.num, self.den)
        return BiRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "BiRat":
        return BiRat(-self.num, self.den)

    def __sub__(self, other) -> "BiRat":
        return self + (-_as_birat(other))

    def __rsub__(self, other):
        return _as_birat(other) - self

    def __mul__(self, other) -> "BiRat":
        other = _as_birat(other)
        return BiRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BiRat":
        other = _as_birat(other)
        if other.is_zero():
            raise ZeroDivisionError
        return BiRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_birat(other) / self

    def __pow__(self, n: int) -> "BiRat":
        if n < 0:
            return BiRat(self.den, self.num) ** (-n)
        return BiRat(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        """Equality as rational expressions (cross-multiplied)."""
        other = _as_birat(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("BiRat is unhashable")

    def __repr__(self):
        return f"BiRat(({bipoly_str(self.num)})/({bipoly_str(self.den)}))"

    def scaled(self) -> "BiRat":
        """Content-normalize numerator and denominator jointly."""
        if self.num.is_zero():
            return BiRat(BiPoly(), BiPoly.const(1))
        n = self.num.primitive()
        d = self.den.primitive()
        # keep the overall rational constant exact
        cn = next(iter(self.num.terms.values())) / n.terms[next(iter(self.num.terms))]
        cd = next(iter(self.den.terms.values())) / d.terms[next(iter(self.den.terms))]
        c = cn / cd
        return BiRat(n * BiPoly.const(c.numerator), d * BiPoly.const(c.denominator))

    def eval(self, xv: complex, zv: complex) -> complex:
        return self.num.eval(xv, zv) / self.den.eval(xv, zv)

    def eval_mp(self, xv, zv, dps: int | None = None) -> complex:
        return complex(self.num.eval_mp(xv, zv, dps) / self.den.eval_mp(xv, zv, dps))

    def eval_exact(self, xv: Scalar, zv: Scalar) -> Fraction:
        return self.num.eval_exact(xv, zv) / self.den.eval_exact(xv, zv)


def _as_birat(v) -> BiRat:
    if isinstance(v, BiRat):
        return v
    if isinstance(v, BiPoly):
        return BiRat(v)
    return BiRat.const(_frac(v))


def birat_from_ratfunc(r: RatFunc, var: str) -> BiRat:
    return BiRat(BiPoly.from_upoly(r.num, var), BiPoly.from_upoly(r.den, var))


def cross_difference(lhs: RatFunc, rhs: RatFunc) -> BiPoly:
    """Numerator of lhs(x) - rhs(z), content-normalized.

    The zero set of the result is the correspondence curve
    lhs(x) = rhs(z) with denominators cleared.
    """
    nx = BiPoly.from_upoly(lhs.num, "x")
    dx = BiPoly.from_upoly(lhs.den, "x")
    nz = BiPoly.from_upoly(rhs.num, "z")
    dz = BiPoly.from_upoly(rhs.den, "z")
    return (nx * dz - nz * dx).primitive()


# ---------------------------------------------------------------------------
# resultants (fraction-free Bareiss on the Sylvester matrix)


def _bareiss_det(M: list[list], one, zero, is_zero) -> "object":
    """Determinant by Bareiss elimination; entries need *, -, neg, divexact."""
    n = len(M)
    if n == 0:
        return one
    M = [row[:] for row in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(M[k][k]):
            piv = next((r for r in range(k + 1, n) if not is_zero(M[r][k])), None)
            if piv is None:
                return zero
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num.divexact(prev)
            M[i][k] = zero
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def sylvester_matrix(F: BiPoly, G: BiPoly, var: str) -> list[list[UPoly]]:
    fc = F.coeffs_in(var)
    gc = G.coeffs_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        raise ValueError("resultant of a zero polynomial")
    N = m + n
    rows: list[list[UPoly]] = []
    frow = list(reversed(fc))
    grow = list(reversed(gc))
    for k in range(n):
        rows.append([UPoly()] * k + frow + [UPoly()] * (N - m - 1 - k))
    for k in range(m):
        rows.append([UPoly()] * k + grow + [UPoly()] * (N - n - 1 - k))
    return rows


def resultant(F: BiPoly, G: BiPoly, var: str) -> UPoly:
    """Res_var(F, G) as an exact UPoly in the other variable."""
    fc = F.coeffs_in(var)
    gc = G.coeffs_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        raise ValueError("resultant of a zero polynomial")
    if m == 0:
        return fc[0] ** n if n >= 0 else UPoly.const(1)
    if n == 0:
        return gc[0] ** m
    M = sylvester_matrix(F, G, var)
    return _bareiss_det(M, UPoly.const(1), UPoly(), lambda p: p.is_zero())


def resultant_at(F: BiPoly, G: BiPoly, var: str, value: Scalar) -> Fraction:
    """Res_var(F, G) with the other variable specialized, via integer Bareiss."""
    other = "z" if var == "x" else "x"
    Fv = F.subs_z(value) if other == "z" else F.subs_x(value)
    Gv = G.subs_z(value) if other == "z" else G.subs_x(value)
    m, n = Fv.degree, Gv.degree
    if m < 0 or n < 0:
        raise ValueError("zero polynomial at specialization")
    if m == 0:
        return Fv[0] ** n
    if n == 0:
        return Gv[0] ** m
    N = m + n
    frow = list(reversed(Fv.coeffs))
    grow = list(reversed(Gv.coeffs))
    rows: list[list[Fraction]] = []
    for k in range(n):
        rows.append([Fraction(0)] * k + frow + [Fraction(0)] * (N - m - 1 - k))
    for k in range(m):
        rows.append([Fraction(0)] * k + grow + [Fraction(0)] * (N - n - 1 - k))

    class _W:
        __slots__ = ("v",)

        def __init__(self, v):
            self.v = v

        def __mul__(self, o):
            return _W(self.v * o.v)

        def __sub__(self, o):
            return _W(self.v - o.v)

        def __neg__(self):
            return _W(-self.v)

        def divexact(self, o):
            return _W(self.v / o.v)

    M = [[_W(c) for c in row] for row in rows]
    d = _bareiss_det(M, _W(Fraction(1)), _W(Fraction(0)), lambda w: w.v == 0)
    return d.v


# ---------------------------------------------------------------------------
# numerical roots with multiplicity


def _cluster_merge(roots: Sequence[complex], tol: float) -> list[complex]:
    out: list[list[complex]] = []
    for r in sorted(roots, key=lambda c: (c.real, c.imag)):
        for grp in out:
            if abs(r - grp[0]) <= tol * (1 + abs(grp[0])):
                grp.append(r)
                break
        else:
            out.append([r])
    return [sum(g) / len(g) for g in out]


def complex_roots(p: UPoly, precision: int = 15) -> list[tuple[complex, int]]:
    """All complex roots with multiplicities, to roughly `precision` digits.

    Multiplicity structure comes from the exact squarefree decomposition;
    each squarefree factor is solved numerically and Newton-polished against
    its exact coefficients, then near-coincident roots are merged at
    relative tolerance 10**(-precision/2).
    """
    if p.degree <= 0:
        return []
    tol = 10.0 ** (-precision / 2)
    found: list[tuple[complex, int]] = []
    for fac, mult in squarefree_decomposition(p):
        if fac.degree <= 0:
            continue
        prim = fac.primitive()
        scale = max(abs(c) for c in prim.coeffs)
        cs = [float(c / scale) for c in prim.coeffs]
        rts = np.roots(cs[::-1]) if fac.degree > 0 else []
        dfac = fac.deriv()
        polished = []
        for r in rts:
            r = complex(r)
            for _ in range(60):
                fv = fac.eval_complex(r)
                dv = dfac.eval_complex(r)
                if dv == 0:
                    break
                step = fv / dv
                r -= step
                if abs(step) <= 1e-17 * (1 + abs(r)):
                    break
            polished.append(r)
        for r in _cluster_merge(polished, tol):
            found.append((r, mult))
    merged: list[tuple[complex, int]] = []
    for r, m in sorted(found, key=lambda t: (t[0].real, t[0].imag)):
        for k, (r2, m2) in enumerate(merged):
            if abs(r - r2) <= tol * (1 + abs(r2)):
                merged[k] = (r2, m2 + m)
                break
        else:
            merged.append((r, m))
    return merged


# ---------------------------------------------------------------------------
# text grammar: parse and print


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")


def _tokenize(s: str) -> list[str]:
    out, pos = [], 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip() == "":
                break
            raise ValueError(f"bad character in expression at {s[pos:]!r}")
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    """Recursive-descent parser over BiRat with a variable-name map."""

    def __init__(self, tokens: list[str], varmap: dict[str, BiRat]):
        self.toks = tokens
        self.i = 0
        self.varmap = varmap

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, t):
        got = self.take()
        if got != t:
            raise ValueError(f"expected {t!r}, got {got!r}")

    def parse(self) -> BiRat:
        v = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at {self.peek()!r}")
        return v

    def expr(self) -> BiRat:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self) -> BiRat:
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            f = self.factor()
            v = v * f if op == "*" else v / f
        return v

    def factor(self) -> BiRat:
        if self.peek() in ("+", "-"):
            op = self.take()
            f = self.factor()
            return -f if op == "-" else f
        v = self.atom()
        while self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            e = self.take()
            if e is None or not e.isdigit():
                raise ValueError("exponent must be an integer")
            n = int(e)
            v = v ** (-n if neg else n)
        return v

    def atom(self) -> BiRat:
        t = self.take()
        if t is None:
            raise ValueError("unexpected end of expression")
        if t == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t.isdigit():
            return BiRat.const(int(t))
        if t in self.varmap:
            return self.varmap[t]
        raise ValueError(f"unknown symbol {t!r}")


def parse_expression(s: str, variables: Sequence[str] = ("x", "z")) -> BiRat:
    """Parse `3/2*x^2*z - z + 7`-style text into an exact BiRat.

    `variables` names the symbols mapped onto the first and second slots.
    """
    varmap: dict[str, BiRat] = {}
    if len(variables) >= 1:
        varmap[variables[0]] = BiRat(BiPoly.x())
    if len(variables) >= 2:
        varmap[variables[1]] = BiRat(BiPoly.z())
    return _Parser(_tokenize(s), varmap).parse()


def parse_bipoly(s: str, variables: Sequence[str] = ("x", "z")) -> BiPoly:
    r = parse_expression(s, variables)
    den = r.den
    if den.deg("x") > 0 or den.deg("z") > 0:
        raise ValueError("expression is not polynomial")
    c = den.terms.get((0, 0), Fraction(1))
    out = BiPoly()
    out.terms = {m: v / c for m, v in r.num.terms.items()}
    return out

def _upoly_from_bipoly(p: BiPoly) -> UPoly:
    if p.deg("x") > 0 and p.deg("z") > 0:
        raise ValueError("expression is not univariate")
    return _upoly_axis(p, 1 if p.deg("z") > 0 else 0)


def _upoly_axis(p: BiPoly, axis: int) -> UPoly:
    d = max((m[axis] for m in p.terms), default=-1)
    cs = [Fraction(0)] * (d + 1)
    for m, c in p.terms.items():
        cs[m[axis]] = c
    return UPoly(cs)


def parse_ratfunc(s: str, variable: str = "x") -> RatFunc:
    r = parse_expression(s, (variable,))
    return RatFunc(_upoly_from_bipoly(r.num), _upoly_from_bipoly(r.den))


def parse_upoly(s: str, variable: str = "x") -> UPoly:
    r = parse_ratfunc(s, variable)
    if r.den.degree > 0:
        raise ValueError("expression is not polynomial")
    return UPoly([c / r.den[0] for c in r.num.coeffs])


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_str(c: Fraction, mono: str) -> str:
    if not mono:
        return _frac_str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{_frac_str(c)}*{mono}"


def _join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def upoly_str(p: UPoly, variable: str = "x") -> str:
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = variable
        else:
            mono = f"{variable}^{k}"
        parts.append(_term_str(c, mono))
    return _join_terms(parts)


def ratfunc_str(r: RatFunc, variable: str = "x") -> str:
    ns = upoly_str(r.num, variable)
    if r.den == UPoly.const(1):
        return ns
    return f"({ns})/({upoly_str(r.den, variable)})"


def bipoly_str(p: BiPoly, variables: Sequence[str] = ("x", "z")) -> str:
    vx, vz = variables
    keys = sorted(p.terms, key=lambda m: (-(m[0] + m[1]), -m[0]))
    parts = []
    for i, j in keys:
        mono = "*".join(
            s
            for s in (
                (vx if i == 1 else f"{vx}^{i}") if i else "",
                (vz if j == 1 else f"{vz}^{j}") if j else "",
            )
            if s
        )
        parts.append(_term_str(p.terms[(i, j)], mono))
    return _join_terms(parts)
