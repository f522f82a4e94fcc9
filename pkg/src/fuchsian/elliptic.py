"""Numerics for elliptic objects: theta series, Weierstrass functions,
modular inversion, the Klein J function, Gauss hypergeometric evaluation,
Legendre functions, and the double-cover maps between punctured spheres
and tori.

Conventions
-----------
``theta_fun(j, u, mu)`` is the classical Jacobi theta_j evaluated at argument
pi*u with nome q = exp(i*pi*mu); in this convention theta1 vanishes exactly on
the unit-cell lattice u = m + n*mu.  A :class:`Lattice` carries half-periods
(omega, omega_p = mu*omega); the Weierstrass functions built on it satisfy
wp_prime**2 = 4*wp**3 - g2*wp - g3, and the root labels are pinned by the
quartic theta relations

    theta2(mu)^4 = (4/pi^2) (e_pp - e_p) omega^2,
    theta3(mu)^4 = (4/pi^2) (e - e_p)   omega^2,
    theta4(mu)^4 = (4/pi^2) (e - e_pp)  omega^2,

so that e = wp(omega), e_p = wp(omega_p), e_pp = wp(omega + omega_p).

All series run to relative truncation 1e-18; hardware doubles bound the
delivered accuracy at roughly 1e-15 relative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from scipy.special import gamma as _scipy_gamma

__all__ = [
    "SERIES_TOL",
    "EQUIANHARMONIC_CORNER",
    "theta_fun",
    "theta_const",
    "theta_quasi_factor",
    "theta1_prime_zero",
    "dedekind_eta",
    "g2g3_of_mu",
    "klein_j_of_tau",
    "invert_klein_j",
    "Lattice",
    "wp",
    "wp_prime",
    "weier_zeta",
    "wp_inverse",
    "modular_inversion",
    "halphen_s",
    "halphen_forward",
    "halphen_inverse",
    "halphen_maps",
    "four_puncture_q",
    "lame_form_q",
    "TorusODE",
    "HypParams",
    "hyp2f1",
    "legendre_P",
    "legendre_PQ",
    "complex_gamma",
    "numeric_schwarzian",
]

PI = math.pi
SERIES_TOL = 1e-18
_MAX_TERMS = 600

# hexagonal corner of the fundamental domain, exp(2*pi*i/3)
EQUIANHARMONIC_CORNER = complex(-0.5, 0.5 * math.sqrt(3.0))


def complex_gamma(z: complex) -> complex:
    """Gamma function on the complex plane."""
    return complex(_scipy_gamma(complex(z)))


def _require_upper(tau: complex, what: str) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise ValueError(f"{what} must lie in the upper half-plane, got {tau}")
    return tau


# ---------------------------------------------------------------------------
# theta series


def _decay_floor(z: complex, q: complex) -> int:
    # index past which the quadratic nome decay dominates exp((2n+1)|Im z|)
    return int(abs(z.imag) / max(-math.log(abs(q)), 1e-12)) + 2


def _theta_raw(j: int, z: complex, q: complex, rel_tol: float) -> complex:
    total = 0j if j in (1, 2) else 1.0 + 0j
    quiet = 0
    floor = _decay_floor(z, q)
    for n in range(_MAX_TERMS):
        if j == 1:
            sgn = -1.0 if n % 2 else 1.0
            term = 2.0 * sgn * q ** ((n + 0.5) ** 2) * cmath.sin((2 * n + 1) * z)
        elif j == 2:
            term = 2.0 * q ** ((n + 0.5) ** 2) * cmath.cos((2 * n + 1) * z)
        else:
            k = n + 1
            sgn = -1.0 if (j == 4 and k % 2) else 1.0
            term = 2.0 * sgn * q ** (k * k) * cmath.cos(2 * k * z)
        total += term
        if abs(term) <= rel_tol * (1.0 + abs(total)):
            quiet += 1
            if quiet >= 2 and n >= floor:
                return total
        else:
            quiet = 0
    raise ArithmeticError("theta series did not converge; modulus too close to the real axis")


def _reduce_mod_cell(u: complex, mu: complex) -> tuple[complex, int, int]:
    # shift u by the unit-cell lattice {m + n*mu} to tame the series argument
    n = round(u.imag / mu.imag)
    m = round((u - n * mu).real)
    return u - m - n * mu, m, n


def theta_quasi_factor(j: int, u: complex, mu: complex, m: int, n: int) -> complex:
    """Factor f with theta_j(u + m + n*mu) = f * theta_j(u)."""
    if j not in (1, 2, 3, 4):
        raise ValueError("theta index must be 1, 2, 3 or 4")
    mu = _require_upper(mu, "theta modulus")
    q = cmath.exp(1j * PI * mu)
    base = q ** (-n * n) * cmath.exp(-2j * PI * n * complex(u))
    sign = {1: (-1) ** (m + n), 2: (-1) ** m, 3: 1, 4: (-1) ** n}[j]
    return sign * base


def theta_fun(j: int, u: complex, mu: complex, rel_tol: float = SERIES_TOL) -> complex:
    """Jacobi theta_j at argument pi*u with nome exp(i*pi*mu).

    theta1 is odd with simple zeros on u = m + n*mu; theta2, theta3, theta4
    are even.  Arguments of any size are handled by exact quasi-periodic
    reduction into the unit cell.
    """
    if j not in (1, 2, 3, 4):
        raise ValueError("theta index must be 1, 2, 3 or 4")
    mu = _require_upper(mu, "theta modulus")
    u = complex(u)
    u_red, m, n = _reduce_mod_cell(u, mu)
    val = _theta_raw(j, PI * u_red, cmath.exp(1j * PI * mu), rel_tol)
    if m == 0 and n == 0:
        return val
    return theta_quasi_factor(j, u_red, mu, m, n) * val


def theta_const(j: int, tau: complex, rel_tol: float = SERIES_TOL) -> complex:
    """Theta constant theta_j(0 | tau), j in {2, 3, 4} (theta1 vanishes at 0)."""
    if j not in (2, 3, 4):
        raise ValueError("theta constants take j in {2, 3, 4}")
    tau = _require_upper(tau, "theta modulus")
    return _theta_raw(j, 0j, cmath.exp(1j * PI * tau), rel_tol)


def _theta1_zero_derivs(q: complex, rel_tol: float) -> tuple[complex, complex]:
    # (theta1', theta1''') at 0 with respect to the classical argument
    d1 = 0j
    d3 = 0j
    quiet = 0
    for n in range(_MAX_TERMS):
        k = 2 * n + 1
        sgn = -1.0 if n % 2 else 1.0
        a = 2.0 * sgn * q ** ((n + 0.5) ** 2)
        d1 += a * k
        d3 -= a * k ** 3
        if abs(a) * k ** 3 <= rel_tol * (1.0 + abs(d1) + abs(d3)):
            quiet += 1
            if quiet >= 2:
                return d1, d3
        else:
            quiet = 0
    raise ArithmeticError("theta series did not converge; modulus too close to the real axis")


def _theta1_derivs(z: complex, q: complex, rel_tol: float) -> tuple[complex, complex, complex, complex]:
    # theta1 and its first three derivatives with respect to the classical argument
    t0 = t1 = t2 = t3 = 0j
    quiet = 0
    floor = _decay_floor(z, q)
    for n in range(_MAX_TERMS):
        k = 2 * n + 1
        sgn = -1.0 if n % 2 else 1.0
        a = 2.0 * sgn * q ** ((n + 0.5) ** 2)
        s = cmath.sin(k * z)
        c = cmath.cos(k * z)
        t0 += a * s
        t1 += a * k * c
        t2 -= a * k * k * s
        t3 -= a * k ** 3 * c
        if abs(a) * (abs(s) + abs(c) + 1.0) * k ** 3 <= rel_tol * (1.0 + abs(t0) + abs(t1) + abs(t2) + abs(t3)):
            quiet += 1
            if quiet >= 2 and n >= floor:
                return t0, t1, t2, t3
        else:
            quiet = 0
    raise ArithmeticError("theta series did not converge; modulus too close to the real axis")


def theta1_prime_zero(mu: complex, rel_tol: float = SERIES_TOL) -> complex:
    """d/du theta1(u | mu) at u = 0; equals pi * theta2 * theta3 * theta4."""
    mu = _require_upper(mu, "theta modulus")
    d1, _ = _theta1_zero_derivs(cmath.exp(1j * PI * mu), rel_tol)
    return PI * d1


# ---------------------------------------------------------------------------
# eta, invariants, Klein J


def dedekind_eta(tau: complex, rel_tol: float = SERIES_TOL) -> complex:
    """Dedekind eta, q^(1/24) * prod(1 - q^n) with q = exp(2*pi*i*tau)."""
    tau = _require_upper(tau, "eta argument")
    pref = 1.0 + 0j
    # pull tau toward the fundamental domain so the product converges fast
    for _ in range(64):
        k = round(tau.real)
        if k:
            tau -= k
            pref *= cmath.exp(1j * PI * k / 12.0)
        if abs(tau) < 1.0 - 1e-15:
            pref /= cmath.sqrt(-1j * tau)
            tau = -1.0 / tau
        else:
            break
    q = cmath.exp(2j * PI * tau)
    prod = 1.0 + 0j
    qn = 1.0 + 0j
    for _ in range(400):
        qn *= q
        prod *= 1.0 - qn
        if abs(qn) < rel_tol:
            break
    return pref * cmath.exp(1j * PI * tau / 12.0) * prod


def g2g3_of_mu(mu: complex, rel_tol: float = SERIES_TOL) -> tuple[complex, complex]:
    """Weierstrass invariants of the lattice with half-periods (1, mu)."""
    mu = _require_upper(mu, "lattice modulus")
    t2 = theta_const(2, mu, rel_tol) ** 4
    t3 = theta_const(3, mu, rel_tol) ** 4
    g2 = (PI ** 4 / 12.0) * (t2 * t2 + t3 * t3 - t2 * t3)
    g3 = (PI ** 6 / 432.0) * (t2 + t3) * (2.0 * t3 - t2) * (t3 - 2.0 * t2)
    return g2, g3


def klein_j_of_tau(tau: complex, rel_tol: float = SERIES_TOL) -> complex:
    """Klein J, normalized so J(i) = 1 and J vanishes at the hexagonal corner."""
    g2, g3 = g2g3_of_mu(tau, rel_tol)
    num = g2 ** 3
    den = num - 27.0 * g3 ** 2
    if den == 0:
        raise ArithmeticError("Klein J overflows: modulus too close to the cusp")
    return num / den


def _reduce_fundamental(tau: complex) -> complex:
    for _ in range(256):
        tau = complex(tau.real - round(tau.real), tau.imag)
        if abs(tau) < 1.0 - 1e-13:
            tau = -1.0 / tau
        else:
            break
    if tau.real > 0.5 - 1e-13:
        tau -= 1.0
    if abs(abs(tau) - 1.0) <= 1e-13 and tau.real > 1e-13:
        tau = -1.0 / tau
        tau = complex(tau.real - round(tau.real), tau.imag)
    return tau


def invert_klein_j(jval: complex) -> complex:
    """A point tau of the standard fundamental domain with Klein J(tau) = jval."""
    jval = complex(jval)
    if abs(jval - 1.0) <= 1e-14 * (1.0 + abs(jval)):
        return 1j
    if abs(jval) <= 1e-14:
        return EQUIANHARMONIC_CORNER
    tol = 1e-11 * (1.0 + abs(jval))
    seeds = [t * 1j for t in (0.8, 1.0, 1.2, 1.4, 1.6, 1.8, 2.0, 2.4, 3.0)]
    seeds += [complex(-0.5, y) for y in (0.9, 1.05, 1.3, 1.7, 2.2)]
    seeds += [EQUIANHARMONIC_CORNER + d for d in (0.08j, 0.22j, 0.5j, 0.05 + 0.1j, -0.05 + 0.1j)]
    seeds += [complex(0.25, 1.0), complex(-0.25, 1.0), complex(0.35, 1.5), complex(-0.35, 1.5)]
    for seed in seeds:
        tau = seed
        for _ in range(80):
            if tau.imag > 30.0:
                break
            try:
                f = klein_j_of_tau(tau) - jval
                if abs(f) < tol:
                    return _reduce_fundamental(tau)
                h = 1e-6 * (1.0 + abs(tau))
                df = (klein_j_of_tau(tau + h) - klein_j_of_tau(tau - h)) / (2.0 * h)
            except ArithmeticError:
                break
            if df == 0:
                break
            step = f / df
            while (tau - step).imag < 0.05 and abs(step) > 1e-18:
                step *= 0.5
            if abs(step) <= 1e-16 * (1.0 + abs(tau)):
                break
            tau -= step
    raise ArithmeticError(f"could not invert Klein J at {jval}")


# ---------------------------------------------------------------------------
# lattices and Weierstrass functions


@dataclass(frozen=True)
class Lattice:
    """Period lattice with half-periods (omega, omega_p = mu*omega).

    Stores the invariants (g2, g3) and the labelled roots
    (e, e_p, e_pp) = (wp(omega), wp(omega_p), wp(omega + omega_p)) of
    4 t^3 - g2 t - g3, ordered by the quartic theta relations.
    """

    mu: complex
    omega: complex
    omega_p: complex
    g2: complex
    g3: complex
    e: complex
    e_p: complex
    e_pp: complex

    @staticmethod
    def from_mu_omega(mu: complex, omega: complex) -> "Lattice":
        mu = _require_upper(mu, "lattice modulus")
        omega = complex(omega)
        if omega == 0:
            raise ValueError("half-period must be nonzero")
        t2 = theta_const(2, mu) ** 4
        t3 = theta_const(3, mu) ** 4
        t4 = theta_const(4, mu) ** 4
        s = PI * PI / (4.0 * omega * omega)
        e = s * (t3 + t4) / 3.0
        e_p = s * (t4 - 2.0 * t3) / 3.0
        e_pp = s * (t3 - 2.0 * t4) / 3.0
        g21, g31 = g2g3_of_mu(mu)
        w2 = omega * omega
        lat = Lattice(mu, omega, mu * omega, g21 / (w2 * w2), g31 / (w2 * w2 * w2), e, e_p, e_pp)
        for root in (e, e_p, e_pp):
            res = 4.0 * root ** 3 - lat.g2 * root - lat.g3
            if abs(res) > 1e-8 * (1.0 + 4.0 * abs(root) ** 3 + abs(lat.g2 * root) + abs(lat.g3)):
                raise ArithmeticError("inconsistent lattice data: root fails its cubic")
        return lat

    @property
    def klein_j(self) -> complex:
        num = self.g2 ** 3
        return num / (num - 27.0 * self.g3 ** 2)

    def roots(self) -> tuple[complex, complex, complex]:
        return self.e, self.e_p, self.e_pp

    def reduce(self, u: complex) -> tuple[complex, int, int]:
        """u minus its nearest lattice point 2m*omega + 2n*omega_p."""
        u = complex(u)
        p1 = 2.0 * self.omega
        p2 = 2.0 * self.omega_p
        det = p1.real * p2.imag - p1.imag * p2.real
        al = (u.real * p2.imag - u.imag * p2.real) / det
        be = (p1.real * u.imag - p1.imag * u.real) / det
        m = round(al)
        n = round(be)
        return u - m * p1 - n * p2, m, n


def _wp_core(u: complex, lat: Lattice, rel_tol: float, want_prime: bool) -> tuple[complex, complex]:
    r, _, _ = lat.reduce(u)
    if abs(r) < 1e-8:
        raise ValueError("Weierstrass function evaluated within 1e-8 of a lattice point")
    q = cmath.exp(1j * PI * lat.mu)
    z = 0.5 * PI * r / lat.omega
    t0, t1, t2, t3 = _theta1_derivs(z, q, rel_tol)
    d1, d3 = _theta1_zero_derivs(q, rel_tol)
    # wp on the (1, mu) cell: Laurent-normalized log-derivative of theta1
    log2 = (t2 * t0 - t1 * t1) / (t0 * t0)
    val = (PI * PI / 4.0) * (d3 / (3.0 * d1) - log2)
    p = val / (lat.omega * lat.omega)
    if not want_prime:
        return p, 0j
    log3 = (t3 * t0 * t0 - 3.0 * t2 * t1 * t0 + 2.0 * t1 ** 3) / t0 ** 3
    pp = -(PI / 2.0) ** 3 * log3 / lat.omega ** 3
    return p, pp


def wp(u: complex, lat: Lattice, rel_tol: float = SERIES_TOL) -> complex:
    """Weierstrass elliptic function on `lat`.

    Raises ValueError within 1e-8 of a lattice point (the double pole).
    """
    return _wp_core(complex(u), lat, rel_tol, False)[0]


def wp_prime(u: complex, lat: Lattice, rel_tol: float = SERIES_TOL) -> complex:
    """Derivative of the Weierstrass function on `lat`."""
    return _wp_core(complex(u), lat, rel_tol, True)[1]


def weier_zeta(u: complex, lat: Lattice, rel_tol: float = SERIES_TOL) -> complex:
    """Weierstrass zeta on `lat` (odd; quasi-periodic, not elliptic)."""
    u = complex(u)
    r, m, n = lat.reduce(u)
    if abs(r) < 1e-8:
        raise ValueError("Weierstrass zeta evaluated within 1e-8 of a lattice point")
    q = cmath.exp(1j * PI * lat.mu)
    z = 0.5 * PI * r / lat.omega
    t0, t1, _, _ = _theta1_derivs(z, q, rel_tol)
    d1, d3 = _theta1_zero_derivs(q, rel_tol)
    eta1 = -(PI * PI / 12.0) * d3 / d1
    eta3 = eta1 * lat.mu - 0.5j * PI
    v = r / lat.omega
    val = eta1 * v + 0.5 * PI * t1 / t0
    return (val + 2.0 * m * eta1 + 2.0 * n * eta3) / lat.omega


def wp_inverse(value: complex, lat: Lattice, seed: complex | None = None,
               rel_tol: float = 1e-12) -> complex:
    """One preimage u with wp(u, lat) = value (unique up to lattice and u -> -u)."""
    value = complex(value)
    p1 = 2.0 * lat.omega
    p2 = 2.0 * lat.omega_p
    if seed is not None:
        seeds = [complex(seed)]
    else:
        grid = (0.11, 0.23, 0.31, 0.43)
        seeds = [a * p1 + b * p2 for a in grid for b in grid]
        top = max(abs(lat.e), abs(lat.e_p), abs(lat.e_pp))
        if abs(value) > 4.0 * top:
            # near the pole the principal branch of 1/sqrt(value) is a good start
            seeds.insert(0, 1.0 / cmath.sqrt(value))
    scale = min(abs(p1), abs(p2))
    for u0 in seeds:
        u = u0
        ok = True
        for _ in range(80):
            try:
                p, pp = _wp_core(u, lat, SERIES_TOL, True)
            except ValueError:
                ok = False
                break
            f = p - value
            if abs(f) <= rel_tol * (1.0 + abs(value)):
                if seed is not None:
                    return u
                return lat.reduce(u)[0]
            if abs(pp) < 1e-14 * (1.0 + abs(p)) ** 1.5:
                ok = False
                break
            step = f / pp
            if abs(step) > 0.45 * scale:
                step *= 0.45 * scale / abs(step)
            u = u - step
        if not ok:
            continue
    raise ArithmeticError(f"could not invert wp at value {value}")


def modular_inversion(a: complex, b: complex) -> Lattice:
    """Lattice whose invariants are (g2, g3) = (a, b).

    Degenerate axes are dispatched by symmetry without any root search:
    b = 0 gives the square modulus mu = i, a = 0 the hexagonal corner.
    The generic case inverts Klein J and fixes omega by the ratio
    omega^2 = a*g3(mu)/(b*g2(mu)) of unit-cell invariants.
    """
    a = complex(a)
    b = complex(b)
    disc = a ** 3 - 27.0 * b ** 2
    scale = 1.0 + abs(a) + abs(b)
    if abs(disc) <= 1e-14 * (1.0 + abs(a) ** 3 + abs(b) ** 2):
        raise ValueError("degenerate invariants: a^3 - 27 b^2 = 0 has no lattice")
    if abs(b) <= 1e-14 * scale:
        mu = 1j
        g21, _ = g2g3_of_mu(mu)
        om = (g21 / a) ** 0.25
    elif abs(a) <= 1e-14 * scale:
        mu = EQUIANHARMONIC_CORNER
        _, g31 = g2g3_of_mu(mu)
        om = (g31 / b) ** (1.0 / 6.0)
    else:
        mu = invert_klein_j(a ** 3 / disc)
        g21, g31 = g2g3_of_mu(mu)
        om = cmath.sqrt(a * g31 / (b * g21))
    om = _orient_half_period(om)
    lat = Lattice.from_mu_omega(mu, om)
    if abs(lat.g2 - a) + abs(lat.g3 - b) >= 1e-9 * scale:
        raise ArithmeticError("modular inversion failed to reproduce the invariants")
    return lat


def _orient_half_period(om: complex) -> complex:
    # prefer Re > 0; on the imaginary axis take Im < 0 so that i*om > 0
    if om.real < -1e-12 * abs(om) or (abs(om.real) <= 1e-12 * abs(om) and om.imag > 0):
        return -om
    return om


# ---------------------------------------------------------------------------
# argument doubling between the four-punctured sphere and punctured tori


def halphen_s(x: complex, g2: complex, g3: complex) -> complex:
    """Rational form of the doubling map: equals wp(2u) whenever x = wp(u)."""
    x = complex(x)
    g2 = complex(g2)
    g3 = complex(g3)
    den = 4.0 * x ** 3 - g2 * x - g3
    if abs(den) <= 1e-12 * (1.0 + abs(x)) ** 3 * (1.0 + abs(g2) + abs(g3)):
        raise ValueError("doubling map: x is a finite branch point (wp' vanishes)")
    return ((4.0 * x * x + g2) ** 2 + 32.0 * g3 * x) / (16.0 * den)


def halphen_forward(x: complex, u: complex, lat: Lattice) -> tuple[complex, complex]:
    """(x, u) on the sphere model -> (s, U) on the doubled model, U = 2u."""
    return halphen_s(x, lat.g2, lat.g3), 2.0 * complex(u)


def halphen_inverse(s_val: complex, big_u: complex, lat: Lattice) -> tuple[complex, complex]:
    """(s, U) -> (x, u) with u = U/2 and x = wp(u)."""
    u = 0.5 * complex(big_u)
    return wp(u, lat), u


def halphen_maps(x: complex, u: complex, lat: Lattice) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """Round trip (x, u) -> (s, U) -> (x, u); both legs returned."""
    s_val, big_u = halphen_forward(x, u, lat)
    return (s_val, big_u), halphen_inverse(s_val, big_u, lat)


def four_puncture_q(x: complex, lat: Lattice, acc: complex) -> complex:
    """Coefficient of the x-line equation with four parabolic points.

    This is the image of psi'' = -1/4 (wp(u) + acc) psi under x = wp(u);
    its singularities are the three roots and infinity, all punctures.
    """
    x = complex(x)
    e1, e2, e3 = lat.roots()
    quad = 1.0 / (x - e1) ** 2 + 1.0 / (x - e2) ** 2 + 1.0 / (x - e3) ** 2
    prod = (x - e1) * (x - e2) * (x - e3)
    return -0.25 * (quad - (2.0 * x - complex(acc)) / prod)


def lame_form_q(s_val: complex, lat: Lattice, acc: complex) -> complex:
    """Coefficient of the algebraic Lame form, signature (2, 2, 2, inf).

    Image of psi'' = -1/4 (wp(U) + acc) psi under s = wp(U) on the same
    lattice; the three finite singularities have exponent difference 1/2.
    """
    s_val = complex(s_val)
    e1, e2, e3 = lat.roots()
    quad = 1.0 / (s_val - e1) ** 2 + 1.0 / (s_val - e2) ** 2 + 1.0 / (s_val - e3) ** 2
    prod = (s_val - e1) * (s_val - e2) * (s_val - e3)
    return -(3.0 / 16.0) * quad + (1.0 / 16.0) * (5.0 * s_val - complex(acc)) / prod


@dataclass(frozen=True)
class TorusODE:
    """psi'' = q(u) psi on a torus.

    q(u) = sum_i (A_i wp(u - a_i) + C_i zeta(u - a_i)) + a0 over `lattice`,
    with poles = ((a_i, A_i, C_i), ...).  Ellipticity of q requires the
    zeta coefficients to sum to zero; a pole with A = -1/4 is a puncture
    (parabolic point with zero exponent difference).
    """

    lattice: Lattice
    poles: tuple[tuple[complex, complex, complex], ...]
    a0: complex = 0j

    def __post_init__(self) -> None:
        csum = sum((complex(c) for _, _, c in self.poles), 0j)
        top = max((abs(complex(c)) for _, _, c in self.poles), default=0.0)
        if abs(csum) > 1e-12 * (1.0 + top):
            raise ValueError("zeta coefficients must sum to zero for an elliptic coefficient")

    def q(self, u: complex) -> complex:
        total = complex(self.a0)
        for alpha, big_a, big_c in self.poles:
            du = complex(u) - complex(alpha)
            total += complex(big_a) * wp(du, self.lattice)
            if complex(big_c) != 0:
                total += complex(big_c) * weier_zeta(du, self.lattice)
        return total

    def punctures(self, tol: float = 1e-9) -> tuple[complex, ...]:
        return tuple(complex(a) for a, big_a, _ in self.poles if abs(complex(big_a) + 0.25) <= tol)

    @staticmethod
    def one_puncture(lat: Lattice, acc: complex) -> "TorusODE":
        """psi'' = -1/4 (wp(u) + acc) psi: a single puncture at the origin."""
        return TorusODE(lat, ((0j, -0.25 + 0j, 0j),), -0.25 * complex(acc))


# ---------------------------------------------------------------------------
# Gauss hypergeometric function


@dataclass(frozen=True)
class HypParams:
    """Arguments of the Gauss series 2F1(a, b; c; z).

    `branch` selects the side of the cut [1, oo) when z lies exactly on it:
    +1 is the limit from above, -1 from below.
    """

    a: complex
    b: complex
    c: complex
    z: complex
    branch: int = 1


def _is_int(x: complex, tol: float = 1e-12) -> bool:
    x = complex(x)
    return abs(x.imag) < tol and abs(x.real - round(x.real)) < tol


def _is_nonpos_int(x: complex, tol: float = 1e-12) -> bool:
    return _is_int(x, tol) and round(complex(x).real) <= 0


def _f21_series(a: complex, b: complex, c: complex, z: complex) -> complex:
    term = 1.0 + 0j
    total = term
    quiet = 0
    for k in range(4000):
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * z
        total += term
        if abs(term) <= 1e-17 * (1.0 + abs(total)):
            quiet += 1
            if quiet >= 2:
                return total
        else:
            quiet = 0
    raise ArithmeticError("hypergeometric series did not converge (argument near the unit circle)")


def _f21(a: complex, b: complex, c: complex, z: complex, branch: int = 1) -> complex:
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if _is_nonpos_int(c):
        raise ValueError("2F1 requires c not a nonpositive integer")
    if z == 0:
        return 1.0 + 0j
    if _is_nonpos_int(a) or _is_nonpos_int(b):
        return _f21_series(a, b, c, z)
    if abs(z - 1.0) < 1e-15:
        if (c - a - b).real <= 0:
            raise ValueError("2F1 at z = 1 requires Re(c - a - b) > 0")
        return complex_gamma(c) * complex_gamma(c - a - b) / (
            complex_gamma(c - a) * complex_gamma(c - b))
    if z.imag == 0.0 and z.real > 1.0:
        # nudge off the cut on the requested side; far below any tolerance
        z = complex(z.real, (1.0 if branch >= 0 else -1.0) * 1e-200 * (1.0 + abs(z.real)))
    options = [(abs(z), 0), (abs(z / (z - 1.0)), 1)]
    if not _is_int(c - a - b):
        options.append((abs(1.0 - z), 2))
    if not _is_int(a - b):
        options.append((abs(1.0 / z), 3))
    best, how = min(options)
    if best > 0.92:
        # every transform argument sits near or beyond the unit circle
        # (integer parameter differences rule out the log-free connection
        # formulas); defer to an arbitrary-precision evaluation there
        import mpmath

        with mpmath.workdps(25):
            val = mpmath.hyp2f1(a, b, c, mpmath.mpc(z.real, z.imag))
        return complex(val)
    if how == 0:
        return _f21_series(a, b, c, z)
    if how == 1:
        return (1.0 - z) ** (-a) * _f21_series(a, c - b, c, z / (z - 1.0))
    g = complex_gamma
    if how == 2:
        w = 1.0 - z
        return (g(c) * g(c - a - b) / (g(c - a) * g(c - b)) * _f21_series(a, b, a + b - c + 1.0, w)
                + g(c) * g(a + b - c) / (g(a) * g(b)) * w ** (c - a - b)
                * _f21_series(c - a, c - b, c - a - b + 1.0, w))
    w = 1.0 / z
    return (g(c) * g(b - a) / (g(b) * g(c - a)) * (-z) ** (-a)
            * _f21_series(a, a - c + 1.0, a - b + 1.0, w)
            + g(c) * g(a - b) / (g(a) * g(c - b)) * (-z) ** (-b)
            * _f21_series(b, b - c + 1.0, b - a + 1.0, w))


def hyp2f1(p: HypParams) -> complex:
    """Gauss 2F1 via the defining series and its connection transforms.

    Relative accuracy is about 1e-12 away from the corner points
    exp(+-i*pi/3), where every standard transform degenerates.
    """
    return _f21(p.a, p.b, p.c, p.z, p.branch)


def legendre_P(nu: complex, s: complex) -> complex:
    """Legendre function of the first kind; entire in s off (-inf, -1]."""
    return _f21(-complex(nu), complex(nu) + 1.0, 1.0, 0.5 * (1.0 - complex(s)))


def legendre_PQ(nu: complex, s: complex) -> tuple[complex, complex]:
    """Legendre functions (P_nu(s), Q_nu(s)) of the first and second kind.

    Ferrers form on the real interval (-1, 1); for |s| > 1 off the cut the
    descending-series form of Q is used.  Integer nu is rejected, and s at
    the log-singular points +-1 of Q is out of range (use legendre_P there).
    """
    nu = complex(nu)
    s = complex(s)
    p_val = legendre_P(nu, s)
    sin_pi = cmath.sin(PI * nu)
    if abs(sin_pi) < 1e-10:
        raise ValueError("legendre_PQ requires non-integer degree")
    if s.imag == 0.0 and -1.0 < s.real < 1.0:
        p_neg = _f21(-nu, nu + 1.0, 1.0, 0.5 * (1.0 + s))
        q_val = 0.5 * PI * (cmath.cos(PI * nu) * p_val - p_neg) / sin_pi
        return p_val, q_val
    if abs(s) <= 1.0:
        raise ValueError("Q_nu is implemented on (-1, 1) and for |s| > 1 off the cut")
    q_val = (cmath.sqrt(PI) * complex_gamma(nu + 1.0) / complex_gamma(nu + 1.5)
             * (2.0 * s) ** (-nu - 1.0)
             * _f21(0.5 * nu + 1.0, 0.5 * (nu + 1.0), nu + 1.5, s ** -2.0))
    return p_val, q_val


# ---------------------------------------------------------------------------
# finite-difference Schwarzian


def numeric_schwarzian(f: Callable[[complex], complex], t: complex, h: float | None = None) -> complex:
    """{f, t} = f'''/f' - (3/2)(f''/f')^2 by 4th-order central differences."""
    t = complex(t)
    if h is None:
        h = 1e-3 * (1.0 + abs(t))
    v = {k: f(t + k * h) for k in range(-3, 4)}
    d1 = (v[-2] - 8.0 * v[-1] + 8.0 * v[1] - v[2]) / (12.0 * h)
    d2 = (-v[-2] + 16.0 * v[-1] - 30.0 * v[0] + 16.0 * v[1] - v[2]) / (12.0 * h * h)
    d3 = (v[-3] - 8.0 * v[-2] + 13.0 * v[-1] - 13.0 * v[1] + 8.0 * v[2] - v[3]) / (8.0 * h ** 3)
    return d3 / d1 - 1.5 * (d2 / d1) ** 2
