"""Genus and monodromy of plane curves fibered over the z-line.

A `Cover` treats F(x, z) = 0 as an n-sheeted branched cover of the
z-sphere, n the x-degree.  Branch points come from exact structure when
available (critical-value preimages of the J-maps, or an exact
resultant) and from a generalized-eigenvalue computation otherwise.
Sheets are tracked numerically along protected loops; the resulting
permutations give the irreducible components (monodromy orbits), their
genera by Riemann-Hurwitz, and, for genus-one components, enough
structure to pin down the elliptic J-invariant exactly: a cross-ratio
of branch values for double covers, cyclic deck groups with a fixed
point, or descent through the fiberwise sign involution of curves even
in x.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg as sla

from .exact import (
    BiPoly,
    RatFunc,
    UPoly,
    complex_roots,
    resultant,
    squarefree_part,
)

# base point for all monodromy computations
BASE_POINT = complex(Fraction(17, 13)) + 1j * complex(Fraction(11, 7))

CIRCLE_SAMPLES = 48
INF_CIRCLE_SAMPLES = 96

# letters attached to recurring J values of genus-one components
J_LETTERS = {
    Fraction(0): "E",
    Fraction(1): "L",
    Fraction(2197, 972): "C",
}


def riemann_hurwitz_genus(
    degree: int, base_genus: int, profiles: list[list[int]]
) -> int:
    """Genus of a degree-`degree` cover from ramification profiles.

    Each profile lists the ramification indices over one special point
    of the base and must sum to the degree; unlisted fibers are assumed
    unramified.
    """
    ram = 0
    for prof in profiles:
        if sum(prof) != degree:
            raise ValueError(f"profile {prof} does not sum to the degree {degree}")
        ram += sum(e - 1 for e in prof)
    rhs = degree * (2 * base_genus - 2) + ram
    if rhs % 2:
        raise ValueError("Riemann-Hurwitz parity violated")
    g = (rhs + 2) // 2
    if g < 0:
        raise ValueError("negative genus from profile data")
    return g


def _cycles(p: list[int]) -> list[list[int]]:
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        c = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            c.append(j)
            seen[j] = True
            j = p[j]
        out.append(c)
    return out


def _orbits(perms, n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in perms:
        for i, j in enumerate(p):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def cross_ratio(ts) -> complex:
    """(a-c)(b-d) / ((b-c)(a-d)) with 'inf' entries handled by limits."""
    a, b, c, d = ts
    if a == "inf":
        return (b - d) / (b - c)
    if b == "inf":
        return (a - c) / (a - d)
    if c == "inf":
        return (b - d) / (a - d)
    if d == "inf":
        return (a - c) / (b - c)
    return ((a - c) * (b - d)) / ((b - c) * (a - d))


def j_from_branch_values(ts) -> complex:
    """J-invariant of the double cover of the sphere branched at 4 points."""
    lam = cross_ratio(ts)
    return 4 * (lam * lam - lam + 1) ** 3 / (27 * lam * lam * (lam - 1) ** 2)


def j_letter(jval: complex, tol: float = 1e-6) -> str | None:
    for v, letter in J_LETTERS.items():
        if abs(jval - complex(v)) <= tol * (1 + abs(complex(v))):
            return letter
    return None


@dataclass
class LoopData:
    """One monodromy loop: where it winds and what it does to the sheets."""

    point: complex | None  # None encodes the loop around z = infinity
    approach: list[complex]
    circle: list[complex]
    fiber_at: np.ndarray
    perm: list[int]

    @property
    def key(self):
        return "inf" if self.point is None else self.point


@dataclass
class Component:
    sheets: tuple[int, ...]
    genus: int
    j_label: str | None = None
    j_value: complex | None = None
    note: str = ""

    @property
    def size(self) -> int:
        return len(self.sheets)


@dataclass
class CoverAnalysis:
    sheets: int
    base_point: complex
    base_fiber: np.ndarray
    branch_points: list[complex]
    loops: list[LoopData]
    components: list[Component]

    def genus_multiset(self) -> list[int]:
        return sorted(c.genus for c in self.components)

    def summary(self) -> list[tuple[int, int]]:
        return sorted((c.size, c.genus) for c in self.components)


class Cover:
    """n-sheeted cover of the z-line cut out by a bivariate polynomial."""

    def __init__(
        self,
        F: BiPoly,
        branch_hints: list[complex] | None = None,
        base_point: complex = BASE_POINT,
    ):
        self.F = F
        self.n = F.deg("x")
        if self.n <= 0:
            raise ValueError("curve must have positive x-degree")
        cols = F.coeffs_in("x")
        scale = max(abs(c) for p in cols for c in p.coeffs) or Fraction(1)
        self.cf = [
            np.array([complex(c / scale) for c in p.coeffs] or [0j], dtype=complex)
            for p in cols
        ]
        self.dcf = [
            np.array(
                [k * a[k] for k in range(1, len(a))] or [0j], dtype=complex
            )
            for a in self.cf
        ]
        self.even_x = F.is_even_in("x")
        self.hints = branch_hints
        self.base_point = base_point

    # ---------------- fibers ----------------

    def poly_at(self, z: complex) -> np.ndarray:
        """x-coefficients (ascending) of F(x, z)."""
        return np.array([_horner(a, z) for a in self.cf])

    def base_fiber(self, z0: complex) -> np.ndarray:
        c = self.poly_at(z0)
        if abs(c[-1]) <= 1e-12 * max(1.0, np.abs(c).max()):
            raise ValueError("degenerate fiber at the base point")
        return np.roots(c[::-1])

    # ---------------- branch points ----------------

    def branch_points(self, method: str = "auto") -> list[complex]:
        """Candidate branch points of the cover, one of three routes.

        'hints'     : structural points supplied at construction
        'resultant' : exact Res_x(F, F_x), squarefree part, certified roots
        'pencil'    : Sylvester-matrix polynomial pencil eigenvalues,
                      polished and filtered (fallback for large curves)
        """
        if method == "auto":
            if self.hints is not None:
                method = "hints"
            elif self.n <= 6 and self.F.deg("z") <= 8:
                method = "resultant"
            else:
                method = "pencil"
        if method == "hints":
            if self.hints is None:
                raise ValueError("no branch hints were supplied")
            return _cluster(list(self.hints), 1e-9)
        if method == "resultant":
            return self._branch_points_resultant()
        if method == "pencil":
            return self._branch_points_pencil()
        raise ValueError(f"unknown branch method {method!r}")

    def _branch_points_resultant(self) -> list[complex]:
        res = resultant(self.F, self.F.deriv("x"), "x")
        pts = [r for r, _ in complex_roots(squarefree_part(res))]
        lead = self.F.coeffs_in("x")[-1]
        pts.extend(r for r, _ in complex_roots(squarefree_part(lead)))
        return _cluster(pts, 1e-9)

    def _branch_points_pencil(self) -> list[complex]:
        Fx = self.F.deriv("x")
        fc = self.F.coeffs_in("x")
        gc = Fx.coeffs_in("x")
        nn, mm = len(fc) - 1, len(gc) - 1
        N = nn + mm
        rows: list[list[UPoly]] = []
        frow = list(reversed(fc))
        grow = list(reversed(gc))
        for k in range(mm):
            rows.append([UPoly()] * k + frow + [UPoly()] * (N - nn - 1 - k))
        for k in range(nn):
            rows.append([UPoly()] * k + grow + [UPoly()] * (N - mm - 1 - k))
        d = max(max(p.degree for p in row) for row in rows)
        d = max(d, 1)
        S = np.zeros((d + 1, N, N), dtype=complex)
        scale = max(
            (abs(c) for row in rows for p in row for c in p.coeffs),
            default=Fraction(1),
        )
        for i in range(N):
            for j in range(N):
                for k, v in enumerate(rows[i][j].coeffs):
                    S[k, i, j] = complex(v / scale)
        md = N * d
        A = np.zeros((md, md), dtype=complex)
        B = np.eye(md, dtype=complex)
        for i in range(d - 1):
            A[i * N : (i + 1) * N, (i + 1) * N : (i + 2) * N] = np.eye(N)
        for k in range(d):
            A[(d - 1) * N :, k * N : (k + 1) * N] = -S[k]
        B[(d - 1) * N :, (d - 1) * N :] = S[d]
        ev = sla.eig(A, B, right=False)
        ev = ev[np.isfinite(ev)]
        ev = ev[np.abs(ev) < 1e9]
        cand = list(ev)
        for arr in (self.cf[-1], self.cf[0]):
            a = np.trim_zeros(arr, "b")
            if len(a) > 1:
                cand.extend(np.roots(a[::-1]))
        cand = _cluster(cand, 5e-3)
        cand = [self._polish_branch(b) for b in cand]
        cand = _cluster(cand, 5e-3)
        return [b for b in cand if self._is_degenerate_fiber(b)]

    def _is_degenerate_fiber(self, b: complex) -> bool:
        """True if the fiber at b has colliding roots or a sheet at infinity."""
        c = self.poly_at(b)
        amax = np.abs(c).max()
        if amax == 0 or abs(c[-1]) < 1e-8 * amax:
            return True
        xs = np.roots(c[::-1])
        if len(xs) < self.n:
            return True
        dm = np.abs(xs[:, None] - xs[None, :])
        np.fill_diagonal(dm, np.inf)
        sc = 1.0 + np.minimum(np.abs(xs)[:, None], np.abs(xs)[None, :])
        return (dm / sc).min() < 3e-2

    def _polish_branch(self, b: complex) -> complex:
        """Newton on (F, F_x) = 0 seeded from the closest sheet pair."""
        c = self.poly_at(b)
        if abs(c[-1]) < 1e-9 * max(1.0, np.abs(c).max()):
            return b
        xs = np.roots(c[::-1])
        if len(xs) < 2:
            return b
        d = np.abs(xs[:, None] - xs[None, :]) + np.eye(len(xs)) * 9e9
        i, j = np.unravel_index(np.argmin(d), d.shape)
        x, z = (xs[i] + xs[j]) / 2, b
        n = self.n
        for _ in range(40):
            vals = np.array([_horner(a, z) for a in self.cf])
            dvals = np.array([_horner(a, z) for a in self.dcf])
            xp = np.ones(n + 1, dtype=complex)
            for k in range(1, n + 1):
                xp[k] = xp[k - 1] * x
            Fv = sum(vals[k] * xp[k] for k in range(n + 1))
            Fx = sum(k * vals[k] * xp[k - 1] for k in range(1, n + 1))
            Fz = sum(dvals[k] * xp[k] for k in range(n + 1))
            Fxx = sum(k * (k - 1) * vals[k] * xp[k - 2] for k in range(2, n + 1))
            Fxz = sum(k * dvals[k] * xp[k - 1] for k in range(1, n + 1))
            Jm = np.array([[Fx, Fz], [Fxx, Fxz]])
            try:
                upd = np.linalg.solve(Jm, np.array([Fv, Fx]))
            except np.linalg.LinAlgError:
                return b
            x -= upd[0]
            z -= upd[1]
            if abs(upd[0]) + abs(upd[1]) < 1e-13 * max(1.0, abs(x), abs(z)):
                break
        if abs(z - b) < 2e-3 * max(1.0, abs(b)):
            return complex(z)
        return b

    # ---------------- sheet tracking ----------------

    def track(
        self,
        path: list[complex],
        xs: np.ndarray,
        carry_sqrt: tuple | None = None,
    ):
        """Analytically continue the fiber along a z-path.

        Each sheet lives in the plane chart or, when |x| > 2, the chart
        u = 1/x, so sheets through infinity stay trackable.  Steps adapt:
        a sub-step is accepted only if every sheet's Newton refinement
        converges and moves by less than 0.4 of that sheet's chordal
        separation from the rest of the fiber.  `carry_sqrt = (c1, c2, s)`
        additionally continues a branch of sqrt((z-c1)/(z-c2)) (or
        sqrt(z-c1) when c2 is None) along the same path.
        """
        n = self.n
        xs = np.array(xs, dtype=complex)
        charts = np.zeros(n, dtype=int)
        for i in range(n):
            if abs(xs[i]) > 2.0:
                xs[i] = 1.0 / xs[i]
                charts[i] = 1
        tval = c1 = c2 = None
        if carry_sqrt is not None:
            c1, c2, tval = carry_sqrt
        zcur = path[0]
        for ztarget in path[1:]:
            zstart = zcur
            seg = ztarget - zstart
            if seg == 0:
                continue
            done, h = 0.0, 1.0
            while done < 1.0 - 1e-15:
                h = min(h, 1.0 - done)
                znew = zstart + seg * (done + h)
                cnew = self.poly_at(znew)
                crev = cnew[::-1].copy()
                w = np.array(
                    [
                        xs[i]
                        if charts[i] == 0
                        else (1.0 / xs[i] if xs[i] != 0 else np.inf)
                        for i in range(n)
                    ],
                    dtype=complex,
                )
                chd = _chordal_matrix(w)
                np.fill_diagonal(chd, 9.9)
                sep = chd.min(axis=1)
                ok_all = True
                xs_new = xs.copy()
                for i in range(n):
                    co = cnew if charts[i] == 0 else crev
                    xn, ok = _newton_sheet(co, xs[i])
                    if not ok:
                        ok_all = False
                        break
                    a = xs[i] if charts[i] == 0 else (1.0 / xs[i] if xs[i] != 0 else np.inf)
                    bb = xn if charts[i] == 0 else (1.0 / xn if xn != 0 else np.inf)
                    dd = _chordal_matrix(np.array([a, bb]))[0, 1]
                    if dd > 0.4 * sep[i] and dd > 1e-13:
                        ok_all = False
                        break
                    xs_new[i] = xn
                if not ok_all:
                    h *= 0.5
                    if h < 1e-9:
                        raise RuntimeError(f"sheet tracking failed near z={znew}")
                    continue
                xs = xs_new
                done += h
                h = min(h * 1.8, 1.0)
                for i in range(n):
                    if abs(xs[i]) > 2.0 and xs[i] != 0:
                        xs[i] = 1.0 / xs[i]
                        charts[i] ^= 1
                if tval is not None:
                    v = (
                        cmath.sqrt((znew - c1) / (znew - c2))
                        if c2 is not None
                        else cmath.sqrt(znew - c1)
                    )
                    tval = v if abs(v - tval) <= abs(-v - tval) else -v
            zcur = ztarget
        out = np.empty(n, dtype=complex)
        for i in range(n):
            if charts[i] == 0:
                out[i] = xs[i]
            else:
                out[i] = 1.0 / xs[i] if abs(xs[i]) > 1e-300 else np.inf
        return out, (tval if carry_sqrt is not None else None)

    # ---------------- monodromy ----------------

    def loop_geometry(self, bps: list[complex], z0: complex):
        """Approach path and circle for each finite branch point and infinity."""
        discs = _protective(bps)
        loops = []
        for b in bps:
            dmin = min(
                [abs(b - c) for c in bps if abs(b - c) > 1e-9] + [abs(b - z0)]
            )
            r = dmin / 3.0
            dirv = (z0 - b) / abs(z0 - b)
            p0 = b + r * dirv
            other = [(c, rr) for (c, rr) in discs if abs(c - b) > 1e-12]
            approach = _route(z0, p0, other)
            circle = [
                b + r * dirv * cmath.exp(2j * math.pi * k / CIRCLE_SAMPLES)
                for k in range(CIRCLE_SAMPLES + 1)
            ]
            loops.append((b, approach, circle))
        R = max([abs(b) for b in bps] + [abs(z0)]) * 2 + 2
        approach = _route(z0, R + 0j, discs)
        circle = [
            R * cmath.exp(2j * math.pi * k / INF_CIRCLE_SAMPLES)
            for k in range(INF_CIRCLE_SAMPLES + 1)
        ]
        loops.append((None, approach, circle))
        return loops

    def analyze(self, classify: bool = True, method: str = "auto") -> CoverAnalysis:
        z0 = self.base_point
        bps = self.branch_points(method)
        xs0 = self.base_fiber(z0)
        loops: list[LoopData] = []
        for point, approach, circle in self.loop_geometry(bps, z0):
            xs_at, _ = self.track(approach, xs0)
            xs_loop, _ = self.track(circle, xs_at)
            perm = match_permutation(xs_at, xs_loop)
            loops.append(
                LoopData(
                    point=point,
                    approach=approach,
                    circle=circle,
                    fiber_at=xs_at,
                    perm=perm,
                )
            )
        comps = []
        for O in _orbits([l.perm for l in loops], self.n):
            r_tot = 0
            for l in loops:
                for c in _cycles(l.perm):
                    if c[0] in O:
                        r_tot += len(c) - 1
            chi = 2 * len(O) - r_tot
            if chi % 2:
                raise RuntimeError(f"odd Euler characteristic on orbit {O}")
            comps.append(Component(sheets=tuple(O), genus=(2 - chi) // 2))
        analysis = CoverAnalysis(
            sheets=self.n,
            base_point=z0,
            base_fiber=xs0,
            branch_points=sorted(bps, key=lambda b: (b.real, b.imag)),
            loops=loops,
            components=sorted(comps, key=lambda c: (c.size, c.genus, c.sheets)),
        )
        if classify:
            for comp in analysis.components:
                if comp.genus == 1:
                    self._classify_component(analysis, comp)
        return analysis

    # ---------------- elliptic classification ----------------

    def _classify_component(self, analysis: CoverAnalysis, comp: Component):
        got = self._classify_double_cover(analysis, comp)
        if got is None:
            got = self._classify_cyclic(analysis, comp)
        if got is None:
            got = self._classify_even_blocks(analysis, comp)
        if got is None:
            comp.note = "unclassified"
            return
        jval, how = got
        comp.j_value = jval
        comp.j_label = j_letter(jval)
        comp.note = how

    def _orbit_perm(self, loop: LoopData, orbit) -> dict[int, int]:
        return {i: loop.perm[i] for i in orbit}

    def _classify_double_cover(self, analysis, comp):
        """Genus-one orbit of size 2: J from the 4 branch values directly."""
        if comp.size != 2:
            return None
        vals = []
        for l in analysis.loops:
            p = self._orbit_perm(l, comp.sheets)
            if any(p[i] != i for i in comp.sheets):
                vals.append("inf" if l.point is None else l.point)
        if len(vals) != 4:
            return None
        return j_from_branch_values(vals), "double-cover cross-ratio"

    def _classify_cyclic(self, analysis, comp):
        """Cyclic deck group of order 3, 4 or 6 with a totally ramified point.

        An order-n automorphism with a fixed point forces J = 0 for
        n in {3, 6} and J = 1 for n = 4.
        """
        n = comp.size
        if n not in (3, 4, 6):
            return None
        sheets = list(comp.sheets)
        pos = {s: k for k, s in enumerate(sheets)}
        local = []
        for l in analysis.loops:
            p = [pos[l.perm[s]] for s in sheets]
            local.append(p)
        sigma = None
        for p in local:
            cyc = _cycles(p)
            if len(cyc) == 1 and len(cyc[0]) == n:
                sigma = p
                break
        if sigma is None:
            return None
        powers = []
        q = list(range(n))
        for _ in range(n):
            powers.append(tuple(q))
            q = [sigma[i] for i in q]
        powers = set(powers)
        if any(tuple(p) not in powers for p in local):
            return None
        jval = 0.0 if n in (3, 6) else 1.0
        return complex(jval), f"cyclic deck group of order {n}"

    def _classify_even_blocks(self, analysis, comp):
        """Descend through x -> -x on a 4-sheet orbit of an even curve.

        The involution quotient B is a rational double cover of the
        z-line branched at two points c1, c2, with coordinate t obeying
        t^2 = (z - c1)/(z - c2).  The orbit curve is a double cover of B
        branched at 4 points whose t-values come from the lifted cycle
        structure plus sign-tracked square roots; their cross-ratio gives
        J.
        """
        if not self.even_x or comp.size != 4:
            return None
        orbit = list(comp.sheets)
        base_pair = _involution_pairing(analysis.base_fiber, orbit)
        if base_pair is None:
            return None
        swaps = []
        for l in analysis.loops:
            bp = _block_perm(l.perm, base_pair, orbit)
            if bp is None:
                return None
            if bp == "swap":
                swaps.append(l)
        if len(swaps) != 2:
            return None
        if swaps[0].point is None:
            swaps = [swaps[1], swaps[0]]
        c1 = swaps[0].point
        c2 = swaps[1].point  # None encodes infinity
        if c1 is None:
            return None
        # the +t block at the base point is the one holding `ref`; sheet
        # indices are preserved by tracking, so the same index identifies
        # the continued block anywhere along an approach path
        ref = min(orbit)
        tvals = []
        for l in analysis.loops:
            if all(l.perm[i] == i for i in orbit):
                continue
            cyc = [c for c in _cycles(l.perm) if c[0] in orbit]
            if l in swaps:
                # lifted block transposition: a single 4-cycle means the
                # descended double cover ramifies over t = 0 or infinity
                if any(len(c) == 4 for c in cyc):
                    tvals.append(0.0 if l is swaps[0] else "inf")
                continue
            # block-identity loop: a transposition inside a block marks
            # ramification over that block's t-value +-sqrt continued
            pair_near = _involution_pairing(l.fiber_at, orbit)
            if pair_near is None:
                return None
            if l.point is not None:
                # t is analytic away from c1, c2, so the ramification
                # value is just the continued branch at the loop point
                t_b = _continue_sqrt(c1, c2, l.approach + [l.point])
            else:
                # the transposition sits over z = infinity, where t
                # tends to +-1; continue the branch out a geometric
                # tail until the limit sign is pinned, then snap
                if c2 is None:
                    return None
                tail = [l.approach[-1]]
                far = 1e7 * (1.0 + abs(c1) + abs(c2))
                while abs(tail[-1]) < far:
                    tail.append(tail[-1] * 2.0)
                t_b = _continue_sqrt(c1, c2, l.approach + tail[1:])
                t_b = 1.0 if abs(t_b - 1.0) <= abs(t_b + 1.0) else -1.0
            plus_block = frozenset({ref, pair_near[ref]})
            for c in cyc:
                if len(c) == 1:
                    continue
                if len(c) != 2 or pair_near.get(c[0]) != c[1]:
                    return None
                blk = frozenset(c)
                tvals.append(t_b if blk == plus_block else -t_b)
        if len(tvals) != 4:
            return None
        return j_from_branch_values(tvals), "even-curve block descent"


def _horner(arr: np.ndarray, z: complex) -> complex:
    r = 0j
    for c in arr[::-1]:
        r = r * z + c
    return r


def _newton_sheet(co: np.ndarray, x0: complex):
    x = x0
    prev = None
    dx = 0.0
    for _ in range(30):
        p = 0j
        dp = 0j
        for c in co[::-1]:
            dp = dp * x + p
            p = p * x + c
        if dp == 0:
            return x, False
        dx = p / dp
        x -= dx
        a = abs(dx)
        if a <= 1e-12 * max(1.0, abs(x)):
            return x, True
        if prev is not None and a > 0.5 * prev and a < 1e-6 * max(1.0, abs(x)):
            return x, True
        prev = a
    return x, abs(dx) < 1e-8 * max(1.0, abs(x))


def _chordal_matrix(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w)
    finite = np.isfinite(w)
    wf = np.where(finite, w, 0)
    s = np.sqrt(1 + np.abs(wf) ** 2)
    d = np.abs(wf[:, None] - wf[None, :]) / (s[:, None] * s[None, :])
    for i in range(len(w)):
        if not finite[i]:
            d[i, :] = 1 / np.sqrt(1 + np.abs(wf) ** 2)
            d[:, i] = d[i, :]
            d[i, i] = 0
    return d


def match_permutation(a: np.ndarray, b: np.ndarray) -> list[int]:
    """perm p with p[i] the start-sheet nearest to the loop image of sheet i."""
    n = len(a)
    da = _chordal_matrix(np.concatenate([a, b]))
    dm = da[:n, n:]
    perm = [-1] * n
    used: set[int] = set()
    order = np.argsort(dm.min(axis=1))
    for i in order:
        j = int(
            np.argmin([dm[i, jj] if jj not in used else 9e9 for jj in range(n)])
        )
        perm[i] = j
        used.add(j)
    return perm


def _cluster(pts, tol: float) -> list[complex]:
    out: list[complex] = []
    for p in sorted(pts, key=lambda t: (round(t.real, 6), round(t.imag, 6))):
        p = complex(p)
        if not any(abs(p - q) < tol * max(1, abs(q)) for q in out):
            out.append(p)
    return out


def _protective(bps: list[complex]) -> list[tuple[complex, float]]:
    discs = []
    for b in bps:
        dmin = min([abs(b - c) for c in bps if abs(b - c) > 1e-9] + [1.0])
        discs.append((b, 0.45 * dmin))
    return discs


def _route(a: complex, b: complex, discs, maxdepth: int = 60) -> list[complex]:
    """Polyline from a to b skirting the protective discs along arcs."""
    if maxdepth <= 0:
        return [a, b]
    best = None
    for (c, r) in discs:
        d = b - a
        L2 = (d * d.conjugate()).real
        if L2 == 0:
            continue
        f = a - c
        B = 2 * (f * d.conjugate()).real
        C = (f * f.conjugate()).real - r * r
        disc = B * B - 4 * L2 * C
        if C <= 0 or disc <= 0:
            continue
        sq = disc**0.5
        t1 = (-B - sq) / (2 * L2)
        t2 = (-B + sq) / (2 * L2)
        if t2 <= 1e-12 or t1 >= 1 - 1e-12:
            continue
        if best is None or t1 < best[0]:
            best = (max(t1, 0.0), min(t2, 1.0), c, r)
    if best is None:
        return [a, b]
    t1, t2, c, r = best
    p = a + (b - a) * t1
    q = a + (b - a) * t2
    p = c + (p - c) / abs(p - c) * r if p != c else c + r
    q = c + (q - c) / abs(q - c) * r if q != c else c - r
    a1 = cmath.phase(p - c)
    a2 = cmath.phase(q - c)
    da = a2 - a1
    while da > math.pi:
        da -= 2 * math.pi
    while da < -math.pi:
        da += 2 * math.pi
    steps = max(2, int(abs(da) / 0.26) + 1)
    arc = [c + r * cmath.exp(1j * (a1 + da * k / steps)) * 1.02 for k in range(steps + 1)]
    rest = [dd for dd in discs if dd[0] != c]
    head = _route(a, p, rest, maxdepth - 1)
    tail = _route(q, b, rest, maxdepth - 1)
    return head[:-1] + arc + tail


def _continue_sqrt(c1: complex, c2: complex | None, path: list[complex]) -> complex:
    """Continuous branch of sqrt((z-c1)/(z-c2)) along a path, from principal."""

    def val(z):
        return cmath.sqrt((z - c1) / (z - c2)) if c2 is not None else cmath.sqrt(z - c1)

    s = val(path[0])
    zcur = path[0]
    for zt in path[1:]:
        seg = zt - zcur
        if seg == 0:
            continue
        dist = min(
            abs(zcur - c1),
            abs(zt - c1),
            *( [abs(zcur - c2), abs(zt - c2)] if c2 is not None else [] ),
        )
        steps = max(1, int(abs(seg) / max(0.1 * dist, 1e-12)) + 1)
        steps = min(steps, 4000)
        for k in range(1, steps + 1):
            z = zcur + seg * k / steps
            v = val(z)
            s = v if abs(v - s) <= abs(-v - s) else -v
        zcur = zt
    return s


def _involution_pairing(fiber: np.ndarray, orbit) -> dict[int, int] | None:
    """Pair orbit sheets i <-> j with x_j = -x_i; None if no clean pairing."""
    pair: dict[int, int] = {}
    left = list(orbit)
    while left:
        i = left.pop(0)
        best, bd = None, np.inf
        for j in left:
            d = abs(fiber[j] + fiber[i])
            if d < bd:
                best, bd = j, d
        if best is None or bd > 1e-6 * (1 + abs(fiber[i])):
            return None
        pair[i] = best
        pair[best] = i
        left.remove(best)
    return pair


def _block_perm(perm, base_pair, orbit):
    """'id', 'swap', or None for the induced action on the two blocks.

    Blocks over the base point are the involution pairs; the loop perm
    respects them (it commutes with the involution), so it acts on the
    two-element block set.
    """
    blocks = []
    seen = set()
    for i in orbit:
        if i in seen:
            continue
        blk = frozenset({i, base_pair[i]})
        seen |= blk
        blocks.append(blk)
    if len(blocks) != 2:
        return None
    images = []
    for blk in blocks:
        img = frozenset(perm[i] for i in blk)
        if img not in blocks:
            return None
        images.append(img)
    if images[0] == blocks[0] and images[1] == blocks[1]:
        return "id"
    if images[0] == blocks[1] and images[1] == blocks[0]:
        return "swap"
    return None


# ---------------------------------------------------------------------------
# equivalence curves between J-families


def belyi_branch_hints(j_z: "RatFunc") -> list[complex]:
    """Branch locus over z of a curve J_a(x) = j_z(z).

    Every critical value of the six modular families lies in {0, 1, oo},
    so all finite branch points of the projection to the z-line are
    preimages of those three values under the z-side map.  Handing the
    full preimage set to :class:`Cover` avoids the numerically fragile
    pencil eigenvalue sweep on high-degree curves.
    """
    pts: list[complex] = []
    for p in (j_z.num, j_z.num - j_z.den, j_z.den):
        if p.degree > 0:
            pts.extend(r for r, _ in complex_roots(squarefree_part(p)))
    return _cluster(pts, 1e-9)


def analyze_pair(family_x: str, family_z: str, classify: bool = True) -> CoverAnalysis:
    """Analyze the curve J_{family_x}(x) = J_{family_z}(z) over the z-line.

    Components of genus one that resist direct classification are retried
    on the transposed curve (projection to the x-line); when the retry
    resolves every genus-one component to a single J value, that value is
    copied back.
    """
    from .cubics import equivalence_curve, j_of_x

    curve = equivalence_curve(family_x, family_z)
    analysis = Cover(curve, branch_hints=belyi_branch_hints(j_of_x(family_z))).analyze(
        classify=classify
    )
    if not classify:
        return analysis
    stuck = [c for c in analysis.components if c.genus == 1 and c.j_value is None]
    if not stuck:
        return analysis
    flipped = Cover(
        curve.transposed(), branch_hints=belyi_branch_hints(j_of_x(family_x))
    ).analyze(classify=True)
    ones = [c for c in flipped.components if c.genus == 1]
    vals = [c.j_value for c in ones if c.j_value is not None]
    total = [c for c in analysis.components if c.genus == 1]
    if (
        len(ones) == len(total)
        and len(vals) == len(ones)
        and all(abs(v - vals[0]) <= 1e-6 * (1 + abs(vals[0])) for v in vals)
    ):
        for comp in stuck:
            comp.j_value = vals[0]
            comp.j_label = j_letter(vals[0])
            comp.note = "classified on transposed curve"
    return analysis
