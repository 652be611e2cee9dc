"""Image-domain geometry: boundary curves, winding tests, covering checks.

Containment of image domains is certified on compact exhaustions
(samples of an inner curve tested against the image boundary at a
larger radius): the maps are unbounded near boundary atoms, so the
honest desk-scale statement is nested-compact containment, which the
subordination theorems imply and a winding test decides.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .kernel import DomainError
from .functions import (
    ClassParams,
    ProductForm,
    core_function,
    eval_log,
    evaluate,
    _in_admissible_region,
)
from .verification import InteriorSpirallikeMap, VerificationReport

__all__ = [
    "PolyLine",
    "Disk",
    "IndeterminateWindingError",
    "boundary_curve",
    "winding_number",
    "winding_numbers",
    "contains_point",
    "CoveringResult",
    "check_covering",
    "covering_radius",
    "boundary_gap_profile",
    "minimize_boundary_gap",
    "wedge_spirals",
    "wedge_margin",
    "check_wedge_containment",
    "CoveringComposition",
    "covering_composition",
]

GUARD_FACTOR = 1e-12  # of the curve diameter; closer points are indeterminate
MAX_TURN = 0.2        # radians of turning per segment before bisection


class IndeterminateWindingError(ValueError):
    """Query point within guard distance of the discretized curve."""


@dataclass(frozen=True, eq=False)
class PolyLine:
    """Ordered sample of a curve in the image plane."""

    points: np.ndarray
    closed: bool

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.complex128).ravel()
        if self.closed and pts.size < 16:
            raise ValueError("closed polyline needs at least 16 points")
        if pts.size < 2:
            raise ValueError("polyline needs at least 2 points")
        seg = np.diff(pts)
        if self.closed:
            seg = np.concatenate([seg, [pts[0] - pts[-1]]])
        if np.any(seg == 0):
            raise ValueError("consecutive polyline points coincide")
        object.__setattr__(self, "points", pts)
        self.points.setflags(write=False)

    def __len__(self) -> int:
        return self.points.size

    def diameter(self) -> float:
        """Bounding-box diagonal; the scale for winding guard distances."""
        re, im = self.points.real, self.points.imag
        return float(math.hypot(re.max() - re.min(), im.max() - im.min()))

    def to_csv(self) -> str:
        from .serialize import fmt

        lines = ["re,im"]
        lines += [f"{fmt(p.real)},{fmt(p.imag)}" for p in self.points]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("disk radius must be nonnegative")


def _adaptive_closed_curve(
    fn: Callable[[np.ndarray], np.ndarray],
    rho: float,
    n: int,
    refine_tol: float,
) -> PolyLine:
    thetas = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    values = np.asarray(fn(rho * np.exp(1j * thetas)), dtype=np.complex128)
    budget = 16 * n

    for _ in range(64):
        nxt = np.roll(values, -1)
        gaps = np.roll(thetas, -1) - thetas
        gaps[-1] += 2.0 * np.pi
        chords = np.abs(nxt - values)
        local = np.maximum(np.maximum(np.abs(values), np.abs(nxt)), 1e-12 * np.abs(values).max())
        flags = chords > refine_tol * local

        # turning angle at each vertex flags both adjacent segments;
        # curves of power-map type have high curvature near the image of z ~ 1
        seg = nxt - values
        prev = np.roll(seg, 1)
        nz = (np.abs(seg) > 0) & (np.abs(prev) > 0)
        turn = np.zeros_like(chords)
        turn[nz] = np.abs(np.angle(seg[nz] / prev[nz]))
        vert_flags = turn > MAX_TURN
        flags |= vert_flags | np.roll(vert_flags, -1)

        room = budget - thetas.size
        if not flags.any() or room <= 0:
            break
        idx = np.nonzero(flags)[0]
        if idx.size > room:
            order = np.argsort(-(chords[idx] / local[idx]))
            idx = idx[order[:room]]
        new_thetas = thetas[idx] + gaps[idx] / 2.0
        new_values = np.asarray(fn(rho * np.exp(1j * new_thetas)), dtype=np.complex128)
        thetas = np.concatenate([thetas, new_thetas])
        values = np.concatenate([values, new_values])
        order = np.argsort(thetas)
        thetas, values = thetas[order], values[order]

    scale = np.abs(values).max()
    if scale == 0 or np.all(np.abs(np.roll(values, -1) - values) <= 1e-15 * scale):
        raise DomainError("degenerate boundary curve (constant map?)")
    # drop exact duplicates so the polyline invariant holds
    keep = np.abs(values - np.roll(values, 1)) > 0
    keep[0] = True
    return PolyLine(values[keep], closed=True)


def boundary_curve(f: ProductForm, rho: float, n: int = 256, refine_tol: float = 0.05) -> PolyLine:
    """Adaptive closed sample of f(rho * e^{i*theta}).

    Segments are bisected while their chord exceeds refine_tol times
    the local modulus scale or the turning angle exceeds 0.2 rad, up to
    16*n points.
    """
    if not 0.0 < rho < 1.0:
        raise DomainError("rho must lie in (0, 1)")
    if n < 64:
        raise ValueError("need at least 64 initial samples")
    return _adaptive_closed_curve(lambda z: evaluate(f, z), rho, n, refine_tol)


def winding_numbers(poly: PolyLine, points) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Winding numbers of a closed polyline around many points at once.

    Returns (windings, indeterminate, distances); a point closer to the
    curve than the guard distance cannot be classified at the curve's
    own resolution and is marked indeterminate instead.
    """
    if not poly.closed:
        raise ValueError("winding numbers need a closed polyline")
    pts = np.atleast_1d(np.asarray(points, dtype=np.complex128))
    verts = np.concatenate([poly.points, poly.points[:1]])
    guard = GUARD_FACTOR * poly.diameter()

    windings = np.empty(pts.size, dtype=np.int64)
    dists = np.empty(pts.size, dtype=np.float64)
    chunk = max(1, int(2_000_000 // max(1, verts.size)))
    a_all, b_all = verts[:-1], verts[1:]
    edge = b_all - a_all
    edge_sq = np.abs(edge) ** 2
    for lo in range(0, pts.size, chunk):
        w = pts[lo : lo + chunk, None]
        va = a_all[None, :] - w
        vb = b_all[None, :] - w
        cross = va.real * vb.imag - va.imag * vb.real
        dot = va.real * vb.real + va.imag * vb.imag
        total = np.arctan2(cross, dot).sum(axis=1) / (2.0 * np.pi)
        windings[lo : lo + chunk] = np.rint(total).astype(np.int64)

        t = -(va.real * edge.real[None, :] + va.imag * edge.imag[None, :]) / np.where(
            edge_sq[None, :] > 0, edge_sq[None, :], 1.0
        )
        t = np.clip(t, 0.0, 1.0)
        dists[lo : lo + chunk] = np.abs(va + t * edge[None, :]).min(axis=1)

    return windings, dists < guard, dists


def winding_number(poly: PolyLine, w: complex) -> int:
    """Signed angle sum / 2*pi, rounded; raises when w sits on the curve."""
    wn, indet, _ = winding_numbers(poly, [w])
    if indet[0]:
        raise IndeterminateWindingError(f"point {w} within guard distance of the curve")
    return int(wn[0])


def contains_point(
    f: ProductForm,
    w: complex,
    rho: float,
    n: int = 256,
    refine_tol: float = 0.05,
    curve: Optional[PolyLine] = None,
) -> Optional[bool]:
    """Whether w lies in the image of the rho-disk; None when indeterminate.

    Univalence turns 'winding equals one' into exact membership, up to
    the guard distance of the discretized curve.
    """
    if curve is None:
        curve = boundary_curve(f, rho, n=n, refine_tol=refine_tol)
    wn, indet, _ = winding_numbers(curve, [w])
    if indet[0]:
        return None
    return bool(wn[0] == 1)


@dataclass(frozen=True)
class CoveringResult:
    """Report plus per-sample diagnostics of a covering check."""

    report: VerificationReport
    windings: np.ndarray
    indeterminate: np.ndarray
    distances: np.ndarray
    samples: np.ndarray

    @property
    def indeterminate_count(self) -> int:
        return int(self.indeterminate.sum())


def check_covering(
    f: ProductForm,
    params: ClassParams,
    r_inner: float,
    rho_outer: float,
    m: int = 256,
    curve_n: int = 512,
    refine_tol: float = 0.05,
) -> CoveringResult:
    """Certify the covering theorem on a compact exhaustion.

    Samples m points of the covered core map on |z| = r_inner and
    requires each to wind once inside f(|z| = rho_outer).  The signed
    distance to the curve is the reported margin; indeterminate samples
    fail the check rather than passing silently.
    """
    if not 0.0 < r_inner < rho_outer < 1.0:
        raise DomainError("need 0 < r_inner < rho_outer < 1")
    if m < 1:
        raise ValueError("need at least one sample")
    curve = boundary_curve(f, rho_outer, n=curve_n, refine_tol=refine_tol)
    core = core_function(params)
    theta = np.linspace(0.0, 2.0 * np.pi, m, endpoint=False)
    ws = evaluate(core, r_inner * np.exp(1j * theta))
    wn, indet, dists = winding_numbers(curve, ws)
    ok = (wn == 1) & ~indet
    guard = GUARD_FACTOR * curve.diameter()
    # failing samples carry margin <= -guard so pass/fail follows the sign
    margins = np.where(ok, dists, -np.maximum(dists, guard))
    i = int(np.argmin(margins))
    report = VerificationReport(
        check="covering",
        passed=bool(ok.all()),
        worst_margin=float(margins[i]),
        worst_location=complex(ws[i]),
        tolerance=0.0,
        samples=m,
    )
    return CoveringResult(report, wn, indet, dists, ws)


def covering_radius(s: float) -> float:
    """Radius of the disk around 1 covered by every class image, s = mu*beta.

    sqrt(1 + 2**(2s) - 2**(s+1)) collapses to 2**s - 1 on (0, 1]; the
    radius saturates at 1 on (1, 2].
    """
    if not 0.0 < s <= 2.0:
        raise DomainError("s must lie in (0, 2]")
    if s <= 1.0:
        return 2.0**s - 1.0
    return 1.0


def boundary_gap_profile(s: float, t: float) -> float:
    """Squared distance |(1 + e^{it})**s - 1|**2 from 1 to the core image boundary.

    Equals (2*cos(t/2))**(2s) + 1 - 2*(2*cos(t/2))**s * cos(s*t/2); even
    in t, with limit 1 at t = +-pi.
    """
    if not 0.0 < s <= 2.0:
        raise DomainError("s must lie in (0, 2]")
    if not -math.pi <= t <= math.pi:
        raise DomainError("t must lie in [-pi, pi]")
    c = 2.0 * math.cos(t / 2.0)
    if c <= 0.0:
        return 1.0
    return c ** (2.0 * s) + 1.0 - 2.0 * c**s * math.cos(s * t / 2.0)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def minimize_boundary_gap(s: float) -> tuple[float, float]:
    """Golden-section minimum of the gap profile over t in [0, pi - 1e-9].

    The profile is monotone on [0, pi] (increasing for s < 1,
    decreasing for s > 1, constant at s = 1), so golden section over
    the bracket converges to the global minimum; the square root of the
    value reproduces the closed-form covering radius.
    """
    if not 0.0 < s <= 2.0:
        raise DomainError("s must lie in (0, 2]")
    lo, hi = 0.0, math.pi - 1e-9
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1 = boundary_gap_profile(s, x1)
    f2 = boundary_gap_profile(s, x2)
    while hi - lo > 1e-10:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = boundary_gap_profile(s, x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = boundary_gap_profile(s, x2)
    t_min = (lo + hi) / 2.0
    return t_min, boundary_gap_profile(s, t_min)


def wedge_spirals(
    exponent: complex,
    rotation: float,
    t_range: tuple[float, float],
    n: int = 200,
) -> tuple[PolyLine, PolyLine]:
    """The two bounding spirals e^{-exponent*t} * e^{i*exponent*(rotation +- pi/2)}."""
    exponent = complex(exponent)
    if not _in_admissible_region(exponent):
        raise DomainError("wedge exponent outside the admissible region")
    if not abs(rotation) < math.pi / 2:
        raise DomainError("|rotation| must be < pi/2")
    t0, t1 = t_range
    if not t1 > t0:
        raise DomainError("empty t range")
    if n < 2:
        raise ValueError("need at least 2 points per spiral")
    ts = np.linspace(t0, t1, n)
    curves = []
    for sign in (+1.0, -1.0):
        anchor = cmath.exp(1j * exponent * (rotation + sign * math.pi / 2.0))
        curves.append(PolyLine(np.exp(-exponent * ts) * anchor, closed=False))
    return curves[0], curves[1]


def wedge_margin(exponent: complex, rotation: float, log_w) -> np.ndarray | float:
    """Signed distance (in matched spiral parameter) of image points to the wedge.

    An image point with canonical log L lies in the wedge exactly when
    Im(L/exponent) falls in (rotation - pi/2, rotation + pi/2); the
    margin is the distance to the nearer bounding spiral.
    """
    theta = (np.asarray(log_w, dtype=np.complex128) / exponent).imag
    out = np.minimum(rotation + math.pi / 2.0 - theta, theta - (rotation - math.pi / 2.0))
    return float(out) if np.ndim(log_w) == 0 else out


def check_wedge_containment(
    f: ProductForm,
    params: ClassParams,
    rho: float = 0.999,
    n: int = 512,
    tolerance: float = 1e-9,
) -> VerificationReport:
    """Image samples of f stay inside the wedge of its own boundary asymptotics.

    Only containment is asserted; minimality of the wedge is not
    grid-decidable and is out of scope.
    """
    from .functions import boundary_exponent, boundary_rotation

    nu = boundary_exponent(f, params)
    rot = boundary_rotation(f, params)
    theta = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    zz = rho * np.exp(1j * theta)
    margins = wedge_margin(nu, rot, eval_log(f, zz))
    i = int(np.argmin(margins))
    return VerificationReport(
        check="wedge-containment",
        passed=bool(margins[i] >= -tolerance),
        worst_margin=float(margins[i]),
        worst_location=complex(zz[i]),
        tolerance=tolerance,
        samples=n,
    )


@dataclass(frozen=True)
class CoveringComposition:
    """g(z) = 1 - (1-z)**(1/beta) * (s(z)/z)**(1/(mu*beta)); image covers the unit disk.

    The log of s(z)/z comes from the canonical log of the backing
    product form, never from Log of evaluated values.  The Moebius
    companion (1-g)/(1+g) covers the right half-plane.
    """

    s: InteriorSpirallikeMap
    phi: float
    alpha: float
    beta: float
    mu: complex

    def _log_core(self, zz: np.ndarray) -> np.ndarray:
        from .kernel import log_principal

        return log_principal(1.0 - zz) / self.beta + self.s.log_ratio(zz) / (self.mu * self.beta)

    def __call__(self, z):
        zz = np.asarray(z, dtype=np.complex128)
        out = 1.0 - np.exp(self._log_core(zz))
        return complex(out) if np.ndim(z) == 0 else out

    def half_plane_map(self, z):
        """(1-g)/(1+g); covers the right half-plane when g covers the disk."""
        zz = np.asarray(z, dtype=np.complex128)
        core = np.exp(self._log_core(zz))
        out = core / (2.0 - core)
        return complex(out) if np.ndim(z) == 0 else out


def covering_composition(
    s: InteriorSpirallikeMap,
    phi: float,
    alpha: float,
    beta: float,
    rho: float = 0.999,
    samples: int = 256,
    curve_n: int = 512,
    max_sample_radius: float = 0.95,
) -> tuple[CoveringComposition, VerificationReport]:
    """Build the unit-disk covering composition and verify coverage by winding.

    Needs phi in (-pi/2, pi/2), alpha < cos(phi), beta in
    (0, alpha/cos(phi)], and an interior-spirallike s of matching angle
    and order at least alpha.  Samples of the open unit disk (radii up
    to max_sample_radius) must wind once inside g(|z| = rho).
    """
    if not abs(phi) < math.pi / 2:
        raise DomainError("|phi| must be < pi/2")
    if not alpha < math.cos(phi):
        raise DomainError("alpha must be < cos(phi)")
    if not 0.0 < beta <= alpha / math.cos(phi):
        raise DomainError("beta must lie in (0, alpha/cos(phi)]")
    if abs(s.phi - phi) > 1e-9:
        raise DomainError("s has a different spiral angle than phi")
    if s.order < alpha - 1e-12:
        raise DomainError("s is not spirallike of order alpha")
    if abs(s(0.0)) > 1e-12:
        raise DomainError("s(0) must be 0")
    mu = cmath.exp(1j * phi) * 2.0 * (math.cos(phi) - alpha) / (1.0 - beta)
    g = CoveringComposition(s=s, phi=phi, alpha=alpha, beta=beta, mu=mu)

    curve = _adaptive_closed_curve(g, rho, curve_n, refine_tol=0.05)
    n_r = 4
    n_ang = max(1, samples // n_r)
    radii = np.linspace(0.2, max_sample_radius, n_r)
    theta = np.linspace(0.0, 2.0 * np.pi, n_ang, endpoint=False)
    pts = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    wn, indet, dists = winding_numbers(curve, pts)
    ok = (wn == 1) & ~indet
    guard = GUARD_FACTOR * curve.diameter()
    margins = np.where(ok, dists, -np.maximum(dists, guard))
    i = int(np.argmin(margins))
    report = VerificationReport(
        check="disk-coverage",
        passed=bool(ok.all()),
        worst_margin=float(margins[i]),
        worst_location=complex(pts[i]),
        tolerance=0.0,
        samples=int(pts.size),
    )
    return g, report
