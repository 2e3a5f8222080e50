"""Closed orbits of the model spaces and the spectral sums they carry.

A classical path that returns to its starting point after ``n`` traversals
of the interval (winding ``n`` of the circle) contributes an oscillatory
term to spectral densities and Green functions, weighted by a sign built
from the reflection parities and, on the twisted circle, a holonomy phase
``e^{i n theta}``.  Orbits come in three families:

* ``direct``   -- the zero-length path (Weyl terms),
* ``periodic`` -- even number of reflections, displacement ``x - y + 2nL``
  (interval) or ``x - y - nL`` (circle),
* ``boundary-odd`` -- odd number of reflections, displacement ``x + y + 2nL``.

Truncation at ``max_winding = W`` keeps periodic windings ``|n| <= W`` and
the boundary-odd pairs ``n in [-W, W-1]`` (reflection counts ``|2n+1|``),
which pairs the members whose tails cancel.

Sign conventions (l, r the parity indices, Dirichlet = 1):

    periodic n:      (-1)^{n(l+r)}
    boundary-odd n:  (-1)^{l + n(l+r)}

Local and global spectral densities below are organized the same way:
a smooth Weyl part, a periodic-orbit series, and a boundary series whose
global integral telescopes.  The half-line boundary contribution to the
global density is a pure delta atom at omega = 0, kept as a tagged
:class:`DeltaAtom`, never as a large float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import spectrum, summation
from .errors import ContinuousSpectrum, InvalidParameter, OutOfDomain, UnsupportedGeometry
from .spectrum import Geometry, HalfLine, Interval, TwistedCircle
from .summation import ABEL, CLOSED_FORM, RAW, SeriesControl, SeriesValue

DIRECT = "direct"
PERIODIC = "periodic"
BOUNDARY_ODD = "boundary-odd"

# Local-counting methods.
DIRICHLET_KERNEL = "dirichlet-kernel"
ORBIT_SUM = "orbit-sum"


@dataclass(frozen=True)
class OrbitTerm:
    """One closed orbit between x and y.

    ``sign`` is the product of reflection parities, ``phase`` the holonomy
    angle accumulated (nonzero only on the twisted circle), ``length`` the
    geometric path length |displacement|.
    """

    family: str
    winding: int
    displacement: float
    sign: int
    phase: float

    @property
    def length(self) -> float:
        return abs(self.displacement)


@dataclass(frozen=True)
class DeltaAtom:
    """A weighted Dirac atom, kept symbolic so it never leaks into floats."""

    weight: float
    location: float = 0.0


@dataclass(frozen=True)
class LocalDensity:
    """Local spectral density sigma(omega, x) split by orbit family."""

    average: float
    periodic: SeriesValue
    boundary: SeriesValue

    @property
    def total(self) -> float:
        return self.average + self.periodic.value + self.boundary.value


@dataclass(frozen=True)
class GlobalDensity:
    """Global density rho(omega) = integral of sigma over the space."""

    weyl: float
    periodic: SeriesValue
    boundary: SeriesValue
    boundary_atom: DeltaAtom | None = None

    @property
    def total(self) -> float:
        return self.weyl + self.periodic.value + self.boundary.value


def _check_point(geometry: Geometry, x: float) -> None:
    if isinstance(geometry, Interval):
        if not (0.0 < x < geometry.length):
            raise OutOfDomain(f"x={x!r} not in (0, {geometry.length})")
    elif isinstance(geometry, HalfLine):
        if not (x > 0.0):
            raise OutOfDomain(f"x={x!r} not in (0, inf)")
    # Twisted circle: every real x is on the covering line.


def enumerate_orbits(
    geometry: Geometry, x: float, y: float, max_winding: int
) -> list[OrbitTerm]:
    """All closed orbits from y to x up to the winding cutoff.

    Parameters
    ----------
    geometry : Geometry
        Any of the three model spaces; the half-line has exactly two
        orbits (direct and one reflection) regardless of ``max_winding``.
    x, y : float
        Endpoints, inside the open domain.
    max_winding : int
        W >= 0.  Periodic windings run over |n| <= W, boundary-odd over
        n in [-W, W-1] so reflected paths appear in tail-cancelling pairs.

    Returns
    -------
    list of OrbitTerm
        Sorted by path length (stable: family, then winding breaks ties).
    """
    if max_winding < 0:
        raise InvalidParameter("max_winding must be >= 0")
    _check_point(geometry, x)
    _check_point(geometry, y)
    out: list[OrbitTerm] = []
    if isinstance(geometry, HalfLine):
        sgn = (-1) ** geometry.l
        out.append(OrbitTerm(DIRECT, 0, x - y, 1, 0.0))
        out.append(OrbitTerm(BOUNDARY_ODD, 0, x + y, sgn, 0.0))
    elif isinstance(geometry, Interval):
        length, l, r = geometry.length, geometry.l, geometry.r
        for n in range(-max_winding, max_winding + 1):
            sign = -1 if (n * (l + r)) % 2 else 1
            fam = DIRECT if n == 0 else PERIODIC
            out.append(OrbitTerm(fam, n, x - y + 2.0 * n * length, sign, 0.0))
        for n in range(-max_winding, max_winding):
            sign = -1 if (l + n * (l + r)) % 2 else 1
            out.append(OrbitTerm(BOUNDARY_ODD, n, x + y + 2.0 * n * length, sign, 0.0))
    else:
        length, theta = geometry.length, geometry.theta
        for n in range(-max_winding, max_winding + 1):
            fam = DIRECT if n == 0 else PERIODIC
            out.append(OrbitTerm(fam, n, x - y - n * length, 1, n * theta))
    out.sort(key=lambda o: (o.length, o.family, o.winding))
    return out


# ---------------------------------------------------------------------------
# Vectorized orbit arrays (no per-term objects) for the series below.
# ---------------------------------------------------------------------------


def _interval_windings(control: SeriesControl) -> int:
    return int(control.max_terms)


def _interval_periodic_arrays(
    geom: Interval, w: int
) -> tuple[np.ndarray, np.ndarray]:
    """Positive windings n = 1..W: lengths 2nL and signs (the n and -n
    members carry equal sign and cosine, so sums fold to twice these)."""
    n = np.arange(1, w + 1, dtype=float)
    lengths = 2.0 * n * geom.length
    if (geom.l + geom.r) % 2 == 0:
        signs = np.ones_like(n)
    else:
        signs = np.where(np.arange(1, w + 1) % 2 == 0, 1.0, -1.0)
    return lengths, signs


def _interval_boundary_arrays(
    geom: Interval, x: float, w: int
) -> tuple[np.ndarray, np.ndarray]:
    """Displacements x + nL (half the reflected displacement 2x + 2nL)
    and signs for n = -W..W-1."""
    n = np.arange(-w, w, dtype=int)
    disp = x + n * geom.length
    base = (-1.0) ** geom.l
    if (geom.l + geom.r) % 2 == 0:
        signs = np.full(n.shape, base)
    else:
        signs = base * np.where(n % 2 == 0, 1.0, -1.0)
    return disp, signs


def green_im_diag(
    geometry: Geometry, omega: float, x: float, control: SeriesControl = SeriesControl()
) -> SeriesValue:
    """Imaginary part of the diagonal Green function by orbit sum.

    Im G(omega; x, x) = (1/2 omega) sum_orbits sign * cos(omega * length
    + phase), Abel-damped by ``exp(-length * damping_t)`` when the control
    asks for it.  Equals (pi/2 omega) * sigma(omega, x) termwise.

    Truncation bound: the last damped term when damping is on; otherwise
    the Cesaro envelope heuristic ``1/(2 omega N Lmin)`` with Lmin the
    shortest nonzero orbit length.
    """
    if not (omega > 0.0):
        raise InvalidParameter("omega must be positive")
    _check_point(geometry, x)
    s = control.damping_t
    w = _interval_windings(control)
    if isinstance(geometry, HalfLine):
        val = 1.0 + (-1.0) ** geometry.l * math.cos(2.0 * omega * x) * math.exp(
            -2.0 * x * s
        )
        return SeriesValue(
            value=val / (2.0 * omega),
            terms_used=2,
            truncation_bound=0.0,
            method_tag=ABEL if s > 0.0 else RAW,
        )
    if isinstance(geometry, Interval):
        lengths_p, signs_p = _interval_periodic_arrays(geometry, w)
        disp_b, signs_b = _interval_boundary_arrays(geometry, x, w)
        terms_p = signs_p * np.cos(omega * lengths_p) * np.exp(-lengths_p * s)
        lb = 2.0 * np.abs(disp_b)
        terms_b = signs_b * np.cos(omega * lb) * np.exp(-lb * s)
        val = (1.0 + 2.0 * float(np.sum(terms_p)) + float(np.sum(terms_b))) / (
            2.0 * omega
        )
        last = 2.0 * abs(terms_p[-1]) + abs(terms_b[0]) + abs(terms_b[-1])
        lmin = min(2.0 * geometry.length, float(np.min(lb)))
        nterms = 4 * w + 1
    else:
        n = np.arange(1, w + 1, dtype=float)
        lengths = n * geometry.length
        terms_p = np.cos(n * geometry.theta) * np.cos(omega * lengths) * np.exp(
            -lengths * s
        )
        val = (1.0 + 2.0 * float(np.sum(terms_p))) / (2.0 * omega)
        last = 2.0 * abs(terms_p[-1])
        lmin = geometry.length
        nterms = 2 * w + 1
    if s > 0.0:
        return SeriesValue(val, nterms, last / (2.0 * omega), ABEL)
    return SeriesValue(val, nterms, 1.0 / (2.0 * omega * max(1, w) * lmin), RAW)


def local_spectral_density(
    geometry: Geometry,
    omega: float,
    x: float,
    control: SeriesControl = SeriesControl(),
) -> LocalDensity:
    """sigma(omega, x) split into average, periodic, and boundary parts.

    The average is the local Weyl density 1/pi.  The two series are the
    cosine orbit sums; with ``damping_t = s`` each term carries
    ``exp(-s * length)``, equivalent to smoothing sigma in omega with a
    Lorentzian of width s.
    """
    if not (omega > 0.0):
        raise InvalidParameter("omega must be positive")
    _check_point(geometry, x)
    s = control.damping_t
    w = _interval_windings(control)
    tag = ABEL if s > 0.0 else RAW
    if isinstance(geometry, HalfLine):
        b = (-1.0) ** geometry.l / math.pi * math.cos(2.0 * omega * x) * math.exp(
            -2.0 * x * s
        )
        return LocalDensity(
            average=1.0 / math.pi,
            periodic=SeriesValue(0.0, 0, 0.0, CLOSED_FORM),
            boundary=SeriesValue(b, 1, 0.0, tag),
        )
    if isinstance(geometry, Interval):
        lengths_p, signs_p = _interval_periodic_arrays(geometry, w)
        per = (2.0 / math.pi) * float(
            np.sum(signs_p * np.cos(omega * lengths_p) * np.exp(-lengths_p * s))
        )
        disp_b, signs_b = _interval_boundary_arrays(geometry, x, w)
        lb = 2.0 * np.abs(disp_b)
        bdry = (1.0 / math.pi) * float(
            np.sum(signs_b * np.cos(omega * lb) * np.exp(-lb * s))
        )
        pb = (
            math.exp(-s * 2.0 * w * geometry.length) / (math.pi * w)
            if s > 0.0
            else 2.0 / (math.pi * w)
        )
        return LocalDensity(
            average=1.0 / math.pi,
            periodic=SeriesValue(per, w, pb, tag),
            boundary=SeriesValue(bdry, 2 * w, pb, tag),
        )
    n = np.arange(1, w + 1, dtype=float)
    lengths = n * geometry.length
    per = (2.0 / math.pi) * float(
        np.sum(
            np.cos(n * geometry.theta) * np.cos(omega * lengths) * np.exp(-lengths * s)
        )
    )
    pb = math.exp(-s * w * geometry.length) / (math.pi * w) if s > 0.0 else 2.0 / (math.pi * w)
    return LocalDensity(
        average=1.0 / math.pi,
        periodic=SeriesValue(per, w, pb, tag),
        boundary=SeriesValue(0.0, 0, 0.0, CLOSED_FORM),
    )


def global_density_decomposition(
    geometry: Geometry, omega: float, control: SeriesControl = SeriesControl()
) -> GlobalDensity:
    """rho(omega) = d N / d omega split by orbit family.

    The boundary series integrates x over the domain first.  For mixed
    ends consecutive windings carry opposite signs and the integrals
    cancel pairwise: the boundary density is exactly zero.  For like ends
    the windings tile the whole line, and the content is concentrated at
    the spectral origin: the counting function jumps by ``(-1)^l / 2``
    at omega = 0+ (one ``(-1)^l / 4`` per wall), reported as
    ``boundary_atom``.  Undamped, the truncated series evaluates to the
    oscillatory survivor ``(-1)^l sin(2 omega L W) / (pi omega)``; with
    Abel damping s the windings assemble the full-line integral of
    ``cos(2 omega u) exp(-2 s |u|)`` and the value is the atom's Poisson
    image ``(-1)^l (1/pi) s / (omega^2 + s^2)``.  On the half-line the
    single wall gives the atom ``(-1)^l/4 delta(omega)``, returned
    symbolically.
    """
    if not (omega > 0.0):
        raise InvalidParameter("omega must be positive")
    s = control.damping_t
    w = _interval_windings(control)
    tag = ABEL if s > 0.0 else RAW
    if isinstance(geometry, HalfLine):
        return GlobalDensity(
            weyl=math.inf,
            periodic=SeriesValue(0.0, 0, 0.0, CLOSED_FORM),
            boundary=SeriesValue(0.0, 0, 0.0, CLOSED_FORM),
            boundary_atom=DeltaAtom(weight=0.25 * (-1.0) ** geometry.l, location=0.0),
        )
    if isinstance(geometry, Interval):
        length = geometry.length
        lengths_p, signs_p = _interval_periodic_arrays(geometry, w)
        per = (2.0 * length / math.pi) * float(
            np.sum(signs_p * np.cos(omega * lengths_p) * np.exp(-lengths_p * s))
        )
        pb = (
            (2.0 * length / math.pi) * math.exp(-s * 2.0 * w * length)
            if s > 0.0
            else 2.0 * length / math.pi / max(1, w)
        )
        atom = None
        if geometry.like_ends:
            sgn = (-1.0) ** geometry.l
            atom = DeltaAtom(weight=0.5 * sgn, location=0.0)
            if s > 0.0:
                val = sgn * s / (math.pi * (omega * omega + s * s))
                bound = math.exp(-2.0 * s * length * w) / (math.pi * s)
                bdry = SeriesValue(val, 2 * w, bound, CLOSED_FORM)
            else:
                surv = sgn * math.sin(2.0 * omega * length * w) / (math.pi * omega)
                bdry = SeriesValue(surv, 2 * w, 1.0 / (math.pi * omega), RAW)
        else:
            bdry = SeriesValue(0.0, 2 * w, 0.0, CLOSED_FORM)
        return GlobalDensity(
            weyl=length / math.pi,
            periodic=SeriesValue(per, w, pb, tag),
            boundary=bdry,
            boundary_atom=atom,
        )
    length, theta = geometry.length, geometry.theta
    n = np.arange(1, w + 1, dtype=float)
    per = (2.0 * length / math.pi) * float(
        np.sum(np.cos(n * theta) * np.cos(omega * n * length) * np.exp(-n * length * s))
    )
    pb = (
        (2.0 * length / math.pi) * math.exp(-s * w * length)
        if s > 0.0
        else 2.0 * length / math.pi / max(1, w)
    )
    return GlobalDensity(
        weyl=length / math.pi,
        periodic=SeriesValue(per, w, pb, tag),
        boundary=SeriesValue(0.0, 0, 0.0, CLOSED_FORM),
    )


def local_counting(
    geometry: Geometry,
    omega: float,
    x: float,
    method: str = ORBIT_SUM,
    control: SeriesControl = SeriesControl(),
) -> float:
    """Local counting function N(omega, x) = sum_{omega_j <= omega} |phi_j(x)|^2.

    Two routes:

    * ``dirichlet-kernel`` -- exact partial-sum closed form, available only
      for the Dirichlet-Dirichlet interval:
      ``(M + 1/2)/L - sin((2M+1) pi x/L) / (2 L sin(pi x/L))`` with
      M = N(omega).  Reproduces the mode sum to rounding.
    * ``orbit-sum`` -- Weyl term omega/pi plus the periodic sawtooth over L
      plus the truncated boundary-image series
      ``sum_n sign_n sin(2 omega (x + nL)) / (2 pi (x + nL))``.

    The two agree as the winding cutoff grows (Poisson summation).
    """
    if not (omega > 0.0):
        raise InvalidParameter("omega must be positive")
    _check_point(geometry, x)
    if method == DIRICHLET_KERNEL:
        if not (
            isinstance(geometry, Interval)
            and geometry.left is spectrum.DIRICHLET
            and geometry.right is spectrum.DIRICHLET
        ):
            raise UnsupportedGeometry(
               "dirichlet-kernel local counting needs a Dirichlet-Dirichlet interval"
            )
        length = geometry.length
        m = spectrum.counting_function(geometry, omega)
        return (m + 0.5) / length - math.sin(
            (2 * m + 1) * math.pi * x / length
        ) / (2.0 * length * math.sin(math.pi * x / length))
    if method != ORBIT_SUM:
        raise InvalidParameter(f"unknown local counting method {method!r}")
    if isinstance(geometry, HalfLine):
        return omega / math.pi + (-1.0) ** geometry.l * math.sin(
            2.0 * omega * x
        ) / (2.0 * math.pi * x)
    weyl = omega / math.pi
    per = spectrum.periodic_counting_term(geometry, omega) / geometry.length
    if isinstance(geometry, TwistedCircle):
        return weyl + per
    w = _interval_windings(control)
    disp, signs = _interval_boundary_arrays(geometry, x, w)
    bdry = float(np.sum(signs * np.sin(2.0 * omega * disp) / (2.0 * math.pi * disp)))
    return weyl + per + bdry
