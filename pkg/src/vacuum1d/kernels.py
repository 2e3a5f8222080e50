"""Cylinder and heat kernels by eigenmode sum, image sum, and closed form.

The cylinder kernel is the frequency-damped mode sum

    T(t; x, y) = sum_j e^{-t omega_j} phi_j(x) phi_j(y)*,

equivalently the Poisson kernel of the spatial operator: the solution of
``u_tt + u_xx = 0`` on the half-cylinder with u(0, x, y) = delta(x - y).
Its free-space form is the Lorentzian ``(t/pi) / ((x-y)^2 + t^2)``, so the
method of images turns every geometry here into a lattice of Lorentzians
with reflection signs and holonomy phases.  Geometric resummation of the
lattice gives elementary closed forms; all three routes must agree, and
the tests hold them to ~1e-8 of each other.

The heat kernel is the same construction for ``e^{-t omega^2}`` with the
Gaussian free kernel ``(4 pi t)^{-1/2} e^{-(x-y)^2/4t}``; its image sums
converge so fast that a closed form is never needed.

Small-t and near-diagonal evaluations use cancellation-free forms
throughout, e.g. ``cosh a - cos b = 2 sinh^2(a/2) + 2 sin^2(b/2)``, and
truncated twisted-circle image sums are completed with the Euler-Maclaurin
tails from :mod:`vacuum1d.summation`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import summation
from .errors import ContinuousSpectrum, InvalidParameter, OutOfDomain, UnsupportedGeometry
from .spectrum import (
    DIRICHLET,
    NEUMANN,
    Geometry,
    HalfLine,
    Interval,
    TwistedCircle,
    _count_leq,
)
from .summation import SeriesControl

TWO_PI = 2.0 * math.pi

MODE_SUM = "mode-sum"
IMAGE_SUM = "image-sum"
CLOSED_FORM = "closed-form"

# Drop mode-sum terms with e^{-t omega} (or e^{-t omega^2}) below this.
_TERM_FLOOR = 1e-16


@dataclass(frozen=True)
class KernelValue:
    """A kernel evaluation plus provenance.

    ``method`` records the route actually used (requests that fall back,
    e.g. closed-form twisted off-diagonal, report the fallback here).
    ``value`` is complex only for twisted-circle off-diagonal points;
    every other case is real.
    """

    value: float | complex
    method: str
    terms_used: int
    truncation_bound: float


def _check_closed_point(geometry: Geometry, x: float) -> None:
    """Kernel evaluations allow the closed domain (boundary included)."""
    if isinstance(geometry, Interval):
        if not (0.0 <= x <= geometry.length):
            raise OutOfDomain(f"x={x!r} not in [0, {geometry.length}]")
    elif isinstance(geometry, HalfLine):
        if not (x >= 0.0):
            raise OutOfDomain(f"x={x!r} not in [0, inf)")


def _interval_mode_phi(geom: Interval, omegas: np.ndarray, x: float) -> np.ndarray:
    """Normalized eigenfunctions at x for the frequency array."""
    length = geom.length
    if geom.left is NEUMANN and geom.right is NEUMANN:
        out = np.sqrt(2.0 / length) * np.cos(omegas * x)
        if omegas.size and omegas[0] == 0.0:
            out[0] = math.sqrt(1.0 / length)
        return out
    if geom.left is DIRICHLET:
        return np.sqrt(2.0 / length) * np.sin(omegas * x)
    return np.sqrt(2.0 / length) * np.cos(omegas * x)


def _interval_mode_sum(
    geom: Interval, t: float, x: float, y: float, control: SeriesControl
) -> KernelValue:
    omega_cut = -math.log(_TERM_FLOOR) / t
    step = math.pi / geom.length
    cap = int(control.max_terms)
    omega_cut = min(omega_cut, (cap + 1.5) * step)
    from .spectrum import _mode_arrays

    om, _ = _mode_arrays(geom, omega_cut)
    val = float(
        np.sum(
            np.exp(-t * om)
            * _interval_mode_phi(geom, om, x)
            * _interval_mode_phi(geom, om, y)
        )
    )
    # Geometric tail bound: remaining terms < (2/L) e^{-t omega} summed.
    last = om[-1] if om.size else 0.0
    tail = (2.0 / geom.length) * math.exp(-t * (last + step)) / (-math.expm1(-t * step))
    return KernelValue(val, MODE_SUM, int(om.size), tail)


def _halfline_mode_quadrature(geom: HalfLine, t: float, x: float, y: float) -> KernelValue:
    """Continuum mode integral (1/pi) int_0^inf [cos(w(x-y)) -/+ cos(w(x+y))]
    e^{-t w} dw by adaptive Fourier quadrature -- a numeric route genuinely
    independent of the image algebra."""
    from scipy.integrate import quad

    neval = 0

    def fourier(a: float) -> float:
        nonlocal neval
        if a == 0.0:
            out = quad(
                lambda w: math.exp(-t * w), 0.0, np.inf, epsabs=1e-13, epsrel=1e-13,
                full_output=1,
            )
        else:
            out = quad(
                lambda w: math.exp(-t * w),
                0.0,
                np.inf,
                weight="cos",
                wvar=abs(a),
                epsabs=1e-12,
                limlst=200,
                full_output=1,
            )
        neval += out[2]["neval"]
        return out[0]

    val = (fourier(x - y) + (-1.0) ** geom.l * fourier(x + y)) / math.pi
    return KernelValue(float(val), MODE_SUM, neval, 1e-11)


def _twisted_mode_sum(
    geom: TwistedCircle, t: float, x: float, y: float, control: SeriesControl
) -> KernelValue:
    length, theta = geom.length, geom.theta
    omega_cut = -math.log(_TERM_FLOOR) / t
    step = TWO_PI / length
    omega_cut = min(omega_cut, (control.max_terms + 1.5) * step)
    n_plus = _count_leq(step, theta / length, 0, omega_cut)
    n_minus = _count_leq(step, -theta / length, 1, omega_cut)
    jp = np.arange(0, n_plus, dtype=float)
    jm = np.arange(1, n_minus + 1, dtype=float)
    kp = (TWO_PI * jp + theta) / length
    km = -(TWO_PI * jm - theta) / length  # left-movers carry k < 0
    d = x - y
    val = (
        np.sum(np.exp(-t * np.abs(kp)) * np.exp(1j * kp * d))
        + np.sum(np.exp(-t * np.abs(km)) * np.exp(1j * km * d))
    ) / length
    tail = (2.0 / length) * math.exp(-t * omega_cut) / (-math.expm1(-t * step))
    terms = int(n_plus + n_minus)
    if x == y:
        return KernelValue(float(val.real), MODE_SUM, terms, tail)
    return KernelValue(complex(val), MODE_SUM, terms, tail)


def _lorentzian(t: float, d: np.ndarray | float) -> np.ndarray | float:
    return (t / math.pi) / (d * d + t * t)


def _lorentzian_tail_ge(m0: int, step: float, d: float, t: float) -> float:
    """Euler-Maclaurin value of sum_{m >= m0} (t/pi)/((step m + d)^2 + t^2).

    Integral term is an arctan; the f/2 - f'/12 corrections leave a
    remainder below |f'''(m0)|/720 ~ t step^3 / (30 pi (step m0)^5)."""
    z = step * m0 + d
    q = z * z + t * t
    integral = (0.5 * math.pi - math.atan(z / t)) / (math.pi * step)
    f = (t / math.pi) / q
    fp = -(t / math.pi) * 2.0 * z * step / (q * q)
    return integral + 0.5 * f - fp / 12.0


def _interval_image_sum(
    geom: Interval, t: float, x: float, y: float, control: SeriesControl
) -> KernelValue:
    length, l, r = geom.length, geom.l, geom.r
    w = int(control.max_terms)
    n = np.arange(-w, w + 1, dtype=float)
    if (l + r) % 2 == 0:
        sg_even = np.ones_like(n)
    else:
        sg_even = np.where(np.arange(-w, w + 1) % 2 == 0, 1.0, -1.0)
    per = np.sum(sg_even * _lorentzian(t, x - y + 2.0 * n * length))
    nb = np.arange(-w, w, dtype=float)
    if (l + r) % 2 == 0:
        sg_odd = np.full(nb.shape, (-1.0) ** l)
    else:
        sg_odd = (-1.0) ** l * np.where(np.arange(-w, w) % 2 == 0, 1.0, -1.0)
    bdry = np.sum(sg_odd * _lorentzian(t, x + y + 2.0 * nb * length))
    val = float(per + bdry)
    if geom.like_ends:
        # Same-sign tails do not cancel between families (they add for
        # Neumann ends); complete them analytically.  Leftover images:
        # periodic |n| > W, boundary n >= W and n <= -W-1.
        dp, db, s = x - y, x + y, (-1.0) ** l
        step = 2.0 * length
        val += (
            _lorentzian_tail_ge(w + 1, step, dp, t)
            + _lorentzian_tail_ge(w + 1, step, -dp, t)
            + s * _lorentzian_tail_ge(w, step, db, t)
            + s * _lorentzian_tail_ge(w + 1, step, -db, t)
        )
        # Euler-Maclaurin remainder of the four completed tails is
        # 4 |f'''|/720 ~ (2/15) t step^3 / (pi zmin^5); in practice the
        # rounding floor of the 4W+1-term sum dominates.
        zmin = step * w - abs(db)
        bound = (
            2.0 * t * step**3 / (15.0 * math.pi * max(zmin, step) ** 5)
            + 2e-15 * (1.0 / (math.pi * t) + 1.0 / length)
        )
    else:
        # Alternating tails: remainder per tail is bounded by the first
        # omitted term (no credit for pair cancellation), four tails total.
        zmin = 2.0 * length * w
        bound = 4.0 * (t / math.pi) / (zmin * zmin + t * t) + 4e-16 * abs(val)
    return KernelValue(val, IMAGE_SUM, 4 * w + 1, bound)


def _halfline_image_sum(geom: HalfLine, t: float, x: float, y: float) -> KernelValue:
    val = _lorentzian(t, x - y) + (-1.0) ** geom.l * _lorentzian(t, x + y)
    return KernelValue(float(val), IMAGE_SUM, 2, 0.0)


def _twisted_image_sum(
    geom: TwistedCircle, t: float, x: float, y: float, control: SeriesControl
) -> KernelValue:
    length, theta = geom.length, geom.theta
    w = int(control.max_terms)
    d = x - y
    if x == y:
        # Diagonal: sum_n cos(n theta) (t/pi)/((nL)^2 + t^2); complete the
        # truncated sum with the Euler-Maclaurin Lorentzian tail.
        n = np.arange(1, w + 1, dtype=float)
        core = _lorentzian(t, 0.0) + 2.0 * float(
            np.sum(np.cos(n * theta) * _lorentzian(t, n * length))
        )
        c = t / length
        tail, tail_err = summation.lorentzian_cosine_tail(theta, c, w + 1)
        val = core + 2.0 * (t / math.pi) / length**2 * tail
        bound = 2.0 * (t / math.pi) / length**2 * tail_err
        return KernelValue(float(val), IMAGE_SUM, 2 * w + 1, bound)
    n = np.arange(-w, w + 1, dtype=float)
    val = complex(np.sum(np.exp(1j * n * theta) * _lorentzian(t, d - n * length)))
    bound = 2.0 * t / (math.pi * length**2 * max(1, w))
    return KernelValue(val, IMAGE_SUM, 2 * w + 1, bound)


def _interval_closed_form(geom: Interval, t: float, x: float, y: float) -> KernelValue:
    length, l = geom.length, geom.l
    z = math.pi * t / (2.0 * length)  # half the cylinder aspect angle
    sh2 = math.sinh(z) ** 2

    if geom.like_ends:
        # (1/2L) [ S(x-y) + (-1)^l S(x+y) ],
        # S(d) = sinh(2z) / (2 sinh^2 z + 2 sin^2(pi d / 2L)).
        def s(d: float) -> float:
            return math.sinh(2.0 * z) / (
                2.0 * sh2 + 2.0 * math.sin(math.pi * d / (2.0 * length)) ** 2
            )

        val = (s(x - y) + (-1.0) ** l * s(x + y)) / (2.0 * length)
        return KernelValue(val, CLOSED_FORM, 0, 0.0)

    # Mixed ends: (1/L) sinh(z) [ C(x-y) + (-1)^l C(x+y) ],
    # C(d) = cos(pi d / 2L) / (2 sinh^2 z + 2 sin^2(pi d / 2L)).
    def c(d: float) -> float:
        half = math.pi * d / (2.0 * length)
        return math.cos(half) / (2.0 * sh2 + 2.0 * math.sin(half) ** 2)

    val = math.sinh(z) * (c(x - y) + (-1.0) ** l * c(x + y)) / length
    return KernelValue(val, CLOSED_FORM, 0, 0.0)


def _twisted_closed_form_diag(geom: TwistedCircle, t: float) -> KernelValue:
    # T(t; x, x) = cosh((pi - theta) t / L) / (L sinh(pi t / L)),
    # theta normalized to [0, 2 pi); even under theta -> 2 pi - theta.
    length, theta = geom.length, geom.theta
    a = (math.pi - theta) * t / length
    b = math.pi * t / length
    if b > 350.0:
        val = (math.exp(a - b) + math.exp(-a - b)) / length
    else:
        val = math.cosh(a) / (length * math.sinh(b))
    return KernelValue(val, CLOSED_FORM, 0, 0.0)


def cylinder_kernel(
    geometry: Geometry,
    t: float,
    x: float,
    y: float | None = None,
    method: str = CLOSED_FORM,
    control: SeriesControl = SeriesControl(),
) -> KernelValue:
    """Cylinder kernel T(t; x, y) by the requested route.

    Parameters
    ----------
    geometry : Geometry
    t : float
        Cylinder height, > 0.
    x, y : float
        Points in the closed domain; ``y`` defaults to ``x`` (diagonal).
    method : str
        ``mode-sum``, ``image-sum``, or ``closed-form``.  The twisted
        circle has an elementary closed form only on the diagonal;
        off-diagonal closed-form requests fall back to the mode sum and
        the returned ``method`` says so.
    control : SeriesControl
        Truncation policy for the series routes.

    Returns
    -------
    KernelValue
        Real except for twisted off-diagonal points, where the kernel is
        genuinely complex (Hermitian in x <-> y).

    Notes
    -----
    Closed forms, with z = pi t / 2L and the stable denominator
    ``cosh a - cos b = 2 sinh^2(a/2) + 2 sin^2(b/2)``:

    * like ends:  ``(1/2L)[S(x-y) + (-1)^l S(x+y)]``,
      ``S(d) = sinh(pi t/L) / (cosh(pi t/L) - cos(pi d/L))``
    * mixed ends: ``(1/L) sinh(z) [C(x-y) + (-1)^l C(x+y)]``,
      ``C(d) = cos(pi d/2L) / (cosh(pi t/L) - cos(pi d/L))``
    * half-line:  direct + reflected Lorentzian (the image sum is exact)
    * twisted diagonal: ``cosh((pi-theta) t/L) / (L sinh(pi t/L))``.
    """
    if not (t > 0.0) or not math.isfinite(t):
        raise InvalidParameter("t must be positive and finite")
    if y is None:
        y = x
    _check_closed_point(geometry, x)
    _check_closed_point(geometry, y)
    if method not in (MODE_SUM, IMAGE_SUM, CLOSED_FORM):
        raise InvalidParameter(f"unknown kernel method {method!r}")

    if isinstance(geometry, HalfLine):
        if method == MODE_SUM:
            # No discrete modes; the continuum integral plays that role
            # and is evaluated by quadrature, independent of the images.
            return _halfline_mode_quadrature(geometry, t, x, y)
        out = _halfline_image_sum(geometry, t, x, y)
        if method == CLOSED_FORM:
            return KernelValue(out.value, CLOSED_FORM, 0, 0.0)
        return out

    if isinstance(geometry, Interval):
        if method == MODE_SUM:
            return _interval_mode_sum(geometry, t, x, y, control)
        if method == IMAGE_SUM:
            return _interval_image_sum(geometry, t, x, y, control)
        return _interval_closed_form(geometry, t, x, y)

    if method == MODE_SUM:
        return _twisted_mode_sum(geometry, t, x, y, control)
    if method == IMAGE_SUM:
        return _twisted_image_sum(geometry, t, x, y, control)
    if x == y:
        return _twisted_closed_form_diag(geometry, t)
    return _twisted_mode_sum(geometry, t, x, y, control)


def cylinder_trace(
    geometry: Geometry,
    t: float,
    method: str = CLOSED_FORM,
    control: SeriesControl = SeriesControl(),
) -> KernelValue:
    """Tr T(t) = sum_j e^{-t omega_j} by the requested route.

    Closed forms::

        like ends:   1/(e^{pi t/L} - 1) + 1 (Neumann) or + 0 (Dirichlet)
        mixed ends:  1 / (2 sinh(pi t / 2L))
        twisted:     cosh((pi - theta) t/L) / sinh(pi t/L)

    The image-sum route integrates each image family over the domain
    analytically: periodic Lorentzians give the two-sided pole sum
    (Mittag-Leffler), boundary ones telescope to ``(-1)^l/2`` for like
    ends and to zero for mixed ends.  This route is numerically
    independent of the geometric-series closed form.

    The half-line trace diverges (continuous spectrum);
    :class:`ContinuousSpectrum` is raised.
    """
    if not (t > 0.0) or not math.isfinite(t):
        raise InvalidParameter("t must be positive and finite")
    if isinstance(geometry, HalfLine):
        raise ContinuousSpectrum("half-line cylinder trace diverges")
    if method not in (MODE_SUM, IMAGE_SUM, CLOSED_FORM):
        raise InvalidParameter(f"unknown kernel method {method!r}")

    if isinstance(geometry, Interval):
        length, l = geometry.length, geometry.l
        if method == CLOSED_FORM:
            if geometry.like_ends:
                val = 1.0 / math.expm1(math.pi * t / length) + (1.0 if l == 0 else 0.0)
            else:
                val = 0.5 / math.sinh(math.pi * t / (2.0 * length))
            return KernelValue(val, CLOSED_FORM, 0, 0.0)
        if method == MODE_SUM:
            return _trace_mode_sum(geometry, t, control)
        a = t / (2.0 * length)
        if geometry.like_ends:
            per = (length * t / math.pi) * summation.mittag_leffler_sum("coth", a) / (
                4.0 * length**2
            )
            val = per + 0.5 * (-1.0) ** l
        else:
            per = (length * t / math.pi) * summation.mittag_leffler_sum("csch", a) / (
                4.0 * length**2
            )
            val = per
        return KernelValue(val, IMAGE_SUM, 0, 0.0)

    length, theta = geometry.length, geometry.theta
    if method == CLOSED_FORM:
        diag = _twisted_closed_form_diag(geometry, t)
        return KernelValue(length * diag.value, CLOSED_FORM, 0, 0.0)
    if method == MODE_SUM:
        return _trace_mode_sum(geometry, t, control)
    diag = _twisted_image_sum(geometry, t, 0.0, 0.0, control)
    return KernelValue(
        length * diag.value, IMAGE_SUM, diag.terms_used, length * diag.truncation_bound
    )


def _trace_mode_sum(geometry: Geometry, t: float, control: SeriesControl) -> KernelValue:
    from .spectrum import _mode_arrays

    if isinstance(geometry, Interval):
        step = math.pi / geometry.length
    else:
        step = TWO_PI / geometry.length
    omega_cut = min(-math.log(_TERM_FLOOR) / t, (control.max_terms + 1.5) * step)
    om, mult = _mode_arrays(geometry, omega_cut)
    val = float(np.sum(mult * np.exp(-t * om)))
    tail = 2.0 * math.exp(-t * omega_cut) / (-math.expm1(-t * step))
    return KernelValue(val, MODE_SUM, int(om.size), tail)


def heat_kernel_diag(geometry: Geometry, t: float, x: float) -> float:
    """Heat kernel diagonal K(t; x, x) by the (superexponential) image sum.

    * interval:  ``(4 pi t)^{-1/2} [ sum_n s_n e^{-(nL)^2/t}
      + sum_n s'_n e^{-(x+nL)^2/t} ]``
    * half-line: ``(4 pi t)^{-1/2} (1 + (-1)^l e^{-x^2/t})``
    * twisted:   ``(4 pi t)^{-1/2} sum_n cos(n theta) e^{-(nL)^2/4t}``

    Images beyond ``e^{-700}`` are dropped; the result is exact to
    rounding for every t of practical interest.
    """
    if not (t > 0.0) or not math.isfinite(t):
        raise InvalidParameter("t must be positive and finite")
    _check_closed_point(geometry, x)
    pref = 1.0 / math.sqrt(4.0 * math.pi * t)
    if isinstance(geometry, HalfLine):
        return pref * (1.0 + (-1.0) ** geometry.l * math.exp(-x * x / t))
    length = geometry.length
    if isinstance(geometry, Interval):
        l, r = geometry.l, geometry.r
        # Periodic images: displacement 2nL -> e^{-(nL)^2/t}.
        nmax = int(math.ceil(math.sqrt(700.0 * t) / length)) + 1
        n = np.arange(1, nmax + 1, dtype=float)
        sg = (
            np.ones_like(n)
            if (l + r) % 2 == 0
            else np.where(np.arange(1, nmax + 1) % 2 == 0, 1.0, -1.0)
        )
        per = 1.0 + 2.0 * float(np.sum(sg * np.exp(-((n * length) ** 2) / t)))
        # Boundary images: displacement 2(x + nL) -> e^{-(x+nL)^2/t}.
        nb = np.arange(-nmax - 1, nmax + 1, dtype=float)
        db = x + nb * length
        keep = db * db / t < 700.0
        nb, db = nb[keep], db[keep]
        sgb = (
            np.full(nb.shape, (-1.0) ** l)
            if (l + r) % 2 == 0
            else (-1.0) ** l * np.where(nb.astype(int) % 2 == 0, 1.0, -1.0)
        )
        bdry = float(np.sum(sgb * np.exp(-db * db / t)))
        return pref * (per + bdry)
    theta = geometry.theta
    nmax = int(math.ceil(math.sqrt(4.0 * 700.0 * t) / length)) + 1
    n = np.arange(1, nmax + 1, dtype=float)
    series = 1.0 + 2.0 * float(
        np.sum(np.cos(n * theta) * np.exp(-((n * length) ** 2) / (4.0 * t)))
    )
    return pref * series


def heat_trace(geometry: Geometry, t: float, control: SeriesControl = SeriesControl()) -> float:
    """Tr K(t) = sum_j e^{-t omega_j^2} (mode sum; converges like a theta
    function).  Half-line raises :class:`ContinuousSpectrum`.

    Small-t behaviour: ``L (4 pi t)^{-1/2} + b_1 + O(e^{-L^2/t})`` with
    ``b_1 = -1/2, 0, +1/2`` for Dirichlet-Dirichlet, mixed, and
    Neumann-Neumann ends, and ``b_1 = 0`` on the circle.
    """
    if not (t > 0.0) or not math.isfinite(t):
        raise InvalidParameter("t must be positive and finite")
    if isinstance(geometry, HalfLine):
        raise ContinuousSpectrum("half-line heat trace diverges")
    from .spectrum import _mode_arrays

    omega_cut = math.sqrt(-math.log(_TERM_FLOOR) / t) + 1.0
    if isinstance(geometry, Interval):
        step = math.pi / geometry.length
    else:
        step = TWO_PI / geometry.length
    omega_cut = min(omega_cut, (control.max_terms + 1.5) * step)
    om, mult = _mode_arrays(geometry, omega_cut)
    return float(np.sum(mult * np.exp(-t * om * om)))
