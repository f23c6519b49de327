"""Numerical monodromy of the abelianization family on the punctured torus.

The flat connections treated here live on the rectangular torus
C/(Z + i tau Z) minus the origin and are parametrized by (a, chi, r, tau):
the diagonal part is d + a dw + chi dwbar and its dual, the off-diagonal
entries are doubly periodic Baker-type sections with a simple pole at the
origin whose residues carry the parabolic weight r.  Monodromies along the
two straight generating loops based at (1 + i tau)/4 are computed by
adaptive 4th-order parallel transport; the commutator trace then has to be
2 cos(2 pi r) and the trace triple has to satisfy the character equation,
which is what every consumer of this module checks.

Elliptic ingredients (Weierstrass sigma and the quasi-periods) are built
from theta series in the real nome q = exp(-pi tau); the rectangular case
keeps everything real-coefficient and well-conditioned for tau in [0.2, 5].
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import algebra

TOL_MONO = 1e-6
TOL_ROOT = 1e-6
DEFAULT_RTOL = 1e-10
DEFAULT_ATOL = 1e-13
DEFAULT_STEP_BUDGET = 10_000

TWO_PI_I = 2j * math.pi


class AbelMonoError(ValueError):
    pass


class NonGenericChi(AbelMonoError):
    """chi is a half-lattice point of the Jacobian: no generic form exists."""


class StepLimitExceeded(AbelMonoError):
    pass


class PathTooCloseToPole(AbelMonoError):
    pass


class BracketDoesNotStraddle(AbelMonoError):
    pass


class MaxIterations(AbelMonoError):
    pass


class SlicePreconditionError(AbelMonoError):
    pass


# ---------------------------------------------------------------------------
# Elliptic machinery


class RectangularLattice:
    """Theta-series data for the lattice Z + i tau Z, tau > 0.

    Provides the odd entire function sigma with sigma(w)/w -> 1 at 0 and
    sigma(w + omega_i) = -exp(eta_i (w + omega_i/2)) sigma(w) for the full
    periods omega_1 = 1, omega_2 = i tau.  The quasi-periods satisfy the
    Legendre relation eta_1 omega_2 - eta_2 omega_1 = 2 pi i, which is
    checked at construction against an independent series for eta_2.
    """

    def __init__(self, tau: float):
        if tau <= 0:
            raise AbelMonoError("tau must be positive")
        self.tau = float(tau)
        self.q = math.exp(-math.pi * tau)
        n_terms = max(6, int(math.ceil(math.sqrt(80.0 / (math.pi * tau)) + 2)))
        n = np.arange(n_terms)
        self._odd = 2.0 * n + 1.0
        self._coef = 2.0 * (-1.0) ** n * self.q ** ((n + 0.5) ** 2)
        self._theta1_d0 = float(np.dot(self._coef, self._odd))
        theta1_d3 = -float(np.dot(self._coef, self._odd**3))
        self.eta1 = -(math.pi**2 / 3.0) * theta1_d3 / self._theta1_d0
        self.eta2 = self.eta1 * (1j * tau) - TWO_PI_I
        self.legendre_residual = abs(
            self.eta1 * (1j * tau) - _eta1_of(1.0 / tau) / (1j * tau) - TWO_PI_I
        )
        if self.legendre_residual > 1e-10:
            raise AbelMonoError(
                f"Legendre relation residual {self.legendre_residual:.2e} at tau={tau}"
            )

    def theta1(self, v):
        return complex(np.dot(self._coef, np.sin(self._odd * complex(v))))

    def sigma(self, w):
        w = complex(w)
        return (
            cmath.exp(0.5 * self.eta1 * w * w)
            * self.theta1(math.pi * w)
            / (math.pi * self._theta1_d0)
        )

    def lattice_distance(self, w):
        w = complex(w)
        dx = w.real - round(w.real)
        dy = w.imag - self.tau * round(w.imag / self.tau)
        return math.hypot(dx, dy)


def _eta1_of(tau: float) -> float:
    q = math.exp(-math.pi * tau)
    n = np.arange(max(6, int(math.ceil(math.sqrt(80.0 / (math.pi * tau)) + 2))))
    odd = 2.0 * n + 1.0
    coef = 2.0 * (-1.0) ** n * q ** ((n + 0.5) ** 2)
    return -(math.pi**2 / 3.0) * (-float(np.dot(coef, odd**3))) / float(np.dot(coef, odd))


_LATTICE_CACHE: dict = {}


def lattice(tau: float) -> RectangularLattice:
    key = float(tau)
    if key not in _LATTICE_CACHE:
        if len(_LATTICE_CACHE) > 256:
            _LATTICE_CACHE.clear()
        _LATTICE_CACHE[key] = RectangularLattice(key)
    return _LATTICE_CACHE[key]


def weierstrass_sigma(w, tau: float):
    """sigma(w) on Z + i tau Z together with the quasi-periods (eta1, eta2)."""
    lat = lattice(tau)
    return lat.sigma(w), lat.eta1, lat.eta2


# ---------------------------------------------------------------------------
# Connection data


@dataclass(frozen=True)
class ConnectionParams:
    a: complex
    chi: complex
    r: float
    tau: float

    def __post_init__(self):
        if not 0.0 < self.r < 0.5:
            raise AbelMonoError("r must lie in (0, 1/2)")
        if self.tau <= 0:
            raise AbelMonoError("tau must be positive")


class BakerSection:
    """Doubly periodic off-diagonal entry with a simple pole at the origin.

    psi(w) = scale * exp(beta w) * sigma(w - p)/sigma(w) * exp(-lam wbar)
    with lam = -2 chi for the + section and +2 chi for the - section.  The
    multiplier equations exp(beta omega_i - eta_i p) = exp(lam conj(omega_i))
    are solved exactly (k = 0 branch), which makes psi literally periodic;
    the residue at the origin is r for either sign, so the quadratic
    residue of the product is r^2.
    """

    def __init__(self, sign: int, chi: complex, r: float, tau: float):
        if sign not in (+1, -1):
            raise AbelMonoError("sign must be +1 or -1")
        lat = lattice(tau)
        lam = -2.0 * complex(chi) if sign == +1 else 2.0 * complex(chi)
        p = -tau * lam / math.pi
        if lat.lattice_distance(p) < 1e-8:
            raise NonGenericChi(
                f"chi = {chi} is (numerically) a half-lattice point of the Jacobian"
            )
        beta = -lam * (lat.eta2 + 1j * tau * lat.eta1) / TWO_PI_I
        self.sign = sign
        self.chi = complex(chi)
        self.r = float(r)
        self.tau = float(tau)
        self.lam = lam
        self.p = p
        self.beta = beta
        self.residue = float(r)
        self._lat = lat
        self.scale = -r / lat.sigma(p)

    def __call__(self, w):
        w = complex(w)
        return (
            self.scale
            * cmath.exp(self.beta * w - self.lam * w.conjugate())
            * self._lat.sigma(w - self.p)
            / self._lat.sigma(w)
        )


class ConnectionForm:
    """The matrix-valued 1-form A_w dw + A_wbar dwbar of the family.

    A_w = [[a, psi_minus],[psi_plus, -a]] has a simple pole at lattice
    points; A_wbar = diag(chi, -chi) is constant.  diagonal_only drops the
    off-diagonal entries (scalar test hook).
    """

    def __init__(self, params: ConnectionParams, diagonal_only: bool = False):
        self.params = params
        self.lat = lattice(params.tau)
        self.diagonal_only = diagonal_only
        if diagonal_only:
            self.psi_plus = None
            self.psi_minus = None
        else:
            self.psi_plus = BakerSection(+1, params.chi, params.r, params.tau)
            self.psi_minus = BakerSection(-1, params.chi, params.r, params.tau)
        self.a_wbar = np.array([[params.chi, 0.0], [0.0, -params.chi]], dtype=complex)

    def a_w(self, w):
        a = self.params.a
        if self.diagonal_only:
            return np.array([[a, 0.0], [0.0, -a]], dtype=complex)
        return np.array(
            [[a, self.psi_minus(w)], [self.psi_plus(w), -a]], dtype=complex
        )

    def coefficient(self, w, wdot):
        """-(A_w wdot + A_wbar conj(wdot)), the right-hand side matrix of the ODE."""
        return -(self.a_w(w) * wdot + self.a_wbar * wdot.conjugate())


# ---------------------------------------------------------------------------
# Paths


@dataclass(frozen=True)
class TorusPath:
    """Parametrized path s in [0,1] -> C avoiding the lattice Z + i tau Z."""

    point: object  # callable s -> w
    velocity: object  # callable s -> dw/ds
    tau: float
    label: str = "path"

    @property
    def delta(self):
        return 0.05 * min(1.0, self.tau)

    def reversed(self):
        return TorusPath(
            lambda s: self.point(1.0 - s),
            lambda s: -self.velocity(1.0 - s),
            self.tau,
            self.label + "^-1",
        )


def basepoint(tau: float) -> complex:
    return (1.0 + 1j * tau) / 4.0


def gamma_x(tau: float) -> TorusPath:
    p0 = basepoint(tau)
    return TorusPath(lambda s: p0 + s, lambda s: 1.0 + 0.0j, tau, "gamma_x")


def gamma_y(tau: float) -> TorusPath:
    p0 = basepoint(tau)
    return TorusPath(lambda s: p0 + 1j * tau * s, lambda s: 1j * tau, tau, "gamma_y")


def gamma_x_wiggled(tau: float, amplitude: float = 0.05, cycles: int = 2) -> TorusPath:
    """A homotopic deformation of gamma_x with the same endpoints."""
    p0 = basepoint(tau)
    k = 2.0 * math.pi * cycles

    def pt(s):
        return p0 + s + 1j * amplitude * math.sin(k * s)

    def vel(s):
        return 1.0 + 1j * amplitude * k * math.cos(k * s)

    return TorusPath(pt, vel, tau, "gamma_x~")


def segment(z0: complex, z1: complex, tau: float, label: str = "segment") -> TorusPath:
    return TorusPath(
        lambda s: z0 + s * (z1 - z0), lambda s: z1 - z0, tau, label
    )


# ---------------------------------------------------------------------------
# Parallel transport (embedded Fehlberg 4(5), 4th-order solution propagated)

_RKF_A = (0.25, 3.0 / 8.0, 12.0 / 13.0, 1.0, 0.5)
_RKF_B = (
    (0.25,),
    (3.0 / 32.0, 9.0 / 32.0),
    (1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0),
    (439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0),
    (-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0),
)
_RKF_C4 = (25.0 / 216.0, 0.0, 1408.0 / 2565.0, 2197.0 / 4104.0, -0.2, 0.0)
_RKF_C5 = (16.0 / 135.0, 0.0, 6656.0 / 12825.0, 28561.0 / 56430.0, -9.0 / 50.0, 2.0 / 55.0)


@dataclass
class TransportResult:
    matrix: np.ndarray
    det_drift: float
    accepted_steps: int
    rejected_steps: int

    def __iter__(self):
        yield self.matrix
        yield self.det_drift


def parallel_transport(
    form: ConnectionForm,
    path: TorusPath,
    steps: int = DEFAULT_STEP_BUDGET,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> TransportResult:
    """Solve Psi' = -(A_w wdot + A_wbar conj(wdot)) Psi, Psi(0) = Id, over the path.

    The 4th-order Fehlberg solution is propagated with the embedded
    5th-order error estimate controlling the step; no renormalization is
    applied, and the determinant drift of the result is reported.
    """
    delta = path.delta

    def rhs(s):
        w = complex(path.point(s))
        if form.lat.lattice_distance(w) < delta:
            raise PathTooCloseToPole(
                f"{path.label}: point {w} within {delta} of the lattice"
            )
        return form.coefficient(w, complex(path.velocity(s)))

    psi = algebra.IDENTITY.copy()
    s = 0.0
    h = 1.0 / 64.0
    accepted = 0
    rejected = 0
    while s < 1.0:
        if accepted >= steps:
            raise StepLimitExceeded(f"{path.label}: budget of {steps} accepted steps")
        h = min(h, 1.0 - s)
        k1 = rhs(s) @ psi
        k2 = rhs(s + _RKF_A[0] * h) @ (psi + h * _RKF_B[0][0] * k1)
        k3 = rhs(s + _RKF_A[1] * h) @ (psi + h * (_RKF_B[1][0] * k1 + _RKF_B[1][1] * k2))
        k4 = rhs(s + _RKF_A[2] * h) @ (
            psi + h * (_RKF_B[2][0] * k1 + _RKF_B[2][1] * k2 + _RKF_B[2][2] * k3)
        )
        k5 = rhs(s + _RKF_A[3] * h) @ (
            psi
            + h
            * (_RKF_B[3][0] * k1 + _RKF_B[3][1] * k2 + _RKF_B[3][2] * k3 + _RKF_B[3][3] * k4)
        )
        k6 = rhs(s + _RKF_A[4] * h) @ (
            psi
            + h
            * (
                _RKF_B[4][0] * k1
                + _RKF_B[4][1] * k2
                + _RKF_B[4][2] * k3
                + _RKF_B[4][3] * k4
                + _RKF_B[4][4] * k5
            )
        )
        y4 = psi + h * (_RKF_C4[0] * k1 + _RKF_C4[2] * k3 + _RKF_C4[3] * k4 + _RKF_C4[4] * k5)
        y5 = psi + h * (
            _RKF_C5[0] * k1
            + _RKF_C5[2] * k3
            + _RKF_C5[3] * k4
            + _RKF_C5[4] * k5
            + _RKF_C5[5] * k6
        )
        err = float(np.max(np.abs(y5 - y4)))
        scale = atol + rtol * float(np.max(np.abs(psi)))
        if err <= scale:
            s += h
            psi = y4
            accepted += 1
        else:
            rejected += 1
        ratio = (scale / err) ** 0.2 if err > 0 else 4.0
        h *= min(4.0, max(0.1, 0.9 * ratio))
    drift = abs(algebra.det(psi) - 1.0)
    return TransportResult(psi, drift, accepted, rejected)


# ---------------------------------------------------------------------------
# Monodromies and derived experiments


@dataclass
class MonodromyResult:
    X: np.ndarray
    Y: np.ndarray
    K: np.ndarray
    x: complex
    y: complex
    z: complex
    char_residual: float
    commutator_residual: float
    det_drift: float

    def astuple(self):
        return (self.x, self.y, self.z)


def character_residual(x, y, z, r) -> complex:
    return x * x + y * y + z * z - x * y * z - 2.0 - 2.0 * math.cos(2.0 * math.pi * r)


def monodromies(
    params: ConnectionParams,
    steps: int = DEFAULT_STEP_BUDGET,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> MonodromyResult:
    """Monodromy matrices X, Y along gamma_x, gamma_y and their residuals.

    K = Y^-1 X^-1 Y X is the commutator-loop monodromy (loops composed
    right-to-left); its trace must equal 2 cos(2 pi r), and (x, y, z) must
    satisfy the character equation.
    """
    form = ConnectionForm(params)
    tx = parallel_transport(form, gamma_x(params.tau), steps, rtol, atol)
    ty = parallel_transport(form, gamma_y(params.tau), steps, rtol, atol)
    X, Y = tx.matrix, ty.matrix
    K = algebra.commutator(X, Y)
    x = algebra.trace(X)
    y = algebra.trace(Y)
    z = algebra.trace(Y @ X)
    char_res = abs(character_residual(x, y, z, params.r))
    comm_res = abs(algebra.trace(K) - 2.0 * math.cos(2.0 * math.pi * params.r))
    return MonodromyResult(
        X, Y, K, x, y, z, char_res, comm_res, max(tx.det_drift, ty.det_drift)
    )


def eta_case(a, chi, tau: float, tol: float = 1e-12):
    """Which eta-invariance condition (a, chi) satisfies, as (case, k), or None.

    Case 1: chi, a real.  Case 2: chi + k pi i/2 and a - k pi i/2 real.
    Case 3: chi, a imaginary.  Case 4: chi + k pi/(2 tau) and
    a - k pi/(2 tau) imaginary.
    """
    a = complex(a)
    chi = complex(chi)
    if abs(chi.imag) <= tol and abs(a.imag) <= tol:
        return (1, 0)
    k = round(-2.0 * chi.imag / math.pi)
    if (
        k != 0
        and abs(chi.imag + k * math.pi / 2.0) <= tol
        and abs(a.imag - k * math.pi / 2.0) <= tol
    ):
        return (2, k)
    if abs(chi.real) <= tol and abs(a.real) <= tol:
        return (3, 0)
    k = round(-2.0 * tau * chi.real / math.pi)
    if (
        k != 0
        and abs(chi.real + k * math.pi / (2.0 * tau)) <= tol
        and abs(a.real - k * math.pi / (2.0 * tau)) <= tol
    ):
        return (4, k)
    return None


def _slice_parametrization(chi0: complex, tau: float, tol: float = 1e-9):
    """Map t in R to the admissible a-line paired with chi0, or raise.

    For chi0 with Im chi0 in (pi/2) Z the line is a(t) = t - i Im chi0
    (cases 1/2); for Re chi0 in (pi/(2 tau)) Z it is a(t) = -Re chi0 + i t
    (cases 3/4).
    """
    chi0 = complex(chi0)
    k_im = round(2.0 * chi0.imag / math.pi)
    if abs(chi0.imag - k_im * math.pi / 2.0) <= tol:
        return lambda t: complex(t, -chi0.imag), "real"
    k_re = round(2.0 * tau * chi0.real / math.pi)
    if abs(chi0.real - k_re * math.pi / (2.0 * tau)) <= tol:
        return lambda t: complex(-chi0.real, t), "imaginary"
    raise SlicePreconditionError(
        f"chi0 = {chi0} does not lie on an eta-admissible line for tau = {tau}"
    )


@dataclass
class SweepRow:
    t: float
    a: complex
    x: complex
    y: complex
    z: complex
    eta_residual: float
    is_real: bool
    refined: bool = False


@dataclass
class SweepResult:
    rows: list
    r: float
    tau: float
    chi0: complex

    def flagged_real(self):
        return [row for row in self.rows if row.is_real]

    def overlay(self, x_lo=2.001, x_hi=12.0, n=400):
        """Sampled (x, y) pairs of the analytic real-locus branch."""
        pts = []
        for x in np.linspace(x_lo, x_hi, n):
            try:
                pts.append((float(x), analytic_locus_y(float(x), self.r)))
            except AbelMonoError:
                continue
        return pts


def analytic_locus_y(x: float, r: float) -> float:
    """Branch y(x) > 0 of the real eta-invariant locus for x^2 > 4."""
    c = math.cos(2.0 * math.pi * r)
    val = (4.0 * x * x - 8.0 * (1.0 + c)) / (x * x - 4.0)
    if val < 0:
        raise AbelMonoError(f"no real locus point over x = {x}")
    return math.sqrt(val)


def _eta_residual(x, y, r) -> float:
    xr, yr = complex(x).real, complex(y).real
    return (
        xr * xr * yr * yr
        - 4.0 * xr * xr
        - 4.0 * yr * yr
        + 8.0 * (1.0 + math.cos(2.0 * math.pi * r))
    )


def real_locus_sweep(
    r: float,
    tau: float,
    chi0: complex,
    a_range=(0.05, 2.0),
    n: int = 60,
    tol: float = TOL_MONO,
    refine: bool = True,
    steps: int = DEFAULT_STEP_BUDGET,
    rtol: float = DEFAULT_RTOL,
    threads: int = 1,
) -> SweepResult:
    """Sweep a along the admissible line through chi0, flagging real points.

    Rows carry (a, x, y, z, eta-locus residual, real flag); where Im z
    changes sign between samples the crossing is bisected to the flag
    tolerance and inserted as a refined row, since the real locus meets a
    fixed-tau slice in isolated points.  Grid points evaluate independently
    (optionally on a thread pool); row order is by parameter value either
    way.
    """
    line, _kind = _slice_parametrization(chi0, tau)

    def evaluate(t):
        res = monodromies(ConnectionParams(line(t), chi0, r, tau), steps, rtol)
        return SweepRow(
            t,
            line(t),
            res.x,
            res.y,
            res.z,
            _eta_residual(res.x, res.y, r),
            abs(complex(res.z).imag) <= tol,
        )

    ts = np.linspace(a_range[0], a_range[1], n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(evaluate, ts))
    else:
        rows = [evaluate(t) for t in ts]

    if refine:
        crossings = []
        for lo, hi in zip(rows[:-1], rows[1:]):
            im_lo, im_hi = complex(lo.z).imag, complex(hi.z).imag
            if im_lo == 0.0 or lo.is_real or hi.is_real:
                continue
            if im_lo * im_hi < 0:
                crossings.append((lo.t, hi.t, im_lo))
        for t_lo, t_hi, im_lo in crossings:
            row = None
            for _ in range(48):
                t_mid = 0.5 * (t_lo + t_hi)
                row = evaluate(t_mid)
                im_mid = complex(row.z).imag
                if abs(im_mid) <= tol:
                    break
                if im_mid * im_lo < 0:
                    t_hi = t_mid
                else:
                    t_lo, im_lo = t_mid, im_mid
            if row is not None and abs(complex(row.z).imag) <= tol:
                row.is_real = True
                row.refined = True
                rows.append(row)
        rows.sort(key=lambda row: row.t)

    return SweepResult(rows, r, tau, chi0)


@dataclass
class MatchResult:
    a: complex
    t: float
    result: MonodromyResult
    evaluations: int


def match_y(
    y_target: float,
    r: float,
    tau: float,
    chi0: complex,
    bracket,
    tol_root: float = TOL_ROOT,
    max_evals: int = 60,
    steps: int = DEFAULT_STEP_BUDGET,
    rtol: float = DEFAULT_RTOL,
) -> MatchResult:
    """Root-find a on the admissible slice so that tr Y matches y_target.

    Safeguarded secant (Illinois) inside a straddling bracket; the
    returned monodromy satisfies |Re y - y_target| <= tol_root.
    """
    line, _kind = _slice_parametrization(chi0, tau)
    evals = 0

    def g(t):
        nonlocal evals
        if evals >= max_evals:
            raise MaxIterations(f"budget of {max_evals} monodromy evaluations")
        evals += 1
        res = monodromies(ConnectionParams(line(t), chi0, r, tau), steps, rtol)
        return complex(res.y).real - y_target, res

    t_lo, t_hi = float(bracket[0]), float(bracket[1])
    f_lo, res_lo = g(t_lo)
    if abs(f_lo) <= tol_root:
        return MatchResult(line(t_lo), t_lo, res_lo, evals)
    f_hi, res_hi = g(t_hi)
    if abs(f_hi) <= tol_root:
        return MatchResult(line(t_hi), t_hi, res_hi, evals)
    if f_lo * f_hi > 0:
        raise BracketDoesNotStraddle(
            f"y - y* has the same sign at both bracket ends ({f_lo:+.3e}, {f_hi:+.3e})"
        )
    side = 0
    while True:
        t_new = (t_lo * f_hi - t_hi * f_lo) / (f_hi - f_lo)
        span = t_hi - t_lo
        if not (min(t_lo, t_hi) + 1e-3 * abs(span) < t_new < max(t_lo, t_hi) - 1e-3 * abs(span)):
            t_new = 0.5 * (t_lo + t_hi)
        f_new, res_new = g(t_new)
        if abs(f_new) <= tol_root:
            return MatchResult(line(t_new), t_new, res_new, evals)
        if f_lo * f_new < 0:
            t_hi, f_hi = t_new, f_new
            if side == -1:
                f_lo *= 0.5
            side = -1
        else:
            t_lo, f_lo = t_new, f_new
            if side == +1:
                f_hi *= 0.5
            side = +1


@dataclass
class LocusMatchResult:
    tau: float
    a: complex
    result: MonodromyResult
    evaluations: int


def _graze_point(r, tau, chi0, a_scan, n_scan, tol_im, budget):
    """Locate the isolated real point (Im z sign change) on a fixed-tau slice."""
    line, _ = _slice_parametrization(chi0, tau)
    evals = 0

    def ev(t):
        nonlocal evals
        evals += 1
        if evals > budget:
            raise MaxIterations("graze search exceeded its evaluation budget")
        return monodromies(ConnectionParams(line(t), chi0, r, tau))

    prev = None
    for t in np.linspace(a_scan[0], a_scan[1], n_scan):
        m = ev(t)
        imz = complex(m.z).imag
        if prev is not None and prev[1] * imz < 0 and complex(m.y).real > 1.0:
            t_lo, im_lo = prev
            t_hi = t
            for _ in range(60):
                t_mid = 0.5 * (t_lo + t_hi)
                mm = ev(t_mid)
                im_mid = complex(mm.z).imag
                if abs(im_mid) <= tol_im:
                    return t_mid, mm, evals
                if im_lo * im_mid < 0:
                    t_hi = t_mid
                else:
                    t_lo, im_lo = t_mid, im_mid
            return t_mid, mm, evals
        prev = (t, imz)
    raise BracketDoesNotStraddle(
        f"no real point found on the slice tau={tau} over a in {a_scan}"
    )


def match_on_locus(
    y_target: float,
    r: float,
    tau_bracket=(2.0, 3.5),
    a_scan=(0.02, 1.8),
    n_scan: int = 30,
    tol_root: float = TOL_ROOT,
    tol_im: float = 1e-10,
    max_outer: int = 16,
    budget_per_stage: int = 120,
) -> LocusMatchResult:
    """Match tr Y on the real locus itself by moving the modulus tau.

    The trivializing slice chi0 = pi/(4 tau) meets the real locus in one
    point per tau; sweeping tau moves that point along the locus, on which
    tr Y is a global coordinate.  A secant iteration on tau drives the
    grazed point's y to y_target; the dodecahedral representation is
    recovered at y_target = sqrt(3 + sqrt 5) with r = 1/10.
    """
    total = 0

    def graze_y(tau):
        nonlocal total
        chi0 = math.pi / (4.0 * tau)
        t_star, m, used = _graze_point(r, tau, chi0, a_scan, n_scan, tol_im, budget_per_stage)
        total += used
        return t_star, m

    tau0, tau1 = float(tau_bracket[0]), float(tau_bracket[1])
    t0, m0 = graze_y(tau0)
    g0 = complex(m0.y).real - y_target
    if abs(g0) <= tol_root:
        return LocusMatchResult(tau0, complex(t0, 0.0), m0, total)
    t1, m1 = graze_y(tau1)
    g1 = complex(m1.y).real - y_target
    for _ in range(max_outer):
        if abs(g1) <= tol_root:
            return LocusMatchResult(tau1, complex(t1, 0.0), m1, total)
        if g1 == g0:
            raise MaxIterations("locus matching stalled (flat secant)")
        tau2 = tau1 - g1 * (tau1 - tau0) / (g1 - g0)
        if tau2 <= 0.05:
            tau2 = 0.5 * (tau0 + tau1)
        t1_new, m2 = graze_y(tau2)
        tau0, g0 = tau1, g1
        tau1, g1, t1, m1 = tau2, complex(m2.y).real - y_target, t1_new, m2
    raise MaxIterations(f"locus matching did not converge in {max_outer} tau steps")


@dataclass
class JacobianResult:
    jacobian: np.ndarray
    singular_values: tuple
    rank: int
    step: float


def jacobian_rank(
    a: float,
    tau: float,
    r: float,
    h: float = 1e-4,
    rank_floor: float = 1e3 * TOL_MONO,
    steps: int = DEFAULT_STEP_BUDGET,
    rtol: float = DEFAULT_RTOL,
) -> JacobianResult:
    """Finite-difference Jacobian of (a, tau) -> (x, y) on the slice chi0 = pi/(4 tau).

    Rank 2 is declared when the smaller singular value exceeds rank_floor.
    The excluded center a0 = -pi/(4 tau) must be at distance >= 0.05.
    """
    if abs(a - (-math.pi / (4.0 * tau))) < 0.05:
        raise SlicePreconditionError(
            "a is within 0.05 of the excluded point -pi/(4 tau)"
        )

    def xy(a_val, tau_val):
        chi0 = math.pi / (4.0 * tau_val)
        res = monodromies(ConnectionParams(a_val, chi0, r, tau_val), steps, rtol)
        return np.array([complex(res.x).real, complex(res.y).real])

    col_a = (xy(a + h, tau) - xy(a - h, tau)) / (2.0 * h)
    col_tau = (xy(a, tau + h) - xy(a, tau - h)) / (2.0 * h)
    jac = np.column_stack([col_a, col_tau])
    svals = np.linalg.svd(jac, compute_uv=False)
    rank = int(np.sum(svals > rank_floor))
    return JacobianResult(jac, (float(svals[0]), float(svals[1])), rank, h)
