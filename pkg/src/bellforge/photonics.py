"""Single-photon interference Bell tests.

Covers the interferometric scheme where one observer port receives a
single photon split against a local-oscillator coherent beam: quantum and
classical visibilities, exact and approximate detection probabilities
under channel loss (transparency eta) and single-photon decoherence (l),
Clauser-Horne / CHSH expressions and their critical parameter curves, the
compensated-intensity variant, detection-loophole thresholds for
two-photon experiments, and the beam-splitter coincidence experiment with
unobserved reflected ports.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from bellforge.errors import DomainError

SQRT2 = np.sqrt(2.0)
# Angle 4-tuples are (phi_c, phi_c', phi_d, phi_d').  The CH combinations
# peak where the signed cosine sum reaches -2*sqrt(2); under the standard
# sign convention for the interference term that is the pi-shifted partner
# of the familiar (0, pi/2, pi/4, -pi/4) choice.
CH_PP_ANGLES = (0.0, np.pi / 2, 5 * np.pi / 4, 3 * np.pi / 4)
CH_PM_ANGLES = (0.0, np.pi / 2, 3 * np.pi / 4, np.pi / 4)
CHSH_ANGLES = (0.0, np.pi / 2, np.pi / 4, -np.pi / 4)


@dataclass
class BJSSParams:
    """Parameters of the lossy single-photon/local-oscillator Bell test.

    ``alpha_sq`` is half the mean photon number of the coherent input (the
    per-arm intensity behind the polarizing splitter), ``eta`` the channel
    transparency, ``l`` the single-photon coherence surviving decoherence.
    ``n_max`` truncates the photon-number sums; it is raised automatically
    until the Poisson tail mass drops below 1e-12 (capped at 4000 terms).
    """

    alpha_sq: float
    eta: float
    l: float
    n_max: int = 0

    def __post_init__(self):
        if self.alpha_sq < 0:
            raise DomainError("alpha_sq must be nonnegative")
        if not 0 <= self.eta <= 1:
            raise DomainError("eta must lie in [0, 1]")
        if not 0 <= self.l <= 1:
            raise DomainError("l must lie in [0, 1]")
        lam = self.alpha_sq * max(self.eta, 1.0)
        n = max(self.n_max, 16)
        while n < 4000 and _poisson_tail(lam, n) > 1e-12:
            n = min(4000, int(n * 1.5) + 8)
        if _poisson_tail(lam, n) > 1e-12 and n >= 4000:
            raise DomainError("Poisson tail does not fit the 4000-term cap")
        self.n_max = n


def _poisson_tail(lam: float, n: int) -> float:
    if lam == 0:
        return 0.0
    k = np.arange(n + 1)
    logp = -lam + k * np.log(lam) - gammaln(k + 1)
    return float(max(0.0, 1.0 - np.exp(logp).sum()))


def _poisson_pmf(lam: float, kmax: int) -> np.ndarray:
    k = np.arange(kmax + 1)
    if lam == 0:
        out = np.zeros(kmax + 1)
        out[0] = 1.0
        return out
    return np.exp(-lam + k * np.log(lam) - gammaln(k + 1))


def twc_visibility(alpha: float, beta: float | None = None) -> float:
    """Interference visibility of intensity coincidences.

    Single-photon auxiliary input: 1/(1 + alpha^2).  Coherent auxiliary
    input of amplitude beta: r^2/(r^4 + r^2 + 1/4) with r = alpha/beta,
    which never exceeds 1/2.
    """
    if alpha <= 0 or (beta is not None and beta <= 0):
        raise DomainError("amplitudes must be positive")
    if beta is None:
        return 1.0 / (1.0 + alpha**2)
    r2 = (alpha / beta) ** 2
    return r2 / (r2**2 + r2 + 0.25)


def twc_correlation(alpha: float, theta1: float, theta2: float) -> float:
    """Normalized intensity-difference correlation with a single-photon
    auxiliary input: sin(theta1 - theta2)/(1 + alpha^2)."""
    return float(np.sin(theta1 - theta2) / (1.0 + alpha**2))


def twc_chsh_margin(alpha: float) -> float:
    """Optimized CHSH value minus the classical bound 2 for the
    single-photon correlation; the sine form peaks at 2*sqrt(2)/(1+a^2)."""
    best = 0.0
    for t1, t1p, t2, t2p in _chsh_angle_grid():
        val = abs(
            twc_correlation(alpha, t1, t2)
            + twc_correlation(alpha, t1, t2p)
            + twc_correlation(alpha, t1p, t2)
            - twc_correlation(alpha, t1p, t2p)
        )
        best = max(best, val)
    return best - 2.0


def _chsh_angle_grid(n: int = 24):
    """(theta1, theta1', theta2, theta2') candidates: the sine-correlation
    optimum plus a scan over the second observer's pair."""
    yield (0.0, np.pi / 2, -np.pi / 4, -3 * np.pi / 4)
    grid = np.linspace(-np.pi, np.pi, n, endpoint=False)
    for t2 in grid:
        for t2p in grid:
            yield (0.0, np.pi / 2, t2, t2p)


def twc_chsh_threshold() -> float:
    """Largest coherent amplitude alpha with a CHSH violation,
    sqrt(sqrt(2)-1); verified against the angle-optimized margin."""
    return float(np.sqrt(SQRT2 - 1.0))


def _side_sums(p: BJSSParams):
    """Photon-number sums entering the exact detection probabilities.

    Returns (a_plus, b_plus, a_minus, b_minus, c) where a/b are the
    coherent-only and photon-present overlaps of the +- detection states
    and c the interference cross sum; the coherent amplitude per arm is
    alpha*sqrt(eta) after loss.
    """
    return _side_sums_raw(p.alpha_sq, p.eta, p.n_max)


def _side_sums_raw(alpha_sq: float, eta: float, n_max: int, beam_scale: float = 1.0):
    lam = alpha_sq * eta * beam_scale
    n = np.arange(1, n_max + 1)
    pois_n = _poisson_pmf(lam, n_max)[1:]
    pois_nm1 = _poisson_pmf(lam, n_max)[:-1]
    w = alpha_sq / (alpha_sq + n)
    a_plus = float(np.sum((n / (alpha_sq + n)) * pois_n))
    b_plus = float(np.sum(w * pois_nm1))
    a_minus = float(np.sum(w * pois_n))
    b_minus = float(np.sum((n / (alpha_sq + n)) * pois_nm1))
    c = float(np.sqrt(eta * beam_scale) * np.sum(w * pois_nm1))
    return a_plus, b_plus, a_minus, b_minus, c


def bjss_probs(
    p: BJSSParams,
    phi_c: float,
    phi_d: float,
    method: str = "exact",
    include_vacuum_mm: bool = True,
) -> dict:
    """Detection probabilities of the four +- outcome pairs and the local
    + events.

    ``exact`` sums the truncated photon-number series against the three
    state components (single photon lost / present-diagonal /
    present-coherence); ``approx`` returns the large-intensity closed
    forms.  ``include_vacuum_mm=False`` drops the photon-lost contribution
    to the doubly-negative coincidence, which is how the critical-curve
    derivations count that event.
    """
    eta, l = p.eta, p.l
    dphi = phi_c - phi_d
    if method == "approx":
        k = eta / (1.0 + eta)
        p_plus = eta * (3.0 - eta) / (2.0 * (1.0 + eta))
        p_pp = k**2 * (2.0 - eta - l * np.cos(dphi))
        p_pm = eta * (3.0 - 2.0 * eta + eta**2 + 2.0 * l * eta * np.cos(dphi)) / (
            2.0 * (1.0 + eta) ** 2
        )
        vac = (1.0 - eta) / (1.0 + eta) ** 2 if include_vacuum_mm else 0.0
        p_mm = vac + (eta**2) * (1.0 - l * np.cos(dphi)) / (1.0 + eta) ** 2
    elif method == "exact":
        a_p, b_p, a_m, b_m, c = _side_sums(p)
        cos = np.cos(dphi)

        def joint(sc, sd):
            a1, b1 = (a_p, b_p) if sc > 0 else (a_m, b_m)
            a2, b2 = (a_p, b_p) if sd > 0 else (a_m, b_m)
            vac = (1.0 - eta) * a1 * a2
            if sc < 0 and sd < 0 and not include_vacuum_mm:
                vac = 0.0
            diag = 0.5 * eta * (b1 * a2 + a1 * b2)
            cross = -l * eta * sc * sd * c * c * cos
            return vac + diag + cross

        p_pp = joint(+1, +1)
        p_pm = joint(+1, -1)
        p_mm = joint(-1, -1)
        p_plus = (1.0 - 0.5 * eta) * a_p + 0.5 * eta * b_p
    else:
        raise DomainError(f"unknown method {method!r}")
    out = {
        "P_plus_c": float(p_plus),
        "P_plus_d": float(p_plus),
        "P_pp": float(p_pp),
        "P_pm": float(p_pm),
        "P_mp": float(p_pm),
        "P_mm": float(p_mm),
    }
    for key, v in out.items():
        if not -1e-9 <= v <= 1.0 + 1e-9:
            raise DomainError(f"probability {key}={v} outside [0, 1]")
    return out


def bjss_ch_value(
    p: BJSSParams,
    variant: str = "plus_only",
    angles=None,
    method: str = "approx",
) -> float:
    """Left-hand side of the chosen Clauser-Horne combination; a positive
    value means violation.

    ``plus_only`` uses the ++ coincidences in all four slots; ``plus_minus``
    mixes ++, +-, -+ and -- events, counting the -- coincidence without the
    photon-lost background (the convention under which its critical curve
    is derived).  ``angles`` defaults to the per-variant optimum.
    """
    if angles is None:
        angles = CH_PP_ANGLES if variant == "plus_only" else CH_PM_ANGLES
    pc, pcp, pd, pdp = angles

    def probs(a, b):
        return bjss_probs(p, a, b, method=method, include_vacuum_mm=False)

    if variant == "plus_only":
        lhs = (
            probs(pc, pd)["P_pp"]
            + probs(pcp, pd)["P_pp"]
            + probs(pc, pdp)["P_pp"]
            - probs(pcp, pdp)["P_pp"]
        )
    elif variant == "plus_minus":
        lhs = (
            probs(pc, pd)["P_pp"]
            + probs(pc, pdp)["P_pm"]
            + probs(pcp, pd)["P_mp"]
            - probs(pcp, pdp)["P_mm"]
        )
    else:
        raise DomainError(f"unknown variant {variant!r}")
    singles = bjss_probs(p, pc, pd, method=method)
    return float(lhs - singles["P_plus_c"] - singles["P_plus_d"])


def bjss_correlation(p: BJSSParams, phi_c: float, phi_d: float) -> float:
    """Outcome-product correlation function in the large-intensity
    approximation, -eta(3 - 5 eta + 2 eta^2 + 4 eta l cos)/(1+eta)^2."""
    eta, l = p.eta, p.l
    return float(
        -eta
        * (3 - 5 * eta + 2 * eta**2 + 4 * eta * l * np.cos(phi_c - phi_d))
        / (1 + eta) ** 2
    )


def bjss_chsh_value(p: BJSSParams, angles=CHSH_ANGLES) -> float:
    """CHSH combination of the approximate correlation function minus the
    classical bound 2; positive means violation."""
    pc, pcp, pd, pdp = angles
    val = abs(
        bjss_correlation(p, pc, pd)
        + bjss_correlation(p, pc, pdp)
        + bjss_correlation(p, pcp, pd)
        - bjss_correlation(p, pcp, pdp)
    )
    return float(val - 2.0)


def bjss_critical_curves(eta: float) -> dict:
    """Critical decoherence parameter of the three Bell expressions at
    channel transparency eta; values above 1 mean no violation is possible
    there."""
    if eta <= 0:
        raise DomainError("eta must be positive")
    l_pp = (3 - 2 * eta + eta**2) / (2 * SQRT2 * eta)
    l_chsh = -(2 * eta**3 - 6 * eta**2 + eta - 1) / (4 * SQRT2 * eta**2)
    l_pm = (3 - eta) / (2 * SQRT2)
    return {"l_ch_pp": float(l_pp), "l_chsh": float(l_chsh), "l_ch_pm": float(l_pm)}


def bjss_critical_eta(curve: str, l_value: float = 1.0, tol: float = 1e-10) -> float:
    """Smallest transparency at which the given curve drops to ``l_value``
    (bisection; the curves are monotone decreasing on (0, 1])."""
    key = {"pp": "l_ch_pp", "chsh": "l_chsh", "pm": "l_ch_pm"}[curve]

    def f(eta):
        return bjss_critical_curves(eta)[key] - l_value

    lo, hi = 1e-6, 1.0
    if f(hi) > 0:
        raise DomainError(f"curve {curve} never reaches {l_value}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bjss_compensated(p: BJSSParams) -> dict:
    """Compensated-intensity variant: the coherent input is boosted to
    2 alpha^2/eta so every local probability is 1/2 and the coincidences
    become (1 -+ l eta cos)/4; the critical product is l*eta = 1/sqrt(2).

    The critical product is also solved numerically from the CH combination
    built with the compensated probabilities.
    """
    if p.eta <= 0:
        raise DomainError("eta must be positive")

    def ch(le):
        # CH with P_+ = 1/2, P_pp = (1 - le cos)/4 at the optimal angles
        combo = 0.0
        for a, b, s in (
            (CH_PP_ANGLES[0], CH_PP_ANGLES[2], 1),
            (CH_PP_ANGLES[1], CH_PP_ANGLES[2], 1),
            (CH_PP_ANGLES[0], CH_PP_ANGLES[3], 1),
            (CH_PP_ANGLES[1], CH_PP_ANGLES[3], -1),
        ):
            combo += s * 0.25 * (1 - le * np.cos(a - b))
        return combo - 1.0

    lo, hi = 0.0, 1.0
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if ch(mid) < 0:
            lo = mid
        else:
            hi = mid
    le_crit = 0.5 * (lo + hi)
    l_crit = le_crit / p.eta
    return {
        "P_plus": 0.5,
        "critical_product": float(le_crit),
        "l_crit": float(l_crit),
        "possible": bool(l_crit <= 1.0),
    }


@dataclass(frozen=True)
class DetectionModel:
    """Two-photon experiment imperfections: detector efficiency, dark-count
    probability per gate and interference visibility."""

    eta: float = 1.0
    p_dark: float = 0.0
    visibility: float = 1.0

    def __post_init__(self):
        if not 0 <= self.eta <= 1:
            raise DomainError("eta must lie in [0, 1]")
        if not 0 <= self.p_dark < 1:
            raise DomainError("p_dark must lie in [0, 1)")
        if not 0 <= self.visibility <= 1:
            raise DomainError("visibility must lie in [0, 1]")


def garg_mermin(model: DetectionModel) -> dict:
    """Detection-loophole thresholds for the two-photon CHSH/CH test.

    eta_crit = 2/(sqrt(2) V + 1) is the efficiency above which violation is
    possible at visibility V; v_crit inverts the relation at the model's
    efficiency including dark counts.
    """
    v = model.visibility
    eta = model.eta
    eta_crit = 2.0 / (SQRT2 * v + 1.0)
    if eta > 0:
        pd = model.p_dark
        v_crit = (
            (1.0 - pd) * (2.0 - eta) * (pd * (2.0 - eta) + eta) / (SQRT2 * eta**2)
        )
    else:
        v_crit = np.inf
    return {"eta_crit": float(eta_crit), "v_crit": float(v_crit)}


def hessmo_probs(alpha: float, r: float, t: float, phase_diff: float, eta: float) -> dict:
    """Detection probabilities of the beam-splitter coincidence experiment
    with unobserved reflected ports (reflectivity r^2 for the single
    photon, transmittivity t^2).

    Visibility is scanned over the phase difference of the two local
    wave plates.
    """
    if abs(r**2 + t**2 - 1.0) > 1e-12:
        raise DomainError("r^2 + t^2 must equal 1")
    if not 0 <= eta <= 1:
        raise DomainError("eta must lie in [0, 1]")
    a2r2 = alpha**2 * r**2

    def p_c():
        return 0.5 * np.exp(-a2r2) * (1.0 + r**2 + a2r2 * t**2)

    def p_cd(dphi):
        return np.exp(-2 * a2r2) * (r**2 + r**2 * t**2 * (1.0 + np.cos(dphi)))

    def p_coinc(dphi):
        return 1.0 - 2.0 * p_c() + p_cd(dphi)

    def p_total(dphi):
        return eta * p_coinc(dphi) + (1.0 - eta) * (1.0 - np.exp(-a2r2)) ** 2

    grid = np.linspace(-np.pi, np.pi, 721)
    vals = np.clip([p_total(x) for x in grid], 0.0, None)
    denom = vals.max() + vals.min()
    vis = (vals.max() - vals.min()) / denom if denom > 0 else 0.0
    return {
        "P_c": float(p_c()),
        "P_cd": float(p_cd(phase_diff)),
        "P_coinc_total": float(p_total(phase_diff)),
        "visibility": float(vis),
        "nonclassical": bool(vis > 0.5),
    }


def bjss_reduced_state(eta: float, l: float) -> np.ndarray:
    """Two-mode single-photon density matrix after loss and decoherence in
    the basis {|00>, |01>, |10>, |11>}."""
    m = np.zeros((4, 4))
    m[0, 0] = 1.0 - eta
    m[1, 1] = m[2, 2] = 0.5 * eta
    m[1, 2] = m[2, 1] = -0.5 * eta * l
    return m


def bjss_ppt_min_eig(eta: float, l: float) -> float:
    """Closed-form smallest eigenvalue of the partially transposed reduced
    state, (1 - eta - sqrt((1-eta)^2 + l^2 eta^2))/2; negative whenever
    l * eta > 0."""
    return float(0.5 * (1.0 - eta - np.sqrt((1.0 - eta) ** 2 + l**2 * eta**2)))
