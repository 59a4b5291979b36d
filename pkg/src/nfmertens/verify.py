"""Run every stated inequality against a field over an x-grid.

Each inequality becomes one named check per grid point, recording the
measured quantity, the bound, and a slack. Slack is logarithmic because the
explicit bounds are astronomically loose (the envelope constant alone is
around e^70 for a quadratic field) and raw differences carry no information:

  - ratio checks (quantity >= 0, bound > 0): log_slack = log(bound/quantity),
    +inf when the quantity is exactly zero;
  - interval checks (values may be negative): log_slack = log1p of the linear
    margin to the nearer endpoint, so positive slack always means a pass.

A report lists failures first. Checks that need an exact residue are skipped
when the residue is only estimated, and the degree-dependent bound constants
exist only for degree >= 2, so a degree-1 field exercises the
field-independent checks plus the third-quantity error bound.
"""

from __future__ import annotations

import math
from math import fsum

import numpy as np

from .bounds import (
    BoundsReport,
    CheckResult,
    a_constant_inequality,
    lambda_K,
    log_sum_exp,
    louboutin_upper,
    multipart_case,
    stark_lower,
    sunley_constants,
    upsilon_K,
    xi_K,
    zimmert_lower,
)
from .errors import UnknownStructureFlags
from .field import PROVENANCE_EXACT, FieldDescriptor, Residue
from .idealcount import _dense_row, legendre_chebyshev_rhs
from .mertens import (
    EULER_GAMMA,
    mertens_constant,
    mertens_table,
    prime_power_sum,
    prime_power_sum_bound,
    theta_Q_bound_constant,
)
from .splitting import rational_primes

PAINFUL_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0, 1.2, 1.5, 2.0, 3.0)
PAINFUL_XS = (100.0, 1000.0, 10000.0, 100000.0)
LEGENDRE_LIMIT = 2000.0
LEGENDRE_TOLERANCE = 1e-9


def _ratio_check(name: str, x, quantity: float, bound: float) -> CheckResult:
    if quantity == 0:
        slack = math.inf
    elif quantity > 0 and bound > 0:
        slack = (math.log(bound) if bound != math.inf else math.inf) \
            - math.log(quantity)
    else:
        slack = bound - quantity
    return CheckResult(name=name, x=x, quantity=quantity, bound=bound,
                       log_slack=slack, passed=quantity <= bound)


def _log_ratio_check(name: str, x, log_quantity: float,
                     log_bound: float) -> CheckResult:
    quantity = math.exp(log_quantity) if log_quantity < 700 else math.inf
    bound = math.exp(log_bound) if log_bound < 700 else math.inf
    return CheckResult(name=name, x=x, quantity=quantity, bound=bound,
                       log_slack=log_bound - log_quantity,
                       passed=log_quantity <= log_bound)


def _interval_check(name: str, x, quantity: float, lo: float,
                    hi: float) -> CheckResult:
    margin = min(quantity - lo, hi - quantity)
    slack = math.log1p(margin) if margin > 0 else -math.inf
    return CheckResult(name=name, x=x, quantity=quantity, bound=hi,
                       log_slack=slack, passed=lo <= quantity <= hi)


def _theta_values(grid) -> list[float]:
    primes = rational_primes(grid[-1])
    logs = np.log(primes.astype(np.float64))
    out = []
    seg_sums = []
    start = 0
    for x in grid:
        cut = int(np.searchsorted(primes, math.floor(x), side="right"))
        seg_sums.append(fsum(logs[start:cut].tolist()))
        start = cut
        out.append(fsum(seg_sums))
    return out


def _summatory_values(field: FieldDescriptor, grid) -> list[int]:
    row = _dense_row(field, math.floor(grid[-1]))
    if isinstance(row, list):
        csum = np.cumsum(np.array(row, dtype=object))
    else:
        csum = np.cumsum(row)
    return [int(csum[math.floor(x)]) for x in grid]


def _t_values(field: FieldDescriptor, grid) -> list[float]:
    row = _dense_row(field, math.floor(grid[-1]))
    arr = np.asarray(row, dtype=np.float64)
    out = []
    seg_sums = []
    start = 2
    for x in grid:
        cut = math.floor(x) + 1
        if cut > start:
            counts = arr[start:cut]
            logs = np.log(np.arange(start, cut, dtype=np.float64))
            seg_sums.append(fsum((counts * logs).tolist()))
            start = cut
        out.append(fsum(seg_sums))
    return out


def _log_abs(v: float) -> float:
    return math.log(abs(v)) if v != 0 else -math.inf


def verify_all(field: FieldDescriptor, grid, kappa: Residue, *,
               theta_variant: str = "classic",
               truncation_x: float = 1e6) -> BoundsReport:
    """Evaluate all constants for the field and run every check on the grid."""
    grid = [float(x) for x in grid]
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 2:
        raise ValueError("grid must be nonempty, ascending, with min >= 2")
    n = field.degree
    absD = field.abs_discriminant
    exact = kappa is not None and kappa.provenance == PROVENANCE_EXACT

    lam = lambda_K(n, absD) if n >= 2 else None
    ups = upsilon_K(n, absD, kappa) if n >= 2 and kappa is not None else None
    loub = louboutin_upper(n, absD) if n >= 2 else None
    zimm = zimmert_lower(absD) if n >= 2 else None
    try:
        stark = stark_lower(field) if n >= 2 else None
    except UnknownStructureFlags:
        stark = None

    checks: list[CheckResult] = []

    # field-independent constant checks
    for deg in range(1, 21):
        checks.append(a_constant_inequality(deg))
    mismatches = 0
    for j in range(1, 8):
        for deg in range(2, 15):
            case, _ = multipart_case(deg, j)
            num, den = j * (deg - 1), deg + 1  # alpha vs 1, exactly
            expected = "linear" if num < den else "log" if num == den else "decay"
            if case != expected:
                mismatches += 1
    checks.append(CheckResult(name="norm_power_case_table", x=None,
                              quantity=float(mismatches), bound=1.0,
                              log_slack=math.inf if mismatches == 0 else -math.inf,
                              passed=mismatches == 0))
    for alpha in PAINFUL_ALPHAS:
        for x in PAINFUL_XS:
            checks.append(_ratio_check(
                f"prime_power_sum_alpha_{alpha:g}", x,
                prime_power_sum(x, alpha), prime_power_sum_bound(x, alpha)))

    # theta bound on the grid
    theta_c = theta_Q_bound_constant(theta_variant)
    for x, theta in zip(grid, _theta_values(grid)):
        checks.append(_ratio_check(f"chebyshev_theta_{theta_variant}", x,
                                   theta, theta_c * x))

    # residue bound ordering
    if n >= 2 and exact:
        checks.append(_ratio_check("residue_lower_zimmert", None,
                                   zimm, kappa.value))
        checks.append(_ratio_check("residue_upper_louboutin", None,
                                   kappa.value, loub))
        if stark is not None:
            checks.append(_ratio_check("residue_lower_stark", None,
                                       stark.value, kappa.value))

    mconst = None
    if kappa is not None and kappa.value > 0:
        mconst = mertens_constant(field, truncation_x, kappa)
        if exact:
            lo = EULER_GAMMA + math.log(kappa.value) - n
            hi = EULER_GAMMA + math.log(kappa.value)
            checks.append(_interval_check(
                "mertens_constant_interval", None, mconst.M_K,
                lo + mconst.tail_halfwidth, hi - mconst.tail_halfwidth))

    if mconst is not None:
        rows = mertens_table(field, grid, mconst, kappa)
        isums = _summatory_values(field, grid)
        tvals = _t_values(field, grid)
        for row, isum, tval in zip(rows, isums, tvals):
            x = row.x
            if ups is not None:
                checks.append(_log_ratio_check(
                    "first_mertens_error", x, _log_abs(row.A_K),
                    ups.natural_log))
                checks.append(_log_ratio_check(
                    "second_mertens_error", x, _log_abs(row.B_K),
                    ups.natural_log + math.log(2) - math.log(math.log(x))))
            if exact:
                c_bound = row.E_K_bound * math.exp(row.E_K_bound)
                checks.append(_ratio_check("third_mertens_error", x,
                                           abs(row.C_K), c_bound))
                if x <= LEGENDRE_LIMIT:
                    rhs = legendre_chebyshev_rhs(field, x)
                    rel = abs(tval - rhs) / max(abs(tval), 1.0)
                    checks.append(_ratio_check("legendre_chebyshev_identity",
                                               x, rel, LEGENDRE_TOLERANCE))
            if lam is not None and exact:
                checks.append(_log_ratio_check(
                    "ideal_count_envelope", x,
                    _log_abs(isum - kappa.value * x),
                    lam.natural_log + (1 - 2 / (n + 1)) * math.log(x)))
                # |T(x) - kappa x log x| <= ((n+1)^2/(2(n-1)) Lambda + kappa) x
                weber_log = log_sum_exp((
                    lam.natural_log + math.log((n + 1) ** 2 / (2 * (n - 1))),
                    math.log(kappa.value))) + math.log(x)
                checks.append(_log_ratio_check(
                    "ideal_log_sum_first_bound", x,
                    _log_abs(tval - kappa.value * x * math.log(x)), weber_log))
                # |T(x) - kappa x S1(x)| <= 0.55 Lambda n(n+1) x + Xi(x)
                second_log = log_sum_exp((
                    lam.natural_log + math.log(0.55 * n * (n + 1) * x),
                    xi_K(n, absD, kappa, x).natural_log))
                checks.append(_log_ratio_check(
                    "ideal_log_sum_second_bound", x,
                    _log_abs(tval - kappa.value * x * row.sum_logN_over_N),
                    second_log))

    a1, a3, a7 = sunley_constants(n)
    ordered = tuple(sorted(checks, key=lambda c: c.passed))
    return BoundsReport(lambda_K=lam, upsilon_K=ups, louboutin_upper=loub,
                        zimmert_lower=zimm, stark_lower=stark,
                        a1=a1, a3=a3, a7=a7, checks=ordered)
