"""The three Mertens quantities over prime ideals, with explicit error terms.

At a cutoff x the three quantities are the log-weighted sum log(N)/N, the
reciprocal sum 1/N, and the product of (1 - 1/N), each over prime ideals of
norm N <= x. Their error terms A, B, C are defined against log x,
log log x + M, and the classical product asymptotic e^(-gamma)/(kappa log x).

The field Mertens constant M is computed from its absolutely convergent
series gamma + log kappa + sum over all prime ideals of [1/N + log(1 - 1/N)],
truncated at a cutoff X with the rigorous tail bound degree/(ceil(X) - 1).
Fitting the reciprocal sum would give no such tail control, so the series
route is the only one used.

All accumulations run over ideals in ascending norm with exact (Shewchuk)
summation, so 15-digit report values are reproducible across platforms.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from math import fsum

from .errors import EmptyProduct, InvariantViolation, MissingResidue
from .field import PROVENANCE_EXACT, FieldDescriptor, Residue
from .splitting import _records_up_to, rational_primes

# Euler-Mascheroni constant, 40 decimal digits
EULER_GAMMA_STR = "0.5772156649015328606065120900824024310422"
EULER_GAMMA = float(EULER_GAMMA_STR)

# Chebyshev theta bound constants: the classical explicit one and the
# sharpened record value (selectable, never mixed into other constants)
THETA_CLASSIC = 1.01624
THETA_BROADBENT = 1 + 1.93378e-8


@dataclass(frozen=True)
class MertensRow:
    """The three Mertens quantities and error terms at one cutoff."""

    x: float
    sum_logN_over_N: float
    A_K: float
    sum_recip: float
    B_K: float
    product: float
    C_K: float
    E_K_bound: float


@dataclass(frozen=True)
class MertensConstant:
    M_K: float
    tail_halfwidth: float
    truncation_x: float
    approximate: bool = False


def geometric_grid(k_min: int = 4, k_max: int = 28) -> tuple[float, ...]:
    """Default grid x = 10^(k/4)."""
    return tuple(10 ** (k / 4) for k in range(k_min, k_max + 1))


def mertens_first(field: FieldDescriptor, x: float) -> tuple[float, float]:
    """(sum of log(N)/N over norms N <= x, that sum minus log x)."""
    if x < 2:
        raise ValueError("mertens_first requires x >= 2")
    total = fsum(math.log(norm) / norm for norm, _, _ in _records_up_to(field, x))
    return total, total - math.log(x)


def mertens_constant(field: FieldDescriptor, truncation_x: float,
                     kappa: Residue) -> MertensConstant:
    """Mertens constant from the truncated series, with a rigorous tail."""
    if truncation_x < 10:
        raise ValueError("mertens_constant requires truncation_x >= 10")
    if kappa is None or kappa.value <= 0:
        raise MissingResidue("mertens_constant requires a positive residue")
    series = fsum(1.0 / norm + math.log1p(-1.0 / norm)
                  for norm, _, _ in _records_up_to(field, truncation_x))
    tail = field.degree / (math.ceil(truncation_x) - 1)
    return MertensConstant(
        M_K=EULER_GAMMA + math.log(kappa.value) + series,
        tail_halfwidth=tail,
        truncation_x=truncation_x,
        approximate=kappa.provenance != PROVENANCE_EXACT,
    )


def mertens_second(field: FieldDescriptor, x: float,
                   mconst: MertensConstant) -> tuple[float, float]:
    """(sum of 1/N over norms N <= x, that sum minus log log x minus M).

    The returned error term inherits the truncation half-width of M as a
    systematic uncertainty; reports carry that half-width explicitly.
    """
    if x < 2:
        raise ValueError("mertens_second requires x >= 2")
    total = fsum(1.0 / norm for norm, _, _ in _records_up_to(field, x))
    return total, total - math.log(math.log(x)) - mconst.M_K


def mertens_third(field: FieldDescriptor, x: float, mconst: MertensConstant,
                  kappa: Residue) -> tuple[float, float, float]:
    """(product of (1 - 1/N), its relative error C, the bound on |C|).

    The product is exp of the compensated log sum. C satisfies
    product = e^(-gamma) (1 + C) / (kappa log x); |C| is checked against
    E e^E with E = degree/(x-1) + |B|, substituting the computable bound
    for the unknown true error.
    """
    if x < 2:
        raise ValueError("mertens_third requires x >= 2")
    if kappa is None or kappa.value <= 0:
        raise MissingResidue("mertens_third requires a positive residue")
    records = _records_up_to(field, x)
    if not records:
        raise EmptyProduct(f"no prime ideal has norm <= {x}")
    log_product = fsum(math.log1p(-1.0 / norm) for norm, _, _ in records)
    product = math.exp(log_product)
    c_term = kappa.value * math.log(x) * math.exp(EULER_GAMMA) * product - 1.0
    _, b_term = mertens_second(field, x, mconst)
    e_bound = field.degree / (x - 1) + abs(b_term)
    if not mconst.approximate and kappa.provenance == PROVENANCE_EXACT:
        if abs(c_term) > e_bound * math.exp(e_bound):
            raise InvariantViolation(
                f"|C({x})| = {abs(c_term)} exceeds its error bound "
                f"{e_bound * math.exp(e_bound)}")
    return product, c_term, e_bound


def mertens_table(field: FieldDescriptor, grid, mconst: MertensConstant,
                  kappa: Residue) -> tuple[MertensRow, ...]:
    """All grid rows from a single ascending pass over the ideal stream."""
    grid = [float(x) for x in grid]
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 2:
        raise ValueError("grid must be ascending with min >= 2")
    if kappa is None or kappa.value <= 0:
        raise MissingResidue("mertens_table requires a positive residue")
    records = _records_up_to(field, grid[-1])
    norms = [norm for norm, _, _ in records]
    rows = []
    seg_lnn = []
    seg_rec = []
    seg_l1p = []
    start = 0
    e_gamma = math.exp(EULER_GAMMA)
    for x in grid:
        cut = bisect_right(norms, math.floor(x), lo=start)
        chunk = norms[start:cut]
        seg_lnn.append(fsum(math.log(n) / n for n in chunk))
        seg_rec.append(fsum(1.0 / n for n in chunk))
        seg_l1p.append(fsum(math.log1p(-1.0 / n) for n in chunk))
        start = cut
        sum_lnn = fsum(seg_lnn)
        sum_rec = fsum(seg_rec)
        sum_l1p = fsum(seg_l1p)
        if cut == 0:
            raise EmptyProduct(f"no prime ideal has norm <= {x}")
        product = math.exp(sum_l1p)
        b_term = sum_rec - math.log(math.log(x)) - mconst.M_K
        c_term = kappa.value * math.log(x) * e_gamma * product - 1.0
        rows.append(MertensRow(
            x=x,
            sum_logN_over_N=sum_lnn,
            A_K=sum_lnn - math.log(x),
            sum_recip=sum_rec,
            B_K=b_term,
            product=product,
            C_K=c_term,
            E_K_bound=field.degree / (x - 1) + abs(b_term),
        ))
    return tuple(rows)


def prime_power_sum(x: float, alpha: float) -> float:
    """Brute-force sum of log(p)/p^alpha over rational primes p <= x."""
    if x < 2 or alpha < 0:
        raise ValueError("prime_power_sum requires x >= 2 and alpha >= 0")
    primes = rational_primes(x)
    if alpha == 0:
        return fsum(math.log(p) for p in primes.tolist())
    return fsum(math.log(p) / p ** alpha for p in primes.tolist())


def prime_power_sum_bound(x: float, alpha: float,
                          theta_constant: float = 1.1) -> float:
    """Case-matched explicit bound for prime_power_sum.

    The 1.1 prefactor is the rounded-up Chebyshev theta constant used in the
    printed bound; it is kept verbatim regardless of the theta toggle.
    """
    if alpha == 1:
        return math.log(x)
    if alpha < 1:
        return theta_constant / (1 - alpha) * x ** (1 - alpha)
    return theta_constant * alpha / ((alpha - 1) * 2 ** (alpha - 1))


def theta_Q_bound_constant(variant: str) -> float:
    """Chebyshev theta bound constant by config name."""
    if variant == "classic":
        return THETA_CLASSIC
    if variant == "broadbent":
        return THETA_BROADBENT
    raise ValueError(f"unknown theta constant variant {variant!r}")
