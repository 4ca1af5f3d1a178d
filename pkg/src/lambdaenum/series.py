"""Exact coefficient tables for the counting series, plus real analytics.

All counting series are computed with exact integer arithmetic (Python
ints, rationals where intermediate values are fractional).  The analytics
(dominant singularity, growth constants, densities) are double precision
with explicit tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


class DivisibilityViolation(ArithmeticError):
    """The P-recursive step did not divide exactly; signals a bug."""


class NonIntegerResult(ArithmeticError):
    """A closed-form sum failed to collapse to an integer; signals a bug."""


class IndexPatternUnsupported(ValueError):
    """The subterm series does not model containment of pure index patterns."""


class NoRootBracketed(ArithmeticError):
    """A bisection bracket had no sign change; signals a bug."""


@dataclass(frozen=True)
class SeriesTable:
    family: str
    coeffs: tuple[int, ...]

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)


def _conv(c: list[int], n: int) -> int:
    """Coefficient of z^n in the square of the series with coefficients c."""
    return sum(c[i] * c[n - i] for i in range(n + 1))


def linf_coeffs_holonomic(N: int) -> SeriesTable:
    """Plain-term counts via the P-recurrence derived from the holonomic ODE."""
    base = [0, 1, 2, 4]
    c = base[: N + 1]
    for n in range(4, N + 1):
        num = (
            (4 * n - 1) * c[n - 1]
            - (2 * n - 1) * c[n - 2]
            - c[n - 3]
            - (n - 4) * c[n - 4]
        )
        q, r = divmod(num, n + 1)
        if r:
            raise DivisibilityViolation(f"step {n}: {num} not divisible by {n + 1}")
        c.append(q)
    return SeriesTable("linf", tuple(c))


def linf_coeffs_functional(N: int) -> SeriesTable:
    """Plain-term counts read directly off L = zL^2 + zL + z/(1-z)."""
    c = [0] * (N + 1)
    for n in range(1, N + 1):
        # [z^n] of each right-hand term; the convolution only touches
        # lower-order coefficients because c[0] = 0.
        c[n] = _conv(c, n - 1) + c[n - 1] + 1
    return SeriesTable("linf", tuple(c))


def linf_closed_form(n: int) -> int:
    """Alternating binomial sum for the plain-term count at size ``n``."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    total = Fraction(0)
    for k in range((n - 1) // 2 + 1):
        term = (
            Fraction((-1) ** k, n - k)
            * math.comb(n - k, k)
            * math.comb(2 * n - 3 * k, n - 2 * k - 1)
        )
        total += term
    if total.denominator != 1:
        raise NonIntegerResult(f"sum at n={n} is {total}")
    return total.numerator


def lm_coeffs(m: int, N: int) -> SeriesTable:
    """Counts of terms whose free indices lie below ``m``.

    Uses L_m = z L_m^2 + z L_{m+1} + (z + ... + z^m), cutting the chain at
    L_N = L_infinity (a size-n term has fewer than n free indices).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    upper = linf_coeffs_holonomic(N).coeffs
    if m >= N:
        return SeriesTable(f"l{m}", upper)
    table = list(upper)
    for mm in range(N - 1, m - 1, -1):
        c = [0] * (N + 1)
        for n in range(1, N + 1):
            c[n] = _conv(c, n - 1) + table[n - 1] + (1 if n <= mm else 0)
        table = c
    return SeriesTable(f"l{m}", tuple(table))


def a1_coeffs(N: int) -> SeriesTable:
    """Counts under the alternate size (zero weighs 0, application 2)."""
    linf = linf_coeffs_holonomic(N + 1).coeffs
    return SeriesTable("a1", tuple(linf[n + 1] for n in range(N + 1)))


@dataclass(frozen=True)
class NormalFormSeries:
    indices: SeriesTable
    neutral: SeriesTable
    normal: SeriesTable


def nf_coeffs(N: int) -> NormalFormSeries:
    """Series for de Bruijn indices, neutral terms (Motzkin) and normal forms."""
    d = [0] + [1] * N
    m = [0] * (N + 1)
    n_ = [0] * (N + 1)
    for n in range(1, N + 1):
        m[n] = sum(m[i] * n_[n - 1 - i] for i in range(1, n - 1)) + d[n]
        n_[n] = m[n] + n_[n - 1]
    return NormalFormSeries(
        indices=SeriesTable("d", tuple(d)),
        neutral=SeriesTable("m", tuple(m)),
        normal=SeriesTable("n", tuple(n_)),
    )


@dataclass(frozen=True)
class HeadNormalFormSeries:
    neutral_hnf: SeriesTable
    hnf: SeriesTable


def hnf_coeffs(N: int) -> HeadNormalFormSeries:
    """Series for neutral head normal forms (K = z + zL) and hnf (H = K/(1-z))."""
    linf = linf_coeffs_holonomic(max(N - 1, 0)).coeffs
    k = [0] * (N + 1)
    for n in range(1, N + 1):
        k[n] = (1 if n == 1 else 0) + linf[n - 1]
    h = [0] * (N + 1)
    for n in range(1, N + 1):
        h[n] = h[n - 1] + k[n]
    return HeadNormalFormSeries(
        neutral_hnf=SeriesTable("k", tuple(k)),
        hnf=SeriesTable("h", tuple(h)),
    )


@dataclass(frozen=True)
class SubtermSeries:
    containing: SeriesTable
    avoiding: SeriesTable


def subterm_series(p: int, N: int, *, index_pattern: bool = False) -> SubtermSeries:
    """Counts of terms containing / avoiding a fixed pattern of size ``p``.

    Valid for any non-index pattern; the counts depend only on the pattern
    size.  Containment of one index inside a longer one is not modeled, so
    pure index patterns are refused.
    """
    if index_pattern:
        raise IndexPatternUnsupported(
            "containment of index patterns inside longer indices is not modeled"
        )
    if p < 2:
        raise ValueError("pattern size must be at least 2")
    if N < p:
        raise ValueError("truncation order must reach the pattern size")
    linf = linf_coeffs_holonomic(N).coeffs
    t = [0] * (N + 1)
    for n in range(p, N + 1):
        # T = z^p + zT + 2zTL - zT^2, read at z^n.
        cross = sum(t[i] * linf[n - 1 - i] for i in range(1, n - 1))
        square = sum(t[i] * t[n - 1 - i] for i in range(1, n - 1))
        t[n] = (1 if n == p else 0) + t[n - 1] + 2 * cross - square
    avoid = tuple(linf[n] - t[n] for n in range(N + 1))
    return SubtermSeries(
        containing=SeriesTable(f"t(p={p})", tuple(t)),
        avoiding=SeriesTable(f"avoid(p={p})", avoid),
    )


def minf_coeffs(N: int) -> SeriesTable:
    """Counts under the size model where only zero weighs 0."""
    c = [0] * (N + 1)
    for n in range(N + 1):
        # M = zM^2 + zM + 1/(1-z); c[0] = 1 seeds the convolution.
        c[n] = (_conv(c, n - 1) if n else 0) + (c[n - 1] if n else 0) + 1
    return SeriesTable("minf", tuple(c))


# ---------------------------------------------------------------------------
# analytics


def _bisect(f, lo: float, hi: float, tol: float) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoRootBracketed(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid == lo or mid == hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def _radicand(z: float) -> float:
    # numerator of the discriminant of the quadratic for L-infinity
    return 1 - 3 * z - z * z - z ** 3


@dataclass(frozen=True)
class AnalyticsReport:
    rho_linf: float
    inv_rho: float
    growth_constant: float      # C in [z^n]L ~ rho^-n C n^-3/2
    growth_constant_hnf: float  # C_H for head normal forms
    density_neutral_hnf: float  # rho
    density_hnf: float          # rho/(1-rho)
    rho_subterm: dict[int, float] = field(default_factory=dict)
    tolerances: dict[str, float] = field(default_factory=dict)


def analytics(tol: float = 1e-14, pattern_sizes: tuple[int, ...] = (9,)) -> AnalyticsReport:
    """Singularities, growth constants and densities, by bracketed bisection."""
    if tol < 1e-15:
        raise ValueError("tolerance below double precision")
    rho = _bisect(_radicand, 0.0, 1.0 / 3.0, 1e-16)
    q = 3 * rho * rho + 2 * rho + 3  # derivative of the radicand, negated
    c_tilde = -math.sqrt(rho * q / (1 - rho)) / (2 * rho)
    gamma_minus_half = -2 * math.sqrt(math.pi)
    c = c_tilde / gamma_minus_half
    c_h = c * rho / (1 - rho)
    rho_t = {}
    for p in pattern_sizes:
        if p < 2:
            raise IndexPatternUnsupported("pattern size below 2")
        # (1-z)-cleared discriminant of the subterm quadratic
        f = lambda z, p=p: _radicand(z) + 4 * z ** (p + 1) * (1 - z)
        rho_t[p] = _bisect(f, rho, 1.0 / 3.0, 1e-16)
    return AnalyticsReport(
        rho_linf=rho,
        inv_rho=1 / rho,
        growth_constant=c,
        growth_constant_hnf=c_h,
        density_neutral_hnf=rho,
        density_hnf=rho / (1 - rho),
        rho_subterm=rho_t,
        tolerances={
            "rho_linf": 1e-12,
            "inv_rho": 1e-4,
            "growth_constant": 1e-4,
            "growth_constant_hnf": 1e-9,
            "density_hnf": 1e-10,
            "rho_subterm": 1e-10,
        },
    )


def asymptotic_estimate(n: int, report: AnalyticsReport | None = None) -> float:
    """First-order approximation rho^-n * C / n^(3/2), computed in log space."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    rep = report if report is not None else analytics()
    log_est = math.log(rep.growth_constant) - n * math.log(rep.rho_linf) - 1.5 * math.log(n)
    return math.exp(log_est) if log_est < 700 else math.inf


def estimate_ratio(n: int, report: AnalyticsReport | None = None) -> float:
    """exact[n] / estimate[n], in log space so large n stays finite."""
    rep = report if report is not None else analytics()
    exact = linf_coeffs_holonomic(n).coeffs[n]
    log_exact = math.log(exact)
    log_est = math.log(rep.growth_constant) - n * math.log(rep.rho_linf) - 1.5 * math.log(n)
    return math.exp(log_exact - log_est)
