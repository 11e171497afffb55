"""Nonexistence advice for iterative roots of complex polynomials.

Exact rules (degree, primality, and the modular power criterion for pure
power maps) use integer arithmetic only.  The two structural rules match
coefficients numerically and report the tolerance they used.  Advice only
ever asserts nonexistence: an empty findings list claims nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fixedpoint import OrderExclusion

COEFF_REL_TOL = 1e-9
FIXED_POINT_CLUSTER_TOL = 1e-7


@dataclass(frozen=True)
class ComplexPolynomial:
    """Coefficients low degree first; the leading coefficient is nonzero."""

    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs or coeffs[-1] == 0:
            raise ValueError("polynomial must have a nonzero coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc


def primes_upto(n: int) -> list[int]:
    """All primes <= n by a plain sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            return False
    return True


def solar_criterion(d: int) -> bool:
    """True iff d^p and d differ modulo p^2 for every prime p <= d."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    return all(pow(d, p, p * p) != d % (p * p) for p in primes_upto(d))


def first_solar(count: int) -> list[int]:
    """The first ``count`` degrees (ascending, starting at 2) passing the criterion."""
    if count < 1:
        raise ValueError("count must be positive")
    found: list[int] = []
    d = 2
    while len(found) < count:
        if solar_criterion(d):
            found.append(d)
        d += 1
    return found


@dataclass(frozen=True)
class Finding:
    """One rule that fired; ``excluded`` is either an order window or an explicit set."""

    rule: str
    excluded: OrderExclusion | frozenset[int]
    citation: str
    tolerance: float | None = None

    def excludes(self, n: int) -> bool:
        if isinstance(self.excluded, OrderExclusion):
            return self.excluded.excludes(n)
        return n in self.excluded


@dataclass(frozen=True)
class PolyAdvice:
    polynomial: ComplexPolynomial
    order: int
    findings: tuple[Finding, ...]

    def excludes_order(self, n: int) -> bool:
        return any(f.excludes(n) for f in self.findings)


_ALL_ORDERS = OrderExclusion(1, None, "all-orders")


def _cluster_count(values: Sequence[complex], tol: float) -> int:
    """Count distinct values after greedy clustering at absolute tolerance."""
    reps: list[complex] = []
    for v in sorted(values, key=lambda z: (z.real, z.imag)):
        if not any(abs(v - r) <= tol for r in reps):
            reps.append(v)
    return len(reps)


def polynomial_roots(poly: ComplexPolynomial) -> list[complex]:
    """Roots via the companion matrix (numpy), high-degree polynomials included."""
    if poly.degree == 0:
        return []
    high_first = list(reversed(poly.coefficients))
    return [complex(r) for r in np.roots(high_first)]


def fixed_points(poly: ComplexPolynomial, tol: float = FIXED_POINT_CLUSTER_TOL) -> list[complex]:
    """Distinct solutions of f(z) = z, clustered at absolute tolerance."""
    coeffs = list(poly.coefficients)
    if len(coeffs) < 2:
        coeffs += [0j]
    coeffs[1] -= 1
    shifted = ComplexPolynomial(tuple(coeffs))
    roots = polynomial_roots(shifted)
    reps: list[complex] = []
    for v in sorted(roots, key=lambda z: (z.real, z.imag)):
        if not any(abs(v - r) <= tol for r in reps):
            reps.append(v)
    return reps


def non_isolated_fixed_points(poly: ComplexPolynomial,
                              tol: float = FIXED_POINT_CLUSTER_TOL) -> list[complex]:
    """Fixed points z* with some other solution of f(y) = z*."""
    out = []
    for z in fixed_points(poly, tol):
        coeffs = list(poly.coefficients)
        coeffs[0] -= z
        preimages = polynomial_roots(ComplexPolynomial(tuple(coeffs)))
        if any(abs(y - z) > tol for y in preimages):
            out.append(z)
    return out


def _coeffs_close(a: Sequence[complex], b: Sequence[complex], tol: float) -> bool:
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol * max(1.0, abs(x), abs(y)) for x, y in zip(a, b))


def _expand_shifted_monomial(alpha: complex, beta: complex, d: int) -> list[complex]:
    # alpha * (z - beta)^d + beta, low degree first
    base = np.array([-beta, 1.0], dtype=complex)
    expanded = np.array([1.0 + 0j])
    for _ in range(d):
        expanded = np.convolve(expanded, base)
    expanded = alpha * expanded
    expanded[0] += beta
    return [complex(c) for c in expanded]


def shifted_monomial_parameters(poly: ComplexPolynomial,
                                tol: float = COEFF_REL_TOL) -> tuple[complex, complex] | None:
    """Parameters (alpha, beta) with f(z) = alpha*(z-beta)^d + beta, if any."""
    d = poly.degree
    if d < 2:
        return None
    alpha = poly.coefficients[d]
    beta = -poly.coefficients[d - 1] / (d * alpha)
    candidate = _expand_shifted_monomial(alpha, beta, d)
    if _coeffs_close(candidate, list(poly.coefficients), tol):
        return alpha, beta
    return None


def conjugate_to_special_cubic(poly: ComplexPolynomial,
                               tol: float = COEFF_REL_TOL) -> bool:
    """Whether a cubic equals h o p o h^-1 for a linear h and the special
    cubic p above; both scale roots are tried and coefficients matched."""
    if poly.degree != 3:
        return False
    c = list(poly.coefficients)  # c0..c3
    a0 = complex(np.sqrt(1 / c[3]))  # leading coefficient of h o p o h^-1 is 1/a^2
    for a in (a0, -a0):
        b = (-1 / a - c[2]) / (3 * c[3])
        # conjugate p by h(z) = a z + b, expanded in z
        w = np.array([-b / a, 1 / a], dtype=complex)  # (z - b)/a
        w2 = np.convolve(w, w)
        w3 = np.convolve(w2, w)
        pw = np.zeros(4, dtype=complex)
        pw[: len(w3)] += w3
        pw[: len(w2)] -= w2
        pw[: len(w)] += w
        qw = a * pw
        qw[0] += b
        if _coeffs_close([complex(x) for x in qw], c, tol):
            return True
    return False


def advise(poly: ComplexPolynomial, n: int) -> PolyAdvice:
    """Evaluate every nonexistence rule against the polynomial and order.

    The advice transfers verbatim to the pullback multifunction of the
    polynomial.  Rules excluding all orders fire regardless of n; the
    order-specific rules fire only when they cover n (except the shifted
    monomial rule, which always reports its excluded order).
    """
    if n < 2:
        raise ValueError("root order must be at least 2")
    d = poly.degree
    if d < 2:
        raise ValueError("polynomial degree must be at least 2")
    findings: list[Finding] = []

    if d == 2:
        findings.append(Finding(
            "Quadratic", _ALL_ORDERS,
            "Rice, Schweizer & Sklar 1980, Thm. 1; Choczewski & Kuczma 1992, Thm. 2"))

    is_pure_power = (poly.coefficients[d] == 1
                     and all(c == 0 for c in poly.coefficients[:d]))
    if is_pure_power and solar_criterion(d):
        findings.append(Finding("Solar", _ALL_ORDERS, "Solarz 1976; list in Riesel 1964"))

    if d == 3 and len(fixed_points(poly)) < 3 and not conjugate_to_special_cubic(poly):
        findings.append(Finding(
            "CubicSpecial", _ALL_ORDERS,
            "Choczewski & Kuczma 1992, Thm. 6",
            tolerance=COEFF_REL_TOL))

    if n > d * (d - 1):
        findings.append(Finding(
            "RiceDegree", OrderExclusion(d * (d - 1), None, "degree-bound"),
            "Rice, Schweizer & Sklar 1980, Thm. 4"))

    if is_prime(n) and n > d:
        findings.append(Finding(
            "PrimeOrder", frozenset({n}),
            "Choczewski & Kuczma 1992, Thm. 1"))

    if is_prime(d) and shifted_monomial_parameters(poly) is not None:
        findings.append(Finding(
            "ShiftedMonomialPrime", frozenset({d}),
            "non-isolated fixed-point divisibility rule",
            tolerance=COEFF_REL_TOL))

    return PolyAdvice(poly, n, tuple(findings))
