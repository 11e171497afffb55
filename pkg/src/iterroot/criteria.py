"""Finite nonexistence certificates for iterative roots.

Four rules, forward/inverse x path-count/point-count.  Each rule tests a
strict exact inequality Q > M*N^3 at a witness point together with side
hypotheses; when the base hypotheses hold the multifunction has no roots
of any order n >= 2 inside a degree-bounded class, and with two extra
hypotheses no roots at all.  The inverse rules are, by construction,
the forward rules applied to the edge-reversed graph.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .core import Multifunction, invert, iterate, profile
from .paths import path_matrix


class Rule(str, Enum):
    FORWARD_PATHS = "forward-paths"
    FORWARD_POINTS = "forward-points"
    INVERSE_PATHS = "inverse-paths"
    INVERSE_POINTS = "inverse-points"


class Conclusion(str, Enum):
    NO_ROOTS_IN_CLASS = "no-roots-in-class"
    NO_ROOTS_AT_ALL = "no-roots-at-all"
    NOT_APPLICABLE = "not-applicable"


BASE_HYPOTHESES = ("totality", "x0_not_fixed", "Q_exceeds_MN3", "N_bound_holds")
EXTRA_HYPOTHESES = ("class_membership", "surjectivity_or_totality_extra")

_CITATIONS = {
    Rule.FORWARD_PATHS: "two-path concentration at a non-fixed point (path form)",
    Rule.FORWARD_POINTS: "two-step preimage concentration at a non-fixed point (point form)",
    Rule.INVERSE_PATHS: "two-path concentration on the reversed graph (path form)",
    Rule.INVERSE_POINTS: "two-step image concentration on the reversed graph (point form)",
}

_CLASSES = {
    Rule.FORWARD_PATHS: "max-out-degree",
    Rule.FORWARD_POINTS: "max-out-degree",
    Rule.INVERSE_PATHS: "max-in-degree",
    Rule.INVERSE_POINTS: "max-in-degree",
}


@dataclass(frozen=True)
class Certificate:
    """A checked instance of one nonexistence rule.

    ``measured_Q`` is the 2-path count or 2-preimage size at the witness
    point; ``measured_N_max`` is the largest per-point 1-count away from it.
    The conclusion excludes every order n >= 2 at once.  ``root_class``
    names the degree bound (out-degrees for forward rules, in-degrees for
    inverse rules) under which the in-class conclusion holds.
    """

    rule: Rule
    x0: int
    M: int
    N: int
    measured_Q: int
    measured_N_max: int
    hypotheses: tuple[tuple[str, bool], ...]
    conclusion: Conclusion
    failed_hypotheses: tuple[str, ...]
    root_class: str
    citation: str

    def hypothesis(self, name: str) -> bool:
        return dict(self.hypotheses)[name]

    @property
    def fires(self) -> bool:
        return self.conclusion is not Conclusion.NOT_APPLICABLE


def _validate(F: Multifunction, x0: int, M: int, N: int) -> None:
    if not 0 <= x0 < F.ground.size:
        raise ValueError(f"witness point {x0} out of range")
    if M < 1 or N < 1:
        raise ValueError("bounds M and N must be positive")


def _conclude(rule: Rule, x0: int, M: int, N: int, Q: int, n_max: int,
              base: dict[str, bool], extra: dict[str, bool]) -> Certificate:
    failed_base = tuple(name for name in BASE_HYPOTHESES if not base[name])
    failed_extra = tuple(name for name in EXTRA_HYPOTHESES if not extra[name])
    if failed_base:
        conclusion = Conclusion.NOT_APPLICABLE
    elif failed_extra:
        conclusion = Conclusion.NO_ROOTS_IN_CLASS
    else:
        conclusion = Conclusion.NO_ROOTS_AT_ALL
    hyps = tuple(base.items()) + tuple(extra.items())
    return Certificate(
        rule=rule, x0=x0, M=M, N=N, measured_Q=Q, measured_N_max=n_max,
        hypotheses=hyps, conclusion=conclusion,
        failed_hypotheses=failed_base + failed_extra,
        root_class=_CLASSES[rule], citation=_CITATIONS[rule],
    )


def check_forward_paths(F: Multifunction, x0: int, M: int, N: int) -> Certificate:
    """Two-path count into x0 versus in-degree bound N elsewhere."""
    _validate(F, x0, M, N)
    prof = profile(F)
    size = F.ground.size
    entries = path_matrix(F, 2).entries
    Q = sum(entries[x][x0] for x in range(size))
    n_max = max((prof.in_degrees[x] for x in range(size) if x != x0), default=0)
    base = {
        "totality": len(prof.domain) == size,
        "x0_not_fixed": x0 not in prof.fixed_membership,
        "Q_exceeds_MN3": Q > M * N**3,
        "N_bound_holds": n_max <= N,
    }
    extra = {
        "class_membership": prof.max_out_degree <= M,
        "surjectivity_or_totality_extra": len(prof.image) == size,
    }
    return _conclude(Rule.FORWARD_PATHS, x0, M, N, Q, n_max, base, extra)


def check_forward_points(F: Multifunction, x0: int, M: int, N: int) -> Certificate:
    """Two-step preimage size at x0 versus in-degree bound N elsewhere."""
    _validate(F, x0, M, N)
    prof = profile(F)
    size = F.ground.size
    F2 = iterate(F, 2)
    Q = sum(1 for x in range(size) if F2.images[x] >> x0 & 1)
    n_max = max((prof.in_degrees[x] for x in range(size) if x != x0), default=0)
    base = {
        "totality": len(prof.domain) == size,
        "x0_not_fixed": x0 not in prof.fixed_membership,
        "Q_exceeds_MN3": Q > M * N**3,
        "N_bound_holds": n_max <= N,
    }
    extra = {
        "class_membership": prof.max_out_degree <= M,
        "surjectivity_or_totality_extra": len(prof.image) == size,
    }
    return _conclude(Rule.FORWARD_POINTS, x0, M, N, Q, n_max, base, extra)


def check_inverse_paths(F: Multifunction, x0: int, M: int, N: int) -> Certificate:
    """The forward path rule applied to the edge-reversed graph of F."""
    cert = check_forward_paths(invert(F), x0, M, N)
    return replace(cert, rule=Rule.INVERSE_PATHS,
                   root_class=_CLASSES[Rule.INVERSE_PATHS],
                   citation=_CITATIONS[Rule.INVERSE_PATHS])


def check_inverse_points(F: Multifunction, x0: int, M: int, N: int) -> Certificate:
    """The forward point rule applied to the edge-reversed graph of F."""
    cert = check_forward_points(invert(F), x0, M, N)
    return replace(cert, rule=Rule.INVERSE_POINTS,
                   root_class=_CLASSES[Rule.INVERSE_POINTS],
                   citation=_CITATIONS[Rule.INVERSE_POINTS])


CHECKERS = {
    Rule.FORWARD_PATHS: check_forward_paths,
    Rule.FORWARD_POINTS: check_forward_points,
    Rule.INVERSE_PATHS: check_inverse_paths,
    Rule.INVERSE_POINTS: check_inverse_points,
}

RULE_ORDER = (Rule.FORWARD_PATHS, Rule.FORWARD_POINTS, Rule.INVERSE_PATHS, Rule.INVERSE_POINTS)


def minimal_N(F: Multifunction, rule: Rule, x0: int) -> int:
    """Smallest admissible N: the largest relevant per-point 1-count away from x0."""
    prof = profile(F)
    counts = prof.in_degrees if rule in (Rule.FORWARD_PATHS, Rule.FORWARD_POINTS) else prof.out_degrees
    return max(1, max((counts[x] for x in range(F.ground.size) if x != x0), default=1))


def scan(F: Multifunction, M: int) -> list[Certificate]:
    """All firing certificates for the given class bound M, at the minimal N per witness."""
    if M < 1:
        raise ValueError("class bound M must be positive")
    found = []
    for rule in RULE_ORDER:
        checker = CHECKERS[rule]
        for x0 in range(F.ground.size):
            cert = checker(F, x0, M, minimal_N(F, rule, x0))
            if cert.fires:
                found.append(cert)
    return found
