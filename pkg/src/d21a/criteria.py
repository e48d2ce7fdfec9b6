"""Closed-form decision procedures for highest weights over the distinguished base.

``inj_full`` decides whether every F_i acts injectively on L(lambda);
``classify`` turns that and typicality into the predicted degree of a cuspidal
twisted localization of L(lambda).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .arith import ALPHA, Scalar, is_positive_integer
from .rootsys import Weight, c_values, coset_class, is_typical

EXACTLY_8 = "exactly 8"
RANGE_2_6 = "range 2..6"
RANGE_2_4 = "range 2..4"
NOT_ELIGIBLE = "not cuspidal-eligible"

# inclusive bounds on the degree implied by each prediction
DEGREE_BOUNDS: Dict[str, Tuple[int, int]] = {
    EXACTLY_8: (8, 8),
    RANGE_2_6: (2, 6),
    RANGE_2_4: (2, 4),
}


def zero_count(lam: Weight) -> int:
    return sum(1 for x in lam.coords if x.is_zero())


def inj_full(lam: Weight, alpha=ALPHA) -> bool:
    """No c_i is an integer >= 1, and at most one lambda_i vanishes."""
    if zero_count(lam) > 1:
        return False
    return not any(is_positive_integer(c) for c in c_values(lam, alpha))


@dataclass(frozen=True)
class CuspidalReport:
    typical: bool
    c: Tuple[Scalar, Scalar, Scalar]
    zero_count: int
    inj_full: bool
    predicted_degree: str

    @property
    def degree_bounds(self):
        return DEGREE_BOUNDS.get(self.predicted_degree)

    def as_record(self) -> dict:
        return {
            "typical": self.typical,
            "c": [str(x) for x in self.c],
            "zero_count": self.zero_count,
            "inj_full": self.inj_full,
            "predicted_degree": self.predicted_degree,
        }


def classify(lam: Weight, alpha=ALPHA) -> CuspidalReport:
    typical = is_typical(lam)
    inj = inj_full(lam, alpha)
    zeros = zero_count(lam)
    if not inj:
        pred = NOT_ELIGIBLE
    elif typical:
        pred = EXACTLY_8
    elif zeros:
        # (lambda, b_i) = lambda_i = 0 for a simple odd root b_i
        pred = RANGE_2_4
    else:
        pred = RANGE_2_6
    return CuspidalReport(typical, c_values(lam, alpha), zeros, inj, pred)


def support_coset_class(nu: Sequence[int]) -> str:
    """'even' for offsets in Q_0, 'odd' for the other Q_0-coset of Q."""
    nu = tuple(nu)
    if len(nu) != 3 or any(not isinstance(x, int) for x in nu):
        raise ValueError(f"{nu} is not an element of the root lattice")
    return "even" if coset_class(nu) == 0 else "odd"
