"""The sl2 coherent family V(a) and the tensor-cube modules built from it.

V(a) has basis x^s for s in C, with

    e.x^s = (a+s) x^{s+1},   f.x^s = (a-s) x^{s-1},   h.x^s = 2s x^s.

Only finite windows s = mu + n, lo <= n <= hi, are ever materialized.
Parameters live in Q(alpha), so integrality of mu +- a is decidable.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .arith import ONE, ZERO, Scalar, as_integer, as_scalar

GENERATORS = ("e", "f", "h")
_SHIFT = {"e": 1, "f": -1, "h": 0}


class NotCuspidal(ValueError):
    """A family parameter pair (a, mu) with mu + a or mu - a an integer."""


def family_action(a, gen: str, s) -> Tuple[Scalar, Scalar]:
    """(coefficient, new exponent) for ``gen`` applied to x^s in V(a)."""
    a, s = as_scalar(a), as_scalar(s)
    if gen == "e":
        return a + s, s + 1
    if gen == "f":
        return a - s, s - 1
    if gen == "h":
        return 2 * s, s
    raise ValueError(f"unknown generator {gen!r}")


def is_simple_cuspidal(a, mu) -> bool:
    a, mu = as_scalar(a), as_scalar(mu)
    return as_integer(mu + a) is None and as_integer(mu - a) is None


def _apply_word(a: Scalar, word: str, s: Scalar) -> Tuple[Scalar, Scalar]:
    """Apply a word of generators, rightmost first."""
    coeff = ONE
    for g in reversed(word):
        c, s = family_action(a, g, s)
        coeff = coeff * c
    return coeff, s


@dataclass(frozen=True)
class FamilyPoint:
    """V(a)^[mu] restricted to the exponents mu + n, lo <= n <= hi."""

    a: Scalar
    mu: Scalar
    lo: int = -5
    hi: int = 5

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "mu", as_scalar(self.mu))
        if self.lo > self.hi:
            raise ValueError("empty window")

    def exponents(self) -> List[Scalar]:
        return [self.mu + n for n in range(self.lo, self.hi + 1)]

    def interior(self) -> List[Scalar]:
        return [self.mu + n for n in range(self.lo + 1, self.hi)]

    def in_window(self, s) -> bool:
        n = as_integer(as_scalar(s) - self.mu)
        return n is not None and self.lo <= n <= self.hi

    @property
    def cuspidal(self) -> bool:
        return is_simple_cuspidal(self.a, self.mu)

    def action_table(self) -> List[Tuple[Scalar, str, Scalar]]:
        rows = []
        for s in self.exponents():
            for g in GENERATORS:
                rows.append((s, g, family_action(self.a, g, s)[0]))
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "generator", "coefficient"])
        for s, g, c in self.action_table():
            w.writerow([s, g, c])
        return buf.getvalue()


def casimir_on(a, s) -> Scalar:
    """Eigenvalue of h^2 + 2h + 4fe on x^s."""
    a, s = as_scalar(a), as_scalar(s)
    hh = _apply_word(a, "hh", s)[0]
    h = _apply_word(a, "h", s)[0]
    fe = _apply_word(a, "fe", s)[0]
    return hh + 2 * h + 4 * fe


def casimir_scalar(a, window: Sequence[int] = (-5, 5), mu=ZERO) -> Scalar:
    """4a^2 - 4a, after checking every x^s in the window gives that value."""
    a = as_scalar(a)
    expected = 4 * a * a - 4 * a
    point = FamilyPoint(a, mu, *window)
    for s in point.exponents():
        got = casimir_on(a, s)
        if got != expected:
            raise ArithmeticError(f"Casimir eigenvalue {got} at s={s} differs from {expected}")
    return expected


def verify_sl2_relations(point: FamilyPoint) -> bool:
    """[e,f]=h, [h,e]=2e, [h,f]=-2f on every interior vector of the window."""
    a = point.a
    for s in point.interior():
        ef = _apply_word(a, "ef", s)[0] - _apply_word(a, "fe", s)[0]
        if ef != _apply_word(a, "h", s)[0]:
            return False
        he = _apply_word(a, "he", s)[0] - _apply_word(a, "eh", s)[0]
        if he != 2 * _apply_word(a, "e", s)[0]:
            return False
        hf = _apply_word(a, "hf", s)[0] - _apply_word(a, "fh", s)[0]
        if hf != -2 * _apply_word(a, "f", s)[0]:
            return False
    return True


def annihilated_vectors(point: FamilyPoint) -> List[Tuple[Scalar, str]]:
    """Window vectors x^s killed by e or f, as (s, generator) pairs.

    For mu + a in Z the vector x^{-a} is killed by e; for mu - a in Z,
    x^{a} is killed by f.  Cuspidal points have none.
    """
    out = []
    for s in point.exponents():
        for g in ("e", "f"):
            if family_action(point.a, g, s)[0].is_zero():
                out.append((s, g))
    return out


@dataclass(frozen=True)
class TensorSupport:
    """The lattice translate {s1 a1 + s2 a2 + s3 a3 : s_i in mu_i + Z}."""

    mu: Tuple[Scalar, Scalar, Scalar]

    def contains(self, s: Sequence) -> bool:
        return all(as_integer(as_scalar(x) - m) is not None for x, m in zip(s, self.mu))

    def describe(self) -> str:
        return " + ".join(f"({m} + Z) a{i}" for i, m in enumerate(self.mu, 1))


@dataclass(frozen=True)
class TensorFamily:
    factors: Tuple[FamilyPoint, FamilyPoint, FamilyPoint]

    def weights(self) -> Iterator[Tuple[Scalar, Scalar, Scalar]]:
        """Exponent triples (s1, s2, s3) of the tensor basis over the windows."""
        e1, e2, e3 = (p.exponents() for p in self.factors)
        for s1 in e1:
            for s2 in e2:
                for s3 in e3:
                    yield (s1, s2, s3)


def tensor_degree_and_support(t: TensorFamily) -> Tuple[int, TensorSupport]:
    """Degree of V(a1)^[mu1] (x) V(a2)^[mu2] (x) V(a3)^[mu3] and its support.

    The weight of x^{s1} (x) x^{s2} (x) x^{s3} is s1 a1 + s2 a2 + s3 a3 with
    a_i the three even simple roots; it is recorded by (s1, s2, s3), which
    determines it because the a_i are linearly independent.
    """
    for i, p in enumerate(t.factors, 1):
        if not p.cuspidal:
            raise NotCuspidal(f"factor {i}: a={p.a}, mu={p.mu} has mu +- a in Z")
    dims: Dict[Tuple[Scalar, ...], int] = {}
    for w in t.weights():
        dims[w] = dims.get(w, 0) + 1
    support = TensorSupport(tuple(p.mu for p in t.factors))
    if not all(support.contains(w) for w in dims):
        raise ArithmeticError("tensor weight outside the predicted translate")
    return max(dims.values()), support
