"""Parity-graded formal characters truncated to a box of simple-root exponents.

An entry at (m1, m2, m3) is the pair (even dim, odd dim) of the weight space
lambda - m1*g1 - m2*g2 - m3*g3 of a Verma module, g_i the simple roots of the
chosen base.  The highest weight never enters: it is only an offset.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .rootsys import (
    DISTINGUISHED,
    ODD,
    POSITIVE_ODD,
    ROOTS,
    Base,
    coset_class,
    rho_vector,
)

Exps = Tuple[int, int, int]
Pair = Tuple[int, int]

STABLE_DEGREE = 8


class DegreeBoundViolation(ArithmeticError):
    """A weight multiplicity exceeded 8."""


@dataclass(frozen=True)
class ParityCharacter:
    cutoff: int
    coeffs: Dict[Exps, Pair] = field(repr=False)

    def __getitem__(self, m: Sequence[int]) -> Pair:
        m = tuple(m)
        if len(m) != 3 or any(x < 0 or x > self.cutoff for x in m):
            raise KeyError(f"{m} lies outside the box [0,{self.cutoff}]^3")
        return self.coeffs.get(m, (0, 0))

    def __contains__(self, m) -> bool:
        return len(m) == 3 and all(0 <= x <= self.cutoff for x in m)

    def box(self) -> Iterator[Exps]:
        return product(range(self.cutoff + 1), repeat=3)

    def items(self) -> Iterator[Tuple[Exps, Pair]]:
        for m in self.box():
            yield m, self[m]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m1", "m2", "m3", "d0", "d1"])
        for m, (d0, d1) in self.items():
            w.writerow([*m, d0, d1])
        return buf.getvalue()


def _series_one(N: int):
    table = {m: [0, 0] for m in product(range(N + 1), repeat=3)}
    table[(0, 0, 0)][0] = 1
    return table


def _times_odd(table, w: Exps, N: int):
    """Multiply by (1 + x^w) where x^w carries odd parity."""
    out = {m: list(v) for m, v in table.items()}
    for m, (d0, d1) in table.items():
        if not (d0 or d1):
            continue
        t = (m[0] + w[0], m[1] + w[1], m[2] + w[2])
        if max(t) > N:
            continue
        out[t][0] += d1
        out[t][1] += d0
    return out


def _divide_even(table, w: Exps, N: int):
    """Multiply by 1/(1 - x^w) = 1 + x^w + x^2w + ... (w even)."""
    for m in sorted(table, key=sum):
        s = (m[0] - w[0], m[1] - w[1], m[2] - w[2])
        if min(s) >= 0:
            table[m][0] += table[s][0]
            table[m][1] += table[s][1]
    return table


def verma_character(base: Base = DISTINGUISHED, N: int = 8) -> ParityCharacter:
    """e^{-lambda} ch M(lambda) = R_1 / R_0 for the positive system of ``base``."""
    if N < 0:
        raise ValueError("cutoff must be nonnegative")
    table = _series_one(N)
    for r in base.positive_odd():
        table = _times_odd(table, base.int_coordinates(r), N)
    for r in base.positive_even():
        table = _divide_even(table, base.int_coordinates(r), N)
    return ParityCharacter(N, {m: tuple(v) for m, v in table.items() if v[0] or v[1]})


def verma_mult_oracle(nu: Sequence[int]) -> Pair:
    """Multiplicity at offset ``nu`` (distinguished base) by direct enumeration.

    Sums over subsets S of the positive odd roots; the even remainder has at
    most one expansion over b1+b2, b1+b3, b2+b3 since those are independent.
    """
    counts = [0, 0]
    for mask in range(16):
        S = [POSITIVE_ODD[k] for k in range(4) if mask >> k & 1]
        r = [nu[i] - sum(v[i] for v in S) for i in range(3)]
        # r = n12 (1,1,0) + n13 (1,0,1) + n23 (0,1,1)
        if (r[0] + r[1] + r[2]) % 2:
            continue
        n12 = (r[0] + r[1] - r[2]) // 2
        n13 = (r[0] + r[2] - r[1]) // 2
        n23 = (r[1] + r[2] - r[0]) // 2
        if min(n12, n13, n23) < 0:
            continue
        counts[len(S) % 2] += 1
    return tuple(counts)


def in_stable_cone(m: Sequence[int]) -> bool:
    """True where the distinguished Verma multiplicity has stabilized at 8.

    Exactly the offsets with m_j + m_k - m_i >= 2 for every i.
    """
    m1, m2, m3 = m
    return min(m1 + m2 - m3, m1 + m3 - m2, m2 + m3 - m1) >= 2


def band_min3(m: Sequence[int]) -> bool:
    """The coordinate band m_i >= 3."""
    return min(m) >= 3


@dataclass
class StabilizedDegree:
    degree: int
    even: int
    odd: int
    checked: int = 0
    violations: List[Tuple[Exps, Pair]] = field(default_factory=list)

    @property
    def graded(self) -> Pair:
        return (self.even, self.odd)

    @property
    def parity_law_holds(self) -> bool:
        return not self.violations


def transport_offset(base: Base, nu: Sequence[int]) -> Optional[Exps]:
    """The offset in ``base`` coordinates of the distinguished offset ``nu``.

    Uses lambda' + rho' = lambda + rho for the highest weights of the same
    Verma character; returns None when the result has a negative entry.
    """
    r0 = rho_vector(DISTINGUISHED)
    r1 = rho_vector(base)
    v = tuple(Fraction(nu[i]) + r0[i] - r1[i] for i in range(3))
    m = base.coordinates(v)
    if any(x.denominator != 1 or x < 0 for x in m):
        return None
    return tuple(int(x) for x in m)


def stabilized_degree(
    base: Base = DISTINGUISHED,
    N: int = 8,
    band: Callable[[Sequence[int]], bool] = in_stable_cone,
) -> StabilizedDegree:
    """Degree and graded degree over the box, plus the parity law on ``band``.

    ``band`` selects distinguished offsets; each is transported into ``base``
    coordinates and must carry (8,0) when the transported offset lies in Q_0
    and (0,8) otherwise.  For the distinguished base this is the parity of
    m1 + m2 + m3.
    """
    ch = verma_character(base, N)
    deg = d0 = d1 = 0
    for m, (a, b) in ch.items():
        if a + b > STABLE_DEGREE:
            raise DegreeBoundViolation(f"multiplicity {a + b} at {m}")
        deg = max(deg, a + b)
        d0 = max(d0, a)
        d1 = max(d1, b)
    out = StabilizedDegree(deg, d0, d1)
    for nu in product(range(N + 1), repeat=3):
        if not band(nu):
            continue
        m = transport_offset(base, nu)
        if m is None or m not in ch:
            continue
        # parity is relative to the highest weight vector of ``base``
        even = coset_class(base.from_coordinates(m)) == 0
        expected = (STABLE_DEGREE, 0) if even else (0, STABLE_DEGREE)
        out.checked += 1
        if ch[m] != expected:
            out.violations.append((nu, ch[m]))
    return out


def induced_degree() -> Dict[int, int]:
    """Coefficient sums of prod over all odd roots (1 + e^beta), per Q_0 coset.

    Key 0 is the even coset (Q_0 itself), key 1 the other one.
    """
    odd = [r.coords for r in ROOTS if r.parity == ODD]
    poly: Dict[Exps, int] = {(0, 0, 0): 1}
    for w in odd:
        nxt = dict(poly)
        for m, c in poly.items():
            t = (m[0] + w[0], m[1] + w[1], m[2] + w[2])
            nxt[t] = nxt.get(t, 0) + c
        poly = nxt
    sums = {0: 0, 1: 0}
    for m, c in poly.items():
        sums[coset_class(m)] += c
    return sums


def max_weight_space_induced() -> int:
    """deg of Ind(V) for V with one-dimensional weight spaces on a Q_0 coset."""
    return max(induced_degree().values())
