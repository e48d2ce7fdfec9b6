"""Verma modules over the explicit algebra: PBW straightening, contravariant
Gram matrices, and simple-quotient multiplicities as Gram ranks.

PBW monomials are 7-tuples of exponents over the negative root vectors in the
order f1, f2, f3, f123, F1, F2, F3 (odd exponents are 0 or 1).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .arith import ALPHA, ONE, ZERO, Scalar, _peval, as_scalar
from .rootsys import ODD, Weight, _inverse3
from .superalg import AlgebraTable, Element, anti_involution, build_algebra, cartan_eigenvalues, chevalley_generators

Monomial = Tuple[int, ...]
Vector = Dict[Monomial, Scalar]

PBW_ORDER = ("f1", "f2", "f3", "f123", "F1", "F2", "F3")
EMPTY: Monomial = (0,) * 7

# positive roots (b-coordinates) attached to the PBW slots
_SLOT_ROOTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0))
_SLOT_ODD = (True, True, True, True, False, False, False)
# slot of the even root vector F_i, i.e. of -a_i
EVEN_SLOT = {1: 4, 2: 5, 3: 6}


def monomial_weight(m: Monomial) -> Tuple[int, int, int]:
    """The offset nu with F_m v of weight lambda - nu."""
    return tuple(sum(m[p] * _SLOT_ROOTS[p][i] for p in range(7)) for i in range(3))


def pbw_basis(nu: Sequence[int]) -> List[Monomial]:
    """All PBW monomials of offset ``nu``, sorted."""
    nu = tuple(nu)
    out = []
    for odd in product((0, 1), repeat=4):
        r = [nu[i] - sum(odd[p] * _SLOT_ROOTS[p][i] for p in range(4)) for i in range(3)]
        # r = b1 (0,1,1) + b2 (1,0,1) + b3 (1,1,0)
        if sum(r) % 2:
            continue
        b1 = (r[1] + r[2] - r[0]) // 2
        b2 = (r[0] + r[2] - r[1]) // 2
        b3 = (r[0] + r[1] - r[2]) // 2
        if min(b1, b2, b3) < 0:
            continue
        out.append(odd + (b1, b2, b3))
    return sorted(out)


def _axpy(out: Vector, c: Scalar, v: Vector) -> None:
    for k, x in v.items():
        y = out.get(k, ZERO) + c * x
        if y.is_zero():
            out.pop(k, None)
        else:
            out[k] = y


@dataclass
class VermaVector:
    lam: Weight
    terms: Vector = field(default_factory=dict)

    def __post_init__(self):
        for m, c in list(self.terms.items()):
            if any(m[p] > 1 for p in range(4)):
                raise ValueError(f"odd exponent above 1 in {m}")
            if c.is_zero():
                del self.terms[m]

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial = EMPTY) -> Scalar:
        return self.terms.get(tuple(m), ZERO)

    def __eq__(self, other):
        return isinstance(other, VermaVector) and self.lam == other.lam and self.terms == other.terms


class VermaModule:
    """M(lambda) for the distinguished base, over a fixed algebra table."""

    def __init__(self, lam: Weight, alpha=ALPHA):
        self.lam = lam if isinstance(lam, Weight) else Weight(lam)
        self.alpha = as_scalar(alpha)
        self.table: AlgebraTable = build_algebra(self.alpha)
        t = self.table
        self.slot_of = {t.index[lab]: p for p, lab in enumerate(PBW_ORDER)}
        self.slot_index = [t.index[lab] for lab in PBW_ORDER]
        self.omega = anti_involution(t)
        self.cartan = set(t.cartan_indices())
        self.positive = {i for i, w in enumerate(t.weights) if sum(w) > 0}
        # values lambda(H_k), from lambda(h_i) = l_i and h_i = sum_k X_ik H_k
        gens = chevalley_generators(t)
        H = [t.index[f"H{k}"] for k in (1, 2, 3)]
        X = [[gens[f"h{i}"].get(H[k], ZERO) for k in range(3)] for i in (1, 2, 3)]
        Xinv = _inverse3(X)
        self.lam_H = tuple(sum((Xinv[k][i] * self.lam.coords[i] for i in range(3)), ZERO) for k in range(3))
        # gamma(H_k) for each positive slot root
        self.slot_H = [tuple(cartan_eigenvalues(t, r)) for r in _SLOT_ROOTS]
        self._lmul: Dict[Tuple[int, Monomial], Vector] = {}
        self._pair: Dict[Tuple[Monomial, Monomial], Scalar] = {}

    # -- straightening ----------------------------------------------------

    def _cartan_value(self, i: int, m: Monomial) -> Scalar:
        k = self.table.labels[i]
        kk = int(k[1]) - 1
        val = self.lam_H[kk]
        for p in range(7):
            if m[p]:
                val = val - m[p] * self.slot_H[p][kk]
        return val

    def lmul(self, i: int, m: Monomial) -> Vector:
        """The basis vector b_i applied to F_m v, in PBW form."""
        key = (i, m)
        hit = self._lmul.get(key)
        if hit is not None:
            return hit
        out = self._lmul_compute(i, m)
        self._lmul[key] = out
        return out

    def _lmul_compute(self, i: int, m: Monomial) -> Vector:
        t = self.table
        if i in self.cartan:
            c = self._cartan_value(i, m)
            return {} if c.is_zero() else {m: c}
        first = next((p for p in range(7) if m[p]), None)
        if first is None:
            if i in self.positive:
                return {}
            n = list(EMPTY)
            n[self.slot_of[i]] = 1
            return {tuple(n): ONE}
        p = self.slot_of.get(i)
        if p is not None and p <= first:
            if p < first or not _SLOT_ODD[p]:
                n = list(m)
                n[p] += 1
                return {tuple(n): ONE}
            # x x = [x, x] / 2 for odd x
            rest = list(m)
            rest[p] -= 1
            return self.lmul_element({k: c / 2 for k, c in t.basis_bracket(i, i).items()}, tuple(rest))
        z = self.slot_index[first]
        rest = list(m)
        rest[first] -= 1
        rest = tuple(rest)
        out: Vector = {}
        _axpy(out, ONE, self.lmul_element(t.basis_bracket(i, z), rest))
        sign = -ONE if (t.parities[i] == ODD and t.parities[z] == ODD) else ONE
        inner = self.lmul(i, rest)
        for n, c in inner.items():
            _axpy(out, sign * c, self.lmul(z, n))
        return out

    def lmul_element(self, x: Element, m: Monomial) -> Vector:
        out: Vector = {}
        for i, c in x.items():
            _axpy(out, c, self.lmul(i, m))
        return out

    def apply(self, x: Element, v: Vector) -> Vector:
        out: Vector = {}
        for m, c in v.items():
            for i, a in x.items():
                _axpy(out, a * c, self.lmul(i, m))
        return out

    # -- contravariant form -----------------------------------------------

    def pairing(self, I: Monomial, J: Monomial) -> Scalar:
        """Coefficient of v in omega(F_I) F_J v."""
        if monomial_weight(I) != monomial_weight(J):
            return ZERO
        key = (I, J)
        hit = self._pair.get(key)
        if hit is not None:
            return hit
        if I == EMPTY:
            val = ONE if J == EMPTY else ZERO
        else:
            first = next(p for p in range(7) if I[p])
            rest = list(I)
            rest[first] -= 1
            rest = tuple(rest)
            w = self.lmul_element(self.omega[self.slot_index[first]], J)
            val = ZERO
            for K, c in w.items():
                val = val + c * self.pairing(rest, K)
        self._pair[key] = val
        return val

    def pair_vector(self, I: Monomial, v: Vector) -> Scalar:
        return sum((c * self.pairing(I, K) for K, c in v.items()), ZERO)

    def gram(self, nu: Sequence[int]) -> "GramMatrix":
        basis = pbw_basis(nu)
        entries = [[self.pairing(I, J) for J in basis] for I in basis]
        return GramMatrix(tuple(nu), basis, entries)


@dataclass
class GramMatrix:
    nu: Tuple[int, int, int]
    basis: List[Monomial]
    entries: List[List[Scalar]]

    @property
    def size(self) -> int:
        return len(self.basis)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def rank(self) -> int:
        return fraction_free_rank(self.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "col", "row_monomial", "col_monomial", "entry"])
        for i, I in enumerate(self.basis):
            for j, J in enumerate(self.basis):
                w.writerow([i, j, format_monomial(I), format_monomial(J), str(self.entries[i][j])])
        return buf.getvalue()


def format_monomial(m: Monomial) -> str:
    parts = []
    for p, e in enumerate(m):
        if e == 1:
            parts.append(PBW_ORDER[p])
        elif e > 1:
            parts.append(f"{PBW_ORDER[p]}^{e}")
    return "*".join(parts) if parts else "1"


def _bareiss_rank(rows: List[List[Fraction]]) -> int:
    """Fraction-free rank of a rational matrix: scale rows to integers, then Bareiss."""
    work = []
    for r in rows:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        work.append([int(x * den) for x in r])
    if not work:
        return 0
    nr, nc = len(work), len(work[0])
    prev = 1
    rank = 0
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if work[r][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank][col]
        top = work[rank]
        for r in range(rank + 1, nr):
            a = work[r][col]
            work[r] = [(x * p - a * y) // prev for x, y in zip(work[r], top)]
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def fraction_free_rank(M: Sequence[Sequence[Scalar]]) -> int:
    """Rank over Q(a).

    Row denominators are cleared so every entry is a polynomial; a nonzero
    minor then has degree at most D = sum of the row degrees, so it survives
    at one of any D + 1 distinct specializations.  The rank over Q(a) is the
    largest rank seen, each computed by integer Bareiss elimination.
    """
    rows = []
    for r in M:
        r = [as_scalar(x) for x in r]
        for x in list(r):
            if not x.is_polynomial():
                d = Scalar.from_polys(x.den)
                r = [y * d for y in r]
        rows.append(r)
    if not rows or not rows[0]:
        return 0
    full = min(len(rows), len(rows[0]))
    if all(x.is_constant() for r in rows for x in r):
        return _bareiss_rank([[x.constant() for x in r] for r in rows])
    D = sum(max(len(x.num) - 1 for x in r) for r in rows)
    best = 0
    for k in range(D + 1):
        point = Fraction(k + 1)
        values = [[_peval(x.num, point) for x in r] for r in rows]
        best = max(best, _bareiss_rank(values))
        if best == full:
            break
    return best


# ---------------------------------------------------------------------------
# module-level operations


@lru_cache(maxsize=64)
def verma_module(lam: Weight, alpha=ALPHA) -> VermaModule:
    return VermaModule(lam, as_scalar(alpha))


def weight_basis(lam: Weight, nu: Sequence[int]) -> List[Monomial]:
    return pbw_basis(nu)


def highest_weight_vector(lam: Weight) -> VermaVector:
    return VermaVector(lam, {EMPTY: ONE})


def act(g: Element, v: VermaVector, alpha=ALPHA) -> VermaVector:
    M = verma_module(v.lam, alpha)
    return VermaVector(v.lam, M.apply(g, v.terms))


def gram(lam: Weight, nu: Sequence[int], alpha=ALPHA) -> GramMatrix:
    return verma_module(lam, alpha).gram(nu)


def simple_mult(lam: Weight, nu: Sequence[int], alpha=ALPHA) -> int:
    """dim L(lambda)_{lambda - nu} as the rank of the contravariant form."""
    return gram(lam, nu, alpha).rank()


def injective_at(M: VermaModule, i: int, nu: Sequence[int]) -> bool:
    """Whether F_i : L_{lambda-nu} -> L_{lambda-nu-a_i} is injective.

    Compares rank of <F_K v, F_i F_J v> with the rank of the Gram matrix at nu.
    """
    nu = tuple(nu)
    src = pbw_basis(nu)
    target_nu = tuple(a + b for a, b in zip(nu, _SLOT_ROOTS[EVEN_SLOT[i]]))
    dst = pbw_basis(target_nu)
    Fi = M.slot_index[EVEN_SLOT[i]]
    images = [M.lmul(Fi, J) for J in src]
    P = [[M.pair_vector(K, img) for img in images] for K in dst]
    G = [[M.pairing(I, J) for J in src] for I in src]
    return fraction_free_rank(P) == fraction_free_rank(G)


def injectivity_witness(lam: Weight, i: int, box: int = 6, alpha=ALPHA) -> bool:
    """F_i acts injectively on every weight space of L(lambda) in [0, box]^3."""
    M = verma_module(lam, alpha)
    return all(injective_at(M, i, nu) for nu in product(range(box + 1), repeat=3))


@dataclass
class RankTable:
    lam: Weight
    box: int
    rows: Dict[Tuple[int, int, int], Tuple[int, int]]  # nu -> (dim M, rank)

    def max_rank(self, where=None) -> int:
        return max((r for nu, (_, r) in self.rows.items() if where is None or where(nu)), default=0)

    def drops(self) -> List[Tuple[int, int, int]]:
        return [nu for nu, (d, r) in self.rows.items() if r < d]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m1", "m2", "m3", "verma_dim", "simple_dim"])
        for nu in sorted(self.rows):
            w.writerow([*nu, *self.rows[nu]])
        return buf.getvalue()


def rank_table(lam: Weight, box: int = 6, alpha=ALPHA) -> RankTable:
    M = verma_module(lam, alpha)
    rows = {}
    for nu in product(range(box + 1), repeat=3):
        g = M.gram(nu)
        rows[nu] = (g.size, g.rank())
    return RankTable(lam, box, rows)
