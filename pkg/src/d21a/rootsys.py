"""Root datum of D(2,1;a): roots, the invariant form, odd reflections, typicality.

Roots are integer triples over the distinguished simple roots b1, b2, b3.
Weights are triples (l1, l2, l3) with l_i = (lambda, b_i).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .arith import ALPHA, ONE, ZERO, Scalar, as_scalar

Vec = Tuple[int, int, int]

EVEN, ODD = 0, 1

POSITIVE_EVEN: Tuple[Vec, ...] = ((1, 1, 0), (1, 0, 1), (0, 1, 1))
POSITIVE_ODD: Tuple[Vec, ...] = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))

# simple roots of g_0: a1 = b2+b3, a2 = b1+b3, a3 = b1+b2
EVEN_SIMPLE: Tuple[Vec, ...] = ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def cartan_matrix(alpha=ALPHA) -> Tuple[Tuple[Scalar, ...], ...]:
    alpha = as_scalar(alpha)
    return (
        (ZERO, ONE, alpha),
        (ONE, ZERO, -alpha - 1),
        (alpha, -alpha - 1, ZERO),
    )


def _neg(v: Vec) -> Vec:
    return (-v[0], -v[1], -v[2])


def _add(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


@dataclass(frozen=True, order=True)
class Root:
    coords: Vec
    parity: int

    def __post_init__(self):
        expected = _PARITY.get(self.coords)
        if expected is None:
            raise ValueError(f"{self.coords} is not a root of D(2,1;a)")
        if expected != self.parity:
            raise ValueError(f"root {self.coords} has parity {expected}, not {self.parity}")

    def __neg__(self) -> "Root":
        return Root(_neg(self.coords), self.parity)

    @property
    def is_odd(self) -> bool:
        return self.parity == ODD

    def __str__(self):
        return "(%d,%d,%d)" % self.coords


_PARITY = {}
for _v in POSITIVE_EVEN:
    _PARITY[_v] = EVEN
    _PARITY[_neg(_v)] = EVEN
for _v in POSITIVE_ODD:
    _PARITY[_v] = ODD
    _PARITY[_neg(_v)] = ODD


def is_root(v: Sequence[int]) -> bool:
    return tuple(v) in _PARITY


def root(v: Sequence[int]) -> Root:
    """The root with coordinates ``v``; parity is looked up."""
    v = tuple(int(x) for x in v)
    if v not in _PARITY:
        raise ValueError(f"{v} is not a root of D(2,1;a)")
    return Root(v, _PARITY[v])


ROOTS: Tuple[Root, ...] = tuple(root(v) for v in sorted(_PARITY))
EVEN_ROOTS = tuple(r for r in ROOTS if r.parity == EVEN)
ODD_ROOTS = tuple(r for r in ROOTS if r.parity == ODD)


@dataclass(frozen=True)
class Weight:
    coords: Tuple[Scalar, Scalar, Scalar]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(as_scalar(c) for c in coords))
        if len(self.coords) != 3:
            raise ValueError("a weight has three coordinates")

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(x + y for x, y in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(x - y for x, y in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-x for x in self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


RootLike = Union[Root, Sequence[int]]


def _vec(x) -> Tuple:
    if isinstance(x, Root):
        return x.coords
    return tuple(x)


def lattice_weight(v: RootLike, alpha=ALPHA) -> Weight:
    """The weight coordinates ((v, b_1), (v, b_2), (v, b_3)) of a lattice vector."""
    v = _vec(v)
    A = cartan_matrix(alpha)
    return Weight(sum((A[i][j] * v[i] for i in range(3)), ZERO) for j in range(3))


def _inverse3(M):
    """Inverse of a 3x3 matrix of Scalars (or Fractions) by the adjugate."""
    (a, b, c), (d, e, f), (g, h, i) = M
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise ZeroDivisionError("singular 3x3 matrix")
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(x / det for x in row) for row in adj)


def form(x, y, alpha=ALPHA) -> Scalar:
    """The bilinear form induced by the Cartan matrix.

    Arguments may be roots, integer lattice triples, or :class:`Weight`s.
    """
    A = cartan_matrix(alpha)
    xw, yw = isinstance(x, Weight), isinstance(y, Weight)
    if not xw and not yw:
        u, v = _vec(x), _vec(y)
        return sum((A[i][j] * (u[i] * v[j]) for i in range(3) for j in range(3) if u[i] and v[j]), ZERO)
    if xw and not yw:
        x, y = y, x
        xw, yw = yw, xw
    if not xw:
        u = _vec(x)
        return sum((y.coords[i] * u[i] for i in range(3)), ZERO)
    Ainv = _inverse3(A)
    return sum((x.coords[i] * Ainv[i][j] * y.coords[j] for i in range(3) for j in range(3)), ZERO)


def c_values(lam: Weight, alpha=ALPHA) -> Tuple[Scalar, Scalar, Scalar]:
    """(lambda(H_1), lambda(H_2), lambda(H_3)) for the sl2-triples of the even simple roots."""
    alpha = as_scalar(alpha)
    l1, l2, l3 = lam.coords
    return ((l2 + l3) / (-alpha - 1), (l1 + l3) / alpha, l1 + l2)


def c_values_from_form(lam: Weight, alpha=ALPHA) -> Tuple[Scalar, ...]:
    """Same quantities computed as 2 (lambda, a_i) / (a_i, a_i)."""
    return tuple(2 * form(lam, a, alpha) / form(a, a, alpha) for a in EVEN_SIMPLE)


# ---------------------------------------------------------------------------
# bases


@dataclass(frozen=True)
class Base:
    simples: Tuple[Root, Root, Root]

    @property
    def parities(self) -> Tuple[int, int, int]:
        return tuple(r.parity for r in self.simples)

    @cached_property
    def _inv(self):
        M = [[Fraction(r.coords[j]) for j in range(3)] for r in self.simples]
        # rows are simples; solve v = sum m_i * simple_i  ->  m = v * M^{-1}
        return _inverse3(M)

    def _inverse(self):
        return self._inv

    def coordinates(self, v: RootLike) -> Tuple[Fraction, Fraction, Fraction]:
        """Coefficients of ``v`` over the simple roots of this base."""
        v = _vec(v)
        inv = self._inverse()
        return tuple(sum(Fraction(v[i]) * inv[i][j] for i in range(3)) for j in range(3))

    def int_coordinates(self, v: RootLike) -> Vec:
        m = self.coordinates(v)
        if any(x.denominator != 1 for x in m):
            raise ValueError(f"{_vec(v)} is not in the root lattice")
        return tuple(int(x) for x in m)

    def from_coordinates(self, m: Sequence[int]) -> Vec:
        out = (0, 0, 0)
        for k, r in zip(m, self.simples):
            out = _add(out, tuple(k * c for c in r.coords))
        return out

    def is_valid(self) -> bool:
        try:
            self._inverse()
        except ZeroDivisionError:
            return False
        for r in ROOTS:
            m = self.coordinates(r)
            if any(x.denominator != 1 for x in m):
                return False
            if not (all(x >= 0 for x in m) or all(x <= 0 for x in m)):
                return False
        return True

    @cached_property
    def _positive(self) -> Tuple[Root, ...]:
        return tuple(r for r in ROOTS if all(x >= 0 for x in self.coordinates(r)))

    def positive_roots(self) -> Tuple[Root, ...]:
        return self._positive

    def positive_even(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.positive_roots() if r.parity == EVEN)

    def positive_odd(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.positive_roots() if r.parity == ODD)

    def __str__(self):
        mark = {ODD: "⊗", EVEN: "○"}
        return "[" + ", ".join(mark[r.parity] + str(r) for r in self.simples) + "]"


DISTINGUISHED = Base(tuple(root(v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))))


def _check_reflectable(base: Base, beta: Root, alpha) -> None:
    if beta not in base.simples:
        raise ValueError(f"{beta} is not a simple root of {base}")
    if beta.parity != ODD or form(beta, beta, alpha) != 0:
        raise ValueError(f"{beta} is not odd isotropic")


def odd_reflect(base: Base, beta: Root, alpha=ALPHA) -> Base:
    """Odd reflection at the simple isotropic root ``beta``."""
    beta = beta if isinstance(beta, Root) else root(beta)
    _check_reflectable(base, beta, alpha)
    new = []
    for g in base.simples:
        if g == beta:
            new.append(-beta)
        elif form(g, beta, alpha) == 0:
            new.append(g)
        else:
            new.append(root(_add(g.coords, beta.coords)))
    out = Base(tuple(new))
    if not out.is_valid():
        raise AssertionError(f"odd reflection of {base} at {beta} is not a base")
    return out


def reflect_weight(base: Base, lam: Weight, beta: Root, alpha=ALPHA) -> Weight:
    """Highest weight of the same simple module after reflecting at ``beta``."""
    beta = beta if isinstance(beta, Root) else root(beta)
    _check_reflectable(base, beta, alpha)
    if form(lam, beta, alpha) != 0:
        return lam - lattice_weight(beta, alpha)
    return lam


def reachable_bases(alpha=ALPHA, start: Base = DISTINGUISHED) -> List[Base]:
    """All bases reachable from ``start`` by odd reflections, in BFS order."""
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for s in b.simples:
            if s.parity == ODD and form(s, s, alpha) == 0:
                nb = odd_reflect(b, s, alpha)
                if nb not in seen:
                    seen.add(nb)
                    order.append(nb)
                    queue.append(nb)
    return order


def reflection_paths(alpha=ALPHA, start: Base = DISTINGUISHED):
    """Map each reachable base to the list of simple roots reflected to reach it."""
    paths = {start: []}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for s in b.simples:
            if s.parity == ODD and form(s, s, alpha) == 0:
                nb = odd_reflect(b, s, alpha)
                if nb not in paths:
                    paths[nb] = paths[b] + [(b, s)]
                    queue.append(nb)
    return paths


def diagram_shape(base: Base, alpha=ALPHA):
    """A hashable invariant of the Dynkin diagram: labelled nodes and edges."""
    nodes = []
    for i, s in enumerate(base.simples):
        links = sorted(
            (str(form(s, t, alpha)) for j, t in enumerate(base.simples) if j != i and form(s, t, alpha) != 0)
        )
        nodes.append((s.parity, str(form(s, s, alpha)), tuple(links)))
    return tuple(sorted(nodes))


def _half_sum(roots: Iterable[Root]) -> Tuple[Fraction, ...]:
    tot = [Fraction(0)] * 3
    for r in roots:
        for i in range(3):
            tot[i] += r.coords[i]
    return tuple(x / 2 for x in tot)


def _weight_of(v, alpha) -> Weight:
    A = cartan_matrix(alpha)
    return Weight(sum((A[i][j] * v[i] for i in range(3)), ZERO) for j in range(3))


def rho0(base: Base = DISTINGUISHED, alpha=ALPHA) -> Weight:
    return _weight_of(_half_sum(base.positive_even()), alpha)


def rho1(base: Base = DISTINGUISHED, alpha=ALPHA) -> Weight:
    return _weight_of(_half_sum(base.positive_odd()), alpha)


def rho(base: Base = DISTINGUISHED, alpha=ALPHA) -> Weight:
    """rho_0 - rho_1 for the positive system of ``base``, in weight coordinates."""
    return rho0(base, alpha) - rho1(base, alpha)


@lru_cache(maxsize=None)
def rho_vector(base: Base = DISTINGUISHED) -> Tuple[Fraction, ...]:
    """rho_0 - rho_1 as a (half-integral) combination of b1, b2, b3."""
    e, o = _half_sum(base.positive_even()), _half_sum(base.positive_odd())
    return tuple(x - y for x, y in zip(e, o))


def is_typical(lam: Weight) -> bool:
    """Typicality for a highest weight with respect to the distinguished base."""
    l1, l2, l3 = lam.coords
    return all(not x.is_zero() for x in (l1, l2, l3, l1 + l2 + l3))


def is_typical_for(base: Base, lam: Weight, alpha=ALPHA) -> bool:
    """(lam + rho, beta) != 0 for every odd root, rho taken for ``base``."""
    shifted = lam + rho(base, alpha)
    return all(form(shifted, b, alpha) != 0 for b in ODD_ROOTS)


def coset_class(v: Sequence[int]) -> int:
    """0 for the Q_0 coset of the root lattice, 1 for the other one."""
    return sum(int(x) for x in _vec(v)) % 2
