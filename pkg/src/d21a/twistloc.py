"""Twisted localization for sl2 with respect to f.

Elements of the localized enveloping algebra are stored in the ordered form
e^i h^j f^k with i, j >= 0 and k any integer.  Reordering uses

    h e = e (h + 2),    f^k h = (h + 2k) f^k,    f^k e = e f^k - k (h + k - 1) f^(k-1),

the last one valid for every integer k.  The twist is the finite sum

    phi_mu(u) = sum_i binom(mu, i) ad(f)^i(u) f^(-i).

A symbolic mu is the field indeterminate of :mod:`d21a.arith`.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .arith import ONE, ZERO, Scalar, as_integer, as_scalar

Mono = Tuple[int, int, int]


def _clean(terms: Mapping[Mono, Scalar]) -> Dict[Mono, Scalar]:
    return {m: c for m, c in terms.items() if not c.is_zero()}


def _accumulate(out: Dict, m, c) -> None:
    v = out.get(m)
    out[m] = c if v is None else v + c


def _shifted_power(shift: int, n: int) -> List[int]:
    """Integer coefficients of (h + shift)^n, lowest degree first."""
    poly = [1]
    for _ in range(n):
        nxt = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d] += shift * c
            nxt[d + 1] += c
        poly = nxt
    return poly


def _poly_mul(p: List[int], q: List[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


@lru_cache(maxsize=None)
def _f_past_e(k: int, n: int) -> Tuple[Tuple[Mono, int], ...]:
    """f^k e^n in ordered form; the coefficients are integers."""
    if n == 0:
        return (((0, 0, k), 1),)
    out: Dict[Mono, int] = {}
    # e * (f^k e^(n-1))
    for (a, b, c), x in _f_past_e(k, n - 1):
        out[(a + 1, b, c)] = out.get((a + 1, b, c), 0) + x
    if k:
        # -k (h + k - 1) * (f^(k-1) e^(n-1)); h e^a = e^a (h + 2a)
        for (a, b, c), x in _f_past_e(k - 1, n - 1):
            shift = 2 * a + k - 1
            out[(a, b + 1, c)] = out.get((a, b + 1, c), 0) - k * x
            out[(a, b, c)] = out.get((a, b, c), 0) - k * shift * x
    return tuple(sorted((m, x) for m, x in out.items() if x))


@lru_cache(maxsize=None)
def _mono_mul(m1: Mono, m2: Mono) -> Tuple[Tuple[Mono, int], ...]:
    i1, j1, k1 = m1
    i2, j2, k2 = m2
    out: Dict[Mono, int] = {}
    for (a, b, c), x in _f_past_e(k1, i2):
        # e^i1 h^j1 e^a h^b f^c h^j2 f^k2
        #   = e^(i1+a) (h+2a)^j1 h^b (h+2c)^j2 f^(c+k2)
        poly = _poly_mul(_shifted_power(2 * a, j1), _shifted_power(2 * c, j2))
        for d, y in enumerate(poly):
            if y:
                m = (i1 + a, d + b, c + k2)
                out[m] = out.get(m, 0) + x * y
    return tuple(sorted((m, x) for m, x in out.items() if x))


@dataclass(frozen=True)
class LocalizedElement:
    terms: Mapping[Mono, Scalar]

    def __post_init__(self):
        object.__setattr__(
            self, "terms", _clean({m: as_scalar(c) for m, c in self.terms.items()})
        )

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, coeff=ONE) -> "LocalizedElement":
        if i < 0 or j < 0:
            raise ValueError("e and h exponents must be nonnegative")
        return cls({(i, j, k): as_scalar(coeff)})

    @classmethod
    def scalar(cls, c) -> "LocalizedElement":
        return cls({(0, 0, 0): as_scalar(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return LocalizedElement(out)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LocalizedElement):
            c = as_scalar(other)
            return LocalizedElement({m: x * c for m, x in self.terms.items()})
        out: Dict[Mono, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, x in _mono_mul(m1, m2):
                    _accumulate(out, m, c * x)
        return LocalizedElement(out)

    def __rmul__(self, other):
        c = as_scalar(other)
        return LocalizedElement({m: c * x for m, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LocalizedElement):
            try:
                other = _lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in sorted(self.terms.items()):
            word = "".join(
                s for s in (_pow("e", i), _pow("h", j), _pow("f", k)) if s
            )
            parts.append(f"{c}" + (f"*{word}" if word else ""))
        return " + ".join(parts)

    __repr__ = __str__


def _pow(sym: str, n: int) -> str:
    if n == 0:
        return ""
    return sym if n == 1 else f"{sym}^{n}" if n > 0 else f"{sym}^({n})"


def _lift(x) -> LocalizedElement:
    return x if isinstance(x, LocalizedElement) else LocalizedElement.scalar(x)


E = LocalizedElement.monomial(1, 0, 0)
H = LocalizedElement.monomial(0, 1, 0)
F = LocalizedElement.monomial(0, 0, 1)
F_INV = LocalizedElement.monomial(0, 0, -1)
GENERATORS = {"e": E, "h": H, "f": F}


def commutator(x: LocalizedElement, y: LocalizedElement) -> LocalizedElement:
    return x * y - y * x


def binomial(mu, i: int) -> Scalar:
    mu = as_scalar(mu)
    out = ONE
    for t in range(i):
        out = out * (mu - t) / (t + 1)
    return out


def _ad_f_degree_bound(u: LocalizedElement) -> int:
    # ad(f) lowers the e-degree by one or trades an h for an f; the
    # iterates vanish after at most 2*(e-degree) + (h-degree) + 1 steps
    return max((2 * i + j for i, j, _ in u.terms), default=0) + 1


def phi(u: LocalizedElement, mu) -> LocalizedElement:
    u = _lift(u)
    mu = as_scalar(mu)
    out = LocalizedElement({})
    term = u
    for i in range(_ad_f_degree_bound(u) + 1):
        if term.is_zero():
            return out
        b = binomial(mu, i)
        if not b.is_zero():
            out = out + (term * LocalizedElement.monomial(0, 0, -i)) * b
        term = commutator(F, term)
    if not term.is_zero():
        raise ArithmeticError("ad(f) failed to terminate")
    return out


def check_homomorphism(mu) -> bool:
    """The sl2 relations hold for phi_mu(e), phi_mu(f), phi_mu(h)."""
    e, f, h = (phi(g, mu) for g in (E, F, H))
    return (
        commutator(e, f) == h
        and commutator(h, e) == 2 * e
        and commutator(h, f) == -2 * f
    )


def check_composition(mu, nu) -> bool:
    """phi_nu(phi_mu(g)) = phi_(mu+nu)(g) for g in e, f, h."""
    mu, nu = as_scalar(mu), as_scalar(nu)
    return all(phi(phi(g, mu), nu) == phi(g, mu + nu) for g in (E, F, H))


def is_identity_twist(monomials: Iterable[Mono]) -> bool:
    return all(
        phi(LocalizedElement.monomial(*m), ZERO) == LocalizedElement.monomial(*m)
        for m in monomials
    )


# ---------------------------------------------------------------------------
# action on the localized Verma module M(lambda)_f with basis f^m v, m in Z


def act_localized(u: LocalizedElement, lam, m: int) -> Dict[int, Scalar]:
    """u . f^m v in M(lambda)_f, as {exponent: coefficient}."""
    lam = as_scalar(lam)
    out: Dict[int, Scalar] = {}
    for (i, j, k), c in u.terms.items():
        p = m + k
        coeff = c * (lam - 2 * p) ** j
        for _ in range(i):
            # e f^p v = p (lam - p + 1) f^(p-1) v
            coeff = coeff * p * (lam - p + 1)
            p -= 1
        if not coeff.is_zero():
            _accumulate(out, p, coeff)
    return _clean(out)


@dataclass(frozen=True)
class TwistRow:
    k: Scalar
    generator: str
    coefficient: Scalar
    target: Scalar


@dataclass(frozen=True)
class TwistedModule:
    """Window of the twisted localization of L(lambda) at f by mu.

    The basis vector with label k (k in -mu + Z) is f^(k + mu) v of the
    localized module; a generator g acts through phi_mu(g).
    """

    lam: Scalar
    mu: Scalar
    lo: int
    hi: int
    rows: Tuple[TwistRow, ...]

    def labels(self) -> List[Scalar]:
        return [as_scalar(m) - self.mu for m in range(self.lo, self.hi + 1)]

    def weight(self, k) -> Scalar:
        return self.lam - 2 * as_scalar(k)

    def fe_eigenvalue(self, k) -> Scalar:
        """Scalar by which phi(f) phi(e) acts on the vector labelled k."""
        m = as_integer(as_scalar(k) + self.mu)
        u = phi(F, self.mu) * phi(E, self.mu)
        res = act_localized(u, self.lam, m)
        extra = set(res) - {m}
        if extra:
            raise ArithmeticError(f"fe moved the weight at k={k}")
        return res.get(m, ZERO)

    def degree(self) -> int:
        dims: Dict[Scalar, int] = {}
        for k in self.labels():
            w = self.weight(k)
            dims[w] = dims.get(w, 0) + 1
        return max(dims.values())

    def relations_hold(self) -> bool:
        """sl2 relations on interior vectors, via the twisted action."""
        gens = {g: phi(x, self.mu) for g, x in GENERATORS.items()}
        checks = (
            (commutator(gens["e"], gens["f"]), gens["h"]),
            (commutator(gens["h"], gens["e"]), 2 * gens["e"]),
            (commutator(gens["h"], gens["f"]), -2 * gens["f"]),
        )
        for m in range(self.lo + 1, self.hi):
            for lhs, rhs in checks:
                if act_localized(lhs, self.lam, m) != act_localized(rhs, self.lam, m):
                    return False
        return True

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "generator", "coefficient"])
        for r in self.rows:
            w.writerow([r.k, r.generator, r.coefficient])
        return buf.getvalue()


def twist_highest_weight(lam, mu, window: Sequence[int] = (-5, 5)) -> TwistedModule:
    """Action of e, f, h on the twisted localization of L(lambda) at f.

    ``lam`` must not be a nonnegative integer, otherwise f is not injective
    on L(lambda).  With mu = 0 the rows with k >= 0 are the action on
    L(lambda) = M(lambda) itself.
    """
    lam, mu = as_scalar(lam), as_scalar(mu)
    n = as_integer(lam)
    if n is not None and n >= 0:
        raise ValueError(f"f acts nilpotently on L({lam}); nothing to localize")
    lo, hi = window
    if lo > hi:
        raise ValueError("empty window")
    rows = []
    for m in range(lo, hi + 1):
        k = m - mu
        for g in ("e", "f", "h"):
            res = act_localized(phi(GENERATORS[g], mu), lam, m)
            if len(res) > 1:
                raise ArithmeticError(f"{g} is not homogeneous on f^{m} v")
            if not res:
                target = k + {"e": -1, "f": 1, "h": 0}[g]
                rows.append(TwistRow(k, g, ZERO, target))
                continue
            ((p, c),) = res.items()
            rows.append(TwistRow(k, g, c, as_scalar(p) - mu))
    return TwistedModule(lam, mu, lo, hi, tuple(rows))


def family_identification(lam, k) -> Tuple[Scalar, Scalar]:
    """(a, s) with the twisted vector labelled k matching x^s in V(a).

    fe acts by k (lambda - k + 1) on the twisted vector and by
    (a + s)(a - s - 1) on x^s; a = lambda/2 + 1, s = lambda/2 - k match
    both this and the h-eigenvalue lambda - 2k = 2s.
    """
    lam, k = as_scalar(lam), as_scalar(k)
    half = lam / 2
    return half + 1, half - k


# ---------------------------------------------------------------------------
# the g_0 cube: three commuting copies of sl2

CubeMono = Tuple[Mono, Mono, Mono]


@dataclass(frozen=True)
class CubeElement:
    terms: Mapping[CubeMono, Scalar]

    def __post_init__(self):
        object.__setattr__(
            self, "terms", _clean({m: as_scalar(c) for m, c in self.terms.items()})
        )

    @classmethod
    def pure(cls, factors: Sequence[LocalizedElement]) -> "CubeElement":
        out: Dict[CubeMono, Scalar] = {(): ONE}
        for x in factors:
            nxt: Dict = {}
            for m, c in out.items():
                for mx, cx in x.terms.items():
                    _accumulate(nxt, m + (mx,), c * cx)
            out = nxt
        return cls(out)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return CubeElement(out)


def phi_component(u: CubeElement, i: int, mu) -> CubeElement:
    """Twist the i-th tensor factor (0-based) by mu."""
    out = CubeElement({})
    for m, c in u.terms.items():
        twisted = phi(LocalizedElement.monomial(*m[i]), mu)
        factors = [LocalizedElement.monomial(*x) for x in m]
        factors[i] = twisted * c
        out = out + CubeElement.pure(factors)
    return out


def cube_twist(u: CubeElement, mus: Sequence, order: Sequence[int] = (0, 1, 2)) -> CubeElement:
    for i in order:
        u = phi_component(u, i, mus[i])
    return u
