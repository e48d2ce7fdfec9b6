"""A 17-dimensional model of D(2,1;a) with structure constants in Q(a).

The even part is sl2 x sl2 x sl2 with standard triples (E_k, F_k, H_k); the
odd part is V x V x V, V the two-dimensional sl2-module with basis v+, v-.
The odd-odd bracket is

    [u1 u2 u3, v1 v2 v3] = sum_k s_k * prod_{j != k} psi(u_j, v_j) * p(u_k, v_k)

with psi the symplectic form psi(v+, v-) = 1, p(u, v) w = psi(u, w) v + psi(v, w) u,
and weights s = (-1-a, a, 1) / 2 (they sum to zero, which is what the
super-Jacobi identity on three odd vectors needs).  The odd basis is then
rescaled so that e_i, f_i, h_i = [e_i, f_i] reproduce the Cartan matrix.

Sign and scale conventions (the remaining freedom):

==========  ==================================================
vector      choice
==========  ==================================================
e_i, e123   raw tensor vector of that weight, scale 1
f_i         raw tensor vector rescaled so [e_i, f_i] = h_i
f123        raw tensor vector, scale 1
E, F, H     standard sl2 triple in each factor
==========  ==================================================
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from .arith import ALPHA, ONE, ZERO, Scalar, as_scalar
from .rootsys import EVEN, ODD, cartan_matrix

Element = Dict[int, Scalar]

_SIGNS = (1, -1)


def _odd_weight(s) -> Tuple[int, int, int]:
    """b-coordinates of the odd weight sum_k s_k eps_k."""
    s1, s2, s3 = s
    return ((s2 + s3) // 2, (s1 + s3) // 2, (s1 + s2) // 2)


def _psi(u: int, v: int) -> int:
    if u == v:
        return 0
    return 1 if u == 1 else -1


def _p(u: int, v: int):
    """p(u, v) as a dict over ('E', 'F', 'H')."""
    if u == v == 1:
        return {"E": 2}
    if u == v == -1:
        return {"F": -2}
    return {"H": -1}


class AlgebraTable:
    """Basis, parities, weights and structure constants of D(2,1;a).

    ``brackets[(i, j)]`` is the sparse expansion of [b_i, b_j].
    """

    def __init__(self, labels, parities, weights, brackets, alpha):
        self.labels: Tuple[str, ...] = tuple(labels)
        self.parities: Tuple[int, ...] = tuple(parities)
        self.weights: Tuple[Tuple[int, int, int], ...] = tuple(weights)
        self.brackets: Dict[Tuple[int, int], Element] = brackets
        self.alpha: Scalar = alpha
        self.index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.dim

    def element(self, label: str, coef=ONE) -> Element:
        return {self.index[label]: as_scalar(coef)}

    def basis_bracket(self, i: int, j: int) -> Element:
        return self.brackets.get((i, j), {})

    def bracket(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.brackets.get((i, j), {}).items():
                    out[k] = out.get(k, ZERO) + a * b * c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def parity_of(self, x: Element) -> int:
        ps = {self.parities[i] for i in x}
        if len(ps) > 1:
            raise ValueError("element is not homogeneous")
        return ps.pop() if ps else EVEN

    def format(self, x: Element) -> str:
        if not x:
            return "0"
        return " + ".join(f"{x[i]}*{self.labels[i]}" for i in sorted(x))

    def cartan_indices(self) -> List[int]:
        return [i for i, w in enumerate(self.weights) if w == (0, 0, 0)]

    def root_vector(self, weight) -> int:
        weight = tuple(weight)
        for i, w in enumerate(self.weights):
            if w == weight:
                return i
        raise KeyError(f"no root vector of weight {weight}")

    def export_text(self) -> str:
        """Tab-separated lines ``x  y  z  c`` meaning [x, y] has coefficient c on z."""
        lines = []
        for (i, j) in sorted(self.brackets):
            for k, c in sorted(self.brackets[(i, j)].items()):
                lines.append(f"{self.labels[i]}\t{self.labels[j]}\t{self.labels[k]}\t{c}")
        return "\n".join(lines) + "\n"


def _add_into(out: Element, k: int, c: Scalar) -> None:
    v = out.get(k, ZERO) + c
    if v.is_zero():
        out.pop(k, None)
    else:
        out[k] = v


def _raw_table(alpha: Scalar):
    """The tensor-cube model before rescaling to Chevalley generators."""
    labels: List[str] = []
    parities: List[int] = []
    weights: List[Tuple[int, int, int]] = []
    even_simple = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    for k in range(3):
        labels += [f"E{k + 1}", f"F{k + 1}", f"H{k + 1}"]
        a = even_simple[k]
        weights += [a, tuple(-x for x in a), (0, 0, 0)]
        parities += [EVEN] * 3
    odd_keys = list(product((1, -1), repeat=3))
    for s in odd_keys:
        labels.append("x" + "".join("+" if t > 0 else "-" for t in s))
        parities.append(ODD)
        weights.append(_odd_weight(s))
    idx = {lab: i for i, lab in enumerate(labels)}
    odd_index = {s: idx["x" + "".join("+" if t > 0 else "-" for t in s)] for s in odd_keys}

    sigma = ((-alpha - 1) / 2, alpha / 2, ONE / 2)
    br: Dict[Tuple[int, int], Element] = {}

    def put(i, j, k, c):
        c = as_scalar(c)
        if c.is_zero():
            return
        _add_into(br.setdefault((i, j), {}), k, c)

    # even-even
    for k in range(3):
        E, F, H = idx[f"E{k + 1}"], idx[f"F{k + 1}"], idx[f"H{k + 1}"]
        put(E, F, H, 1)
        put(F, E, H, -1)
        put(H, E, E, 2)
        put(E, H, E, -2)
        put(H, F, F, -2)
        put(F, H, F, 2)

    # even-odd: sl2 acting on the k-th tensor factor
    for k in range(3):
        E, F, H = idx[f"E{k + 1}"], idx[f"F{k + 1}"], idx[f"H{k + 1}"]
        for s in odd_keys:
            i = odd_index[s]
            put(H, i, i, s[k])
            put(i, H, i, -s[k])
            if s[k] == -1:
                t = list(s)
                t[k] = 1
                put(E, i, odd_index[tuple(t)], 1)
                put(i, E, odd_index[tuple(t)], -1)
            else:
                t = list(s)
                t[k] = -1
                put(F, i, odd_index[tuple(t)], 1)
                put(i, F, odd_index[tuple(t)], -1)

    # odd-odd
    for s in odd_keys:
        for t in odd_keys:
            i, j = odd_index[s], odd_index[t]
            for k in range(3):
                coef = sigma[k]
                for m in range(3):
                    if m != k:
                        coef = coef * _psi(s[m], t[m])
                if coef.is_zero():
                    continue
                for name, c in _p(s[k], t[k]).items():
                    put(i, j, idx[f"{name}{k + 1}"], coef * c)

    br = {key: val for key, val in br.items() if val}
    return labels, parities, weights, br


_CHEVALLEY_ORDER = (
    "E1", "E2", "E3", "H1", "H2", "H3", "F1", "F2", "F3",
    "e1", "e2", "e3", "e123", "f1", "f2", "f3", "f123",
)


def _odd_label(w) -> str:
    names = {(1, 0, 0): "1", (0, 1, 0): "2", (0, 0, 1): "3", (1, 1, 1): "123"}
    if w in names:
        return "e" + names[w]
    return "f" + names[tuple(-x for x in w)]


@lru_cache(maxsize=None)
def build_algebra(alpha=ALPHA) -> AlgebraTable:
    """D(2,1;alpha) in a Chevalley-normalized basis.

    ``alpha`` may be the symbolic parameter or any rational other than 0, -1.
    """
    alpha = as_scalar(alpha)
    if alpha.is_zero() or (alpha + 1).is_zero():
        raise ValueError("alpha must avoid 0 and -1")
    labels, parities, weights, br = _raw_table(alpha)
    raw_idx = {lab: i for i, lab in enumerate(labels)}
    raw = AlgebraTable(labels, parities, weights, br, alpha)

    # new label for every raw basis vector
    rename = {}
    for i, lab in enumerate(labels):
        rename[i] = _odd_label(weights[i]) if parities[i] == ODD else lab

    # scale factors: new basis vector = scale * raw vector
    scale = {i: ONE for i in range(len(labels))}
    A = cartan_matrix(alpha)
    B = ((-1, 1, 1), (1, -1, 1), (1, 1, -1))  # B[j][k] = b_j(H_k)
    simple = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for i, w in enumerate(simple):
        e = raw.root_vector(w)
        f = raw.root_vector(tuple(-x for x in w))
        h = raw.basis_bracket(e, f)
        vals = [sum((h.get(raw_idx[f"H{k + 1}"], ZERO) * B[j][k] for k in range(3)), ZERO) for j in range(3)]
        # vals = b_j([e_i, f_i]); need t * vals == A[i]
        t: Optional[Scalar] = None
        for j in range(3):
            if not vals[j].is_zero():
                t = A[i][j] / vals[j]
                break
        if t is None or any(t * vals[j] != A[i][j] for j in range(3)):
            raise RuntimeError(f"cannot normalize generators for simple root {i + 1}")
        scale[f] = t

    order = {lab: n for n, lab in enumerate(_CHEVALLEY_ORDER)}
    perm = sorted(range(len(labels)), key=lambda i: order[rename[i]])
    new_of_raw = {raw_i: new_i for new_i, raw_i in enumerate(perm)}
    new_br: Dict[Tuple[int, int], Element] = {}
    for (i, j), val in br.items():
        out = {}
        for k, c in val.items():
            out[new_of_raw[k]] = c * scale[i] * scale[j] / scale[k]
        new_br[(new_of_raw[i], new_of_raw[j])] = out
    return AlgebraTable(
        [rename[i] for i in perm],
        [parities[i] for i in perm],
        [weights[i] for i in perm],
        new_br,
        alpha,
    )


def chevalley_generators(table: AlgebraTable) -> Dict[str, Element]:
    """{'e1': ..., 'f1': ..., 'h1': [e1, f1], ...} with b_j(h_i) = A_ij checked."""
    gens: Dict[str, Element] = {}
    A = cartan_matrix(table.alpha)
    for i in range(1, 4):
        e = table.element(f"e{i}")
        f = table.element(f"f{i}")
        gens[f"e{i}"] = e
        gens[f"f{i}"] = f
        gens[f"h{i}"] = table.bracket(e, f)
    for i in range(1, 4):
        for j in range(1, 4):
            got = root_value(table, (1 if j == 1 else 0, 1 if j == 2 else 0, 1 if j == 3 else 0), gens[f"h{i}"])
            if got != A[i - 1][j - 1]:
                raise RuntimeError(f"b_{j}(h_{i}) = {got}, expected {A[i - 1][j - 1]}")
    return gens


def root_value(table: AlgebraTable, root_coords, h: Element) -> Scalar:
    """gamma(h) for a Cartan element h, via [h, x_gamma] = gamma(h) x_gamma."""
    x = table.root_vector(root_coords)
    out = table.bracket(h, {x: ONE})
    if not out:
        return ZERO
    if set(out) != {x}:
        raise RuntimeError("Cartan element does not act diagonally")
    return out[x]


def cartan_eigenvalues(table: AlgebraTable, root_coords) -> Tuple[Scalar, Scalar, Scalar]:
    """(gamma(H1), gamma(H2), gamma(H3)) for a root gamma."""
    return tuple(root_value(table, root_coords, table.element(f"H{k}")) for k in (1, 2, 3))


def bracket(table: AlgebraTable, x: Element, y: Element) -> Element:
    return table.bracket(x, y)


def _sign(p: int, q: int) -> int:
    return -1 if (p and q) else 1


def jacobi_residual(table: AlgebraTable, i: int, j: int, k: int) -> Element:
    """[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]] on basis vectors."""
    x, y, z = {i: ONE}, {j: ONE}, {k: ONE}
    px, py = table.parities[i], table.parities[j]
    out: Element = {}
    for key, c in table.bracket(x, table.bracket(y, z)).items():
        _add_into(out, key, c)
    for key, c in table.bracket(table.bracket(x, y), z).items():
        _add_into(out, key, -c)
    s = _sign(px, py)
    for key, c in table.bracket(y, table.bracket(x, z)).items():
        _add_into(out, key, -s * c)
    return out


def supercommutativity_defects(table: AlgebraTable) -> List[Tuple[int, int]]:
    bad = []
    n = table.dim
    for i in range(n):
        for j in range(n):
            s = -_sign(table.parities[i], table.parities[j])
            lhs = table.basis_bracket(i, j)
            rhs = {k: s * c for k, c in table.basis_bracket(j, i).items()}
            if lhs != rhs:
                bad.append((i, j))
    return bad


def grading_defects(table: AlgebraTable) -> List[Tuple[int, int]]:
    """Pairs whose bracket leaves g_{gamma+delta}."""
    bad = []
    n = table.dim
    for i in range(n):
        for j in range(n):
            w = tuple(a + b for a, b in zip(table.weights[i], table.weights[j]))
            for k in table.basis_bracket(i, j):
                if table.weights[k] != w:
                    bad.append((i, j))
                    break
    return bad


def jacobi_failures(table: AlgebraTable) -> List[Tuple[int, int, int]]:
    n = table.dim
    return [(i, j, k) for i in range(n) for j in range(n) for k in range(n) if jacobi_residual(table, i, j, k)]


@lru_cache(maxsize=None)
def anti_involution(table: AlgebraTable) -> Tuple[Element, ...]:
    """The anti-automorphism fixing the Cartan pointwise with e_i <-> f_i.

    Satisfies omega([x, y]) = [omega(y), omega(x)]; returned as the image of
    every basis vector.
    """
    omega: Dict[int, Element] = {}
    for i in (1, 2, 3):
        omega[table.index[f"e{i}"]] = table.element(f"f{i}")
        omega[table.index[f"f{i}"]] = table.element(f"e{i}")
    for i in table.cartan_indices():
        omega[i] = {i: ONE}
    gens = [table.index[f"{c}{i}"] for c in "ef" for i in (1, 2, 3)]
    while len(omega) < table.dim:
        progress = False
        for b in range(table.dim):
            if b in omega:
                continue
            for g in gens:
                for y in list(omega):
                    br = table.basis_bracket(g, y)
                    if b in br and len(br) == 1:
                        omega[b] = {k: v / br[b] for k, v in table.bracket(omega[y], omega[g]).items()}
                        break
                if b in omega:
                    break
            progress = progress or b in omega
        if not progress:
            raise RuntimeError("anti-involution does not reach every basis vector")
    return tuple(omega[i] for i in range(table.dim))
