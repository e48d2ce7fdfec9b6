"""Batch command-line front end.

    python -m d21a report --alpha symbolic --lambda "1/3,1/3,1/3"
    python -m d21a char --cutoff 8 --format csv
    python -m d21a gram --alpha 2 --lambda "1,2,3" --weight 1,1,1
    python -m d21a family --a 1/2 --mu 0
    python -m d21a twist --lambda 1/3 --mu 1/2
    python -m d21a selftest
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, List, Optional, Sequence, Tuple

from .arith import ALPHA, Scalar, ScalarSyntaxError, parse_scalar, substitute
from .charseries import stabilized_degree, verma_character, induced_degree
from .criteria import classify
from .rootsys import DISTINGUISHED, Weight, reachable_bases
from .verma import format_monomial, gram, rank_table

COMMANDS = ("report", "char", "gram", "family", "twist", "selftest")
FORMATS = ("text", "json", "csv")


class UsageError(ValueError):
    """A request that cannot be run."""


@dataclass(frozen=True)
class ReportRequest:
    command: str
    alpha: Optional[Scalar]  # None means symbolic
    lam: Tuple[Scalar, ...]
    cutoff: Optional[int]
    weight: Optional[Tuple[int, int, int]]
    a: Optional[Scalar]
    mu: Optional[Scalar]
    fmt: str = "text"

    @property
    def alpha_value(self) -> Scalar:
        return ALPHA if self.alpha is None else self.alpha

    @property
    def alpha_label(self) -> str:
        return "symbolic" if self.alpha is None else str(self.alpha)


def _scalar(text: str, what: str) -> Scalar:
    try:
        return parse_scalar(text)
    except ScalarSyntaxError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _parse_alpha(text: str) -> Optional[Scalar]:
    if text.strip().lower() == "symbolic":
        return None
    x = _scalar(text, "--alpha")
    if not x.is_constant():
        raise UsageError("--alpha must be 'symbolic' or a rational number")
    if x.constant() in (0, -1):
        raise UsageError(f"alpha = {x} is excluded")
    return x


def _parse_triple_ints(text: str) -> Tuple[int, int, int]:
    parts = [p.strip() for p in text.split(",")]
    try:
        nu = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"--weight {text!r} is not a triple of integers") from None
    if len(nu) != 3 or min(nu) < 0:
        raise UsageError(f"--weight {text!r} must be three nonnegative integers")
    return nu


def build_request(ns: argparse.Namespace) -> ReportRequest:
    alpha = _parse_alpha(ns.alpha)
    lam = tuple(_scalar(p, "--lambda") for p in ns.lam.split(",")) if ns.lam else ()
    if alpha is not None:
        lam = tuple(substitute(x, alpha.constant()) for x in lam)
    if ns.cutoff is not None and ns.cutoff < 0:
        raise UsageError("--cutoff must be nonnegative")
    weight = _parse_triple_ints(ns.weight) if ns.weight else None
    a = _scalar(ns.a, "--a") if ns.a is not None else None
    mu = _scalar(ns.mu, "--mu") if ns.mu is not None else None
    return ReportRequest(ns.command, alpha, lam, ns.cutoff, weight, a, mu, ns.format)


def _need_weight(req: ReportRequest) -> Weight:
    if len(req.lam) != 3:
        raise UsageError("--lambda needs three comma-separated scalars")
    return Weight(req.lam)


def _csv_rows(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows([[str(x) for x in r] for r in rows])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands; each returns (record, csv text, text lines)


def cmd_report(req: ReportRequest):
    lam = _need_weight(req)
    rep = classify(lam, req.alpha_value)
    record = {"alpha": req.alpha_label, "lambda": [str(x) for x in lam.coords]}
    record.update(rep.as_record())
    table = None
    if req.alpha is not None:
        box = 4 if req.cutoff is None else req.cutoff
        table = rank_table(lam, box, req.alpha)
        record["degree_table"] = {
            "box": box,
            "verma_degree": max(d for d, _ in table.rows.values()),
            "simple_degree": table.max_rank(),
            "drops": len(table.drops()),
        }
    lines = [f"{k}: {v}" for k, v in record.items()]
    text_csv = table.to_csv() if table else _csv_rows(
        ["typical", "c1", "c2", "c3", "zero_count", "inj_full", "predicted_degree"],
        [[rep.typical, *rep.c, rep.zero_count, rep.inj_full, rep.predicted_degree]],
    )
    return record, text_csv, lines


def cmd_char(req: ReportRequest):
    N = 8 if req.cutoff is None else req.cutoff
    ch = verma_character(DISTINGUISHED, N)
    bases = []
    for b in reachable_bases():
        s = stabilized_degree(b, N)
        bases.append({
            "base": str(b),
            "degree": s.degree,
            "graded": list(s.graded),
            "parity_checked": s.checked,
            "parity_violations": len(s.violations),
        })
    record = {
        "cutoff": N,
        "degree": bases[0]["degree"],
        "graded": bases[0]["graded"],
        "bases": bases,
        "entries": [[*m, d0, d1] for m, (d0, d1) in ch.items() if d0 or d1],
    }
    lines = [f"cutoff: {N}"]
    for b in bases:
        lines.append(
            f"{b['base']}: degree {b['degree']}, graded {tuple(b['graded'])}, "
            f"parity law {b['parity_checked'] - b['parity_violations']}/{b['parity_checked']}"
        )
    return record, ch.to_csv(), lines


def cmd_gram(req: ReportRequest):
    lam = _need_weight(req)
    if req.weight is None:
        raise UsageError("gram needs --weight m1,m2,m3")
    g = gram(lam, req.weight, req.alpha_value)
    rank = g.rank()
    record = {
        "alpha": req.alpha_label,
        "lambda": [str(x) for x in lam.coords],
        "weight": list(req.weight),
        "basis": [format_monomial(m) for m in g.basis],
        "matrix": [[str(x) for x in row] for row in g.entries],
        "size": g.size,
        "rank": rank,
    }
    lines = [f"weight {req.weight}: size {g.size}, rank {rank}"]
    for m, row in zip(record["basis"], record["matrix"]):
        lines.append(f"  {m}: " + "  ".join(row))
    return record, g.to_csv(), lines


def _window(req: ReportRequest) -> Tuple[int, int]:
    w = 5 if req.cutoff is None else req.cutoff
    return -w, w


def cmd_family(req: ReportRequest):
    from .sl2fam import FamilyPoint, annihilated_vectors, casimir_scalar, verify_sl2_relations

    if req.a is None:
        raise UsageError("family needs --a")
    mu = req.mu if req.mu is not None else Scalar(0)
    point = FamilyPoint(req.a, mu, *_window(req))
    record = {
        "a": str(point.a),
        "mu": str(point.mu),
        "window": [point.lo, point.hi],
        "simple_cuspidal": point.cuspidal,
        "casimir": str(casimir_scalar(point.a, (point.lo, point.hi), mu)),
        "relations": verify_sl2_relations(point),
        "annihilated": [[str(s), g] for s, g in annihilated_vectors(point)],
        "action": [[str(s), g, str(c)] for s, g, c in point.action_table()],
    }
    lines = [f"{k}: {v}" for k, v in record.items() if k != "action"]
    lines += [f"  {g}.x^{s} = {c}" for s, g, c in record["action"]]
    return record, point.to_csv(), lines


def cmd_twist(req: ReportRequest):
    from .twistloc import check_homomorphism, twist_highest_weight

    if len(req.lam) != 1:
        raise UsageError("twist needs --lambda with a single sl2 highest weight")
    mu = req.mu if req.mu is not None else Scalar(0)
    try:
        T = twist_highest_weight(req.lam[0], mu, _window(req))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {
        "lambda": str(T.lam),
        "mu": str(T.mu),
        "window": [T.lo, T.hi],
        "homomorphism": check_homomorphism(mu),
        "relations": T.relations_hold(),
        "degree": T.degree(),
        "action": [[str(r.k), r.generator, str(r.coefficient), str(r.target)] for r in T.rows],
    }
    lines = [f"{k}: {v}" for k, v in record.items() if k != "action"]
    lines += [f"  {g} on k={k}: {c} -> k={t}" for k, g, c, t in record["action"]]
    return record, T.to_csv(), lines


def selftest_checks() -> List[Tuple[str, Callable[[], bool]]]:
    from . import oracle, sl2fam, superalg, twistloc
    from .charseries import verma_character as vc

    def jacobi():
        t = superalg.build_algebra(ALPHA)
        superalg.chevalley_generators(t)
        return not superalg.jacobi_failures(t)

    def degrees():
        found = [stabilized_degree(b, 8) for b in reachable_bases()]
        return all(s.degree == 8 and s.graded == (8, 8) and s.parity_law_holds for s in found)

    def oracle_char():
        ch = vc(DISTINGUISHED, 5)
        return all(ch[m] == oracle.enum_multiplicity(m) for m in product(range(6), repeat=3))

    def induced():
        return induced_degree() == {0: 128, 1: 128}

    def typical_rank():
        lam = Weight([Fraction(1, 3)] * 3)
        return all(r == d for d, r in rank_table(lam, 3, Fraction(2)).rows.values())

    def family():
        p = sl2fam.FamilyPoint(ALPHA, Fraction(1, 3))
        return sl2fam.verify_sl2_relations(p) and sl2fam.casimir_scalar(ALPHA) == 4 * ALPHA * ALPHA - 4 * ALPHA

    def twist():
        return all(twistloc.check_homomorphism(m) for m in (0, 1, -1, Fraction(1, 2), ALPHA))

    return [
        ("algebra: super-Jacobi and Cartan matrix", jacobi),
        ("character: degree 8, graded (8,8) on all bases", degrees),
        ("character: oracle agreement on [0,5]^3", oracle_char),
        ("induced degree 128 per coset", induced),
        ("typical Gram ranks are full", typical_rank),
        ("sl2 family relations and Casimir", family),
        ("twist is a homomorphism", twist),
    ]


def cmd_selftest(req: ReportRequest):
    results = []
    for name, check in selftest_checks():
        try:
            ok = bool(check())
        except Exception as exc:  # a crash is a failure, reported by name
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        results.append({"check": name, "passed": ok})
    record = {"passed": all(r["passed"] for r in results), "checks": results}
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']}" for r in results]
    text_csv = _csv_rows(["check", "passed"], [[r["check"], r["passed"]] for r in results])
    return record, text_csv, lines


HANDLERS = {
    "report": cmd_report,
    "char": cmd_char,
    "gram": cmd_gram,
    "family": cmd_family,
    "twist": cmd_twist,
    "selftest": cmd_selftest,
}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="d21a", description="Weight modules of D(2,1;alpha).")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--alpha", default="symbolic", help="'symbolic' or a rational number")
    p.add_argument("--lambda", dest="lam", default=None, help="comma-separated scalars")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--weight", default=None, help="nu as m1,m2,m3")
    p.add_argument("--a", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    return p


def run(req: ReportRequest) -> Tuple[int, str]:
    record, csv_text, lines = HANDLERS[req.command](req)
    if req.fmt == "json":
        out = json.dumps(record, indent=2) + "\n"
    elif req.fmt == "csv":
        out = csv_text
    else:
        out = "\n".join(lines) + "\n"
    status = 0
    if req.command == "selftest" and not record["passed"]:
        status = 1
    return status, out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = make_parser().parse_args(argv)
    try:
        req = build_request(ns)
        status, out = run(req)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
