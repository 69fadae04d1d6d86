"""Command line front end.

    veronese-type "7;4,3,2,1,1" --all
    veronese-type "5;3,2,1" --assoc --oracle --json
    veronese-type --bases bases.txt --radical --equidim

Exit status: 0 success, 1 usage or domain error, 2 closed form and oracle
disagree.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field, fields
from math import prod
from typing import Any

from . import oracle as oracle_mod
from . import polymatroid as pm
from . import stable, veronese
from .core import Monomial, colon, contains, prime_indices, radical
from .errors import BudgetError, VeroneseTypeError, ZeroIdealError

log = logging.getLogger("veronese_type")

SCHEMA_VERSION = 1
ACTIONS = ("radical", "borel", "mb", "equidim", "pair", "assoc", "unmixed", "classify", "dual")


class UsageError(VeroneseTypeError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass
class Request:
    params: pm.VeroneseParams | None = None
    bases: pm.BaseSet | None = None
    actions: tuple[str, ...] = ()
    oracle_check: bool = False
    output_format: str = "text"
    inject_fault: str | None = None


@dataclass
class Report:
    """Everything one run produced, in the JSON-compatible shape it is emitted in."""

    input: dict[str, Any]
    schema: int = SCHEMA_VERSION
    normal_form: dict[str, Any] | None = None
    polymatroid: dict[str, Any] | None = None
    radical: list[list[int]] | None = None
    borel: list[list[int]] | None = None
    m: int | None = None
    b: int | None = None
    equidimensional: dict[str, Any] | None = None
    maximal_pair: dict[str, Any] | None = None
    associated_primes: list[dict[str, Any]] | None = None
    unmixed: bool | None = None
    class_: str | None = None
    dual: dict[str, Any] | None = None
    oracle: dict[str, Any] = field(default_factory=lambda: {"checked": False, "agreed": None})

    def to_dict(self) -> dict[str, Any]:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                out[f.name.rstrip("_")] = value
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Report:
        kwargs = {f.name: data[f.name.rstrip("_")] for f in fields(cls) if f.name.rstrip("_") in data}
        return cls(**kwargs)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def parse_params(text: str) -> pm.VeroneseParams:
    """Parse ``d ; a_1 , ... , a_n`` (whitespace is ignored)."""
    numbers: list[int] = []
    seps: list[str] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if len(numbers) > len(seps):
                raise UsageError("expected ';' or ','", start)
            numbers.append(int(text[start:pos]))
        elif ch in ";,":
            expected = ";" if not seps else ","
            if len(numbers) != len(seps) + 1 or ch != expected:
                raise UsageError(f"unexpected {ch!r}", pos)
            seps.append(ch)
            pos += 1
        else:
            raise UsageError(f"unexpected character {ch!r}", pos)
    if not numbers:
        raise UsageError("expected 'd;a_1,...,a_n'", 0)
    if len(numbers) == len(seps) or not seps:
        raise UsageError("incomplete parameters, expected 'd;a_1,...,a_n'", len(text))
    try:
        params = pm.VeroneseParams(numbers[0], tuple(numbers[1:]))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not params.is_feasible():
        raise ZeroIdealError(
            f"the ideal is zero: the caps must satisfy a_1 + ... + a_n >= d, "
            f"but {' + '.join(map(str, params.a))} = {sum(params.a)} < {params.d}"
        )
    return params


def parse_bases_file(path: str) -> pm.BaseSet:
    vectors = []
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        try:
            vectors.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise UsageError(f"{path}:{lineno}: not a vector of integers") from None
    return pm.BaseSet(tuple(vectors))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="veronese-type",
        description="Analyse ideals of Veronese type I_{d;a_1,...,a_n} or explicit polymatroid base sets.",
    )
    parser.add_argument("params", nargs="*", help="'d;a_1,...,a_n' (quote it in the shell)")
    parser.add_argument("--bases", metavar="FILE", help="file with one base vector per line")
    for action in ACTIONS:
        parser.add_argument(f"--{action}", action="store_true")
    parser.add_argument("--all", action="store_true", help="run every action")
    parser.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    parser.add_argument("--json", action="store_true", help="emit the structured report")
    parser.add_argument("--inject-fault", choices=ACTIONS, help=argparse.SUPPRESS)
    return parser


def parse_request(argv: list[str]) -> Request:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    actions = ACTIONS if ns.all else tuple(a for a in ACTIONS if getattr(ns, a))
    if not actions:
        raise UsageError("no action requested; use --all or one of " + ", ".join(f"--{a}" for a in ACTIONS))
    req = Request(
        actions=actions,
        oracle_check=ns.oracle,
        output_format="structured" if ns.json else "text",
        inject_fault=ns.inject_fault,
    )
    if ns.bases:
        if ns.params:
            raise UsageError("give either parameters or --bases, not both")
        req.bases = parse_bases_file(ns.bases)
    else:
        if not ns.params:
            raise UsageError("missing parameters 'd;a_1,...,a_n'")
        req.params = parse_params("".join(ns.params))
    return req


def _sets(sets) -> list[list[int]]:
    return [list(A) for A in sets]


def _params_dict(p: pm.VeroneseParams | None) -> dict[str, Any] | None:
    return None if p is None else {"d": p.d, "a": list(p.a)}


def _check(report: Report, name: str, closed, brute) -> None:
    ok = closed == brute
    report.oracle.setdefault("checks", {})[name] = ok
    if not ok:
        report.oracle.setdefault("discrepancies", []).append(
            {"check": name, "closed_form": closed, "oracle": brute}
        )


def _oracle_budget_guard(p: pm.VeroneseParams, budget: oracle_mod.OracleBudget) -> None:
    size = prod(min(x, p.d) + 1 for x in p.a)
    if size > budget.max_divisors:
        raise BudgetError(f"{size} candidate monomials exceed the oracle budget {budget.max_divisors}")
    if 2**p.n > budget.max_subsets:
        raise BudgetError(f"2^{p.n} subsets exceed the oracle budget {budget.max_subsets}")


def _corrupt(report: Report, action: str) -> None:
    """Deliberately break one closed-form result so the oracle must notice."""
    if action == "radical" and report.radical:
        report.radical = report.radical[:-1]
    elif action == "borel" and report.borel:
        report.borel = report.borel[:-1]
    elif action == "mb" and report.m is not None:
        report.m += 1
    elif action == "equidim" and report.equidimensional:
        report.equidimensional["verdict"] = not report.equidimensional["verdict"]
    elif action == "pair" and report.maximal_pair:
        report.maximal_pair["equidimensional"] = not report.maximal_pair["equidimensional"]
    elif action == "assoc" and report.associated_primes:
        report.associated_primes = report.associated_primes[:-1]
    elif action == "unmixed" and report.unmixed is not None:
        report.unmixed = not report.unmixed
    elif action == "classify" and report.class_ is not None:
        report.class_ = "Principal" if report.class_ == "NotCohenMacaulay" else "NotCohenMacaulay"
    elif action == "dual" and report.dual:
        report.dual["equigenerated"] = not report.dual["equigenerated"]


def _run_params(req: Request, report: Report) -> None:
    p = req.params
    nf = veronese.normalize(p)
    core = nf.core
    report.normal_form = {
        "permutation": list(nf.permutation),
        "trimmed_zero": list(nf.trimmed_zero_indices),
        "peeled": list(nf.peeled_full_indices),
        "sorted": _params_dict(nf.sorted),
        "core": _params_dict(core),
        "pure_veronese": nf.pure_veronese,
    }
    acts = set(req.actions)
    J = veronese.radical_ideal(core) if core is not None else None

    if "radical" in acts and J is not None:
        report.radical = _sets(J.gens)
    if "borel" in acts and J is not None:
        report.borel = _sets(stable.borel_generators(J))
    if "mb" in acts and J is not None:
        inv = stable.mb(J)
        report.m, report.b = inv.m, inv.b
    if "equidim" in acts:
        eq = veronese.is_equidimensional(p)
        report.equidimensional = {
            "verdict": eq.verdict,
            "cover_cardinality": eq.cover_cardinality,
            "evidence": {
                "reason": eq.reason,
                "failing_generator": None if eq.failing_generator is None else list(eq.failing_generator),
                "unique_top_borel": None if eq.unique_top_borel is None else list(eq.unique_top_borel),
            },
        }
    if "pair" in acts and core is not None:
        pr = veronese.maximal_pair(core)
        report.maximal_pair = {
            "pair": None if pr.pair is None else list(pr.pair),
            "condition_ii": pr.condition_ii,
            "violating": _sets(pr.violating),
            "equidimensional": pr.equidimensional,
        }
    if "assoc" in acts:
        report.associated_primes = [
            {"indices": list(wp.A), "witness_exponents": list(wp.witness)}
            for wp in veronese.associated_primes(nf.sorted)
        ]
    if "unmixed" in acts:
        report.unmixed = veronese.is_unmixed(p)
    if "classify" in acts:
        report.class_ = veronese.classify(p).value
    if "dual" in acts and J is not None:
        dual = stable.alexander_dual(J)
        report.dual = {
            "generators": _sets(dual.gens),
            "equigenerated": len({len(A) for A in dual.gens}) == 1,
            "strongly_stable": stable.is_squarefree_strongly_stable(dual),
        }

    if req.inject_fault:
        _corrupt(report, req.inject_fault)
    if req.oracle_check:
        _oracle_params(req, report, nf)


def _oracle_params(req: Request, report: Report, nf: veronese.NormalForm) -> None:
    budget = oracle_mod.DEFAULT_BUDGET
    _oracle_budget_guard(nf.sorted, budget)
    report.oracle = {"checked": True, "agreed": None, "checks": {}}
    acts = set(req.actions)
    I_sorted = pm.polymatroidal_ideal_unchecked(pm.veronese_bases(nf.sorted))
    covers = oracle_mod.minimal_vertex_covers(I_sorted, budget)
    equidim_brute = len({len(W) for W in covers}) == 1

    core_rad = None
    if nf.core is not None:
        core_ideal = pm.polymatroidal_ideal_unchecked(pm.veronese_bases(nf.core))
        core_rad = stable.SquarefreeIdeal.from_ideal(radical(core_ideal))

    if report.radical is not None:
        _check(report, "radical", report.radical, _sets(core_rad.gens))
    if report.borel is not None:
        closure = stable.strongly_stable_closure(report.borel, core_rad.n)
        _check(report, "borel", _sets(closure.gens), _sets(core_rad.gens))
    if report.m is not None:
        _check(report, "mb", [report.m, report.b],
               [max(A[-1] for A in core_rad.gens), max(len(A) for A in core_rad.gens)])
    if report.equidimensional is not None:
        _check(report, "equidim", report.equidimensional["verdict"], equidim_brute)
        if equidim_brute and report.equidimensional["verdict"]:
            _check(report, "cover_cardinality", report.equidimensional["cover_cardinality"], len(covers[0]))
    if report.maximal_pair is not None:
        _check(report, "pair", report.maximal_pair["equidimensional"], equidim_brute)
    if report.dual is not None:
        _check(report, "dual", report.dual["equigenerated"], equidim_brute)
    if acts & {"assoc", "unmixed", "classify"}:
        brute = oracle_mod.associated_primes_bruteforce(I_sorted, budget)
        unmixed_brute = {A for A, _ in brute} == set(covers)
        if report.associated_primes is not None:
            _check(report, "assoc", [ap["indices"] for ap in report.associated_primes],
                   [list(A) for A, _ in brute])
            for ap in report.associated_primes:
                z = Monomial(tuple(ap["witness_exponents"]))
                A = tuple(ap["indices"])
                valid = not contains(I_sorted, z) and prime_indices(colon(I_sorted, z)) == A
                _check(report, f"witness{list(A)}", valid, True)
        if report.unmixed is not None:
            _check(report, "unmixed", report.unmixed, unmixed_brute)
        if report.class_ is not None:
            _check(report, "classify", report.class_ != "NotCohenMacaulay", unmixed_brute)
    report.oracle["agreed"] = all(report.oracle["checks"].values())


def _run_bases(req: Request, report: Report) -> None:
    B = req.bases
    strong = pm.check_strong_exchange(B)
    info: dict[str, Any] = {
        "rank": B.rank,
        "exchange": pm.check_exchange(B),
        "strong_exchange": strong,
    }
    report.polymatroid = info
    if not info["exchange"]:
        raise pm.NotAPolymatroidError("the vectors do not satisfy the exchange property")
    if strong:
        u0, shifted = pm.translation_normalize(B)
        info["u0"] = list(u0)
        params = pm.as_veronese_params(shifted)
        info["veronese_params"] = _params_dict(params)
    acts = set(req.actions)
    if "radical" in acts:
        report.radical = _sets(pm.radical_via_rank(B).supports)
    if "equidim" in acts:
        if strong:
            report.equidimensional = {"verdict": veronese.strong_polymatroidal_equidimensional(B)}
        else:
            log.warning("equidim skipped: needs the strong exchange property")
    skipped = acts - {"radical", "equidim"}
    if skipped:
        log.warning("actions %s apply to Veronese parameters only; skipped", ", ".join(sorted(skipped)))

    if req.inject_fault:
        _corrupt(report, req.inject_fault)
    if req.oracle_check:
        I = pm.polymatroidal_ideal_unchecked(B)
        if 2**B.n > oracle_mod.DEFAULT_BUDGET.max_subsets:
            raise BudgetError(f"2^{B.n} subsets exceed the oracle budget")
        report.oracle = {"checked": True, "agreed": None, "checks": {}}
        if report.radical is not None:
            _check(report, "radical", report.radical, _sets(radical(I).supports))
        if report.equidimensional is not None:
            _check(report, "equidim", report.equidimensional["verdict"],
                   oracle_mod.is_equidimensional_bruteforce(I))
        report.oracle["agreed"] = all(report.oracle["checks"].values())


def run(req: Request) -> tuple[Report, int]:
    """Execute a request; returns the report and the exit status (0 or 2)."""
    if req.params is not None:
        report = Report(input=_params_dict(req.params))
        _run_params(req, report)
    else:
        report = Report(input={"bases": [list(v) for v in req.bases.vectors]})
        _run_bases(req, report)
    status = 2 if report.oracle.get("agreed") is False else 0
    return report, status


def _mono(A) -> str:
    return "".join(f"x{i}" for i in A) or "1"


def format_text(report: Report) -> str:
    lines = []
    inp = report.input
    if "d" in inp:
        lines.append(f"I_{{{inp['d']};{','.join(map(str, inp['a']))}}}")
    else:
        lines.append(f"polymatroidal ideal of {len(inp['bases'])} bases")
    nf = report.normal_form
    if nf:
        core = nf["core"]
        lines.append(f"  sorted caps: {nf['sorted']['a']} (variable order {nf['permutation']})")
        if nf["peeled"]:
            lines.append(f"  peeled caps equal to d: {nf['peeled']}")
        lines.append(f"  core: {'none' if core is None else str(core['d']) + ';' + ','.join(map(str, core['a']))}")
    if report.polymatroid:
        pmd = report.polymatroid
        lines.append(f"  rank {pmd['rank']}, exchange {pmd['exchange']}, strong exchange {pmd['strong_exchange']}")
        if "u0" in pmd:
            lines.append(f"  translation u0 = {pmd['u0']}")
    if report.radical is not None:
        lines.append(f"radical: ({', '.join(_mono(A) for A in report.radical)})  [{len(report.radical)} generators]")
    if report.borel is not None:
        lines.append(f"Borel generators: {{{', '.join(_mono(A) for A in report.borel)}}}  [{len(report.borel)}]")
    if report.m is not None:
        lines.append(f"m = {report.m}, b = {report.b}")
    if report.equidimensional is not None:
        eq = report.equidimensional
        line = f"equidimensional: {eq['verdict']}"
        if eq.get("cover_cardinality") is not None:
            line += f" (minimal vertex covers of size {eq['cover_cardinality']})"
        lines.append(line)
        ev = eq.get("evidence")
        if ev and ev.get("reason"):
            lines.append(f"  {ev['reason']}")
    if report.maximal_pair is not None:
        mp = report.maximal_pair
        lines.append(f"maximal pair: {None if mp['pair'] is None else tuple(mp['pair'])}, every generator within p - l: {mp['condition_ii']}")
        if mp["violating"]:
            shown = ", ".join(_mono(A) for A in mp["violating"][:5])
            more = "" if len(mp["violating"]) <= 5 else f", ... ({len(mp['violating'])} total)"
            lines.append(f"  violated by {shown}{more}")
    if report.associated_primes is not None:
        lines.append(f"associated primes: {len(report.associated_primes)}")
        for ap in report.associated_primes:
            prime = ", ".join(f"x{i}" for i in ap["indices"])
            lines.append(f"  ({prime}) = I : {Monomial(tuple(ap['witness_exponents']))}")
    if report.unmixed is not None:
        lines.append(f"unmixed: {report.unmixed}")
    if report.class_ is not None:
        lines.append(f"class: {report.class_}")
    if report.dual is not None:
        du = report.dual
        lines.append(f"Alexander dual of the radical: ({', '.join(_mono(A) for A in du['generators'])})")
        lines.append(f"  equigenerated {du['equigenerated']}, strongly stable {du['strongly_stable']}")
    if report.oracle.get("checked"):
        lines.append(f"oracle: {'agreed' if report.oracle['agreed'] else 'DISAGREED'} "
                     f"({len(report.oracle.get('checks', {}))} checks)")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_request(argv)
        report, status = run(req)
    except VeroneseTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if req.output_format == "structured":
        print(report.to_json())
    else:
        print(format_text(report))
    if status == 2:
        for item in report.oracle.get("discrepancies", []):
            print(f"discrepancy in {item['check']}: closed form {item['closed_form']!r}, "
                  f"oracle {item['oracle']!r}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
