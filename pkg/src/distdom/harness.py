"""Exhaustive verification of the bounds and characterizations.

Each check scans a universe of canonical graphs (trees, connected bipartite
graphs, or a family stream), evaluates one statement per instance, and
returns a :class:`TheoremReport`. Universes can be split into shards by a
hash of the canonical code; shard results are merged and sorted, so the
report does not depend on the shard count or on worker scheduling.

Exit statuses for a suite: 0 when everything holds, 2 when a proved
statement is violated (a bug somewhere), 3 when only the open conjecture
has a counterexample.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from . import constructions as cons
from .canon import is_isomorphic, tree_from_code
from .errors import ConfigError, GraphError, ParameterOutOfRange
from .graph import INF, Graph, is_bipartite, leaves, support_vertices
from .io import from_graph6, to_graph6
from .enumeration import bipartite_upto, shard_of, trees_upto
from .recognizers import (
    in_B_d,
    in_F_d,
    in_Fprime_d,
    in_T_d,
    in_zeta1,
    is_path_graph,
    lemma34_check,
    lemma34_hypotheses,
)
from .solver import gamma, level_partition, piecewise_bound, verify_partition

PASS = "PASS"
FAIL = "FAIL"
CONJECTURE_COUNTEREXAMPLE = "CONJECTURE-COUNTEREXAMPLE"

REPORT_SCHEMA = "distdom-report/1"

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_CONJECTURE = 3


def graph_from_code(code: str) -> Graph:
    """Rebuild the canonical graph behind a tree code or a graph6 code."""
    return tree_from_code(code) if code.startswith("(") else from_graph6(code)


@lru_cache(maxsize=200_000)
def _gamma_cached(code: str, d: int, p: int):
    return gamma(graph_from_code(code), (d, p))


def _value(x) -> int | str:
    return "inf" if x == INF else int(x)


# --- report types ----------------------------------------------------------


@dataclass
class EqualitySetComparison:
    equality: set[str] = field(default_factory=set)
    characterized: set[str] = field(default_factory=set)

    @property
    def only_equality(self) -> list[str]:
        return sorted(self.equality - self.characterized)

    @property
    def only_characterized(self) -> list[str]:
        return sorted(self.characterized - self.equality)

    @property
    def confirmed(self) -> bool:
        return self.equality == self.characterized

    def to_dict(self) -> dict:
        return {
            "equality_size": len(self.equality),
            "characterized_size": len(self.characterized),
            "only_equality": self.only_equality,
            "only_characterized": self.only_characterized,
        }


@dataclass
class TheoremReport:
    check: str
    params: dict
    scanned: int
    violations: list[dict]
    status: str
    comparison: EqualitySetComparison | None = None
    tallies: dict = field(default_factory=dict)
    examples: dict = field(default_factory=dict)
    negatives: list[dict] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema": REPORT_SCHEMA,
            "check": self.check,
            "params": self.params,
            "scanned": self.scanned,
            "violations": self.violations,
            "status": self.status,
            "tallies": dict(sorted(self.tallies.items())),
            "examples": dict(sorted(self.examples.items())),
            "negatives": self.negatives,
            "certificates": self.certificates,
            "config": self.config,
        }
        if self.comparison is not None:
            out["comparison"] = self.comparison.to_dict()
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"

    def tsv_row(self) -> str:
        return "\t".join(
            str(x)
            for x in (
                self.check,
                self.params.get("d", "-"),
                self.params.get("n_max"),
                self.scanned,
                len(self.violations),
                self.status,
                f"{self.seconds:.2f}",
            )
        )


TSV_HEADER = "check\td\tn_max\tscanned\tviolations\tstatus\tseconds"


def tsv_summary(reports: list[TheoremReport]) -> str:
    return "\n".join([TSV_HEADER] + [r.tsv_row() for r in reports]) + "\n"


def suite_json(reports: list[TheoremReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


# --- per-instance evaluation -----------------------------------------------


@dataclass
class Outcome:
    """What one instance contributes to a check."""

    in_scope: bool = True
    violations: list[dict] = field(default_factory=list)
    equality: bool | None = None
    characterized: bool | None = None
    tally: list[str] = field(default_factory=list)


def _violation(code: str, clause: str, expected, observed, witness=None) -> dict:
    return {
        "code": code,
        "graph6": to_graph6(graph_from_code(code)),
        "clause": clause,
        "expected": expected,
        "observed": observed,
        "witness": witness,
    }


def _eval_partition(code: str, g: Graph, d: int) -> Outcome:
    if g.order < d + 1:
        return Outcome(in_scope=False)
    try:
        parts = level_partition(g, d)
    except (GraphError, AssertionError) as exc:
        return Outcome(violations=[_violation(code, "partition", "valid", repr(exc))])
    if not verify_partition(g, parts, d):
        return Outcome(
            violations=[_violation(code, "partition", "valid", "invalid", [list(p) for p in parts])]
        )
    return Outcome()


def _eval_cor22(code: str, g: Graph, d: int) -> Outcome:
    n = g.order
    if n < d + 1:
        return Outcome(in_scope=False)
    gw = _gamma_cached(code, d, 1)
    out = Outcome()
    if gw.value * (d + 1) > n:
        out.violations.append(
            _violation(code, "gamma_d^1 <= n/(d+1)", f"<= {Fraction(n, d + 1)}", _value(gw.value), list(gw.witness))
        )
    smallest = min(len(p) for p in level_partition(g, d))
    if gw.value > smallest:
        out.violations.append(
            _violation(code, "gamma_d^1 <= smallest part", f"<= {smallest}", _value(gw.value), list(gw.witness))
        )
    if gw.value * (d + 1) == n:
        out.tally.append("tight")
    return out


def _eval_prop32(code: str, g: Graph, d: int) -> Outcome:
    gw = _gamma_cached(code, d, 1)
    if gw.value * (d + 1) != g.order:
        return Outcome(
            violations=[
                _violation(code, "gamma_d^1 = n/(d+1)", str(Fraction(g.order, d + 1)), _value(gw.value), list(gw.witness))
            ]
        )
    return Outcome()


def _eval_thm33(code: str, g: Graph, d: int) -> Outcome:
    gw = _gamma_cached(code, 1, 1)
    return Outcome(equality=2 * gw.value == g.order, characterized=in_zeta1(g))


def _eval_thm35(code: str, g: Graph, d: int) -> Outcome:
    n = g.order
    if n < d + 1:
        return Outcome(in_scope=False)
    gw = _gamma_cached(code, d, 1)
    return Outcome(equality=gw.value * (d + 1) == n, characterized=n == d + 1 or in_T_d(g, d))


def _eval_thm41(code: str, g: Graph, d: int) -> Outcome:
    n, ell = g.order, len(leaves(g))
    gw = _gamma_cached(code, d, 1)
    if n - ell < d:
        out = Outcome(in_scope=False)
        if n - ell >= 1:
            # leaves added to a core of order <= d-1: the bound must fail here
            out.tally.append("neg:n-l<d")
            if gw.value * d > n - ell:
                out.tally.append("neg:n-l<d:confirmed")
        return out
    out = Outcome(equality=gw.value * d == n - ell, characterized=in_F_d(g, d))
    if gw.value * d > n - ell:
        out.violations.append(
            _violation(code, "gamma_d^1 <= (n-l)/d", f"<= {Fraction(n - ell, d)}", _value(gw.value), list(gw.witness))
        )
    return out


def _is_Pd_or_Td(g: Graph, d: int) -> bool:
    return (g.order == d and is_path_graph(g)) or in_T_d(g, d)


def _eval_thm42(code: str, g: Graph, d: int) -> Outcome:
    n, ell = g.order, len(leaves(g))
    if n < d:
        return Outcome(in_scope=False)
    gw = _gamma_cached(code, d, 1)
    out = Outcome(equality=gw.value * (d + 2) == n + ell, characterized=_is_Pd_or_Td(g, d))
    if gw.value * (d + 2) > n + ell:
        out.violations.append(
            _violation(code, "gamma_d^1 <= (n+l)/(d+2)", f"<= {Fraction(n + ell, d + 2)}", _value(gw.value), list(gw.witness))
        )
    return out


def _eval_cor43_44_45(code: str, g: Graph, d: int) -> Outcome:
    n, ell = g.order, len(leaves(g))
    g0 = _gamma_cached(code, d, 0)
    g1 = _gamma_cached(code, d, 1)
    out = Outcome()
    if g0.value > g1.value:
        out.violations.append(_violation(code, "gamma_d <= gamma_d^1", f"<= {_value(g1.value)}", _value(g0.value)))
    if n - ell >= d:
        out.tally.append("cor43")
        eq = g0.value * d == n - ell
        if g0.value * d > n - ell:
            out.violations.append(_violation(code, "cor43 bound", f"<= {Fraction(n - ell, d)}", _value(g0.value)))
        if eq != in_Fprime_d(g, d):
            out.violations.append(_violation(code, "cor43 equality iff F'_d", not eq, eq))
        if eq:
            out.tally.append("cor43:equality")
    if n >= d:
        out.tally.append("cor44")
        eq = g0.value * (d + 2) == n + ell
        if g0.value * (d + 2) > n + ell:
            out.violations.append(_violation(code, "cor44 bound", f"<= {Fraction(n + ell, d + 2)}", _value(g0.value)))
        if eq != _is_Pd_or_Td(g, d):
            out.violations.append(_violation(code, "cor44 equality iff P_d or T_d", not eq, eq))
        if eq:
            out.tally.append("cor44:equality")
    if n >= d + ell:
        branch, bound = piecewise_bound(n, ell, d)
        out.tally.append(f"cor45:{branch}")
        if g1.value > bound:
            out.violations.append(_violation(code, f"cor45 {branch}", f"<= {bound}", _value(g1.value)))
        if g1.value == bound:
            out.tally.append(f"cor45:{branch}:equality")
    return out


def _eval_lemma34(code: str, g: Graph, d: int) -> Outcome:
    if not lemma34_hypotheses(g, d):
        return Outcome(in_scope=False)
    bad = lemma34_check(g, d)
    if bad:
        return Outcome(violations=[_violation(code, "lemma34", [], bad)])
    return Outcome()


def _eval_conjecture(code: str, g: Graph, d: int) -> Outcome:
    n = g.order
    if n < d + 1:
        return Outcome(in_scope=False)
    gw = _gamma_cached(code, d, 1)
    char = n == d + 1 or (n == 2 * d + 2 and is_isomorphic(g, cons.cycle(2 * d + 2))) or in_B_d(g, d)
    return Outcome(equality=gw.value * (d + 1) == n, characterized=char)


def _eval_section4(code: str, g: Graph, d: int) -> Outcome:
    n, ell = g.order, len(leaves(g))
    if n < 3:
        return Outcome(in_scope=False)
    gw = _gamma_cached(code, 1, 0)
    covered = set(leaves(g)) | set(support_vertices(g))
    out = Outcome(equality=gw.value == n - ell, characterized=len(covered) == n)
    if gw.value > n - ell:
        out.violations.append(_violation(code, "gamma_1 <= n-l", f"<= {n - ell}", _value(gw.value), list(gw.witness)))
    return out


# --- universes --------------------------------------------------------------


def _trees(d: int, n_max: int) -> Iterator[tuple[str, Graph]]:
    return trees_upto(n_max)


def _bipartite(d: int, n_max: int) -> Iterator[tuple[str, Graph]]:
    return bipartite_upto(n_max)


def _b_family(d: int, n_max: int) -> Iterator[tuple[str, Graph]]:
    return cons.family_B_d(n_max, d)


@dataclass(frozen=True)
class CheckSpec:
    universe: Callable[[int, int], Iterator[tuple[str, Graph]]]
    universe_name: str
    evaluate: Callable[[str, Graph, int], Outcome]
    min_d: int | None  # None: the check has no d parameter
    compares: bool = False
    conjecture: bool = False
    packing: int = 1  # p of the gamma behind the equality test


CHECKS: dict[str, CheckSpec] = {
    "partition": CheckSpec(_bipartite, "connected bipartite", _eval_partition, 1),
    "cor22": CheckSpec(_bipartite, "connected bipartite", _eval_cor22, 1),
    "prop32": CheckSpec(_b_family, "B_d family", _eval_prop32, 1),
    "thm33": CheckSpec(_trees, "trees", _eval_thm33, None, compares=True),
    "thm35": CheckSpec(_trees, "trees", _eval_thm35, 2, compares=True),
    "thm41": CheckSpec(_trees, "trees", _eval_thm41, 2, compares=True),
    "thm42": CheckSpec(_trees, "trees", _eval_thm42, 2, compares=True),
    "cor43_44_45": CheckSpec(_trees, "trees", _eval_cor43_44_45, 2),
    "lemma34": CheckSpec(_trees, "trees", _eval_lemma34, 2),
    "conjecture": CheckSpec(_bipartite, "connected bipartite", _eval_conjecture, 2, compares=True, conjecture=True),
    "section4_intro": CheckSpec(_trees, "trees", _eval_section4, None, compares=True, packing=0),
}


@dataclass
class _ShardResult:
    enumerated: int = 0
    scanned: int = 0
    violations: list = field(default_factory=list)
    equality: set = field(default_factory=set)
    characterized: set = field(default_factory=set)
    tallies: Counter = field(default_factory=Counter)
    examples: dict = field(default_factory=dict)


def _scan_shard(check: str, d: int, n_max: int, index: int, shards: int) -> _ShardResult:
    spec = CHECKS[check]
    res = _ShardResult()
    for code, g in spec.universe(d, n_max):
        if shards > 1 and shard_of(code, shards) != index:
            continue
        res.enumerated += 1
        out = spec.evaluate(code, g, d)
        for key in out.tally:
            res.tallies[key] += 1
            if key not in res.examples or code < res.examples[key]:
                res.examples[key] = code
        if not out.in_scope:
            continue
        res.scanned += 1
        res.violations.extend(out.violations)
        if out.equality:
            res.equality.add(code)
        if out.characterized:
            res.characterized.add(code)
    return res


def _scan(check: str, d: int, n_max: int, shards: int, workers: int) -> _ShardResult:
    args = [(check, d, n_max, i, shards) for i in range(shards)]
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_shard, *zip(*args)))
    else:
        parts = [_scan_shard(*a) for a in args]
    total = _ShardResult()
    for p in parts:
        total.enumerated += p.enumerated
        total.scanned += p.scanned
        total.violations.extend(p.violations)
        total.equality |= p.equality
        total.characterized |= p.characterized
        total.tallies.update(p.tallies)
        for k, c in p.examples.items():
            if k not in total.examples or c < total.examples[k]:
                total.examples[k] = c
    total.violations.sort(key=lambda v: (v["code"], v["clause"]))
    return total


# --- negative controls -------------------------------------------------------


def _negatives(check: str, d: int) -> list[dict]:
    if check == "cor22":
        n = max(4, d + 2)
        g = cons.counterexample_gnkd(n, 2, d)
        g1 = gamma(g, (d, 1)).value
        g0 = gamma(g, (d, 0)).value
        order = g.order
        return [
            {
                "name": f"G_({n},2,{d})",
                "order": order,
                "in_universe": is_bipartite(g),
                "gamma_d": _value(g0),
                "gamma_d^1": _value(g1),
                "bound n/(d+1)": str(Fraction(order, d + 1)),
                "formulas": g0 == n and g1 == 1 + (n - 1) * 2 and order == n * (2 * d + 1),
                "confirmed": (not is_bipartite(g)) and g1 * (d + 1) > order,
            }
        ]
    if check == "section4_intro":
        out = []
        for base, r in ((cons.path(2), 2), (cons.path(3), 2)):
            g = cons.leafy_corona(base, r)
            g1 = gamma(g, (1, 1)).value
            ell = len(leaves(g))
            out.append(
                {
                    "name": f"(P_{base.order} o P_1) + {r} leaves per vertex",
                    "order": g.order,
                    "leaves": ell,
                    "gamma_1^1": _value(g1),
                    "n-l": g.order - ell,
                    "formula": g1 == base.order * (1 + r),
                    "confirmed": g1 > g.order - ell,
                }
            )
        return out
    if check == "conjecture":
        g = cons.complete_bipartite(3, 3)
        g1 = gamma(g, (1, 1)).value
        char = g.order == 2 or is_isomorphic(g, cons.cycle(4)) or in_B_d(g, 1)
        return [
            {
                "name": "K_(3,3) at d=1",
                "order": g.order,
                "gamma_1^1": _value(g1),
                "equality": 2 * g1 == g.order,
                "characterized": char,
                "confirmed": 2 * g1 == g.order and not char,
            }
        ]
    return []


# --- checks ------------------------------------------------------------------


def run_check(
    check: str,
    d: int | None = None,
    n_max: int = 8,
    shards: int = 1,
    workers: int = 1,
) -> TheoremReport:
    if check not in CHECKS:
        raise ConfigError(f"unknown check {check!r}; known: {', '.join(sorted(CHECKS))}")
    spec = CHECKS[check]
    if spec.min_d is None:
        d_eff = 1
    else:
        if d is None:
            raise ConfigError(f"check {check} needs d")
        if d < spec.min_d:
            raise ParameterOutOfRange(f"check {check} needs d >= {spec.min_d}, got {d}")
        d_eff = d
    if shards < 1 or workers < 1:
        raise ConfigError("shards and workers must be >= 1")
    start = time.perf_counter()
    total = _scan(check, d_eff, n_max, shards, workers)
    params = {"n_max": n_max, "universe": spec.universe_name, "enumerated": total.enumerated}
    if spec.min_d is not None:
        params["d"] = d_eff
    if check in ("prop32", "conjecture"):
        params["B_d"] = "coronas H o P_d with H connected bipartite"
    comparison = None
    violations = list(total.violations)
    certificates: list[dict] = []
    if spec.compares:
        comparison = EqualitySetComparison(total.equality, total.characterized)
        mismatches = []
        for code in comparison.only_equality:
            gw = _gamma_cached(code, d_eff, spec.packing)
            mismatches.append(_violation(code, "characterization", "member", "non-member", list(gw.witness)))
        for code in comparison.only_characterized:
            gw = _gamma_cached(code, d_eff, spec.packing)
            mismatches.append(_violation(code, "characterization", "equality", "strict", list(gw.witness)))
        mismatches.sort(key=lambda v: v["code"])
        if spec.conjecture:
            certificates = mismatches
        else:
            violations.extend(mismatches)
            violations.sort(key=lambda v: (v["code"], v["clause"]))
    negatives = _negatives(check, d_eff)
    if check == "thm41":
        hits = total.tallies.get("neg:n-l<d", 0)
        negatives.append(
            {
                "name": "pendants on a core of order < d",
                "instances": hits,
                "example": total.examples.get("neg:n-l<d"),
                "confirmed": total.tallies.get("neg:n-l<d:confirmed", 0) == hits,
            }
        )
    if violations or any(not neg["confirmed"] for neg in negatives):
        status = FAIL
    elif spec.conjecture and comparison is not None and not comparison.confirmed:
        status = CONJECTURE_COUNTEREXAMPLE
    else:
        status = PASS
    report = TheoremReport(
        check=check,
        params=params,
        scanned=total.scanned,
        violations=violations,
        status=status,
        comparison=comparison,
        tallies=dict(total.tallies),
        examples=dict(total.examples),
        negatives=negatives,
        certificates=certificates,
        config={"check": check, "d": params.get("d"), "n_max": n_max},
    )
    report.seconds = time.perf_counter() - start
    return report


def check_partition_theorem(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("partition", d, n_max, **kw)


def check_cor22(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("cor22", d, n_max, **kw)


def check_prop32(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("prop32", d, n_max, **kw)


def check_thm33(n_max: int, **kw) -> TheoremReport:
    return run_check("thm33", None, n_max, **kw)


def check_thm35(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("thm35", d, n_max, **kw)


def check_thm41(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("thm41", d, n_max, **kw)


def check_thm42(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("thm42", d, n_max, **kw)


def check_cor43_44_45(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("cor43_44_45", d, n_max, **kw)


def check_lemma34(d: int, n_max: int, **kw) -> TheoremReport:
    return run_check("lemma34", d, n_max, **kw)


def check_conjecture(d: int, n_max: int, **kw) -> TheoremReport:
    """Scan for counterexamples; d = 1 is refused because K_(r,r) already breaks it."""
    return run_check("conjecture", d, n_max, **kw)


def check_section4_intro(n_max: int, **kw) -> TheoremReport:
    return run_check("section4_intro", None, n_max, **kw)


# --- replay -------------------------------------------------------------------


def replay(check: str, d: int | None, record: dict) -> Outcome:
    """Re-evaluate one violation or certificate from its graph6 field."""
    spec = CHECKS[check]
    g = from_graph6(record["graph6"])
    code = record["code"]
    if graph_from_code(code) != g:
        raise ValueError("record code and graph6 disagree")
    return spec.evaluate(code, g, 1 if spec.min_d is None else d)


# --- suites -------------------------------------------------------------------


@dataclass
class SuiteConfig:
    checks: list[str] = field(default_factory=lambda: sorted(CHECKS))
    d: list[int] = field(default_factory=lambda: [2, 3])
    tree_n_max: int = 12
    bipartite_n_max: int = 8
    family_n_max: int = 12
    shards: int = 1
    workers: int = 1
    overrides: dict = field(default_factory=dict)  # "<check>.n_max" / "<check>.d"

    def n_max_for(self, check: str) -> int:
        if f"{check}.n_max" in self.overrides:
            return self.overrides[f"{check}.n_max"]
        universe = CHECKS[check].universe
        if universe is _bipartite:
            return self.bipartite_n_max
        if universe is _b_family:
            return self.family_n_max
        return self.tree_n_max

    def d_for(self, check: str) -> list[int | None]:
        spec = CHECKS[check]
        if spec.min_d is None:
            return [None]
        ds = self.overrides.get(f"{check}.d", self.d)
        return [d for d in ds if d >= spec.min_d]


_INT_KEYS = ("tree_n_max", "bipartite_n_max", "family_n_max", "shards", "workers")


def _int(value: str, key: str, lineno: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"line {lineno}: {key} expects an integer, got {value!r}") from None


def _int_list(value: str, key: str, lineno: int) -> list[int]:
    return [_int(x.strip(), key, lineno) for x in value.split(",") if x.strip()]


def parse_config(text: str) -> SuiteConfig:
    """``key = value`` lines; ``#`` starts a comment. See :data:`DEFAULT_CONFIG_TEXT`."""
    cfg = SuiteConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "checks":
            names = [x.strip() for x in value.split(",") if x.strip()]
            unknown = [x for x in names if x not in CHECKS]
            if unknown:
                raise ConfigError(f"line {lineno}: unknown check id(s) {', '.join(unknown)}")
            cfg.checks = names
        elif key == "d":
            cfg.d = _int_list(value, key, lineno)
        elif key in _INT_KEYS:
            setattr(cfg, key, _int(value, key, lineno))
        elif "." in key:
            check, attr = key.rsplit(".", 1)
            if check not in CHECKS or attr not in ("n_max", "d"):
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
            cfg.overrides[key] = _int(value, key, lineno) if attr == "n_max" else _int_list(value, key, lineno)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    if cfg.shards < 1 or cfg.workers < 1:
        raise ConfigError("shards and workers must be >= 1")
    return cfg


DEFAULT_CONFIG_TEXT = """\
# every check at d = 2, 3; trees up to 12 vertices, bipartite graphs up to 8
checks = conjecture, cor22, cor43_44_45, lemma34, partition, prop32, section4_intro, thm33, thm35, thm41, thm42
d = 2, 3
tree_n_max = 12
bipartite_n_max = 8
family_n_max = 12
shards = 1
workers = 1
"""


def default_config() -> SuiteConfig:
    return parse_config(DEFAULT_CONFIG_TEXT)


def run_suite(config: SuiteConfig | str | None = None) -> list[TheoremReport]:
    if config is None:
        config = default_config()
    elif isinstance(config, str):
        config = parse_config(config)
    for check in config.checks:
        if check not in CHECKS:
            raise ConfigError(f"unknown check {check!r}")
    reports = []
    for check in sorted(set(config.checks)):
        for d in config.d_for(check):
            reports.append(
                run_check(check, d, config.n_max_for(check), config.shards, config.workers)
            )
    reports.sort(key=lambda r: (r.check, r.params.get("d") or 0))
    return reports


def suite_status(reports: list[TheoremReport]) -> int:
    if any(r.status == FAIL for r in reports):
        return EXIT_VIOLATION
    if any(r.status == CONJECTURE_COUNTEREXAMPLE for r in reports):
        return EXIT_CONJECTURE
    return EXIT_OK
