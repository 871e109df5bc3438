"""
Runs the whole pipeline on an instance and checks every link of the bound
c*t^3/n^2 <= X <= tangents <= chain crossings <= below_level <= n*k, plus the
primal/dual identities, as separate exact verdicts.
"""
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from .arrangement import Arrangement, build_arrangement, extract_k_level, level_profile
from .chains import (
    charge_tangents,
    common_tangents,
    decompose_chains,
    edge_cover_matches,
    is_concave,
    spans_disjoint,
    turns_partition,
)
from .errors import ChargeFailure, KSetLabError, RetriesExhaustedError, TangentViolation, check_k
from .graph import build_graph, crossing_lemma_check, crossing_number, crossing_to_tangent
from .instances import generate_instance
from .ksets import Instance, Side, count_directed_ksets
from .models import GenSpec, SweepConfig
from .utils import json_rational

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Verdict:
    name: str
    lhs: Number
    rhs: Number
    holds: bool
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "name": self.name,
            "lhs": json_rational(self.lhs),
            "rhs": json_rational(self.rhs),
            "holds": self.holds,
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass(frozen=True)
class Report:
    n: int
    k: int
    t: int
    x: int
    tangents: int
    chain_crossings: int
    below_level: int
    nk: int
    ksets_above: int
    ksets_below: int
    verdicts: Tuple[Verdict, ...]
    bound_ok: bool
    easy_case: bool
    crossing_lemma_applicable: bool = False

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def failed(self) -> List[str]:
        return [v.name for v in self.verdicts if not v.holds]

    def verdict(self, name: str) -> Verdict:
        return next(v for v in self.verdicts if v.name == name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "x": self.x,
            "tangents": self.tangents,
            "chain_crossings": self.chain_crossings,
            "below_level": self.below_level,
            "nk": self.nk,
            "ksets_above": self.ksets_above,
            "ksets_below": self.ksets_below,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "bound_ok": self.bound_ok,
            "easy_case": self.easy_case,
        }


def _le(name: str, lhs: Number, rhs: Number) -> Verdict:
    return Verdict(name, lhs, rhs, lhs <= rhs)


def _eq(name: str, lhs: Number, rhs: Number) -> Verdict:
    return Verdict(name, lhs, rhs, lhs == rhs)


def verify_instance(inst: Instance, k: int, arr: Optional[Arrangement] = None) -> Report:
    """
    Run every module for one (instance, k) and collect the verdicts.

    A false verdict is data; only input errors and kernel cross-check failures raise.
    """
    n = inst.n
    check_k(k, 1, n - 1)
    arr = arr or build_arrangement(inst)
    v_prev, v_k = arr.vertex_class(k - 1), arr.vertex_class(k)

    level = extract_k_level(arr, k)
    profile = level_profile(arr, k)
    chains = decompose_chains(arr, k)
    graph = build_graph(inst, k, arr)
    x, records = crossing_number(graph)
    t = graph.t

    tangents_total = 0
    charging_errors = []
    all_tangents = set()
    for i, j in chains.pairs():
        tangents = common_tangents(chains, i, j)
        tangents_total += len(tangents)
        all_tangents.update(tangents)
        if not spans_disjoint(tangents):
            charging_errors.append(f"overlapping tangent spans on chains {i}, {j}")
        try:
            charge_tangents(chains, i, j)
        except ChargeFailure as e:
            charging_errors.append(str(e))

    correspondence_errors = []
    images = set()
    for record in records:
        try:
            tangent = crossing_to_tangent(record, chains)
        except TangentViolation as e:
            correspondence_errors.append(str(e))
            continue
        if tangent in images:
            correspondence_errors.append(f"two crossings map to tangent {tangent.line}")
        if tangent not in all_tangents:
            correspondence_errors.append(f"tangent {tangent.line} missing from the chain pair search")
        images.add(tangent)

    chain_crossings = chains.crossings_total
    below_k_minus_1 = sum(len(arr.vertex_class(j)) for j in range(k - 1))
    ksets_above = count_directed_ksets(inst, k, Side.ABOVE)
    ksets_below = count_directed_ksets(inst, k, Side.BELOW)
    lemma = crossing_lemma_check(t, n, x)
    easy_case = t <= 4 * n
    bound_ok = t ** 3 <= 64 * n ** 3 * k

    level_set = {v.line_pair for v in level.vertex_seq}
    class_set = {v.line_pair for v in v_prev} | {v.line_pair for v in v_k}
    end_lines = {c.pieces[-1].line for c in chains.chains}
    smallest = set(arr.slope_order()[n - k:])

    verdicts = [
        _eq("edges_equal_vertex_class", t, len(v_prev)),
        Verdict("level_vertices", len(level_set), len(class_set),
                level_set == class_set and level.certified,
                "" if level.certified else "an edge of the level failed recertification"),
        _eq("ksets_above_identity", ksets_above, len(v_prev) + 1),
        _eq("ksets_below_identity", ksets_below, len(arr.vertex_class(n - k - 1)) + 1),
        Verdict("chain_count", len(chains.chains), k,
                len(chains.chains) == k and end_lines == smallest),
        Verdict("chain_concavity", sum(is_concave(c, arr.lines) for c in chains.chains), k,
                all(is_concave(c, arr.lines) for c in chains.chains)),
        Verdict("turn_partition", sum(len(c.turns) for c in chains.chains), len(v_prev),
                turns_partition(chains, arr)),
        Verdict("edge_cover", sum(len(c.pieces) for c in chains.chains), len(v_prev) + k,
                edge_cover_matches(chains, arr)),
        _eq("chain_crossing_census", chain_crossings, below_k_minus_1),
        _le("crossings_le_tangents", x, tangents_total),
        _le("tangents_le_chain_crossings", tangents_total, chain_crossings),
        Verdict("tangent_charging", len(charging_errors), 0, not charging_errors,
                "; ".join(charging_errors)),
        Verdict("crossing_tangent_correspondence", len(images), x,
                not correspondence_errors and len(images) == x, "; ".join(correspondence_errors)),
        _le("below_level_le_nk", profile.below_level, profile.nk),
        Verdict("crossing_lemma", x, lemma.threshold, lemma.holds,
                "" if lemma.applicable else "vacuous: t <= 4n"),
        _le("edge_bound", t ** 3, 64 * n ** 3 * k),
    ]
    by_name = {v.name: v for v in verdicts}
    premises = easy_case or all(
        by_name[name].holds for name in
        ("crossings_le_tangents", "tangents_le_chain_crossings", "chain_crossing_census",
         "below_level_le_nk", "crossing_lemma")
    )
    verdicts.append(_le("bound_deduction", int(premises), int(bound_ok)))

    return Report(
        n=n, k=k, t=t, x=x,
        tangents=tangents_total,
        chain_crossings=chain_crossings,
        below_level=profile.below_level,
        nk=profile.nk,
        ksets_above=ksets_above,
        ksets_below=ksets_below,
        verdicts=tuple(verdicts),
        bound_ok=bound_ok,
        easy_case=easy_case,
        crossing_lemma_applicable=lemma.applicable,
    )


def verify_all_k(inst: Instance) -> List[Report]:
    arr = build_arrangement(inst)
    return [verify_instance(inst, k, arr) for k in range(1, inst.n)]


@dataclass
class SweepSummary:
    trials: int
    seed: int
    records: List[Dict[str, Any]] = field(default_factory=list)
    max_t: int = 0
    max_ksets: int = 0
    max_total_ksets: int = 0
    crossing_lemma_applicable: int = 0
    easy_cases: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, trial: int, report: Report) -> None:
        self.records.append({
            "trial": trial,
            "n": report.n,
            "k": report.k,
            "t": report.t,
            "x": report.x,
            "bound_ok": report.bound_ok,
            "ksets_above": report.ksets_above,
            "ksets_below": report.ksets_below,
        })
        self.max_t = max(self.max_t, report.t)
        self.max_ksets = max(self.max_ksets, report.ksets_above, report.ksets_below)
        self.max_total_ksets = max(self.max_total_ksets, report.ksets_above + report.ksets_below)
        self.crossing_lemma_applicable += report.crossing_lemma_applicable
        self.easy_cases += report.easy_case
        if not report.all_hold:
            self.failures.append({"trial": trial, "n": report.n, "k": report.k, "failed": report.failed()})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "records": self.records,
            "max_t": self.max_t,
            "max_ksets": self.max_ksets,
            "max_total_ksets": self.max_total_ksets,
            "crossing_lemma_applicable": self.crossing_lemma_applicable,
            "easy_cases": self.easy_cases,
            "failures": self.failures,
        }


def sweep(config: SweepConfig, debug: bool = False) -> SweepSummary:
    """
    Generate `config.trials` seeded instances and verify each one. Trial seeds are drawn
    from one master generator, so a fixed seed gives an identical summary. Generation
    and integrity errors are recorded as failures and the sweep moves on.
    """
    summary = SweepSummary(trials=config.trials, seed=config.seed)
    master = random.Random(config.seed)
    progress_every = max(1, config.trials // 10)
    for trial in range(config.trials):
        trial_seed = master.randrange(2 ** 32)
        n = config.n if config.n_max is None else master.randint(config.n, config.n_max)
        spec = GenSpec(shape=config.shape, n=n, coord_range=config.coord_range, seed=trial_seed)
        try:
            inst = generate_instance(spec)
        except RetriesExhaustedError as e:
            summary.failures.append({"trial": trial, "n": n, "error": str(e)})
            continue

        arr = build_arrangement(inst)
        ks = range(1, n) if config.k is None else [config.k]
        for k in ks:
            if not 1 <= k <= n - 1:
                summary.failures.append({"trial": trial, "n": n, "k": k, "error": "k out of range"})
                continue
            try:
                report = verify_instance(inst, k, arr)
            except KSetLabError as e:
                summary.failures.append({"trial": trial, "n": n, "k": k, "error": f"{type(e).__name__}: {e}"})
                continue
            summary.add(trial, report)

        if debug and (trial + 1) % progress_every == 0:
            print(f"🎲 {trial + 1}/{config.trials} trials, {len(summary.failures)} failures", file=sys.stderr)
    return summary
