"""Bound and exact-value checks for maximum frustration on desk-scale instances.

Every check computes an exact quantity with the solvers and compares it
against a claimed bound or value, producing a :class:`TheoremReport`.  Bound
checks always use exact enumeration; sampling appears only where a claim is
universally quantified over signatures (it can falsify, never verify).
Budget exhaustion becomes a ``skipped (budget)`` verdict, never a silent pass.

Verdicts use integer arithmetic throughout; the fractional 3/8 bound is
checked as ``8 * D <= 3 * n``.
"""

from __future__ import annotations

import csv as _csv
import io as _io
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .core import Graph, Signature, SignedGraph, complete_graph
from .errors import InvalidParametersError, ResourceLimitError
from .petersen import enumerate_cycles_of_length, generate_gn, generate_petersen
from .solvers import (DEFAULT_CLASS_BUDGET, DEFAULT_STATE_BUDGET, SolveResult,
                      _SwitchScan, frustration_index, frustration_number,
                      max_frustration)

__all__ = [
    "TheoremReport",
    "VerifyConfig",
    "check_cubic_half_bound",
    "check_triangle_free_bound",
    "check_gcd1_bound",
    "check_gcdd_bound",
    "check_p3kk_bound",
    "check_lemma_restricted",
    "check_fi_equals_fn",
    "run_full_suite",
    "all_pass",
    "reports_to_csv",
    "reports_to_markdown",
]

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped (budget)"


@dataclass(frozen=True)
class TheoremReport:
    """One checked claim on one instance; everything needed to recompute the verdict."""

    theorem: str
    params: tuple[tuple[str, object], ...]
    claim: str
    computed: str
    verdict: str
    witness: tuple[int, ...] | None = None

    def param(self, name: str, default=None):
        for key, value in self.params:
            if key == name:
                return value
        return default

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def skipped(self) -> bool:
        return self.verdict == SKIPPED


def all_pass(reports) -> bool:
    """True iff every non-skipped report passes."""
    return all(r.passed for r in reports if not r.skipped)


def _require_cubic(g: Graph) -> None:
    for v in range(g.n_vertices):
        if g.degree(v) != 3:
            raise InvalidParametersError(
                f"graph is not cubic: vertex {v} has degree {g.degree(v)}")


def _max_result(g: Graph, budget_classes: int, budget_states: int,
                workers: int, precomputed: SolveResult | None) -> SolveResult:
    if precomputed is not None:
        return precomputed
    return max_frustration(g, budget_classes=budget_classes,
                           budget_states=budget_states, workers=workers)


def check_cubic_half_bound(g: Graph, *,
                           budget_classes: int = DEFAULT_CLASS_BUDGET,
                           budget_states: int = DEFAULT_STATE_BUDGET,
                           workers: int = 1,
                           max_result: SolveResult | None = None,
                           params: tuple[tuple[str, object], ...] = ()) -> TheoremReport:
    """Maximum frustration of a cubic graph is at most half its vertex count."""
    _require_cubic(g)
    result = _max_result(g, budget_classes, budget_states, workers, max_result)
    n = g.n_vertices
    ok = 2 * result.value <= n
    return TheoremReport(
        theorem="cubic-half-bound",
        params=params + (("n_vertices", n),),
        claim=f"D <= {n}/2",
        computed=str(result.value),
        verdict=PASS if ok else FAIL,
        witness=None if ok else result.witness.members,
    )


def check_triangle_free_bound(g: Graph, *,
                              budget_classes: int = DEFAULT_CLASS_BUDGET,
                              budget_states: int = DEFAULT_STATE_BUDGET,
                              workers: int = 1,
                              max_result: SolveResult | None = None,
                              params: tuple[tuple[str, object], ...] = ()) -> TheoremReport:
    """Cubic triangle-free graphs satisfy D <= 3n/8 (compared as 8D <= 3n)."""
    _require_cubic(g)
    triangles = enumerate_cycles_of_length(g, 3)
    if triangles:
        verts = sorted({w for e in triangles[0] for w in g.edges[e]})
        raise InvalidParametersError(
            f"graph has a triangle on vertices {verts}")
    result = _max_result(g, budget_classes, budget_states, workers, max_result)
    n = g.n_vertices
    ok = 8 * result.value <= 3 * n
    return TheoremReport(
        theorem="triangle-free-bound",
        params=params + (("n_vertices", n),),
        claim=f"8*D <= {3 * n}",
        computed=str(result.value),
        verdict=PASS if ok else FAIL,
        witness=None if ok else result.witness.members,
    )


def _gcd1_equality_applies(n: int, k: int) -> bool:
    if k == 1:
        return True
    if k == 2:
        return n % 2 == 1 and n >= 5
    if k == 3:
        return n % 4 == 3 and n >= 7 and math.gcd(n, 3) == 1
    return False


def check_gcd1_bound(n: int, k: int, *,
                     budget_classes: int = DEFAULT_CLASS_BUDGET,
                     budget_states: int = DEFAULT_STATE_BUDGET,
                     workers: int = 1,
                     max_result: SolveResult | None = None) -> TheoremReport:
    """D(P(n,k)) <= floor(n/2)+1 when gcd(n,k)=1; equality asserted for k=1,2,3."""
    if math.gcd(n, k) != 1:
        raise InvalidParametersError(f"gcd({n}, {k}) = {math.gcd(n, k)}, expected 1")
    layout = generate_petersen(n, k)
    result = _max_result(layout.graph, budget_classes, budget_states, workers,
                         max_result)
    bound = n // 2 + 1
    if _gcd1_equality_applies(n, k):
        ok = result.value == bound
        claim = f"D = {bound}"
    else:
        ok = result.value <= bound
        claim = f"D <= {bound}"
    return TheoremReport(
        theorem="gcd1-bound",
        params=(("n", n), ("k", k)),
        claim=claim,
        computed=str(result.value),
        verdict=PASS if ok else FAIL,
        witness=None if ok else result.witness.members,
    )


def check_gcdd_bound(n: int, k: int, *,
                     budget_classes: int = DEFAULT_CLASS_BUDGET,
                     budget_states: int = DEFAULT_STATE_BUDGET,
                     workers: int = 1,
                     max_result: SolveResult | None = None) -> TheoremReport:
    """D(P(n,k)) <= d*floor(n/2d) + d + 1 when gcd(n,k) = d >= 2.

    The computed D is also worthwhile data on its own: whether the bound can
    be improved to floor(n/2)+1 is open, so that value is recorded in params.
    """
    d = math.gcd(n, k)
    if d < 2:
        raise InvalidParametersError(f"gcd({n}, {k}) = {d}, expected >= 2")
    layout = generate_petersen(n, k)
    result = _max_result(layout.graph, budget_classes, budget_states, workers,
                         max_result)
    bound = d * (n // (2 * d)) + d + 1
    ok = result.value <= bound
    return TheoremReport(
        theorem="gcdd-bound",
        params=(("n", n), ("k", k), ("d", d), ("half_bound", n // 2 + 1)),
        claim=f"D <= {bound}",
        computed=str(result.value),
        verdict=PASS if ok else FAIL,
        witness=None if ok else result.witness.members,
    )


def check_p3kk_bound(k: int, *,
                     budget_classes: int = DEFAULT_CLASS_BUDGET,
                     budget_states: int = DEFAULT_STATE_BUDGET,
                     workers: int = 1,
                     max_result: SolveResult | None = None) -> TheoremReport:
    """D(P(3k,k)) <= floor(3k/2) + 2, an improvement on the general gcd bound.

    Also confirms the improvement claim: the bound never exceeds the general
    d-cycle bound, which equals 2k+1 here.
    """
    if k < 2:
        raise InvalidParametersError(f"inner triangles need k >= 2, got k={k}")
    n = 3 * k
    layout = generate_petersen(n, k)
    result = _max_result(layout.graph, budget_classes, budget_states, workers,
                         max_result)
    bound = 3 * k // 2 + 2
    general_bound = 2 * k + 1
    ok = result.value <= bound and bound <= general_bound
    return TheoremReport(
        theorem="inner-triangle-bound",
        params=(("n", n), ("k", k), ("general_bound", general_bound)),
        claim=f"D <= {bound}",
        computed=str(result.value),
        verdict=PASS if ok else FAIL,
        witness=None if ok else result.witness.members,
    )


def _all_subsets_table(m: int) -> np.ndarray:
    """(2^m, m) uint8 table whose row i is the indicator vector of subset i."""
    table = np.zeros((1 << m, max(m, 1)), dtype=np.uint8)
    size = 1
    for j in range(m):
        unit = np.zeros(max(m, 1), dtype=np.uint8)
        unit[j] = 1
        np.bitwise_xor(table[:size], unit, out=table[size:2 * size])
        size *= 2
    return table[:, :m]


def check_lemma_restricted(n: int, trials: int = 0, seed: int = 0) -> TheoremReport:
    """Restricted-switching minima on the pendant-spoke cycle.

    With switching allowed only at the u-vertices, a minimum signature has
    size at most floor(n/2) when the outer cycle is positive and at most
    floor(n/2)+1 when it is negative.  The verdict checks the bounds;
    ``computed`` and the ``tight_*`` params record the achieved maxima.
    Exhaustive over all 2^(2n) signatures for n <= 8; for larger n a seeded
    sample of ``trials`` signatures is used instead.

    The achieved negative-cycle maximum is ceil(n/2): the pinned negative
    outer edge forces the spoke part of a minimum signature below (n-1)/2, so
    the floor(n/2)+1 bound is tight only for odd n.
    """
    layout = generate_gn(n)
    g = layout.graph
    m = g.n_edges
    scan = _SwitchScan(g, list(range(n)))
    outer_mask = (1 << n) - 1
    bound_pos, bound_neg = n // 2, n // 2 + 1
    exhaustive = n <= 8

    max_pos = max_neg = -1
    arg_pos = arg_neg = 0
    if exhaustive:
        subsets = _all_subsets_table(m)
        sizes = subsets.sum(axis=1, dtype=np.float32)
        counts = (scan.row_sums[:, None].astype(np.float32)
                  + sizes[None, :]
                  - 2.0 * (scan.table.astype(np.float32) @ subsets.T.astype(np.float32)))
        mins = counts.min(axis=0).astype(np.int64)
        outer_parity = subsets[:, :n].sum(axis=1, dtype=np.int64) & 1
        for parity, store in ((0, "pos"), (1, "neg")):
            vals = mins[outer_parity == parity]
            idxs = np.flatnonzero(outer_parity == parity)
            top = int(vals.max())
            arg = int(idxs[int(vals.argmax())])
            if store == "pos":
                max_pos, arg_pos = top, arg
            else:
                max_neg, arg_neg = top, arg
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        for _ in range(max(1, trials)):
            mask = rng.getrandbits(m)
            value = int(scan.counts(mask).min())
            if (mask & outer_mask).bit_count() % 2 == 0:
                if value > max_pos:
                    max_pos, arg_pos = value, mask
            else:
                if value > max_neg:
                    max_neg, arg_neg = value, mask
        mode = "sampled"

    ok = max_pos <= bound_pos and max_neg <= bound_neg
    claim = f"max <= {bound_pos} (C+) and {bound_neg} (C-)"
    witness = None
    if not ok:
        bad = arg_pos if max_pos > bound_pos else arg_neg
        witness = Signature(m, bad).members
    return TheoremReport(
        theorem="restricted-switching",
        params=(("n", n), ("mode", mode),
                ("tight_pos", max_pos == bound_pos),
                ("tight_neg", max_neg == bound_neg))
               + ((("trials", trials), ("seed", seed)) if not exhaustive else ()),
        claim=claim,
        computed=f"{max_pos} (C+) and {max_neg} (C-)",
        verdict=PASS if ok else FAIL,
        witness=witness,
    )


def check_fi_equals_fn(g: Graph, samples: int, seed: int, *,
                       budget_states: int = DEFAULT_STATE_BUDGET,
                       params: tuple[tuple[str, object], ...] = ()) -> TheoremReport:
    """Frustration index equals frustration number on cubic graphs (sampled)."""
    _require_cubic(g)
    rng = random.Random(seed)
    m = g.n_edges
    mismatches = 0
    witness = None
    for _ in range(samples):
        sg = SignedGraph(g, Signature(m, rng.getrandbits(m)))
        li = frustration_index(sg, budget_states=budget_states).value
        l0 = frustration_number(sg).value
        if li != l0:
            mismatches += 1
            if witness is None:
                witness = sg.negatives.members
    ok = mismatches == 0
    return TheoremReport(
        theorem="index-equals-number",
        params=params + (("samples", samples), ("seed", seed)),
        claim="l = l0 on every sample",
        computed=f"{samples - mismatches}/{samples} equal",
        verdict=PASS if ok else FAIL,
        witness=witness,
    )


def _default_petersen_instances() -> tuple[tuple[int, int], ...]:
    coprime = [(n, k) for n in range(3, 10) for k in range(1, (n - 1) // 2 + 1)
               if math.gcd(n, k) == 1]
    return tuple(coprime) + ((6, 2), (8, 2), (9, 3))


@dataclass(frozen=True)
class VerifyConfig:
    """Instance ranges and budgets for :func:`run_full_suite`.

    The zero-argument constructor is the empty configuration (no reports);
    :meth:`default` gives the desk-scale ranges.
    """

    petersen: tuple[tuple[int, int], ...] = ()
    gn: tuple[int, ...] = ()
    fi_fn: tuple[tuple[int, int], ...] = ()
    include_k4: bool = False
    samples: int = 50
    seed: int = 20250801
    budget_states: int = DEFAULT_STATE_BUDGET
    budget_classes: int = DEFAULT_CLASS_BUDGET
    workers: int = 1

    @classmethod
    def default(cls) -> "VerifyConfig":
        return cls(
            petersen=_default_petersen_instances(),
            gn=(3, 4, 5, 6, 7),
            fi_fn=((5, 2), (6, 2)),
            include_k4=True,
        )

    @classmethod
    def from_text(cls, text: str) -> "VerifyConfig":
        """Parse the key=value config format; an empty file means run nothing.

        Recognized keys: ``petersen``, ``gn``, ``fi_fn``, ``include_k4``,
        ``samples``, ``seed``, ``budget_states``, ``budget_classes``,
        ``workers``.  Instance lists are comma separated, pairs written n:k.
        """
        values: dict = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidParametersError(
                    f"config line {lineno}: expected key = value, got {raw!r}")
            key, _, rhs = line.partition("=")
            key, rhs = key.strip(), rhs.strip()
            try:
                if key in ("petersen", "fi_fn"):
                    pairs = []
                    if rhs:
                        for item in rhs.split(","):
                            a, _, b = item.strip().partition(":")
                            pairs.append((int(a), int(b)))
                    values[key] = tuple(pairs)
                elif key == "gn":
                    values[key] = tuple(int(x) for x in rhs.split(",")) if rhs else ()
                elif key == "include_k4":
                    if rhs.lower() not in ("true", "false", "0", "1"):
                        raise ValueError(rhs)
                    values[key] = rhs.lower() in ("true", "1")
                elif key in ("samples", "seed", "budget_states", "budget_classes",
                             "workers"):
                    values[key] = int(rhs)
                else:
                    raise InvalidParametersError(
                        f"config line {lineno}: unknown key {key!r}")
            except (ValueError, IndexError):
                raise InvalidParametersError(
                    f"config line {lineno}: cannot parse value {rhs!r} for {key!r}"
                ) from None
        return cls(**values)


def _skipped(theorem: str, params: tuple[tuple[str, object], ...],
             claim: str) -> TheoremReport:
    return TheoremReport(theorem=theorem, params=params, claim=claim,
                         computed="", verdict=SKIPPED)


def run_full_suite(config: VerifyConfig) -> list[TheoremReport]:
    """Run every applicable check over the configured instances.

    One exact max-frustration solve is shared by all bound checks on the same
    instance.  Budget exhaustion yields ``skipped (budget)`` verdicts.
    Reports come back sorted by (theorem, parameters).
    """
    reports: list[TheoremReport] = []
    for n, k in config.petersen:
        layout = generate_petersen(n, k)
        d = math.gcd(n, k)
        try:
            result = max_frustration(
                layout.graph, budget_classes=config.budget_classes,
                budget_states=config.budget_states, workers=config.workers)
        except ResourceLimitError:
            result = None
        nk_params = (("n", n), ("k", k))
        if result is None:
            theorem = "gcd1-bound" if d == 1 else "gcdd-bound"
            reports.append(_skipped(theorem, nk_params, ""))
            reports.append(_skipped("cubic-half-bound", nk_params, ""))
            continue
        common = dict(budget_classes=config.budget_classes,
                      budget_states=config.budget_states,
                      workers=config.workers, max_result=result)
        if d == 1:
            reports.append(check_gcd1_bound(n, k, **common))
        else:
            reports.append(check_gcdd_bound(n, k, **common))
        if k >= 2 and n == 3 * k:
            reports.append(check_p3kk_bound(k, **common))
        reports.append(check_cubic_half_bound(layout.graph, params=nk_params,
                                              **common))
        if not enumerate_cycles_of_length(layout.graph, 3):
            reports.append(check_triangle_free_bound(layout.graph,
                                                     params=nk_params, **common))
    if config.include_k4:
        k4 = complete_graph(4)
        reports.append(check_cubic_half_bound(
            k4, budget_classes=config.budget_classes,
            budget_states=config.budget_states, workers=config.workers,
            params=(("graph", "K4"),)))
    for n in config.gn:
        reports.append(check_lemma_restricted(n, config.samples, config.seed))
    for n, k in config.fi_fn:
        layout = generate_petersen(n, k)
        reports.append(check_fi_equals_fn(
            layout.graph, config.samples, config.seed,
            budget_states=config.budget_states, params=(("n", n), ("k", k))))
    reports.sort(key=lambda r: (r.theorem, tuple(str(p) for p in r.params)))
    return reports


def _report_row(r: TheoremReport) -> list[str]:
    n = r.param("n", r.param("n_vertices", ""))
    k = r.param("k", "")
    return [r.theorem, str(n), str(k), r.claim, r.computed, r.verdict]


def reports_to_csv(reports) -> str:
    """CSV with the fixed column order theorem,n,k,claim,computed,verdict."""
    buf = _io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(["theorem", "n", "k", "claim", "computed", "verdict"])
    for r in reports:
        writer.writerow(_report_row(r))
    return buf.getvalue()


def reports_to_markdown(reports) -> str:
    """Markdown table with the same columns as the CSV output."""
    header = ["theorem", "n", "k", "claim", "computed", "verdict"]
    lines = ["| " + " | ".join(header) + " |",
             "| " + " | ".join("---" for _ in header) + " |"]
    for r in reports:
        lines.append("| " + " | ".join(_report_row(r)) + " |")
    return "\n".join(lines) + "\n"
