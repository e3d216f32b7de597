"""File formats: decision problems in and rankings, sweeps, reports out.

Input problems are JSON objects or CSV matrices; see README for the
schemas.  Machine-readable outputs carry full float precision so results
round-trip exactly; human-facing rounding happens only in the demo report.
"""

from __future__ import annotations

import csv
import io as _io
import json
from importlib import resources
from typing import Sequence

from .core import Pfn
from .errors import PfnError
from .legacy import ClosureReport
from .mcdm import Alternative, Criterion, DecisionProblem, RankingResult, SweepTable

CASE_STUDY_RESOURCE = "case_study.json"


def problem_from_dict(data: dict) -> DecisionProblem:
    try:
        raw_criteria = data["criteria"]
        raw_alternatives = data["alternatives"]
    except (KeyError, TypeError) as exc:
        raise PfnError(f"problem JSON must have criteria and alternatives: {exc}")
    criteria = []
    for i, c in enumerate(raw_criteria):
        try:
            criteria.append(Criterion(c["name"], c["kind"], float(c["weight"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise PfnError(f"criterion #{i + 1} is malformed: {exc}")
    alternatives = []
    for a in raw_alternatives:
        try:
            name = a["name"]
            raw_ratings = a["ratings"]
        except (KeyError, TypeError) as exc:
            raise PfnError(f"alternative entry is malformed: {exc}")
        ratings = []
        for j, cell in enumerate(raw_ratings):
            crit = criteria[j].name if j < len(criteria) else f"#{j + 1}"
            try:
                ratings.append(Pfn.from_json(cell))
            except (PfnError, TypeError, ValueError) as exc:
                raise PfnError(
                    f"alternative {name!r}, criterion {crit!r}: {exc}"
                )
        alternatives.append(Alternative(name, tuple(ratings)))
    return DecisionProblem(tuple(criteria), tuple(alternatives))


def load_problem_json(path: str) -> DecisionProblem:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise PfnError(f"{path}: not valid JSON ({exc})")
    return problem_from_dict(data)


def load_problem_csv(
    path: str,
    criteria: Sequence[Criterion] | None = None,
    sidecar: str | None = None,
) -> DecisionProblem:
    """CSV matrix with header ``name,G1_mu,G1_eta,G1_nu,G2_mu,...``.

    Criterion kinds and weights come from ``criteria`` (already parsed from
    CLI flags) or from a sidecar JSON ``{"criteria": [...]}``.
    """
    if sidecar is not None:
        with open(sidecar, encoding="utf-8") as fh:
            data = json.load(fh)
        criteria = [
            Criterion(c["name"], c["kind"], float(c["weight"]))
            for c in data["criteria"]
        ]
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise PfnError(f"{path}: empty CSV")
        names = _criterion_names_from_header(header, path)
        if criteria is None:
            raise PfnError(
                f"{path}: criterion kinds/weights needed; pass a sidecar JSON "
                f"or --kinds/--weights flags"
            )
        if [c.name for c in criteria] != list(names):
            raise PfnError(
                f"{path}: criteria {list(names)} do not match the supplied "
                f"kinds/weights for {[c.name for c in criteria]}"
            )
        alternatives = []
        for row in reader:
            if not row:
                continue
            name = row[0]
            cells = row[1:]
            if len(cells) != 3 * len(names):
                raise PfnError(
                    f"{path}: alternative {name!r} has {len(cells)} values, "
                    f"expected {3 * len(names)}"
                )
            ratings = []
            for j, crit in enumerate(names):
                raw = cells[3 * j : 3 * j + 3]
                try:
                    ratings.append(Pfn(*(float(v) for v in raw)))
                except (PfnError, ValueError) as exc:
                    raise PfnError(
                        f"alternative {name!r}, criterion {crit!r}: {exc}"
                    )
            alternatives.append(Alternative(name, tuple(ratings)))
    return DecisionProblem(tuple(criteria), tuple(alternatives))


def _criterion_names_from_header(header: Sequence[str], path: str) -> list[str]:
    if not header or header[0] != "name":
        raise PfnError(f"{path}: first CSV column must be 'name'")
    cols = header[1:]
    if len(cols) % 3 != 0:
        raise PfnError(f"{path}: expected mu/eta/nu column triples")
    names = []
    for j in range(0, len(cols), 3):
        expect = [f"_{suffix}" for suffix in ("mu", "eta", "nu")]
        base = cols[j].removesuffix("_mu")
        triple = cols[j : j + 3]
        if triple != [base + s for s in expect]:
            raise PfnError(f"{path}: bad column triple {triple}")
        names.append(base)
    return names


def load_problem(path: str, criteria=None, sidecar=None) -> DecisionProblem:
    if path.endswith(".csv"):
        return load_problem_csv(path, criteria=criteria, sidecar=sidecar)
    return load_problem_json(path)


def load_case_study() -> DecisionProblem:
    """The bundled six-alternative, four-criterion investment example."""
    text = (
        resources.files("pfnkit").joinpath("data", CASE_STUDY_RESOURCE).read_text()
    )
    return problem_from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Writers
# ---------------------------------------------------------------------------


def ranking_to_csv(result: RankingResult) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "name", "mu", "eta", "nu", "score", "h1", "h2"])
    for e in result.entries:
        p = e.profile
        writer.writerow(
            [e.rank, e.name]
            + [repr(v) for v in (e.value.mu, e.value.eta, e.value.nu, p.s, p.h1, p.h2)]
        )
    return buf.getvalue()


def ranking_to_json(result: RankingResult) -> str:
    payload = {
        "operator": result.operator,
        "tnorm": result.family,
        "gamma": result.gamma,
        "results": [
            {
                "rank": e.rank,
                "name": e.name,
                "aggregated": e.value.to_json(),
                "score": e.profile.s,
                "h1": e.profile.h1,
                "h2": e.profile.h2,
            }
            for e in result.entries
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def ranking_from_json(text: str) -> list[tuple[str, Pfn]]:
    """Re-ingest ``ranking_to_json`` output as (name, aggregate) pairs."""
    data = json.loads(text)
    return [(r["name"], Pfn.from_json(r["aggregated"])) for r in data["results"]]


def sweep_to_csv(table: SweepTable) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = list(table.alternatives)
    writer.writerow(
        ["gamma"]
        + [f"{n}_score" for n in names]
        + [f"{n}_rank" for n in names]
    )
    for row in table.rows:
        writer.writerow(
            [repr(row.gamma)]
            + [repr(row.scores[n]) for n in names]
            + [row.ranks[n] for n in names]
        )
    return buf.getvalue()


def closure_reports_to_csv(reports: Sequence[ClosureReport]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["operator_id", "inputs", "a", "b", "c", "sum", "is_pfn"])
    for r in reports:
        writer.writerow(
            [
                r.operator_id,
                json.dumps(r.inputs, separators=(",", ":")),
                repr(r.output.a),
                repr(r.output.b),
                repr(r.output.c),
                repr(r.component_sum),
                str(r.is_pfn).lower(),
            ]
        )
    return buf.getvalue()


def demo_report(result: RankingResult, problem: DecisionProblem) -> str:
    """Human-readable walkthrough of the pipeline, rounded to 4 decimals."""
    lines = []
    crit_names = [c.name for c in problem.criteria]
    lines.append("Decision matrix (mu, eta, nu per criterion):")
    header = "  {:<6}".format("") + "".join(f"{n:<18}" for n in crit_names)
    lines.append(header)
    for alt in problem.alternatives:
        cells = "".join(
            f"({r.mu:g},{r.eta:g},{r.nu:g})".ljust(18) for r in alt.ratings
        )
        lines.append(f"  {alt.name:<6}{cells}")
    lines.append("")
    weights = ", ".join(repr(c.weight) for c in problem.criteria)
    lines.append(f"Weights: ({weights})")
    lines.append(
        f"Operator: {result.operator} with the {result.family} t-norm"
        + (f" (gamma={result.gamma})" if result.gamma is not None else "")
    )
    lines.append("")
    lines.append("Aggregated values:")
    by_input = {e.name: e for e in result.entries}
    for alt in problem.alternatives:
        e = by_input[alt.name]
        lines.append(
            f"  r({alt.name}) = {e.value.mu:.4f}, {e.value.eta:.4f}, {e.value.nu:.4f}"
        )
    lines.append("")
    lines.append("Scores:")
    for alt in problem.alternatives:
        e = by_input[alt.name]
        lines.append(f"  S(r({alt.name})) = {e.profile.s:.4f}")
    lines.append("")
    lines.append("Ranking: " + " > ".join(result.order()))
    return "\n".join(lines) + "\n"
