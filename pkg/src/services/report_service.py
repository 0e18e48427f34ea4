"""Report and catalog models with their text and JSON renderings.

Models are pydantic so a JSON report parses back into an equal model and
re-renders to the same bytes. Text tables use the row labels of the
run/autocorrelation table, so they can be compared line by line against
transcribed values.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, TypeAdapter

from src.core.errors import CrossCheckFailure
from src.core.run_formula import autocorr_profile, gamma_table
from src.core.sequence import (
    BinarySequence,
    autocorr_bruteforce_profile,
    decompose_runs,
    pattern_counts,
    weight,
)
from src.helper.logger import get_logger
from src.services.applications import check_prop_5_3, hadamard_conditions, zcz_zone

logger = get_logger("report_service")

DEFAULT_PATTERN_RUNS = 3

TABLE_LABELS = (
    "i",
    "gamma_P(i)",
    "wt(s+T^(i+1)s)-wt(s+T^i s)",
    "wt(s+T^(i+1)s)",
    "C_s(i+1)",
)


class ZoneFourModel(BaseModel):
    r1: int
    r2: int
    r1r2: int
    r2r1: int
    long_runs: int
    p1: Optional[int] = None
    p1_singletons: Optional[int] = None
    item1: bool
    item2: bool
    item3: Optional[bool] = None
    item4: Optional[bool] = None
    holds: bool
    consistent_with_zone: bool


class AnalysisReport(BaseModel):
    sequence: str
    period: int
    weight: int
    gamma: int
    run_word: Optional[str] = None
    run_counts: Dict[str, int]
    gamma_table: List[int]  # gamma_P(1..N-1)
    profile: List[int]      # C_s(0..N-1)
    zcz_zone: int
    prop_5_3: Optional[ZoneFourModel] = None
    notes: List[str] = []

    def rows(self) -> List[List[int]]:
        """The four table rows for i = 0..N-1, derived from the profile."""
        n = self.period
        weights = [(n - c) // 2 for c in self.profile[1:]] + [0]
        diffs = [weights[0]] + [weights[i] - weights[i - 1] for i in range(1, n)]
        return [
            list(range(n)),
            [0] + self.gamma_table,
            diffs,
            weights,
            self.profile[1:] + [n],
        ]


class CatalogEntry(BaseModel):
    sequence: str
    run_word: Optional[str] = None
    zone: int
    hadamard_items: Optional[Dict[str, bool]] = None


class ZczSummary(BaseModel):
    period: int
    zone: int
    count: int
    entries: List[CatalogEntry]


class VerifySummary(BaseModel):
    mode: str
    periods: Tuple[int, int]
    sequences: int
    assertions: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def render(self) -> str:
        low, high = self.periods
        span = f"period {low}" if low == high else f"periods {low}..{high}"
        lines = [
            f"mode: {self.mode}, {span}",
            f"sequences checked: {self.sequences}",
            f"assertions checked: {self.assertions}",
            f"counterexample: {self.counterexample}" if self.counterexample else "failures: 0",
        ]
        return "\n".join(lines)


def _pattern_key(lengths: Tuple[int, ...]) -> str:
    return "".join(f"R{length}" for length in lengths)


def build_report(s: BinarySequence, max_pattern_runs: int = DEFAULT_PATTERN_RUNS) -> AnalysisReport:
    n = s.period
    oracle = autocorr_bruteforce_profile(s)
    if s.is_constant():
        return AnalysisReport(
            sequence=str(s), period=n, weight=weight(s), gamma=0,
            run_counts={}, gamma_table=[0] * (n - 1), profile=list(oracle),
            zcz_zone=zcz_zone(s),
            notes=["constant sequence: no run structure, profile from the brute-force oracle"],
        )

    rw = decompose_runs(s)
    profile = autocorr_profile(s)
    if profile != oracle:
        logger.error(f"run formula profile {profile} differs from oracle {oracle} for {s}")
        raise CrossCheckFailure(f"run formula and oracle disagree for {s}")
    zcz = check_prop_5_3(s)
    c = zcz.conditions
    notes = []
    if c.item3 is None:
        notes.append("every run has length 1: items 3 and 4 are not applicable")
    return AnalysisReport(
        sequence=str(s),
        period=n,
        weight=weight(s),
        gamma=rw.gamma,
        run_word=str(rw),
        run_counts={_pattern_key(k): v for k, v in pattern_counts(rw, max_pattern_runs).items()},
        gamma_table=list(gamma_table(rw, n - 1).values),
        profile=list(profile),
        zcz_zone=zcz.zone,
        prop_5_3=ZoneFourModel(
            r1=c.r1, r2=c.r2, r1r2=c.r1r2, r2r1=c.r2r1, long_runs=c.long_runs,
            p1=c.p1, p1_singletons=c.p1_singletons,
            item1=c.item1, item2=c.item2, item3=c.item3, item4=c.item4,
            holds=c.holds, consistent_with_zone=zcz.characterization_consistent,
        ),
        notes=notes,
    )


def render_table(rows: Sequence[Sequence[int]]) -> List[str]:
    label_width = max(len(label) for label in TABLE_LABELS)
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for label, row in zip(TABLE_LABELS, rows):
        cells = " ".join(str(value).rjust(width) for value, width in zip(row, widths))
        lines.append(f"{label.ljust(label_width)} | {cells}")
    return lines


def render_text(report: AnalysisReport) -> str:
    lines = [
        f"sequence: {report.sequence}",
        f"period: {report.period}  weight: {report.weight}  gamma: {report.gamma}",
        f"run word: {report.run_word if report.run_word is not None else '-'}",
        f"zcz zone: {report.zcz_zone}",
    ]
    if report.run_counts:
        lines.append("run counts: " + ", ".join(f"{k}={v}" for k, v in report.run_counts.items()))
    if report.prop_5_3 is not None:
        p = report.prop_5_3
        items = ", ".join("-" if item is None else str(item).lower()
                          for item in (p.item1, p.item2, p.item3, p.item4))
        lines.append(f"zone >= 4 run items: {items} (holds: {str(p.holds).lower()})")
    lines.extend(f"note: {note}" for note in report.notes)
    lines.append("")
    lines.extend(render_table(report.rows()))
    return "\n".join(lines)


_REPORT_LIST = TypeAdapter(List[AnalysisReport])


def render_json(reports: Sequence[AnalysisReport]) -> str:
    """One report as an object, several as an array."""
    if len(reports) == 1:
        return reports[0].model_dump_json(indent=2)
    return _REPORT_LIST.dump_json(list(reports), indent=2).decode()


def parse_reports(text: str) -> List[AnalysisReport]:
    if text.lstrip().startswith("["):
        return _REPORT_LIST.validate_json(text)
    return [AnalysisReport.model_validate_json(text)]


def catalog_entry(s: BinarySequence, with_hadamard: bool = False) -> CatalogEntry:
    run_word = None if s.is_constant() else str(decompose_runs(s))
    items = hadamard_conditions(s).as_dict() if with_hadamard else None
    return CatalogEntry(sequence=str(s), run_word=run_word, zone=zcz_zone(s), hadamard_items=items)


def render_catalog(entries: Sequence[CatalogEntry]) -> str:
    """One tab-separated line per class: sequence, run word, zone."""
    return "\n".join(f"{e.sequence}\t{e.run_word or '-'}\tzone {e.zone}" for e in entries)


_CATALOG = TypeAdapter(List[CatalogEntry])


def render_catalog_json(entries: Sequence[CatalogEntry]) -> str:
    return _CATALOG.dump_json(list(entries), indent=2).decode()
