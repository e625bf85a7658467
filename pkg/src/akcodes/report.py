"""Checking code specifications against expected properties and emitting TSV."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .codes import (
    AdditiveCode,
    Code,
    gray_min_distance,
    is_self_dual,
    is_theta_cyclic,
    min_distance,
)
from .gf2 import DistanceInfeasible
from .ring import all_subsets, format_subset
from .specfile import CodeSpec, loads_all

COLUMNS = ("name", "n", "k", "S", "T", "skew_cyclic", "self_dual", "d_ak", "d_gray",
           "table_d", "match", "notes")
INFEASIBLE = "infeasible"


def bundled_table_text() -> str:
    return resources.files("akcodes").joinpath("data/table1.spec").read_text(encoding="utf-8")


def bundled_table() -> list[CodeSpec]:
    return loads_all(bundled_table_text(), "table1.spec")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


@dataclass(frozen=True)
class ReportRow:
    name: str
    n: int
    k: int
    S: frozenset[int]
    T: frozenset[int]
    skew_cyclic: bool
    self_dual: bool | None  # None when not applicable (additive codes)
    d_ak: int | None  # None means infeasible
    d_gray: int | None
    table_d: int | None
    notes: tuple[str, ...] = ()

    @property
    def distance_match(self) -> bool | None:
        """Whether either distance reading equals table_d (None without a target)."""
        if self.table_d is None:
            return None
        return self.table_d in (self.d_ak, self.d_gray)

    @property
    def ok(self) -> bool:
        """Every feasible check agrees with what the record claims."""
        return (self.skew_cyclic and self.self_dual is not False
                and self.distance_match is not False)

    def cells(self) -> list[str]:
        dm = self.distance_match
        return [
            self.name, str(self.n), str(self.k), format_subset(self.S), format_subset(self.T),
            _yes(self.skew_cyclic),
            "n/a" if self.self_dual is None else _yes(self.self_dual),
            INFEASIBLE if self.d_ak is None else str(self.d_ak),
            INFEASIBLE if self.d_gray is None else str(self.d_gray),
            "" if self.table_d is None else str(self.table_d),
            "n/a" if dm is None else _yes(dm),
            "; ".join(self.notes),
        ]


def _self_dual_under(C: Code) -> list[frozenset[int]]:
    return [T for T in all_subsets(C.k) if is_self_dual(C, T)]


def check_spec(spec: CodeSpec) -> ReportRow:
    """Build the code of ``spec`` and run every check on it."""
    C = spec.build()
    notes = [spec.notes] if spec.notes else []
    skew = is_theta_cyclic(C, spec.S)
    if isinstance(C, AdditiveCode):
        self_dual = None
        notes.append("additive code, not A_k-linear")
    else:
        self_dual = is_self_dual(C, spec.T)
        if not self_dual:
            alts = _self_dual_under(C)
            if alts:
                notes.append("self-dual only for T in " + " | ".join(format_subset(T) for T in alts))
            else:
                notes.append(f"not self-dual for any T (log2|C| = {C.log2_size}, "
                             f"half = {(C.n << C.k) // 2})")
    d_ak = d_gray = None
    if C.log2_size:
        try:
            d_ak = min_distance(C)
        except DistanceInfeasible:
            pass
        try:
            d_gray = gray_min_distance(C)
        except DistanceInfeasible:
            pass
    else:
        notes.append("zero code")
    row = ReportRow(spec.name, spec.n, spec.k, spec.S, spec.T, skew, self_dual, d_ak, d_gray,
                    spec.expected_d, tuple(notes))
    if row.distance_match is False:
        row = ReportRow(**{**row.__dict__, "notes": row.notes + (
            f"distance mismatch: computed d_ak={row.cells()[7]}, d_gray={row.cells()[8]}, "
            f"expected {spec.expected_d}",)})
    return row


def check_specs(specs: Sequence[CodeSpec], jobs: int = 1) -> list[ReportRow]:
    """Check every spec; rows come back in input order whatever ``jobs`` is."""
    if jobs <= 1 or len(specs) <= 1:
        return [check_spec(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_spec, specs))


def format_tsv(rows: Iterable[ReportRow]) -> str:
    lines = ["\t".join(COLUMNS)]
    lines += ["\t".join(r.cells()) for r in rows]
    return "\n".join(lines) + "\n"


def format_text(rows: Sequence[ReportRow]) -> str:
    out = []
    for r in rows:
        c = dict(zip(COLUMNS, r.cells()))
        out.append(f"[{r.name}] n={r.n} k={r.k} S={c['S']} T={c['T']}")
        out.append(f"  skew-cyclic: {c['skew_cyclic']}   self-dual: {c['self_dual']}")
        out.append(f"  d_ak: {c['d_ak']}   d_gray: {c['d_gray']}   expected: {c['table_d'] or '-'}"
                   f"   match: {c['match']}")
        for note in r.notes:
            out.append(f"  note: {note}")
        out.append(f"  status: {'ok' if r.ok else 'MISMATCH'}")
    bad = [r.name for r in rows if not r.ok]
    out.append(f"{len(rows) - len(bad)}/{len(rows)} rows consistent"
               + (f"; mismatches: {', '.join(bad)}" if bad else ""))
    return "\n".join(out) + "\n"
