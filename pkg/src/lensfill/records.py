"""Flat catalogue records for atlases: JSON lines, CSV rows and text tables."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, List, Tuple

from . import __version__
from .atlas import Atlas

CONVENTION = "greedy-ceiling-b-string"


@dataclass(frozen=True)
class FillingRecord:
    n: Tuple[int, ...]
    rank_h2: int
    is_artin: bool
    is_rational_homology_ball: bool
    witness: Tuple[int, ...]  # 1-based blowdown positions


@dataclass(frozen=True)
class CatalogueRecord:
    p: int
    q: int
    k: int
    h: int
    b_string: Tuple[int, ...]
    a_string: Tuple[int, ...]
    fillings: Tuple[FillingRecord, ...]
    unique_up_to_blowup: bool
    kollar_certified: bool
    nrs_members: Tuple[Tuple[int, ...], ...]
    filling_count_lower_bound: int
    tool_version: str = __version__
    convention: str = CONVENTION

    @classmethod
    def from_atlas(cls, a: Atlas) -> "CatalogueRecord":
        lens = a.lens
        return cls(
            p=lens.p,
            q=lens.q,
            k=lens.k,
            h=lens.h,
            b_string=lens.b_string,
            a_string=lens.a_string,
            fillings=tuple(
                FillingRecord(
                    f.n, f.rank_h2, f.is_artin, f.is_rational_homology_ball, tuple(f.witness.indices)
                )
                for f in a.fillings
            ),
            unique_up_to_blowup=a.unique_up_to_blowup,
            kollar_certified=a.kollar_certified,
            nrs_members=a.nrs_members,
            filling_count_lower_bound=a.filling_count_lower_bound,
        )

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d["b_string"] = list(self.b_string)
        d["a_string"] = list(self.a_string)
        d["fillings"] = [
            {
                "n": list(f.n),
                "rank_h2": f.rank_h2,
                "is_artin": f.is_artin,
                "is_rational_homology_ball": f.is_rational_homology_ball,
                "witness": list(f.witness),
            }
            for f in self.fillings
        ]
        d["nrs_members"] = [list(w) for w in self.nrs_members]
        return d

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "CatalogueRecord":
        names = [f.name for f in fields(cls)]
        if list(d) != names:
            raise ValueError(f"unexpected field set {list(d)}")
        return cls(
            p=d["p"],
            q=d["q"],
            k=d["k"],
            h=d["h"],
            b_string=tuple(d["b_string"]),
            a_string=tuple(d["a_string"]),
            fillings=tuple(
                FillingRecord(
                    tuple(f["n"]), f["rank_h2"], f["is_artin"],
                    f["is_rational_homology_ball"], tuple(f["witness"]),
                )
                for f in d["fillings"]
            ),
            unique_up_to_blowup=d["unique_up_to_blowup"],
            kollar_certified=d["kollar_certified"],
            nrs_members=tuple(tuple(w) for w in d["nrs_members"]),
            filling_count_lower_bound=d["filling_count_lower_bound"],
            tool_version=d["tool_version"],
            convention=d["convention"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(", ", ": "))

    @classmethod
    def from_json(cls, line: str) -> "CatalogueRecord":
        return cls.from_dict(json.loads(line))


CSV_HEADER = [
    "p", "q", "k", "h", "b_string", "a_string", "unique_up_to_blowup",
    "kollar_certified", "nrs_members", "filling_count_lower_bound",
    "n", "rank_h2", "is_artin", "is_rational_homology_ball", "witness",
    "tool_version", "convention",
]


def _cell(w) -> str:
    return " ".join(str(x) for x in w)


def csv_rows(rec: CatalogueRecord) -> List[List[str]]:
    """One row per filling; lens-space columns repeat."""
    head = [
        rec.p, rec.q, rec.k, rec.h, _cell(rec.b_string), _cell(rec.a_string),
        rec.unique_up_to_blowup, rec.kollar_certified,
        ";".join(_cell(w) for w in rec.nrs_members), rec.filling_count_lower_bound,
    ]
    rows = []
    for f in rec.fillings:
        row = head + [_cell(f.n), f.rank_h2, f.is_artin, f.is_rational_homology_ball,
                      _cell(f.witness), rec.tool_version, rec.convention]
        rows.append([str(x) for x in row])
    return rows


def to_csv(records, header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_HEADER)
    for rec in records:
        w.writerows(csv_rows(rec))
    return buf.getvalue()


def _fmt(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def to_table(rec: CatalogueRecord) -> str:
    lines = [
        f"L({rec.p},{rec.q})   k={rec.k}  h={rec.h}",
        f"  b-string (p/(p-q)): {_fmt(rec.b_string)}",
        f"  a-string (p/q):     {_fmt(rec.a_string)}",
        f"  fillings: {len(rec.fillings)}   unique up to blowup: {rec.unique_up_to_blowup}"
        f"   a_i>=5 certified: {rec.kollar_certified}",
    ]
    if rec.nrs_members:
        lines.append(f"  n(r,s) family: {' '.join(_fmt(w) for w in rec.nrs_members)}")
    lines.append(f"  rank-separated lower bound: {rec.filling_count_lower_bound}")
    rows = [("n", "rank H2", "Artin", "QHB", "blowdowns")]
    for f in rec.fillings:
        rows.append((_fmt(f.n), str(f.rank_h2), "yes" if f.is_artin else "",
                     "yes" if f.is_rational_homology_ball else "", _fmt(f.witness)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        lines.append("  " + "  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip())
    return "\n".join(lines)
