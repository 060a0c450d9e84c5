"""JSON/CSV payloads. Big integers always travel as decimal strings."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from .family import FamilyMember, FamilyParams, VerificationReport
from .numtheory import FactorialFactorization, GrowthTable, TotientBoundScan
from .oracle import PermGroup, PowerConjugacy, to_cycles
from .symalt import ClassRecord, MultiplicityReport

SCHEMA_VERSION = "1"


def envelope(command: str, params: dict[str, Any], payload: Any) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "payload": payload,
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=True)


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def report_payload(r: MultiplicityReport) -> dict[str, Any]:
    return {
        "group": r.group_tag,
        "group_order": str(r.group_order),
        "class_count": r.class_count,
        "max_multiplicity": r.max_multiplicity,
        "argmax_sizes": [str(s) for s in r.argmax_sizes],
        "histogram": {str(s): c for s, c in r.histogram.items()},
    }


def scan_payload(n: int, r: MultiplicityReport) -> dict[str, Any]:
    return {"n": n, **report_payload(r)}


SCAN_CSV_HEADER = ["n", "max_multiplicity", "argmax_sizes", "class_count"]


def scan_csv_row(n: int, r: MultiplicityReport) -> list[str]:
    return [str(n), str(r.max_multiplicity), ";".join(map(str, r.argmax_sizes)), str(r.class_count)]


def params_payload(p: FamilyParams) -> dict[str, Any]:
    return {
        "M": p.M,
        "k": p.k,
        "min_even_n": str(p.min_even_n),
        "min_odd_n": str(p.min_odd_n),
        "N": str(p.N),
    }


def member_payload(mem: FamilyMember, lead: Optional[int] = None, class_size: Optional[int] = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "word": mem.word,
        "partition": [str(p) for p in mem.partition.parts],
        "size": str(mem.partition.size),
        "certified_centralizer": str(mem.certified_centralizer),
    }
    if lead is not None:
        out["leading_part"] = str(lead)
        out["extended_centralizer"] = str(lead * mem.certified_centralizer)
    if class_size is not None:
        out["alt_class_size"] = str(class_size)
    return out


def verification_payload(v: VerificationReport) -> dict[str, Any]:
    return {
        "ok": v.ok,
        "checks": len(v.checks),
        "failures": [
            {"name": c.name, "member": c.member, "detail": c.detail} for c in v.failures
        ],
    }


def class_record_payload(G: PermGroup, r: ClassRecord) -> dict[str, Any]:
    return {
        "rep": to_cycles(r.rep),
        "size": str(r.class_size),
        "centralizer": str(G.order // r.class_size),
    }


def power_payload(x: tuple[int, ...], pc: PowerConjugacy, centralizer: int) -> dict[str, Any]:
    return {
        "element": to_cycles(x),
        "order": pc.order,
        "conj_power_count": pc.conj_power_count,
        "equal_size_class_lower_bound": pc.equal_size_class_lower_bound,
        "centralizer": str(centralizer),
    }


def totient_payload(s: TotientBoundScan) -> dict[str, Any]:
    return {"k_max": s.k_max, "boundary": s.boundary, "violations": s.violations}


def dfact_payload(f: FactorialFactorization) -> dict[str, Any]:
    return {
        "n": f.n,
        "exponents": {str(p): e for p, e in f.exponents.items()},
        "divisor_count": str(f.divisor_count()),
    }


def growth_payload(t: GrowthTable) -> dict[str, Any]:
    return {
        "a": fraction_str(t.a),
        "c": fraction_str(t.c),
        "rows": [{"k": k, "ratio": fraction_str(r)} for k, r in t.rows],
        "decreases": t.decreases,
        "turning_index": t.turning_index,
    }


def csv_text(header: list[str], rows: Iterable[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
