"""Structured record (de)serialization for the CLI.

Every record is a flat JSON-friendly dict.  Exact rationals travel as
"num/den" strings, never floats; a 15-significant-digit decimal
rendering is attached alongside where humans want one.  Each ``*_record``
function has a ``parse_*`` inverse so emitted records round-trip into
the originating domain objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from ._version import __version__
from .core import IsometryWitness, LensSpace
from .heat import HeatCoefficient, HeatExpansion, HeatTerm
from .search import PairReport, PerQ, SweepSummary
from .spectrum import IsospectralDecision, SpectrumRow, SpectrumTable


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def decimal_str(x: float) -> str:
    return f"{x:.15g}"


def lens_record(space: LensSpace) -> dict:
    return {"q": space.q, "rotations": list(space.rotations), "padding": space.padding}


def parse_lens(rec: dict) -> LensSpace:
    return LensSpace(int(rec["q"]), tuple(rec["rotations"]), int(rec["padding"]))


def witness_record(w: Optional[IsometryWitness]) -> Optional[dict]:
    if w is None:
        return None
    return {"unit": w.unit, "signs": list(w.signs), "permutation": list(w.permutation)}


def parse_witness(rec: Optional[dict]) -> Optional[IsometryWitness]:
    if rec is None:
        return None
    return IsometryWitness(int(rec["unit"]), tuple(rec["signs"]), tuple(rec["permutation"]))


def decision_record(d: IsospectralDecision) -> dict:
    return {
        "isospectral": d.isospectral,
        "first_differing_k": d.first_differing_k,
        "checked_upto": d.checked_upto,
        "reason": d.reason,
    }


def parse_decision(rec: dict) -> IsospectralDecision:
    k = rec["first_differing_k"]
    return IsospectralDecision(
        bool(rec["isospectral"]),
        None if k is None else int(k),
        int(rec["checked_upto"]),
        str(rec["reason"]),
    )


def spectrum_row_record(row: SpectrumRow) -> dict:
    return {"k": row.k, "eigenvalue": row.eigenvalue, "multiplicity": row.multiplicity}


def parse_spectrum_row(rec: dict) -> SpectrumRow:
    return SpectrumRow(int(rec["k"]), int(rec["eigenvalue"]), int(rec["multiplicity"]))


def spectrum_table_record(table: SpectrumTable) -> dict:
    return {
        "space": lens_record(table.space),
        "rows": [spectrum_row_record(r) for r in table.rows],
    }


def parse_spectrum_table(rec: dict) -> SpectrumTable:
    return SpectrumTable(
        parse_lens(rec["space"]),
        tuple(parse_spectrum_row(r) for r in rec["rows"]),
    )


def heat_term_record(term: HeatTerm) -> dict:
    c = term.coefficient
    return {
        "exponent": fraction_str(term.exponent),
        "inv_pi": fraction_str(c.inv_pi),
        "sqrt_pi": fraction_str(c.sqrt_pi),
        "exact": term.exact,
        "decimal": decimal_str(float(c)),
    }


def parse_heat_term(rec: dict) -> HeatTerm:
    coeff = HeatCoefficient(parse_fraction(rec["inv_pi"]), parse_fraction(rec["sqrt_pi"]))
    return HeatTerm(parse_fraction(rec["exponent"]), coeff, bool(rec["exact"]))


def heat_expansion_record(exp: HeatExpansion) -> dict:
    return {
        "space": lens_record(exp.space),
        "alpha": exp.alpha,
        "beta": exp.beta,
        "truncation_order": exp.truncation_order,
        "terms": [heat_term_record(t) for t in exp.terms],
    }


def pair_record(p: PairReport) -> dict:
    return {
        "record": "pair",
        "q": p.first.q,
        "first": lens_record(p.first),
        "second": lens_record(p.second),
        "isometric": p.isometric,
        "witness": witness_record(p.witness),
        "isospectral": p.isospectral,
        "first_differing_k": p.first_differing_k,
        "heat_verdict": p.heat_verdict,
    }


def parse_pair(rec: dict) -> PairReport:
    k = rec["first_differing_k"]
    return PairReport(
        parse_lens(rec["first"]),
        parse_lens(rec["second"]),
        bool(rec["isometric"]),
        parse_witness(rec["witness"]),
        bool(rec["isospectral"]),
        None if k is None else int(k),
        rec["heat_verdict"],
    )


def per_q_record(p: PerQ) -> dict:
    return {
        "record": "per_q",
        "q": p.q,
        "spaces": p.spaces,
        "classes": p.classes,
        "pairs": p.pairs,
        "findings": p.findings,
    }


def parse_per_q(rec: dict) -> PerQ:
    return PerQ(
        int(rec["q"]),
        int(rec["spaces"]),
        int(rec["classes"]),
        int(rec["pairs"]),
        int(rec["findings"]),
    )


def summary_record(s: SweepSummary) -> dict:
    return {
        "record": "summary",
        "mode": s.mode,
        "qmin": s.qmin,
        "qmax": s.qmax,
        "padding": s.padding,
        "dimension": s.dimension,
        "spaces": s.spaces,
        "classes": s.classes,
        "pairs_checked": s.pairs_checked,
        "findings": len(s.findings),
        "small_q_findings": len(s.small_q_findings),
        "version": __version__,
    }


def envelope(command: str, inputs: dict, result: Any) -> dict:
    return {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "result": result,
    }
