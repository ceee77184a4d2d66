"""JSON-lines records emitted by the CLI.

Every record carries ``schema_version`` and ``kind``.  ``SCHEMAS`` holds one
JSON Schema per kind; ``*_from_record`` rebuilds the library object so a
record can be checked by re-serialising it.
"""

from __future__ import annotations

import json

from .cuspidal import CuspidalDatum, VerificationReport
from .partitions import Bipartition, Partition, SymplecticClassLabel, component_group_order, n_delta
from .springer import SpringerImage
from .symbols import Symbol, format_symbol, make_symbol
from .weyl import HarishChandraDatum, InvolutionDatum, SeriesLabel

SCHEMA_VERSION = 1


def dumps(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def symbol_to_json(x: Symbol) -> dict:
    return {"r": x.r, "s": x.s, "rows": [list(x.row_a), list(x.row_b)]}


def symbol_from_json(obj: dict) -> Symbol:
    row_a, row_b = obj["rows"]
    return make_symbol(obj["r"], obj["s"], row_a, row_b)


def _header(kind):
    return {"schema_version": SCHEMA_VERSION, "kind": kind}


def class_record(label: SymplecticClassLabel) -> dict:
    n_u, delta_u = n_delta(label)
    return _header("class") | {
        "n": label.n,
        "partition": list(label.partition),
        "n_u": n_u,
        "delta_u": delta_u,
        "a_order": component_group_order(label),
    }


def class_from_record(rec: dict) -> SymplecticClassLabel:
    return SymplecticClassLabel(Partition(rec["partition"]), rec["n"])


def springer_record(image: SpringerImage, wavefront: SymplecticClassLabel | None) -> dict:
    return _header("springer") | {
        "bipartition": [list(image.source.alpha), list(image.source.beta)],
        "symbol": symbol_to_json(image.symbol),
        "display": format_symbol(image.symbol),
        "rank": image.rank,
        "wavefront": None if wavefront is None else list(wavefront.partition),
    }


def springer_from_record(rec: dict) -> SpringerImage:
    alpha, beta = rec["bipartition"]
    return SpringerImage(symbol_from_json(rec["symbol"]), Bipartition(Partition(alpha), Partition(beta)))


def cuspidal_record(datum: CuspidalDatum) -> dict:
    return _header("cuspidal") | {
        "e": datum.e,
        "f": datum.f,
        "a": datum.a,
        "b": datum.b,
        "n": datum.n,
        "special_b": symbol_to_json(datum.special_b),
        "special_d": symbol_to_json(datum.special_d),
        "n_chi": datum.n_chi,
        "cuspidal_exists": datum.cuspidal_exists,
    }


def cuspidal_from_record(rec: dict) -> CuspidalDatum:
    return CuspidalDatum(rec["e"], rec["f"])


def verification_record(report: VerificationReport) -> dict:
    d = report.datum
    return _header("verification") | {
        "e": d.e,
        "f": d.f,
        "n": d.n,
        "cuspidal_exists": d.cuspidal_exists,
        "j_symbol": symbol_to_json(report.j_symbol),
        "springer_symbol": symbol_to_json(report.springer_symbol),
        "lambda": list(report.lam.partition),
        "mu": None if report.mu is None else list(report.mu),
        "a_order": report.a_order,
        "n_chi": d.n_chi,
        "identity_holds": report.identity_holds,
        "mu_matches_closed_form": report.mu_matches_closed_form,
    }


def verification_from_record(rec: dict) -> VerificationReport:
    return VerificationReport(
        datum=CuspidalDatum(rec["e"], rec["f"]),
        j_symbol=symbol_from_json(rec["j_symbol"]),
        springer_symbol=symbol_from_json(rec["springer_symbol"]),
        lam=SymplecticClassLabel.of(rec["lambda"]),
        mu=None if rec["mu"] is None else Partition(rec["mu"]),
        a_order=rec["a_order"],
        identity_holds=rec["identity_holds"],
        mu_matches_closed_form=rec["mu_matches_closed_form"],
    )


def series_record(label: SeriesLabel, a_order: int) -> dict:
    inv = label.involution
    return _header("series_label") | {
        "n": inv.n,
        "a": inv.a,
        "b": inv.b,
        "sign_vector": list(inv.sign_vector),
        "a_order": a_order,
        "h1_class": label.h1_class,
        "representative": list(label.representative),
    }


def series_from_record(rec: dict) -> SeriesLabel:
    return SeriesLabel(InvolutionDatum(rec["a"], rec["b"]), rec["h1_class"], tuple(rec["representative"]))


def levi_record(datum: HarishChandraDatum) -> dict:
    return _header("levi") | {
        "n": datum.n,
        "e": datum.e,
        "k": datum.k,
        "gl1_factors": datum.gl1_factors,
        "symplectic_rank": datum.symplectic_rank,
        "relative_weyl_rank": datum.relative_weyl_rank,
        "relative_weyl_type": datum.relative_weyl_type,
    }


def levi_from_record(rec: dict) -> HarishChandraDatum:
    return HarishChandraDatum(rec["n"], rec["e"])


def error_record(exc: BaseException) -> dict:
    return _header("error") | {"error": type(exc).__name__, "message": str(exc)}


_nat = {"type": "integer", "minimum": 0}
_parts = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_row = {"type": "array", "items": _nat}
_symbol = {
    "type": "object",
    "properties": {"r": _nat, "s": _nat, "rows": {"type": "array", "items": _row, "minItems": 2, "maxItems": 2}},
    "required": ["r", "s", "rows"],
    "additionalProperties": False,
}


def _schema(kind, properties):
    props = {"schema_version": {"const": SCHEMA_VERSION}, "kind": {"const": kind}} | properties
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "properties": props,
        "required": list(props),
        "additionalProperties": False,
    }


SCHEMAS = {
    "class": _schema("class", {"n": _nat, "partition": _parts, "n_u": _nat, "delta_u": {"enum": [0, 1]}, "a_order": _nat}),
    "springer": _schema(
        "springer",
        {
            "bipartition": {"type": "array", "items": _parts, "minItems": 2, "maxItems": 2},
            "symbol": _symbol,
            "display": {"type": "string"},
            "rank": _nat,
            "wavefront": {"oneOf": [_parts, {"type": "null"}]},
        },
    ),
    "cuspidal": _schema(
        "cuspidal",
        {
            "e": _nat, "f": _nat, "a": _nat, "b": _nat, "n": _nat,
            "special_b": _symbol, "special_d": _symbol,
            "n_chi": _nat, "cuspidal_exists": {"type": "boolean"},
        },
    ),
    "verification": _schema(
        "verification",
        {
            "e": _nat, "f": _nat, "n": _nat, "cuspidal_exists": {"type": "boolean"},
            "j_symbol": _symbol, "springer_symbol": _symbol,
            "lambda": _parts, "mu": {"oneOf": [_parts, {"type": "null"}]},
            "a_order": _nat, "n_chi": _nat,
            "identity_holds": {"type": "boolean"}, "mu_matches_closed_form": {"type": "boolean"},
        },
    ),
    "series_label": _schema(
        "series_label",
        {
            "n": _nat, "a": _nat, "b": _nat,
            "sign_vector": {"type": "array", "items": {"enum": [1, -1]}},
            "a_order": _nat, "h1_class": _nat,
            "representative": {"type": "array", "items": {"type": "integer"}},
        },
    ),
    "levi": _schema(
        "levi",
        {
            "n": _nat, "e": _nat, "k": _nat, "gl1_factors": _nat, "symplectic_rank": _nat,
            "relative_weyl_rank": _nat, "relative_weyl_type": {"type": "string", "pattern": "^B[0-9]+$"},
        },
    ),
    "error": _schema("error", {"error": {"type": "string"}, "message": {"type": "string"}}),
}
