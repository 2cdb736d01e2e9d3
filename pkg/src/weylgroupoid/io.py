"""Input documents and deterministic JSON reports.

An input document (JSON or TOML) is either a diagonal braiding::

    {"rank": 2, "mode": "generic_q", "q": [["q^2", "q^-1"], ["q^-1", "q^2"]]}

or an explicit Cartan scheme::

    {"objects": [{"id": "X1", "cartan": [[2, -1], [-3, 2]]}, ...],
     "maps": [{"X1": "X2", "X2": "X1", "X3": "X3"}, ...]}

with one map per generator.  Words in reports are 1-based, as in s1 s2 s1.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .census import CensusReport
from .errors import InputError, VerificationError
from .hilbert import HilbertSeries
from .scheme import (
    DEFAULT_EXPONENT_BOUND,
    DEFAULT_MAX_OBJECTS,
    BraidingMatrix,
    CartanScheme,
    build_from_braiding,
    build_from_matrices,
)

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

MODES = ("root_of_unity", "generic_q", "rational")


def load_document(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    try:
        if path.suffix.lower() == ".toml":
            return tomllib.loads(text)
        return json.loads(text)
    except (ValueError, tomllib.TOMLDecodeError) as e:
        raise InputError(f"cannot parse {path}: {e}") from e


def braiding_from_document(doc: dict) -> BraidingMatrix:
    try:
        q = BraidingMatrix(doc["q"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad braiding matrix: {e}") from e
    rank = doc.get("rank", q.rank)
    if rank != q.rank:
        raise InputError(f"rank {rank} does not match a {q.rank}x{q.rank} braiding")
    mode = doc.get("mode")
    if mode is not None:
        if mode not in MODES:
            raise InputError(f"unknown mode {mode!r}; expected one of {MODES}")
        if mode == "root_of_unity" and q.mode != "root_of_unity":
            raise InputError("mode root_of_unity but some entry involves q or a rational")
    return q


def scheme_from_document(doc: dict, max_objects: int = DEFAULT_MAX_OBJECTS,
                         exponent_bound: int = DEFAULT_EXPONENT_BOUND) -> CartanScheme:
    """Build the scheme an input document describes (domain errors propagate)."""
    if not isinstance(doc, dict):
        raise InputError("input document must be a mapping")
    if "q" in doc:
        return build_from_braiding(braiding_from_document(doc), max_objects, exponent_bound)
    if "objects" in doc and "maps" in doc:
        try:
            objects = [(o["id"], o["cartan"]) for o in doc["objects"]]
            maps = doc["maps"]
        except (KeyError, TypeError) as e:
            raise InputError(f"bad object list: {e}") from e
        try:
            return build_from_matrices(objects, maps)
        except (KeyError, ValueError) as e:
            raise InputError(f"bad scheme description: {e}") from e
    raise InputError("input needs either 'q' or both 'objects' and 'maps'")


def load_scheme(path, max_objects: int = DEFAULT_MAX_OBJECTS,
                exponent_bound: int = DEFAULT_EXPONENT_BOUND) -> CartanScheme:
    return scheme_from_document(load_document(path), max_objects, exponent_bound)


def dumps(data) -> str:
    """Canonical JSON: fixed key order, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e}") from e


def word_out(word) -> list:
    return [i + 1 for i in word]


def word_in(word) -> tuple:
    if not all(isinstance(i, int) and i >= 1 for i in word):
        raise InputError(f"words are lists of 1-based generator indices, got {word!r}")
    return tuple(i - 1 for i in word)


def object_id(scheme: CartanScheme, x: int):
    return scheme.objects[x].id


def scheme_json(scheme: CartanScheme) -> dict:
    objs = []
    for o in scheme.objects:
        entry = {"id": o.id, "cartan": [list(r) for r in o.cartan]}
        if o.braiding is not None:
            entry["q"] = [[str(e) for e in r] for r in o.braiding.q]
        objs.append(entry)
    maps = [{str(scheme.objects[x].id): scheme.objects[y].id for x, y in enumerate(m)}
            for m in scheme.maps]
    return {"rank": scheme.rank, "objects": objs, "maps": maps}


def morphism_json(scheme: CartanScheme, f) -> dict:
    return {
        "word": word_out(f.word),
        "source": object_id(scheme, f.source),
        "target": object_id(scheme, f.target),
        "matrix": [list(r) for r in f.matrix.matrix],
        "lambda": [list(v) for v in f.lambda_key],
    }


def hilbert_json(series: HilbertSeries | None):
    if series is None:
        return None
    return [{"degree": list(d), "height": h} for d, h in series.factors]


def census_json(scheme: CartanScheme, x: int, report: CensusReport, truncation: int) -> dict:
    recs = []
    for r in report.records:
        recs.append({
            "id": r.index,
            "word": word_out(r.word),
            "length": len(r.word),
            "lambda": [list(v) for v in r.lambda_set.roots],
            "pbw_degrees": [list(v) for v in r.pbw.degrees],
            "hilbert_factors": hilbert_json(r.hilbert),
            "includes": report.includes[r.index],
        })
    return {"object": object_id(scheme, x), "truncation": truncation,
            "count": len(recs), "records": recs}


def read_census(path) -> dict:
    doc = load_document(path)
    if not isinstance(doc, dict) or "records" not in doc:
        raise InputError(f"{path} is not a census report")
    return doc


def recheck_census(scheme: CartanScheme, x: int, doc: dict, report: CensusReport) -> list:
    """Compare a stored census with a fresh one; returns the records in stored order.

    Raises VerificationError on any difference.
    """
    fresh = {tuple(word_out(r.word)): r for r in report.records}
    fresh_words = {r.index: tuple(word_out(r.word)) for r in report.records}
    if len(doc["records"]) != len(fresh):
        raise VerificationError(
            f"stored census has {len(doc['records'])} records, recomputed {len(fresh)}")
    try:
        stored_words = {e["id"]: tuple(e["word"]) for e in doc["records"]}
        out = []
        for entry in doc["records"]:
            r = fresh.get(tuple(entry["word"]))
            if r is None:
                raise VerificationError(f"stored word {entry['word']} is not a census word")
            checks = (
                ("lambda", entry["lambda"], [list(v) for v in r.lambda_set.roots]),
                ("pbw_degrees", entry["pbw_degrees"], [list(v) for v in r.pbw.degrees]),
                ("hilbert_factors", entry["hilbert_factors"], hilbert_json(r.hilbert)),
                ("includes", sorted(stored_words[i] for i in entry["includes"]),
                 sorted(fresh_words[i] for i in report.includes[r.index])),
            )
            for key, got, want in checks:
                if got != want:
                    raise VerificationError(f"stored {key} differs for word {entry['word']}")
            out.append(r)
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed census record: {e}") from e
    return out
