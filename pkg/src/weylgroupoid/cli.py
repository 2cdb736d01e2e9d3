"""Command-line front end.

Exit status: 0 success, 1 domain error, 2 verification failure, 3 input/output
or parse error.  Summaries go to stdout, machine-readable artifacts only to
the files named by --json / --dot.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from . import io as wio
from .census import DEFAULT_TRUNCATION, census_report
from .duflo import build_poset, to_dot, word_label
from .errors import (
    CheckFailed,
    DomainError,
    InputError,
    ModeUnsupported,
    VerificationError,
)
from .groupoid import (
    DEFAULT_MAX_LENGTH,
    all_real_roots,
    check_root_system,
    enumerate_morphisms_to,
    is_finite,
)
from .lattice import format_root, is_positive
from .oracle.nichols import (
    DEFAULT_CAP,
    GUARD_GENERIC_VALUE,
    commutator_check,
    dims_by_total_degree,
    oracle_cartan_entry,
    symmetrizer_dims,
    verify_coideal,
)
from .scheme import DEFAULT_EXPONENT_BOUND, DEFAULT_MAX_OBJECTS

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2, 3


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("bounds must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors count as input errors, not verification failures
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="scheme document (JSON or TOML)")
    common.add_argument("--threads", type=_positive_int, default=1)
    common.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP,
                        help="total degree cap for oracle computations")
    common.add_argument("--max-length", type=_positive_int, default=DEFAULT_MAX_LENGTH)
    common.add_argument("--max-objects", type=_positive_int, default=DEFAULT_MAX_OBJECTS)
    common.add_argument("--exponent-bound", type=_positive_int, default=DEFAULT_EXPONENT_BOUND)
    common.add_argument("--json", dest="json_out", help="write a JSON report here")

    parser = _Parser(prog="weylgroupoid",
                     description="Cartan schemes, Weyl groupoids and coideal census")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    scheme = sub.add_parser("scheme", help="scheme construction")
    scheme_sub = scheme.add_subparsers(dest="action", required=True)
    check = scheme_sub.add_parser("check", parents=[common], help="build and check axioms")
    check.add_argument("--root-system", action="store_true",
                       help="also require the real roots to form a root system")

    roots = sub.add_parser("roots", parents=[common], help="real roots per object")
    roots.add_argument("--object", help="only this object")

    sub.add_parser("groupoid", parents=[common], help="enumerate the Weyl groupoid")

    duflo = sub.add_parser("duflo", parents=[common], help="right Duflo order into an object")
    duflo.add_argument("--object")
    duflo.add_argument("--dot", help="write the Hasse diagram here")

    census = sub.add_parser("census", parents=[common], help="coideal subalgebra census")
    census.add_argument("--object")
    census.add_argument("--dot", help="write the inclusion Hasse diagram here")
    census.add_argument("--truncation", type=_positive_int, default=DEFAULT_TRUNCATION)

    oracle = sub.add_parser("oracle", help="brute-force Nichols algebra checks")
    oracle_sub = oracle.add_subparsers(dest="action", required=True)
    verify = oracle_sub.add_parser("verify", parents=[common],
                                   help="verify a census against the shuffle realization")
    verify.add_argument("--object")
    verify.add_argument("--census", dest="census_in", help="stored census JSON to re-check")
    verify.add_argument("--generic-value", type=Fraction, default=Fraction(2),
                        help="rational substituted for generic q")
    verify.add_argument("--guard", action="store_true",
                        help=f"repeat the dimension check with q = {GUARD_GENERIC_VALUE}")
    return parser


def _paths_distinct(args) -> None:
    paths = [p for p in (args.input, getattr(args, "json_out", None), getattr(args, "dot", None),
                         getattr(args, "census_in", None)) if p]
    outputs = [p for p in (getattr(args, "json_out", None), getattr(args, "dot", None)) if p]
    if any(paths.count(p) > 1 for p in outputs):
        raise InputError("output paths must differ from each other and from the inputs")


def _load(args):
    return wio.load_scheme(args.input, args.max_objects, args.exponent_bound)


def _object(scheme, name):
    if name is None:
        return 0
    try:
        return scheme.index(name)
    except KeyError:
        raise InputError(f"unknown object {name!r}") from None


def _emit(args, data) -> None:
    if args.json_out:
        wio.write_text(args.json_out, wio.dumps(data))


def cmd_scheme_check(args) -> int:
    scheme = _load(args)
    print(f"rank {scheme.rank}, {scheme.size} objects; axioms (C1) and (C2) hold")
    for o in scheme.objects:
        print(f"  {o.id}: cartan {[list(r) for r in o.cartan]}")
    data = {"scheme": wio.scheme_json(scheme), "axioms": "ok"}
    status = EXIT_OK
    if args.root_system:
        verdict = is_finite(scheme, args.max_length)
        data["verdict"] = verdict.verdict
        if not verdict.finite:
            print(f"verdict: {verdict.verdict} (max length {args.max_length})")
            _emit(args, data)
            return EXIT_DOMAIN
        report = check_root_system(scheme, all_real_roots(scheme, args.max_length))
        failures = {k: [_witness(scheme, w) for w in v] for k, v in report.failures().items()}
        data["root_system"] = {"ok": report.ok, "failures": failures}
        if report.ok:
            print("real roots form a root system")
        else:
            print("real roots do NOT form a root system")
            for axiom, ws in failures.items():
                print(f"  {axiom} fails: {ws}")
            status = EXIT_VERIFY
    _emit(args, data)
    return status


def _witness(scheme, w):
    x, rest = w[0], w[1:]
    return [scheme.objects[x].id] + [list(r) if isinstance(r, tuple) else r for r in rest]


def cmd_roots(args) -> int:
    scheme = _load(args)
    objects = range(scheme.size) if args.object is None else [_object(scheme, args.object)]
    roots = all_real_roots(scheme, args.max_length)
    data = {}
    for x in objects:
        rs = sorted(roots[x])
        oid = scheme.objects[x].id
        print(f"{oid}: {len(rs)} real roots, {sum(1 for v in rs if is_positive(v))} positive")
        for v in rs:
            print(f"  {v}  {format_root(v)}")
        data[str(oid)] = [list(v) for v in rs]
    _emit(args, {"roots": data})
    return EXIT_OK


def cmd_groupoid(args) -> int:
    scheme = _load(args)
    verdict = is_finite(scheme, args.max_length)
    print(f"verdict: {verdict.verdict}")
    data = {"verdict": verdict.verdict, "max_length": args.max_length}
    if not verdict.finite:
        _emit(args, data)
        return EXIT_DOMAIN
    data["root_system"] = verdict.root_system
    data["objects"] = {}
    for x in range(scheme.size):
        morphs = enumerate_morphisms_to(scheme, x, args.max_length)
        oid = scheme.objects[x].id
        print(f"  {oid}: {len(morphs)} morphisms, {verdict.real_roots[x]} real roots")
        data["objects"][str(oid)] = [wio.morphism_json(scheme, f) for f in morphs]
    print(f"root system: {'yes' if verdict.root_system else 'no'}")
    _emit(args, data)
    return EXIT_OK


def cmd_duflo(args) -> int:
    scheme = _load(args)
    x = _object(scheme, args.object)
    poset = build_poset(scheme, x, args.max_length)
    print(f"{len(poset.nodes)} elements, {len(poset.hasse)} covering relations, "
          f"ranks 0..{max(poset.ranks)}")
    if args.dot:
        wio.write_text(args.dot, to_dot(poset, scheme))
    _emit(args, {
        "object": scheme.objects[x].id,
        "nodes": [{"word": wio.word_out(f.word), "length": f.length,
                   "lambda": [list(v) for v in f.lambda_key]} for f in poset.nodes],
        "hasse": [list(e) for e in poset.hasse],
    })
    return EXIT_OK


def cmd_census(args) -> int:
    scheme = _load(args)
    x = _object(scheme, args.object)
    report = census_report(scheme, x, args.max_length, args.truncation)
    print(f"{len(report.records)} coideal subalgebras at object {scheme.objects[x].id}")
    for r in report.records:
        dim = r.hilbert.dimension() if r.hilbert is not None else None
        print(f"  [{r.index}] {word_label(r.word)}  dim {'inf' if dim is None else dim}")
    if args.dot:
        wio.write_text(args.dot, to_dot(build_poset(scheme, x, args.max_length), scheme))
    _emit(args, wio.census_json(scheme, x, report, args.truncation))
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    scheme = _load(args)
    x = _object(scheme, args.object)
    q = scheme.braiding(x)
    if q is None:
        raise ModeUnsupported("the oracle needs a scheme given by a diagonal braiding")
    report = census_report(scheme, x, args.max_length)
    records = report.records
    if args.census_in:
        records = wio.recheck_census(scheme, x, wio.read_census(args.census_in), report)
        print(f"stored census matches recomputation ({len(records)} records)")
    gv = args.generic_value
    failures = []
    results = {"object": scheme.objects[x].id, "cap": args.cap, "generic_value": str(gv)}

    entries = []
    for y in range(scheme.size):
        by = scheme.braiding(y)
        for i in range(scheme.rank):
            for j in range(scheme.rank):
                if i != j:
                    got = oracle_cartan_entry(by, i, j, args.exponent_bound, gv)
                    entries.append(got == scheme.cartan(y)[i][j])
    results["cartan_entries"] = {"checked": len(entries), "agree": sum(entries)}
    if not all(entries):
        failures.append("cartan entries")
    print(f"cartan entries: {sum(entries)}/{len(entries)} agree with the oracle")

    full = max(records, key=lambda r: len(r.word))
    predicted = full.hilbert.by_total_degree(args.cap)
    values = [gv] + ([GUARD_GENERIC_VALUE] if args.guard else [])
    results["dimensions"] = {"predicted": predicted}
    for v in values:
        got = dims_by_total_degree(symmetrizer_dims(q, args.cap, args.cap, v, args.threads), args.cap)
        results["dimensions"][f"q={v}"] = got
        ok = got == predicted
        print(f"dimensions by degree at q={v}: {got} {'ok' if ok else 'MISMATCH'}")
        if not ok:
            failures.append(f"dimensions at q={v}")

    per_record = []
    for r in records:
        try:
            rep = verify_coideal(q, r, args.cap, gv)
            per_record.append({"word": wio.word_out(r.word), "ok": True, "checked": rep.checked})
        except CheckFailed as e:
            per_record.append({"word": wio.word_out(r.word), "ok": False, "failure": str(e)})
            failures.append(f"coideal {word_label(r.word)}")
    results["coideals"] = per_record
    print(f"coideal checks: {sum(p['ok'] for p in per_record)}/{len(per_record)} pass")

    try:
        rep = commutator_check(q, full, args.cap, gv)
        results["commutators"] = {"ok": True, "checked": rep.checked}
        print(f"commutator and coproduct checks: {rep.checked} pass")
    except CheckFailed as e:
        results["commutators"] = {"ok": False, "failure": str(e)}
        failures.append("commutators")
        print(f"commutator check failed: {e}")

    results["ok"] = not failures
    _emit(args, results)
    if failures:
        print("FAILED: " + ", ".join(failures))
        return EXIT_VERIFY
    return EXIT_OK


COMMANDS = {
    ("scheme", "check"): cmd_scheme_check,
    ("roots", None): cmd_roots,
    ("groupoid", None): cmd_groupoid,
    ("duflo", None): cmd_duflo,
    ("census", None): cmd_census,
    ("oracle", "verify"): cmd_oracle_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[(args.command, getattr(args, "action", None))]
    try:
        _paths_distinct(args)
        return handler(args)
    except InputError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
