"""Command-line interface.

Results are written to stdout and are byte-identical across runs; timing
goes to stderr. Exit status 0 means success, 2 a malformed input, and 3 a
well-formed problem that cannot be solved on the requested space.
"""

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .errors import (
    BoxOverflow,
    DimensionMismatch,
    NotADoubleIndex,
    SpaceMismatch,
)
from .flag import FlagClass, FlagDescriptor, flag_integrate
from .grassmann import (
    GrassmannClass,
    GrassmannianDescriptor,
    degeneracy_count,
    giambelli,
    gr_integrate,
    tautological_chern_difference,
    thom_porteous,
)
from .halving import (
    OCTONIONIC,
    QUATERNIONIC,
    REAL_EVEN,
    HalvingClass,
    HalvingSpaceDescriptor,
    SchubertProblem,
    kappa,
    real_degeneracy_lower_bound,
    real_lower_bound,
    quaternionic_count,
)
from .indexing import osp_length, partition_size, perm_length
from .schur import lr_coefficient
from .selftest import run_selftest
from .serialize import (
    ProblemSchemaError,
    class_to_json,
    index_from_json,
    parse_problem,
    result_to_json,
    space_from_json,
    space_to_json,
)

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_UNSOLVABLE = 3

_TERM_KEYS = ("partition", "permutation", "osp", "index")


def _load_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemSchemaError(f"{what} is not valid JSON: {exc}") from None


def _basis(space, index):
    try:
        if isinstance(space, GrassmannianDescriptor):
            return GrassmannClass.basis(space, index)
        if isinstance(space, FlagDescriptor):
            return FlagClass.basis(space, index)
        return HalvingClass.basis(space, index)
    except (BoxOverflow, ValueError) as exc:
        raise ProblemSchemaError(f"index {list(index)!r}: {exc}") from None


def _parse_coefficient(raw, rational):
    if isinstance(raw, bool):
        raise ProblemSchemaError(f"bad coefficient {raw!r}")
    if isinstance(raw, int):
        value = Fraction(raw)
    elif isinstance(raw, str):
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise ProblemSchemaError(f"bad coefficient {raw!r}") from None
    else:
        raise ProblemSchemaError(f"bad coefficient {raw!r}")
    if rational:
        return value
    if value.denominator != 1:
        raise ProblemSchemaError(f"coefficient {raw!r} must be an integer here")
    return value.numerator


def class_from_json(space, raw):
    """Build a class on `space` from a bare index or a {"terms": ...} object."""
    if isinstance(raw, list):
        return _basis(space, index_from_json(space, raw))
    if not isinstance(raw, dict) or not isinstance(raw.get("terms"), list):
        raise ProblemSchemaError(
            "a class argument must be an index array or an object with 'terms'"
        )
    rational = isinstance(space, HalvingSpaceDescriptor)
    total = None
    for entry in raw["terms"]:
        if not isinstance(entry, dict):
            raise ProblemSchemaError("every term must be an object")
        keys = [k for k in _TERM_KEYS if k in entry]
        if len(keys) != 1:
            raise ProblemSchemaError(
                f"every term needs exactly one index key from {_TERM_KEYS}"
            )
        index = index_from_json(space, entry[keys[0]])
        coeff = _parse_coefficient(entry.get("coeff", 1), rational)
        term = coeff * _basis(space, index)
        total = term if total is None else total + term
    if total is None:
        raise ProblemSchemaError("a class needs at least one term")
    return total


def _index_degree(index):
    if index and isinstance(index[0], tuple):
        return osp_length(index)
    return perm_length(index)


def _condition_product(space, conditions):
    """Product of basis classes with multiplicities, plus its total degree."""
    if isinstance(space, GrassmannianDescriptor):
        acc = GrassmannClass.unit(space)
        degree = partition_size
    else:
        acc = FlagClass.unit(space)
        degree = _index_degree
    total = 0
    for index, count in conditions:
        base = _basis(space, index)
        total += count * degree(index)
        for _ in range(count):
            acc = acc * base
    return acc, total


def solve_problem(parsed):
    """Evaluate one parsed problem; returns (json result, provenance)."""
    space = parsed.space
    if isinstance(space, HalvingSpaceDescriptor):
        if parsed.degeneracy is not None:
            corank, count = parsed.degeneracy
            value = real_degeneracy_lower_bound(space, count, corank=corank)
            return result_to_json(value), (
                "halved each rank-drop condition and evaluated the "
                "determinantal locus class on the fixed-point Grassmannian; "
                "the complex count certifies the real lower bound"
            )
        try:
            problem = SchubertProblem(space, parsed.conditions)
        except (BoxOverflow, ValueError) as exc:
            raise ProblemSchemaError(str(exc)) from None
        if space.kind == REAL_EVEN:
            value = real_lower_bound(problem)
            prov = (
                "halved the doubled conditions to a complex problem on the "
                "fixed-point space; its intersection number certifies the "
                "real lower bound"
            )
        elif space.kind == QUATERNIONIC:
            value = quaternionic_count(problem)
            prov = (
                "the halving map matches the quaternionic problem with the "
                "complex problem on the fixed-point space, solution for "
                "solution"
            )
        else:
            carrier = HalvingSpaceDescriptor.quaternionic_flag((1, 1, 1))
            value = quaternionic_count(SchubertProblem(carrier, parsed.conditions))
            prov = (
                "transported the conditions to the quaternionic three-step "
                "flag carrier and counted there via the complex fixed-point "
                "space"
            )
        return result_to_json(value), prov

    product, total = _condition_product(space, parsed.conditions)
    if parsed.mode == "class":
        return class_to_json(product), (
            "expanded the condition product in the Schubert basis of the "
            "ambient space"
        )
    dim = space.complex_dimension
    if total != dim:
        raise DimensionMismatch(
            f"conditions fill degree {total}, but {space} has dimension {dim}"
        )
    if isinstance(space, GrassmannianDescriptor):
        value = gr_integrate(product)
    else:
        value = flag_integrate(product)
    return result_to_json(value), (
        "expanded the condition product in the Schubert basis and read off "
        "the coefficient of the point class"
    )


def _report(echo, result, provenance):
    return {"input": echo, "result": result, "provenance": provenance}


def _class_text(value):
    if not value["terms"]:
        return "0"
    parts = []
    for term in value["terms"]:
        key = next(k for k in _TERM_KEYS if k in term)
        symbol = "s" if key == "partition" else "S"
        coeff = term["coeff"]
        prefix = "" if coeff == "1" else f"{coeff}*"
        parts.append(f"{prefix}{symbol}{term[key]}")
    return " + ".join(parts)


def _print_report(report, fmt, header=None):
    if fmt == "json":
        return
    if header:
        print(header)
    result = report["result"]
    if isinstance(result, dict):
        print(f"result: {_class_text(result)}")
    else:
        print(f"result: {result}")
    if "locus_class" in report:
        print(f"locus class: {_class_text(report['locus_class'])}")
    print(f"provenance: {report['provenance']}")


def _emit(reports, fmt, batch):
    if fmt == "json":
        payload = reports if batch else reports[0]
        print(json.dumps(payload, indent=2))
        return
    for i, report in enumerate(reports):
        if batch:
            if i:
                print()
            _print_report(report, fmt, header=f"problem {i + 1}:")
        else:
            _print_report(report, fmt)


def cmd_solve(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ProblemSchemaError(f"cannot read {args.input}: {exc}") from None
    payload = _load_json(text, "the problem file")
    batch = isinstance(payload, list)
    entries = payload if batch else [payload]
    if not entries:
        raise ProblemSchemaError("the problem list is empty")

    parsed = []
    for i, entry in enumerate(entries, start=1):
        try:
            parsed.append(parse_problem(entry, mode_override=args.mode))
        except ProblemSchemaError as exc:
            raise ProblemSchemaError(f"problem {i}: {exc}" if batch else str(exc)) from None

    def run(p):
        result, provenance = solve_problem(p)
        return _report(p.raw, result, provenance)

    if args.jobs > 1 and len(parsed) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(run, p) for p in parsed]
            reports = []
            for i, future in enumerate(futures, start=1):
                try:
                    reports.append(future.result())
                except (DimensionMismatch, NotADoubleIndex, ProblemSchemaError) as exc:
                    for later in futures[i:]:
                        later.cancel()
                    raise type(exc)(f"problem {i}: {exc}" if batch else str(exc)) from None
    else:
        reports = []
        for i, p in enumerate(parsed, start=1):
            try:
                reports.append(run(p))
            except (DimensionMismatch, NotADoubleIndex, ProblemSchemaError) as exc:
                raise type(exc)(f"problem {i}: {exc}" if batch else str(exc)) from None

    _emit(reports, args.format, batch)
    return EXIT_OK


def cmd_lr(args):
    indices = []
    for name, text in (("lam", args.lam), ("mu", args.mu), ("nu", args.nu)):
        raw = _load_json(text, name)
        indices.append(index_from_json(GrassmannianDescriptor(1, 2), raw))
    lam, mu, nu = indices
    value = lr_coefficient(lam, mu, nu)
    report = _report(
        {"lr": [list(lam), list(mu), list(nu)]},
        result_to_json(value),
        "counted lattice-word tableaux on the skew shape",
    )
    _emit([report], args.format, batch=False)
    return EXIT_OK


def cmd_mult(args):
    space = space_from_json(_load_json(args.space, "the space"))
    if isinstance(space, HalvingSpaceDescriptor) and space.kind != REAL_EVEN:
        raise ProblemSchemaError(
            "products are exposed for complex and real even spaces only"
        )
    a = class_from_json(space, _load_json(args.a, "the first factor"))
    b = class_from_json(space, _load_json(args.b, "the second factor"))
    product = a * b
    report = _report(
        {"space": space_to_json(space), "factors": [class_to_json(a), class_to_json(b)]},
        class_to_json(product),
        "expanded the product in the Schubert basis of the ambient space",
    )
    _emit([report], args.format, batch=False)
    return EXIT_OK


def cmd_giambelli(args):
    space = space_from_json(_load_json(args.space, "the space"))
    if not isinstance(space, GrassmannianDescriptor):
        raise ProblemSchemaError("the determinantal expansion needs a complex Grassmannian")
    lam = index_from_json(space, _load_json(args.partition, "the partition"))
    try:
        value = giambelli(lam, space)
    except BoxOverflow as exc:
        raise ProblemSchemaError(str(exc)) from None
    report = _report(
        {"space": space_to_json(space), "partition": list(lam)},
        class_to_json(value),
        "evaluated the determinant in single-row classes with the "
        "conjugate-row shift pattern",
    )
    _emit([report], args.format, batch=False)
    return EXIT_OK


def cmd_porteous(args):
    space = space_from_json(_load_json(args.space, "the space"))
    if not isinstance(space, GrassmannianDescriptor):
        raise ProblemSchemaError("rank-drop counts need a complex Grassmannian")
    e, f, rho, m = args.e, args.f, args.rho, args.maps
    try:
        series = tautological_chern_difference(space, max(0, e + f - 2 * rho - 1))
        locus = thom_porteous(e, f, rho, series)
        value = degeneracy_count(space, e, f, rho, m)
    except ValueError as exc:
        raise ProblemSchemaError(str(exc)) from None
    report = {
        "input": {"space": space_to_json(space), "e": e, "f": f, "rho": rho, "maps": m},
        "result": result_to_json(value),
        "locus_class": class_to_json(locus),
        "provenance": (
            "evaluated the determinant in the Chern series of the bundle "
            "difference and integrated the product over all maps"
        ),
    }
    _emit([report], args.format, batch=False)
    return EXIT_OK


def cmd_kappa(args):
    space = space_from_json(_load_json(args.space, "the space"))
    if not isinstance(space, HalvingSpaceDescriptor):
        raise ProblemSchemaError("the halving map needs a real, quaternionic, or octonionic space")
    cls = class_from_json(space, _load_json(args.cls, "the class"))
    image = kappa(cls)
    report = _report(
        {"space": space_to_json(space), "class": class_to_json(cls)},
        class_to_json(image),
        "applied the halving map: doubled indices are halved and each term "
        "is weighted by two to its complex degree",
    )
    _emit([report], args.format, batch=False)
    return EXIT_OK


def cmd_selftest(args):
    return run_selftest(args.level)


def _add_format(sub):
    sub.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schubcalc",
        description="Schubert calculus over the complex, real, quaternionic, "
        "and octonionic flag varieties",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("solve", help="solve a problem file")
    p.add_argument("--input", required=True, help="problem file path, or - for stdin")
    p.add_argument(
        "--mode",
        choices=("count", "class", "lower_bound"),
        default=None,
        help="override the mode of every problem in the file",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker threads for batch files")
    _add_format(p)
    p.set_defaults(fn=cmd_solve)

    p = subs.add_parser("lr", help="one structure constant of the basis product")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    _add_format(p)
    p.set_defaults(fn=cmd_lr)

    p = subs.add_parser("mult", help="product of two classes on one space")
    p.add_argument("--space", required=True)
    p.add_argument("a")
    p.add_argument("b")
    _add_format(p)
    p.set_defaults(fn=cmd_mult)

    p = subs.add_parser("giambelli", help="determinantal expansion of a basis class")
    p.add_argument("--space", required=True)
    p.add_argument("partition")
    _add_format(p)
    p.set_defaults(fn=cmd_giambelli)

    p = subs.add_parser("porteous", help="expected rank-drop locus and count")
    p.add_argument("--space", required=True)
    p.add_argument("e", type=int)
    p.add_argument("f", type=int)
    p.add_argument("rho", type=int)
    p.add_argument("maps", type=int)
    _add_format(p)
    p.set_defaults(fn=cmd_porteous)

    p = subs.add_parser("kappa", help="image of a class under the halving map")
    p.add_argument("--space", required=True)
    p.add_argument("cls", metavar="class")
    _add_format(p)
    p.set_defaults(fn=cmd_kappa)

    p = subs.add_parser("selftest", help="run the built-in verification suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.fn(args)
    except ProblemSchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_SCHEMA
    except (DimensionMismatch, NotADoubleIndex, SpaceMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_UNSOLVABLE
    elapsed = (time.perf_counter() - start) * 1000.0
    print(f"elapsed_ms: {elapsed:.1f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
