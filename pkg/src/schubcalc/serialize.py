"""JSON forms for spaces, classes, indices, and problem files.

Output is deterministic: term lists are sorted by (degree, index) and all
term coefficients are decimal strings, so arbitrarily large integers and
rational halving coefficients travel without width ambiguity. Top-level
integer results stay JSON numbers while they fit in 63 bits and become
decimal strings beyond that.
"""

from dataclasses import dataclass

from .errors import BoxOverflow
from .flag import FlagClass, FlagDescriptor
from .grassmann import GrassmannClass, GrassmannianDescriptor
from .halving import (
    OCTONIONIC,
    QUATERNIONIC,
    REAL_EVEN,
    HalvingClass,
    HalvingSpaceDescriptor,
)
from .indexing import (
    normalize_osp,
    normalize_partition,
    normalize_perm,
    osp_length,
    partition_size,
    perm_length,
)
from .schur import SchurExpansion

INT63 = 2 ** 63


class ProblemSchemaError(Exception):
    """The input does not match the problem-file schema."""


def result_to_json(x):
    if isinstance(x, int) and not -INT63 < x < INT63:
        return str(x)
    return x


def space_to_json(space):
    if isinstance(space, GrassmannianDescriptor):
        return {"type": "complex_grassmannian", "k": space.k, "n": space.n}
    if isinstance(space, FlagDescriptor):
        return {"type": "complex_flag", "dims": list(space.dims)}
    if isinstance(space, HalvingSpaceDescriptor):
        fp = space.fixed_point
        if space.kind == OCTONIONIC:
            return {"type": "octonionic_flag"}
        if space.kind == QUATERNIONIC:
            if space.grassmannian_fixed_point:
                return {"type": "quaternionic_grassmannian", "k": fp.k, "n": fp.n}
            return {"type": "quaternionic_flag", "dims": list(fp.dims)}
        if space.grassmannian_fixed_point:
            return {"type": "real_even_grassmannian", "k": 2 * fp.k, "n": 2 * fp.n}
        return {"type": "real_even_flag", "dims": [2 * d for d in fp.dims]}
    raise TypeError(f"cannot serialize {type(space).__name__}")


def _require(cond, message):
    if not cond:
        raise ProblemSchemaError(message)


def _int_field(obj, key, minimum=1):
    _require(key in obj, f"space object is missing {key!r}")
    v = obj[key]
    _require(isinstance(v, int) and not isinstance(v, bool), f"{key!r} must be an integer")
    _require(v >= minimum, f"{key!r} must be at least {minimum}")
    return v


def _dims_field(obj):
    _require("dims" in obj, "space object is missing 'dims'")
    dims = obj["dims"]
    _require(
        isinstance(dims, list)
        and dims
        and all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims),
        "'dims' must be a nonempty list of positive integers",
    )
    return tuple(dims)


def space_from_json(obj):
    _require(isinstance(obj, dict), "space must be a JSON object")
    kind = obj.get("type")
    try:
        if kind == "complex_grassmannian":
            return GrassmannianDescriptor(_int_field(obj, "k"), _int_field(obj, "n"))
        if kind == "complex_flag":
            return FlagDescriptor(_dims_field(obj))
        if kind == "real_even_grassmannian":
            return HalvingSpaceDescriptor.real_even_grassmannian(
                _int_field(obj, "k"), _int_field(obj, "n")
            )
        if kind == "real_even_flag":
            return HalvingSpaceDescriptor.real_even_flag(_dims_field(obj))
        if kind == "quaternionic_grassmannian":
            return HalvingSpaceDescriptor.quaternionic_grassmannian(
                _int_field(obj, "k"), _int_field(obj, "n")
            )
        if kind == "quaternionic_flag":
            return HalvingSpaceDescriptor.quaternionic_flag(_dims_field(obj))
        if kind == "octonionic_flag":
            return HalvingSpaceDescriptor.octonionic_flag()
    except ValueError as exc:
        raise ProblemSchemaError(f"invalid space: {exc}") from None
    raise ProblemSchemaError(f"unknown space type {kind!r}")


def _int_list(raw, what):
    _require(
        isinstance(raw, list)
        and all(isinstance(v, int) and not isinstance(v, bool) for v in raw),
        f"{what} must be a list of integers",
    )
    return tuple(raw)


def index_from_json(space, raw):
    """Parse a condition index in the form the space expects."""
    flag_like = isinstance(space, FlagDescriptor) or (
        isinstance(space, HalvingSpaceDescriptor) and not space.grassmannian_fixed_point
    )
    try:
        if not flag_like:
            return normalize_partition(_int_list(raw, "a partition index"))
        if isinstance(raw, list) and raw and all(isinstance(b, list) for b in raw):
            return normalize_osp(tuple(tuple(b) for b in raw))
        return normalize_perm(_int_list(raw, "a permutation index"))
    except ProblemSchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise ProblemSchemaError(f"invalid index {raw!r}: {exc}") from None


def index_to_json(index):
    if index and isinstance(index[0], tuple):
        return [list(b) for b in index]
    return list(index)


def _term_entry(key_name, index, coeff):
    return {key_name: index_to_json(index), "coeff": str(coeff)}


def class_to_json(a):
    if isinstance(a, SchurExpansion):
        return {
            "terms": [
                _term_entry("partition", lam, c) for lam, c in a.sorted_terms()
            ]
        }
    if isinstance(a, GrassmannClass):
        return {
            "space": space_to_json(a.space),
            "terms": [
                _term_entry("partition", lam, c) for lam, c in a.sorted_terms()
            ],
        }
    if isinstance(a, FlagClass):
        return {
            "space": space_to_json(a.space),
            "terms": [
                _term_entry("permutation", w, c) for w, c in a.sorted_terms()
            ],
        }
    if isinstance(a, HalvingClass):
        space = a.space
        if space.grassmannian_fixed_point:
            key, rank = "partition", partition_size
        elif space.kind == OCTONIONIC:
            key, rank = "permutation", perm_length
        else:
            key, rank = "osp", osp_length
        ordered = sorted(a.terms.items(), key=lambda t: (rank(t[0]), t[0]))
        return {
            "space": space_to_json(space),
            "terms": [_term_entry(key, i, c) for i, c in ordered],
        }
    raise TypeError(f"cannot serialize {type(a).__name__}")


@dataclass(frozen=True)
class ParsedProblem:
    """A validated problem file, ready for dispatch."""

    raw: object
    space: object
    mode: str
    conditions: tuple
    degeneracy: object
    description: str


_DEFAULT_MODES = {
    "complex": "count",
    REAL_EVEN: "lower_bound",
    QUATERNIONIC: "count",
    OCTONIONIC: "count",
}
_ALLOWED_MODES = {
    "complex": ("count", "class"),
    REAL_EVEN: ("lower_bound",),
    QUATERNIONIC: ("count",),
    OCTONIONIC: ("count",),
}


def _space_kind(space):
    return getattr(space, "kind", "complex")


def parse_problem(obj, mode_override=None):
    _require(isinstance(obj, dict), "a problem must be a JSON object")
    _require("space" in obj, "a problem needs a 'space'")
    space = space_from_json(obj["space"])
    kind = _space_kind(space)

    mode = mode_override or obj.get("mode") or _DEFAULT_MODES[kind]
    _require(
        mode in _ALLOWED_MODES[kind],
        f"mode {mode!r} is not available on {space} "
        f"(choose from {_ALLOWED_MODES[kind]})",
    )

    raw_conditions = obj.get("conditions")
    _require(
        isinstance(raw_conditions, list) and raw_conditions,
        "a problem needs a nonempty 'conditions' list",
    )

    conditions = []
    degeneracy = None
    for pos, entry in enumerate(raw_conditions, start=1):
        _require(isinstance(entry, dict), f"condition {pos} must be an object")
        count = entry.get("count", 1)
        _require(
            isinstance(count, int) and not isinstance(count, bool) and count >= 1,
            f"condition {pos}: 'count' must be a positive integer",
        )
        has_index = "index" in entry
        has_corank = "corank" in entry
        _require(
            has_index != has_corank,
            f"condition {pos} needs exactly one of 'index' or 'corank'",
        )
        if has_corank:
            _require(
                kind == REAL_EVEN
                and isinstance(space, HalvingSpaceDescriptor)
                and space.grassmannian_fixed_point,
                f"condition {pos}: corank conditions need a real even Grassmannian",
            )
            _require(
                degeneracy is None,
                f"condition {pos}: only one corank condition is supported",
            )
            corank = entry["corank"]
            _require(
                isinstance(corank, int) and corank >= 2 and corank % 2 == 0,
                f"condition {pos}: 'corank' must be a positive even integer",
            )
            degeneracy = (corank, count)
        else:
            try:
                index = index_from_json(space, entry["index"])
            except ProblemSchemaError as exc:
                raise ProblemSchemaError(f"condition {pos}: {exc}") from None
            conditions.append((index, count))

    _require(
        not (degeneracy and conditions),
        "corank and index conditions cannot be mixed in one problem",
    )

    description = obj.get("description", "")
    _require(isinstance(description, str), "'description' must be a string")
    return ParsedProblem(
        raw=obj,
        space=space,
        mode=mode,
        conditions=tuple(conditions),
        degeneracy=degeneracy,
        description=description,
    )
