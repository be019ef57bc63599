import pytest

from schubcalc.flag import FlagClass, FlagDescriptor
from schubcalc.grassmann import GrassmannClass, GrassmannianDescriptor
from schubcalc.halving import HalvingClass, HalvingSpaceDescriptor
from schubcalc.schur import SchurExpansion
from schubcalc.serialize import (
    ProblemSchemaError,
    class_to_json,
    index_from_json,
    parse_problem,
    result_to_json,
    space_from_json,
    space_to_json,
)

GR24 = GrassmannianDescriptor(2, 4)
FL3 = FlagDescriptor((1, 1, 1))
GR4R8 = HalvingSpaceDescriptor.real_even_grassmannian(4, 8)
FL222R6 = HalvingSpaceDescriptor.real_even_flag((2, 2, 2))
GR2H4 = HalvingSpaceDescriptor.quaternionic_grassmannian(2, 4)
FLH = HalvingSpaceDescriptor.quaternionic_flag((1, 1, 1))
OCT = HalvingSpaceDescriptor.octonionic_flag()

ALL_SPACES = [GR24, FL3, GR4R8, FL222R6, GR2H4, FLH, OCT]


def test_space_roundtrip():
    for space in ALL_SPACES:
        obj = space_to_json(space)
        assert space_from_json(obj) == space
        assert isinstance(obj["type"], str)


def test_space_json_uses_ambient_dimensions():
    assert space_to_json(GR4R8) == {"type": "real_even_grassmannian", "k": 4, "n": 8}
    assert space_to_json(FL222R6) == {"type": "real_even_flag", "dims": [2, 2, 2]}
    assert space_to_json(OCT) == {"type": "octonionic_flag"}


@pytest.mark.parametrize(
    "obj",
    [
        {"type": "nowhere"},
        {"type": "complex_grassmannian", "k": 2},
        {"type": "complex_grassmannian", "k": True, "n": 4},
        {"type": "complex_grassmannian", "k": 0, "n": 4},
        {"type": "complex_grassmannian", "k": 4, "n": 4},
        {"type": "real_even_grassmannian", "k": 3, "n": 8},
        {"type": "real_even_flag", "dims": [2, 1, 2]},
        {"type": "complex_flag", "dims": []},
        {"type": "complex_flag", "dims": [1, "2"]},
        "not an object",
    ],
)
def test_space_from_json_rejects(obj):
    with pytest.raises(ProblemSchemaError):
        space_from_json(obj)


def test_index_forms():
    assert index_from_json(GR24, [2, 1]) == (2, 1)
    assert index_from_json(GR24, [1, 1, 0]) == (1, 1)
    assert index_from_json(FL3, [2, 1, 3]) == (2, 1, 3)
    assert index_from_json(FL222R6, [[2, 4], [1, 3], [5, 6]]) == ((2, 4), (1, 3), (5, 6))
    assert index_from_json(OCT, [2, 1]) == (2, 1)


@pytest.mark.parametrize(
    "space,raw",
    [
        (GR24, [1, 2]),
        (GR24, [1.5]),
        (GR24, "nope"),
        (FL3, [1, 1, 2]),
        (FL222R6, [[1, 1], [2]]),
    ],
)
def test_index_from_json_rejects(space, raw):
    with pytest.raises(ProblemSchemaError):
        index_from_json(space, raw)


def test_class_json_is_sorted_and_stringly():
    a = GrassmannClass(GR24, {(2, 1): 3, (1,): 1, (1, 1): 2, (2,): 10 ** 25})
    obj = class_to_json(a)
    assert obj["space"] == {"type": "complex_grassmannian", "k": 2, "n": 4}
    assert obj["terms"] == [
        {"partition": [1], "coeff": "1"},
        {"partition": [1, 1], "coeff": "2"},
        {"partition": [2], "coeff": "10000000000000000000000000"},
        {"partition": [2, 1], "coeff": "3"},
    ]


def test_schur_expansion_json():
    a = SchurExpansion({(2,): 1, (1, 1): -4})
    assert class_to_json(a) == {
        "terms": [
            {"partition": [1, 1], "coeff": "-4"},
            {"partition": [2], "coeff": "1"},
        ]
    }


def test_flag_class_json():
    a = FlagClass(FL3, {(2, 3, 1): 2, (2, 1, 3): 1})
    assert class_to_json(a) == {
        "space": {"type": "complex_flag", "dims": [1, 1, 1]},
        "terms": [
            {"permutation": [2, 1, 3], "coeff": "1"},
            {"permutation": [2, 3, 1], "coeff": "2"},
        ],
    }


def test_halving_class_json_key_by_family():
    assert class_to_json(HalvingClass.basis(GR4R8, (2, 2)))["terms"] == [
        {"partition": [2, 2], "coeff": "1"}
    ]
    osp_obj = class_to_json(HalvingClass.unit(FL222R6))
    assert osp_obj["terms"][0]["osp"] == [[1, 2], [3, 4], [5, 6]]
    perm_obj = class_to_json(HalvingClass.basis(OCT, (2, 1)))
    assert perm_obj["terms"] == [{"permutation": [2, 1, 3], "coeff": "1"}]


def test_result_bigint_threshold():
    assert result_to_json(2 ** 63 - 1) == 2 ** 63 - 1
    assert result_to_json(2 ** 63) == str(2 ** 63)
    assert result_to_json(-(2 ** 63)) == str(-(2 ** 63))
    assert result_to_json({"terms": []}) == {"terms": []}


def test_parse_problem_defaults_by_family():
    base = {"conditions": [{"index": [1], "count": 4}]}
    p = parse_problem({"space": space_to_json(GR24), **base})
    assert p.mode == "count"
    p = parse_problem(
        {"space": space_to_json(GR4R8), "conditions": [{"index": [2, 2], "count": 4}]}
    )
    assert p.mode == "lower_bound"
    p = parse_problem({"space": space_to_json(GR2H4), **base})
    assert p.mode == "count"
    p = parse_problem(
        {"space": space_to_json(OCT), "conditions": [{"index": [2, 1, 3], "count": 3}]}
    )
    assert p.mode == "count"


def test_parse_problem_mode_override_and_rejection():
    obj = {
        "space": space_to_json(GR24),
        "conditions": [{"index": [1], "count": 1}],
        "mode": "count",
    }
    assert parse_problem(obj, mode_override="class").mode == "class"
    with pytest.raises(ProblemSchemaError):
        parse_problem({**obj, "mode": "lower_bound"})
    with pytest.raises(ProblemSchemaError):
        parse_problem(
            {
                "space": space_to_json(GR2H4),
                "conditions": [{"index": [1], "count": 4}],
                "mode": "class",
            }
        )


def test_parse_problem_condition_validation():
    space = space_to_json(GR24)
    with pytest.raises(ProblemSchemaError):
        parse_problem({"space": space, "conditions": []})
    with pytest.raises(ProblemSchemaError):
        parse_problem({"space": space})
    with pytest.raises(ProblemSchemaError):
        parse_problem({"space": space, "conditions": [{"count": 2}]})
    with pytest.raises(ProblemSchemaError):
        parse_problem({"space": space, "conditions": [{"index": [1], "count": 0}]})
    with pytest.raises(ProblemSchemaError):
        parse_problem({"space": space, "conditions": [{"index": [1], "corank": 2}]})
    with pytest.raises(ProblemSchemaError) as err:
        parse_problem(
            {
                "space": space,
                "conditions": [{"index": [1], "count": 1}, {"index": [1, 2]}],
            }
        )
    assert "condition 2" in str(err.value)


def test_parse_problem_corank_rules():
    real = space_to_json(GR4R8)
    p = parse_problem({"space": real, "conditions": [{"corank": 2, "count": 4}]})
    assert p.degeneracy == (2, 4)
    assert p.conditions == ()
    with pytest.raises(ProblemSchemaError):
        parse_problem({"space": real, "conditions": [{"corank": 3, "count": 4}]})
    with pytest.raises(ProblemSchemaError):
        parse_problem(
            {
                "space": real,
                "conditions": [{"corank": 2, "count": 2}, {"corank": 2, "count": 2}],
            }
        )
    with pytest.raises(ProblemSchemaError):
        parse_problem(
            {
                "space": real,
                "conditions": [{"corank": 2, "count": 2}, {"index": [2, 2], "count": 1}],
            }
        )
    with pytest.raises(ProblemSchemaError):
        parse_problem(
            {"space": space_to_json(GR24), "conditions": [{"corank": 2, "count": 4}]}
        )
    with pytest.raises(ProblemSchemaError):
        parse_problem(
            {"space": space_to_json(FL222R6), "conditions": [{"corank": 2, "count": 4}]}
        )


def test_parse_problem_echo_and_description():
    obj = {
        "space": space_to_json(GR24),
        "conditions": [{"index": [1], "count": 4}],
        "description": "four lines",
    }
    p = parse_problem(obj)
    assert p.raw is obj
    assert p.description == "four lines"
    with pytest.raises(ProblemSchemaError):
        parse_problem({**obj, "description": 7})
