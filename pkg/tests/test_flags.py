"""Descriptor validation and the closed-form scheme predicates."""

from math import comb

import pytest

from lagflag import (
    DescriptorError,
    DomainError,
    FlagDescriptor,
    UnsupportedError,
    component_count,
    is_gorenstein,
    is_regular,
    is_valid,
    named_scheme,
    relative_dimension,
    scheme_report,
    validate,
)


def errors_of(desc):
    return {v.constraint for v in validate(desc) if v.severity == "error"}


def warnings_of(desc):
    return {v.constraint for v in validate(desc) if v.severity == "warning"}


def test_validate_examples():
    assert validate(FlagDescriptor(3, (1, 2), (0,), (1,))) == []
    assert errors_of(FlagDescriptor(2, (0, 3), (0,), (1,))) == {"d_leq_half_rank"}
    assert errors_of(FlagDescriptor(4, (1, 3), (3,), (2,))) == {
        "e_leq_d_i",
        "e_leq_half_rank_minus_t",
    }


def test_validate_rejects_each_single_constraint():
    base = FlagDescriptor(5, (1, 3), (1,), (1,))
    assert is_valid(base)
    cases = {
        "d_nonnegative": FlagDescriptor(5, (-1, 3), (-1,), (1,)),
        "d_leq_half_rank": FlagDescriptor(5, (1, 6), (1,), (1,)),
        "d_nondecreasing": FlagDescriptor(5, (3, 1), (1,), (1,)),
        "t_positive": FlagDescriptor(5, (1, 3), (1,), (0,)),
        "e_nonnegative": FlagDescriptor(5, (1, 3), (-1,), (1,)),
        "e_leq_d_i": FlagDescriptor(5, (1, 3), (2,), (1,)),
        "e_leq_d_next": FlagDescriptor(5, (3, 3), (4,), (1,)),
        "e_leq_half_rank_minus_t": FlagDescriptor(5, (1, 5), (1,), (5,)),
    }
    for constraint, desc in cases.items():
        assert constraint in errors_of(desc), constraint


def test_monotonicity_is_warning_only():
    desc = FlagDescriptor(6, (1, 3, 5), (1, 2), (2, 1))
    assert errors_of(desc) == set()
    assert "t_nondecreasing" in warnings_of(desc)
    desc = FlagDescriptor(6, (2, 3, 5), (2, 1), (1, 1))
    assert errors_of(desc) == set()
    assert "e_nondecreasing" in warnings_of(desc)


def test_shape_mismatch_is_construction_error():
    with pytest.raises(DomainError):
        FlagDescriptor(3, (1, 2), (0, 0), (1,))
    with pytest.raises(DomainError):
        FlagDescriptor(3, (), (), ())


def test_regular_and_gorenstein_examples():
    b2 = FlagDescriptor(2, (0, 1), (0,), (1,))
    assert is_regular(b2) and is_gorenstein(b2)

    q3 = FlagDescriptor(3, (1, 2), (0,), (1,))
    assert is_gorenstein(q3) and not is_regular(q3)

    gap2 = FlagDescriptor(4, (2, 3), (0,), (1,))
    assert not is_gorenstein(gap2)
    with pytest.raises(UnsupportedError):
        relative_dimension(gap2)
    with pytest.raises(UnsupportedError):
        component_count(gap2)


def test_predicates_reject_invalid_descriptors():
    bad = FlagDescriptor(2, (0, 3), (0,), (1,))
    with pytest.raises(DescriptorError):
        is_regular(bad)
    with pytest.raises(DescriptorError):
        relative_dimension(bad)


@pytest.mark.parametrize("n", range(0, 21))
def test_dimension_of_full_grassmannian(n):
    assert relative_dimension(FlagDescriptor(n, (0,), (), ())) == comb(n + 1, 2)


def test_dimension_examples():
    assert relative_dimension(FlagDescriptor(2, (0, 1), (0,), (1,))) == 3
    assert relative_dimension(FlagDescriptor(3, (1, 2), (0,), (1,))) == 3
    assert relative_dimension(FlagDescriptor(4, (1, 4), (0,), (2,))) == 5


def test_component_count_examples():
    assert component_count(FlagDescriptor(3, (1, 2), (0,), (1,))) == 2
    assert component_count(FlagDescriptor(3, (1, 1), (1,), (1,))) == 1
    assert component_count(FlagDescriptor(5, (1, 3, 5), (0, 2), (1, 1))) == 4


def all_gorenstein_descriptors(max_half_rank, max_k=2):
    def nondecreasing(bound, length, start=0):
        if length == 0:
            yield ()
            return
        for first in range(start, bound + 1):
            for rest in nondecreasing(bound, length - 1, first):
                yield (first,) + rest

    def anytuple(bound, length, lo):
        if length == 0:
            yield ()
            return
        for first in range(lo, bound + 1):
            for rest in anytuple(bound, length - 1, lo):
                yield (first,) + rest

    for n in range(1, max_half_rank + 1):
        for k in range(0, max_k + 1):
            for d in nondecreasing(n, k + 1):
                for t in anytuple(2, k, 1):
                    for gaps in anytuple(1, k, 0):
                        e = tuple(d[i] - gaps[i] for i in range(k))
                        desc = FlagDescriptor(n, d, e, t)
                        if is_valid(desc):
                            yield desc


def test_dimension_is_independent_of_e():
    seen = 0
    for desc in all_gorenstein_descriptors(6):
        if desc.k >= 1 and desc.d[0] - desc.e[0] == 1:
            raised = FlagDescriptor(
                desc.half_rank, desc.d, (desc.d[0],) + desc.e[1:], desc.t
            )
            if not is_valid(raised):
                continue
            seen += 1
            assert relative_dimension(desc) == relative_dimension(raised)
    assert seen > 100


def test_scheme_report():
    report = scheme_report(FlagDescriptor(3, (1, 2), (0,), (1,)))
    assert report.to_json() == {
        "regular": False,
        "gorenstein": True,
        "relative_dimension": 3,
        "component_count": 2,
        "reduced_with_trivial_pushforward": True,
    }
    report = scheme_report(FlagDescriptor(4, (1, 3), (0,), (2,)))
    assert report.gorenstein and not report.reduced_with_trivial_pushforward
    report = scheme_report(FlagDescriptor(4, (2, 3), (0,), (1,)))
    assert report.relative_dimension is None and report.component_count is None


def test_regular_implies_gorenstein():
    for desc in all_gorenstein_descriptors(5):
        if is_regular(desc):
            assert is_gorenstein(desc)


def test_named_schemes():
    f2 = named_scheme("F2", 4)
    assert f2 == FlagDescriptor(4, (1, 1), (0,), (1,))
    assert component_count(f2) == 2

    e2 = named_scheme("E2", 4)
    assert e2 == FlagDescriptor(4, (1, 1), (1,), (1,))
    assert is_regular(e2)

    assert named_scheme("B2", 2) == FlagDescriptor(2, (0, 1), (0,), (1,))
    assert named_scheme("LF_0", 3) == FlagDescriptor(3, (0,), (), ())
    assert named_scheme("LF_2", 5) == FlagDescriptor(5, (2,), (), ())

    with pytest.raises(DomainError):
        named_scheme("Z9", 3)
    with pytest.raises(DescriptorError):
        named_scheme("LF_7", 3)


def test_descriptor_json():
    desc = FlagDescriptor(3, (1, 2), (0,), (1,))
    assert desc.to_json() == {"half_rank": 3, "d": [1, 2], "e": [0], "t": [1]}
    assert str(desc) == "LF[1,2](0)_[1]@3"
