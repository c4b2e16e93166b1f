"""Marked points, selections, descriptor tuples and the padded constructions.

The independent oracle reads distances and horizontal gaps straight off the
raw step string: a point at offset o on segment t sits at walk position
(steps before segment t) + o, and the gap between two marks counts the 'H'
characters of the walk slice between them.
"""

from itertools import groupby

import pytest

from lagflag import (
    DomainError,
    FlagDescriptor,
    SelectionRule,
    ShiftedDiagram,
    boundary,
    classify,
    delete_right_column,
    delete_top_row,
    enumerate_diagrams,
    is_valid,
    lf_a,
    lf_b,
    lf_descriptor_type0,
    lf_descriptor_type1,
    lf_ktheory,
    marked_points,
    selection_S,
    selection_S_tilde,
    tuples,
    validate,
)

# --------------------------------------------------------------------------
# string-walk oracle


def segment_spans(steps: str) -> list[tuple[str, int, int]]:
    """(direction, start, end) walk spans of each segment, 0-based, end exclusive."""
    spans = []
    if steps and steps[0] == "H":
        spans.append(("V", 0, 0))
    pos = 0
    for ch, grp in groupby(steps):
        length = len(list(grp))
        spans.append((ch, pos, pos + length))
        pos += length
    return spans


def oracle_distance(steps: str, segment: int, offset: int) -> int:
    return segment_spans(steps)[segment - 1][1] + offset


def oracle_gaps(steps: str, distances: list[int]) -> list[int]:
    return [steps[a:b].count("H") for a, b in zip(distances, distances[1:])]


def check_tuples_against_oracle(diagram, data):
    spans = segment_spans(diagram.steps)
    if data.appended_n:
        assert data.d[-1] == diagram.n
    assert data.e == data.d[:-1]
    # every t entry is the H-count of the walk between consecutive d marks;
    # for the appended mark the tail of the walk is vertical, so the count
    # is unaffected by stopping at n rather than at the segment's end
    assert list(data.t) == oracle_gaps(diagram.steps, list(data.d))
    assert len(spans) % 2 == (1 if data.appended_n else 0)


# --------------------------------------------------------------------------
# selection rules


def test_rule_offsets():
    assert SelectionRule.ALL_POINTS.offsets(4) == (0, 1, 2, 3)
    assert SelectionRule.EVEN_POINTS.offsets(4) == (0, 2)
    assert SelectionRule.EVEN_POINTS.offsets(3) == (0, 2)
    assert SelectionRule.ODD_PLUS_FIRST.offsets(4) == (0, 1, 3)
    assert SelectionRule.ODD_PLUS_FIRST.offsets(1) == (0,)
    with pytest.raises(DomainError):
        SelectionRule.ALL_POINTS.offsets(0)


def test_rule_counts():
    # rule 1 keeps every point, rule 2 keeps the even half (rounded up),
    # rule 3 keeps the odd points plus the corner
    for length in range(1, 9):
        assert len(SelectionRule.ALL_POINTS.offsets(length)) == length
        assert len(SelectionRule.EVEN_POINTS.offsets(length)) == (length + 1) // 2
        assert len(SelectionRule.ODD_PLUS_FIRST.offsets(length)) == 1 + length // 2


def test_marked_points_examples():
    sel = marked_points(ShiftedDiagram(3, "HHH"), {2: SelectionRule.EVEN_POINTS})
    assert [(p.segment, p.offset) for p in sel.points] == [(2, 0), (2, 2)]
    assert [oracle_distance("HHH", p.segment, p.offset) for p in sel.points] == [0, 2]

    sel = marked_points(ShiftedDiagram(2, "VH"), {2: SelectionRule.ALL_POINTS})
    assert [(p.segment, p.offset) for p in sel.points] == [(2, 0)]
    assert oracle_distance("VH", 2, 0) == 1

    sel = marked_points(ShiftedDiagram(3, "VVV"), {})
    assert sel.points == ()


def test_marked_points_rejects_bad_rule_maps():
    with pytest.raises(DomainError):
        marked_points(ShiftedDiagram(2, "VH"), {1: SelectionRule.ALL_POINTS, 2: SelectionRule.ALL_POINTS})
    with pytest.raises(DomainError):
        marked_points(ShiftedDiagram(2, "VH"), {4: SelectionRule.ALL_POINTS})
    with pytest.raises(DomainError):
        marked_points(ShiftedDiagram(2, "VH"), {})  # missing rule for s_2


def test_selection_S_examples():
    sel = selection_S_tilde(ShiftedDiagram(2, "HH"), 2)
    assert [seg.to_json() for seg in sel.per_segment] == [
        {"segment": 2, "rule": "3", "offsets": [0, 1]}
    ]

    sel = selection_S(ShiftedDiagram(3, "HVH"), 2)
    assert [seg.to_json() for seg in sel.per_segment] == [
        {"segment": 2, "rule": "2", "offsets": [0]},
        {"segment": 4, "rule": "1", "offsets": [0]},
    ]

    assert selection_S(ShiftedDiagram(3, "VVV"), 2).points == ()
    assert selection_S(ShiftedDiagram(3, "VVV"), 0).points == ()


def test_selection_S_tilde_needs_horizontal_segment():
    with pytest.raises(DomainError):
        selection_S_tilde(ShiftedDiagram(3, "VVV"), 2)
    with pytest.raises(DomainError):
        selection_S(ShiftedDiagram(2, "HH"), -1)


# --------------------------------------------------------------------------
# tuples


def test_tuples_examples():
    d3 = ShiftedDiagram(3, "HHV")
    data = tuples(d3, selection_S(d3, 3))
    assert (data.d, data.e, data.t, data.appended_n) == ((0, 3), (0,), (2,), True)
    check_tuples_against_oracle(d3, data)

    d2 = ShiftedDiagram(2, "HH")
    data = tuples(d2, selection_S_tilde(d2, 2))
    assert (data.d, data.e, data.t, data.appended_n) == ((0, 1), (0,), (1,), False)
    check_tuples_against_oracle(d2, data)

    vv = ShiftedDiagram(2, "VV")
    data = tuples(vv, selection_S(vv, 1))
    assert (data.d, data.e, data.t, data.appended_n) == ((2,), (), (), True)
    check_tuples_against_oracle(vv, data)


def test_tuples_rejects_foreign_selection():
    sel = selection_S(ShiftedDiagram(2, "HH"), 2)
    with pytest.raises(DomainError):
        tuples(ShiftedDiagram(2, "VH"), sel)


def basis_selections(diagram):
    cls = classify(diagram)
    l = boundary(diagram).segment_count
    sels = [selection_S(diagram, l), selection_S(diagram, cls.index_w)]
    if diagram.steps[0] == "H":
        sels.append(selection_S_tilde(diagram, l))
        sels.append(selection_S_tilde(diagram, cls.index_w))
    sels.append(
        marked_points(
            diagram,
            {t: SelectionRule.ALL_POINTS for t in boundary(diagram).horizontal_indices()},
        )
    )
    return sels


@pytest.mark.parametrize("n", range(1, 9))
def test_tuples_against_oracle_exhaustive(n):
    for diagram in enumerate_diagrams(n):
        for sel in basis_selections(diagram):
            data = tuples(diagram, sel)
            check_tuples_against_oracle(diagram, data)
            assert all(ti in (1, 2) for ti in data.t)
            for j in range(data.k):
                assert data.d[j + 1] - data.d[j] >= data.t[j]


@pytest.mark.parametrize("n", range(2, 9))
def test_distance_tuples_under_deletions(n):
    for diagram in enumerate_diagrams(n):
        d_all = lf_ktheory(diagram).d
        if diagram.steps[0] == "H":
            smaller = lf_ktheory(delete_right_column(diagram)).d
            assert d_all[0] == 0
            assert tuple(x - 1 for x in d_all[1:]) == smaller
        else:
            smaller = lf_ktheory(delete_top_row(diagram)).d
            assert tuple(x - 1 for x in d_all) == smaller


# --------------------------------------------------------------------------
# descriptor constructions


def test_padded_descriptor_examples():
    hh = ShiftedDiagram(2, "HH")
    desc = lf_descriptor_type1(hh, selection_S_tilde(hh, 2))
    assert desc == FlagDescriptor(3, (1, 2), (0,), (1,))

    vh = ShiftedDiagram(2, "VH")
    desc = lf_descriptor_type0(vh, selection_S(vh, 2))
    assert desc == FlagDescriptor(3, (2,), (), ())

    hhv = ShiftedDiagram(3, "HHV")
    desc = lf_descriptor_type0(hhv, selection_S(hhv, 3))
    assert desc == FlagDescriptor(4, (1, 4), (0,), (2,))


def test_lf_a_lf_b_examples():
    assert lf_a(ShiftedDiagram(3, "HHH"), 2) == FlagDescriptor(4, (1, 3), (0,), (2,))
    assert lf_b(ShiftedDiagram(2, "HV"), 3) == FlagDescriptor(3, (1, 3), (0,), (1,))
    assert lf_a(ShiftedDiagram(1, "V"), 1) == FlagDescriptor(2, (2,), (), ())


def test_lf_type1_needs_stratum():
    vv = ShiftedDiagram(2, "VV")
    with pytest.raises(DomainError):
        lf_descriptor_type1(vv, selection_S(vv, 1))
    with pytest.raises(DomainError):
        lf_b(vv, 1)  # no horizontal segment for rule 3 either


def test_lf_ktheory_examples():
    assert lf_ktheory(ShiftedDiagram(2, "HH")) == FlagDescriptor(2, (0, 1), (0,), (1,))
    assert lf_ktheory(ShiftedDiagram(2, "HV")) == FlagDescriptor(2, (0, 2), (0,), (1,))
    assert lf_ktheory(ShiftedDiagram(2, "VV")) == FlagDescriptor(2, (2,), (), ())
    with pytest.raises(DomainError):
        lf_ktheory(ShiftedDiagram(0, ""))


@pytest.mark.parametrize("n", range(1, 9))
def test_ktheory_descriptors_are_regular_with_unit_t(n):
    for diagram in enumerate_diagrams(n):
        desc = lf_ktheory(diagram)
        assert desc.half_rank == n
        assert all(ti == 1 for ti in desc.t)
        assert desc.e == desc.d[: desc.k]
        assert is_valid(desc)


@pytest.mark.parametrize("n", range(1, 9))
def test_constructed_descriptors_satisfy_gorenstein_gap(n):
    for diagram in enumerate_diagrams(n):
        l = boundary(diagram).segment_count
        descs = [lf_a(diagram, l)]
        # the basis engine only reaches for the type-1 scheme on even frames
        # with an empty right column, where a stratum always exists
        if diagram.steps[0] == "H" and n % 2 == 0:
            descs.append(lf_b(diagram, l))
        for desc in descs:
            assert not [v for v in validate(desc) if v.severity == "error"]
            for i in range(desc.k):
                gap = desc.d[i] - desc.e[i]
                assert 0 <= gap <= 1
        # type-0 gap identity: d' - e' = t - 1 entrywise
        a = lf_a(diagram, l)
        for i in range(a.k):
            assert a.d[i] - a.e[i] == a.t[i] - 1


def test_selection_json_shape():
    sel = selection_S(ShiftedDiagram(3, "HVH"), 2)
    payload = sel.to_json()
    assert payload == [
        {"segment": 2, "rule": "2", "offsets": [0]},
        {"segment": 4, "rule": "1", "offsets": [0]},
    ]
    data = tuples(ShiftedDiagram(3, "HVH"), sel)
    assert data.to_json() == {"d": [0, 2], "e": [0], "t": [1], "appended_n": False}
