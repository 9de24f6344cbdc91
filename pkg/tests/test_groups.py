"""Multiplication-table groups, closure, conjugacy classes, file format."""

import numpy as np
import pytest

from wordfourier import (
    FiniteGroup,
    GroupValidationError,
    builtin_group,
    builtin_names,
    conjugacy_classes,
    group_from_generators,
    load_group,
    perm_from_cycles,
    save_group,
)
from wordfourier.groups import build_builtin, compose, cycle_notation


class TestPermutations:
    def test_compose_is_left_to_right(self):
        p = perm_from_cycles(3, [(1, 2)])
        q = perm_from_cycles(3, [(2, 3)])
        # apply p first: 1 -> 2 -> 3
        assert compose(p, q)[0] == 2

    def test_cycle_notation(self):
        assert cycle_notation(perm_from_cycles(4, [(1, 2), (3, 4)])) == "(1 2)(3 4)"
        assert cycle_notation((0, 1, 2)) == "e"

    def test_bad_cycle_rejected(self):
        with pytest.raises(ValueError):
            perm_from_cycles(3, [(1, 4)])


class TestClosure:
    def test_s3_from_generators(self):
        group = group_from_generators(
            [perm_from_cycles(3, [(1, 2)]), perm_from_cycles(3, [(1, 2, 3)])]
        )
        assert group.order == 6
        assert group.identity == 0
        assert group.element_names[0] == "e"

    def test_trivial_group(self):
        assert group_from_generators([(0,)]).order == 1

    def test_d4_from_generators(self):
        group = group_from_generators(
            [perm_from_cycles(4, [(1, 2, 3, 4)]), perm_from_cycles(4, [(1, 3)])]
        )
        assert group.order == 8

    def test_closure_bound(self):
        with pytest.raises(GroupValidationError):
            group_from_generators(
                [perm_from_cycles(5, [(1, 2)]), perm_from_cycles(5, [(1, 2, 3, 4, 5)])],
                bound=10,
            )

    def test_invalid_permutation(self):
        with pytest.raises(GroupValidationError):
            group_from_generators([(0, 0, 1)])


class TestValidation:
    def test_non_latin_table(self):
        with pytest.raises(GroupValidationError):
            FiniteGroup(np.zeros((2, 2), dtype=int))

    def test_no_identity(self):
        # subtraction mod 3: a latin square without a two-sided identity
        table = [[(a - b) % 3 for b in range(3)] for a in range(3)]
        with pytest.raises(GroupValidationError, match="identity"):
            FiniteGroup(np.array(table))

    def test_non_associative_loop_rejected(self):
        # order-5 loop: identity and inverses exist but (1*1)*2 != 1*(1*2)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupValidationError, match="associative"):
            FiniteGroup(np.array(table))

    def test_tables_are_read_only(self):
        group = build_builtin("S3")
        with pytest.raises(ValueError):
            group.mul[0, 0] = 1


class TestConjugacyClasses:
    def test_s3_sizes_in_representative_order(self):
        classes = conjugacy_classes(build_builtin("S3"))
        assert classes.sizes == (1, 3, 2)
        assert classes.centralizer_sizes == (6, 2, 3)
        assert classes.identity_class == 0

    def test_abelian_singletons(self):
        classes = conjugacy_classes(build_builtin("Z6"))
        assert classes.sizes == (1,) * 6

    def test_q8_class_multiset(self):
        classes = conjugacy_classes(build_builtin("Q8"))
        assert sorted(classes.sizes) == [1, 1, 2, 2, 2]

    def test_representatives_are_minimal(self):
        classes = conjugacy_classes(build_builtin("S4"))
        class_of = np.asarray(classes.class_of)
        for c, rep in enumerate(classes.representatives):
            members = np.flatnonzero(class_of == c)
            assert rep == members.min()

    @pytest.mark.parametrize("name", builtin_names())
    def test_squaring_is_class_well_defined(self, name):
        group = builtin_group(name)
        classes = conjugacy_classes(group)
        class_of = np.asarray(classes.class_of)
        squares = class_of[group.mul[np.arange(group.order), np.arange(group.order)]]
        for c in range(len(classes)):
            assert len(set(squares[class_of == c].tolist())) == 1
        for c, rep in enumerate(classes.representatives):
            assert classes.power_class_map[c] == squares[rep]


class TestFiles:
    def test_round_trip(self, tmp_path):
        group = build_builtin("D5")
        path = tmp_path / "d5.grp"
        save_group(group, path)
        loaded = load_group(path)
        assert loaded.order == group.order
        assert np.array_equal(loaded.mul, group.mul)
        assert loaded.name == "D5"

    def test_bad_header(self, tmp_path):
        path = tmp_path / "bad.grp"
        path.write_text("graup X order 2\n0 1\n1 0\n")
        with pytest.raises(GroupValidationError, match="header"):
            load_group(path)

    def test_wrong_row_count(self, tmp_path):
        path = tmp_path / "bad.grp"
        path.write_text("group X order 3\n0 1\n1 0\n")
        with pytest.raises(GroupValidationError):
            load_group(path)

    def test_non_integer_entry(self, tmp_path):
        path = tmp_path / "bad.grp"
        path.write_text("group X order 2\n0 one\n1 0\n")
        with pytest.raises(GroupValidationError):
            load_group(path)


@pytest.mark.parametrize("name", builtin_names())
def test_builtin_assets_match_fresh_construction(name):
    shipped = builtin_group(name)
    fresh = build_builtin(name)
    assert shipped.order == fresh.order
    assert np.array_equal(shipped.mul, fresh.mul)
