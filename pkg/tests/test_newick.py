"""Newick dialect: parsing, canonical writing, byte-offset errors.

The dialect stores the mutation time where standard Newick puts an
internal node label: ((A,B)1.5,C)2;. Canonical output has no whitespace,
shortest decimals, stored child order, and a closing semicolon.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixdist import (
    EmptyInputError,
    GenSpec,
    MissingTimeError,
    NegativeTimeError,
    NewickSyntaxError,
    NonMonotoneTimeError,
    TooManyFractionDigitsError,
    parse_newick,
    random_mixture_tree,
    read_trees,
    ticks_from_decimal,
    ticks_to_decimal,
    trees_identical,
    write_newick,
)
from mixdist.tree import WEAK

from conftest import U


class TestTickConversions:
    @pytest.mark.parametrize(
        "text,ticks",
        [
            ("0", 0),
            ("1", U),
            ("2.0", 2 * U),
            ("0.5", 500_000),
            ("0.000001", 1),
            ("123.456789", 123_456_789),
            ("10.100000", 10_100_000),
        ],
    )
    def test_from_decimal(self, text, ticks):
        assert ticks_from_decimal(text) == ticks

    @pytest.mark.parametrize(
        "ticks,text",
        [
            (0, "0"),
            (U, "1"),
            (500_000, "0.5"),
            (1, "0.000001"),
            (123_456_789, "123.456789"),
            (10_100_000, "10.1"),
        ],
    )
    def test_to_decimal_shortest_form(self, ticks, text):
        assert ticks_to_decimal(ticks) == text

    def test_seven_fraction_digits_rejected(self):
        with pytest.raises(TooManyFractionDigitsError):
            ticks_from_decimal("1.0000001")

    def test_negative_rejected(self):
        with pytest.raises(NegativeTimeError):
            ticks_from_decimal("-1")

    @pytest.mark.parametrize("bad", ["", ".", "1.", ".5", "1..2", "a", "1e3"])
    def test_malformed_literals(self, bad):
        with pytest.raises(ValueError):
            ticks_from_decimal(bad)

    @given(st.integers(min_value=0, max_value=10**15))
    @settings(max_examples=200, deadline=None)
    def test_roundtrip_any_ticks(self, ticks):
        assert ticks_from_decimal(ticks_to_decimal(ticks)) == ticks


class TestParse:
    def test_three_leaf_example(self):
        tree = parse_newick("((A,B)1.0,C)2.0;")
        assert tree.time[0] == 2_000_000
        assert tree.time[1] == 1_000_000
        assert sorted(tree.label_to_leaf) == ["A", "B", "C"]

    def test_single_leaf(self):
        tree = parse_newick("X;")
        assert tree.n == 1
        assert tree.label[0] == "X"

    def test_whitespace_between_tokens(self):
        a = parse_newick(" ( ( A , B ) 1.0 ,\tC )\n2.0 ; ")
        b = parse_newick("((A,B)1.0,C)2.0;")
        assert trees_identical(a, b)

    def test_name_charset(self):
        tree = parse_newick("(leaf_1.a|x,A-B)3;")
        assert sorted(tree.label_to_leaf) == ["A-B", "leaf_1.a|x"]

    def test_fractional_times_exact(self):
        tree = parse_newick("(A,B)0.000001;")
        assert tree.time[0] == 1

    def test_weak_strictness_passthrough(self):
        text = "((A,B)2,C)2;"
        with pytest.raises(NonMonotoneTimeError):
            parse_newick(text)
        assert parse_newick(text, WEAK).n == 3


class TestParseErrors:
    def test_missing_time_offset_points_after_paren(self):
        # "((A,B),C)2.0;" - inner group closes at offset 5, time expected at 6
        with pytest.raises(MissingTimeError) as err:
            parse_newick("((A,B),C)2.0;")
        assert err.value.offset == 6

    def test_three_children(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("((A,B,C)1.0,D)2.0;")

    def test_single_child_group(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("(A)1.0;")

    def test_negative_time(self):
        with pytest.raises(NegativeTimeError) as err:
            parse_newick("(A,B)-1;")
        assert err.value.offset == 5

    def test_too_many_fraction_digits(self):
        with pytest.raises(TooManyFractionDigitsError):
            parse_newick("(A,B)1.1234567;")

    def test_dot_without_digits(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("(A,B)1.;")

    def test_missing_semicolon(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("(A,B)1")

    def test_trailing_characters(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("(A,B)1;junk")

    def test_unmatched_close(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("A)1;")

    def test_comma_outside_group(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("A,B;")

    def test_unexpected_end(self):
        with pytest.raises(NewickSyntaxError):
            parse_newick("((A,B)1,")

    def test_empty_text(self):
        with pytest.raises(EmptyInputError):
            parse_newick("")
        with pytest.raises(EmptyInputError):
            parse_newick("   \n ")

    def test_bad_leading_character(self):
        with pytest.raises(NewickSyntaxError) as err:
            parse_newick("*A;")
        assert err.value.offset == 0

    def test_offsets_stay_inside_text(self):
        bad = ["((A,B),C)2;", "(A,B)-3;", "*;", "(A,B)1.9999999;", "A,"]
        for text in bad:
            try:
                parse_newick(text)
            except (NewickSyntaxError, MissingTimeError, NegativeTimeError, TooManyFractionDigitsError) as exc:
                assert exc.offset is not None
                assert 0 <= exc.offset <= len(text)
            else:  # pragma: no cover
                pytest.fail(f"{text!r} parsed")


class TestWrite:
    def test_canonical_shortest_decimal(self):
        tree = parse_newick("((A,B)1.0,C)2.0;")
        assert write_newick(tree) == "((A,B)1,C)2;"

    def test_half_unit(self):
        tree = parse_newick("(A,B)0.500000;")
        assert write_newick(tree) == "(A,B)0.5;"

    def test_child_order_preserved(self):
        text = "((B,A)1,C)2;"
        assert write_newick(parse_newick(text)) == text

    def test_idempotent_canonicalization(self):
        messy = " ( (A , B) 1.50 , C ) 2.0 ; "
        once = write_newick(parse_newick(messy))
        assert once == "((A,B)1.5,C)2;"
        assert write_newick(parse_newick(once)) == once

    @given(st.integers(min_value=1, max_value=80), st.integers(min_value=0, max_value=2**63 - 1))
    @settings(max_examples=80, deadline=None)
    def test_roundtrip_random_trees(self, n, seed):
        tree = random_mixture_tree(GenSpec(n=n, seed=seed, time_model="uniform_jitter"))
        text = write_newick(tree)
        back = parse_newick(text)
        assert trees_identical(tree, back)
        # node-for-node including stored child order
        assert [back.records[v] for v in range(back.node_count)] == [
            tree.records[v] for v in range(tree.node_count)
        ]
        assert write_newick(back) == text

    def test_deep_caterpillar_roundtrip(self):
        tree = random_mixture_tree(GenSpec(n=3000, seed=1, shape="caterpillar"))
        assert trees_identical(parse_newick(write_newick(tree)), tree)


class TestFiles:
    def test_one_tree_per_line_blank_ignored(self):
        text = "\n(A,B)1;\n\n((C,D)1,E)2;\n   \n"
        loaded = read_trees(text)
        assert [lineno for lineno, _ in loaded] == [2, 4]
        assert [t.n for _, t in loaded] == [2, 3]

    def test_errors_carry_line_numbers(self):
        with pytest.raises(NewickSyntaxError) as err:
            read_trees("(A,B)1;\n(C,D;\n")
        assert err.value.line == 2
        assert "line 2" in str(err.value)
