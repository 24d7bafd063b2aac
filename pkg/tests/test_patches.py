"""String edits, polarized literals, words, inversion, and the group action
on ordinary strings.
"""
from hypothesis import given
from hypothesis import strategies as st

from purecheck import (
    Edit,
    EditOp,
    Literal,
    Polarity,
    Word,
    action,
    edits,
    from_list,
    inv,
    literals,
    parse_word,
    render,
    string_delete,
    string_insert,
    to_list,
    undo,
    words,
)

# -- handy strategies -------------------------------------------------------

_chars = st.sampled_from("abcxyz")
_edits = st.builds(
    Edit,
    st.sampled_from([EditOp.INSERT, EditOp.DELETE]),
    st.integers(min_value=0, max_value=6),
    _chars,
)
_literals = st.builds(
    Literal, st.sampled_from([Polarity.POSITIVE, Polarity.NEGATIVE]), _edits
)
_words = st.lists(_literals, max_size=6).map(lambda ls: Word(tuple(ls)))
_strings = st.text(alphabet="abc", max_size=6)


def lit(op, pos, ch, *, neg=False):
    e = Edit(op, pos, ch)
    return Literal(Polarity.NEGATIVE if neg else Polarity.POSITIVE, e)


# -- partial edit functions --------------------------------------------------


def test_string_insert_cases():
    assert string_insert("", 0, "x") == "x"
    assert string_insert("ab", 2, "x") == "abx"
    assert string_insert("ab", 1, "x") == "axb"
    assert string_insert("ab", 5, "x") is None
    assert string_insert("ab", -1, "x") is None


def test_string_delete_cases():
    assert string_delete("abc", 0, "a") == "bc"
    assert string_delete("abc", 0, "b") is None
    assert string_delete("abc", 3, "c") is None
    assert string_delete("abc", 2, "c") == "ab"


@given(_strings, st.integers(min_value=0, max_value=8), _chars)
def test_insert_then_delete_round_trips(s, i, c):
    t = string_insert(s, i, c)
    if t is not None:
        assert string_delete(t, i, c) == s


@given(_strings, st.integers(min_value=0, max_value=8), _chars)
def test_delete_then_insert_round_trips(s, i, c):
    t = string_delete(s, i, c)
    if t is not None:
        assert string_insert(t, i, c) == s


# -- inversion ---------------------------------------------------------------


def test_inv_flips_op_on_edits():
    assert inv(Edit(EditOp.INSERT, 3, "a")) == Edit(EditOp.DELETE, 3, "a")
    assert inv(Edit(EditOp.DELETE, 0, "z")) == Edit(EditOp.INSERT, 0, "z")


def test_inv_flips_polarity_on_literals():
    l = lit(EditOp.INSERT, 1, "b")
    assert inv(l).polarity == Polarity.NEGATIVE
    assert inv(l).atom == l.atom
    assert inv(inv(l)) == l


def test_from_list_wraps_edits_positively():
    w = from_list([Edit(EditOp.INSERT, 2, "a"), Edit(EditOp.DELETE, 3, "b")])
    assert all(l.polarity is Polarity.POSITIVE for l in w.literals)
    assert to_list(w) == list(w.literals)
    assert render(w) == "+2:a,-3:b"


def test_inv_reverses_words():
    w = Word((lit(EditOp.INSERT, 0, "a"), lit(EditOp.DELETE, 0, "b")))
    got = inv(w)
    assert to_list(got) == [inv(w.literals[1]), inv(w.literals[0])]


@given(_words)
def test_inv_is_an_involution(w):
    assert inv(inv(w)) == w


# -- the action on strings ---------------------------------------------------


def test_action_of_single_literals():
    assert action("bc", lit(EditOp.INSERT, 0, "a")) == "abc"
    assert action("abc", lit(EditOp.DELETE, 1, "b")) == "ac"
    # a negative literal runs the opposite edit
    assert action("abc", lit(EditOp.INSERT, 0, "a", neg=True)) == "bc"
    assert action("bc", lit(EditOp.DELETE, 0, "a", neg=True)) == "abc"


def test_action_is_partial():
    assert action("", lit(EditOp.DELETE, 0, "a")) is None
    assert action("x", lit(EditOp.INSERT, 9, "a")) is None


def test_word_action_folds_left():
    w = Word(
        (
            lit(EditOp.INSERT, 0, "x"),
            lit(EditOp.INSERT, 1, "y"),
            lit(EditOp.DELETE, 2, "a"),
        )
    )
    assert action("ab", w) == "xyb"


def test_word_action_absorbs_failure():
    w = Word((lit(EditOp.DELETE, 0, "z"), lit(EditOp.INSERT, 0, "a")))
    assert action("abc", w) is None


def test_empty_word_is_identity():
    assert action("anything", Word(())) == "anything"


@given(_strings, _words)
def test_undo_inverts_action(s, w):
    t = action(s, w)
    if t is not None:
        assert undo(t, w) == s


@given(_strings, _words)
def test_undo_is_action_of_inverse(s, w):
    assert undo(s, w) == action(s, inv(w))


# -- text form ----------------------------------------------------------------


def test_render_edit_and_literal():
    assert render(Edit(EditOp.INSERT, 2, "a")) == "+2:a"
    assert render(Edit(EditOp.DELETE, 3, "b")) == "-3:b"
    assert render(lit(EditOp.DELETE, 3, "b")) == "-3:b"
    assert render(lit(EditOp.INSERT, 2, "a", neg=True)) == "~+2:a"


def test_render_word():
    w = Word((lit(EditOp.INSERT, 0, "a"), lit(EditOp.DELETE, 1, "b", neg=True)))
    assert render(w) == "+0:a,~-1:b"
    assert render(Word(())) == ""


def test_parse_word_round_trip_examples():
    for text in ("+0:a", "-2:b,+0:c", "~+1:x,~-0:y,+3:z", ""):
        assert render(parse_word(text)) == text


@given(_words)
def test_parse_render_round_trip(w):
    assert parse_word(render(w)) == w


def test_parse_rejects_garbage():
    for bad in ("+:a", "1:a", "+1:", "+1:ab", "*1:a", "+-1:a"):
        try:
            parse_word(bad)
        except ValueError:
            continue
        raise AssertionError(f"expected parse failure for {bad!r}")


# -- generators over the algebra ----------------------------------------------


def test_edit_generator_is_well_typed():
    for e in edits.generate(40):
        assert isinstance(e, Edit)
        assert e.pos >= 0
        assert isinstance(e.arg, str) and len(e.arg) == 1


def test_literal_generator_covers_both_polarities():
    pol = {l.polarity for l in literals.generate(40)}
    assert pol == {Polarity.POSITIVE, Polarity.NEGATIVE}


def test_word_generator_starts_empty_and_grows():
    ws = words.generate(30)
    assert ws[0] == Word(())
    assert any(len(w.literals) >= 2 for w in ws)
    assert len(set(ws)) == len(ws)
