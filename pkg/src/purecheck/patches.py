"""Polarized edit patches acting partially on strings.

A patch is anything with a partial right action on some state type:
``action(state, patch)`` either produces the edited state or ``None``
when the patch does not apply.  Invertible patches also support ``undo``,
which is just the action of the inverse.

The concrete patches here are single-character string edits
(:class:`Edit`), their polarized form (:class:`Literal`), and free group
words of literals (:class:`Word`).  Words form a monoid under
concatenation; no cancellation is performed at the word level — deciding
when two words denote the same action is the business of
:mod:`purecheck.editor`.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterable, Optional, Tuple

from . import generators
from .check import render
from .generators import gmap, gpair, lists_of, register_default


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class EditOp(Enum):
    INSERT = "+"
    DELETE = "-"


@dataclass(frozen=True)
class Edit:
    """Insert or delete one character at a 0-based position."""

    op: EditOp
    pos: int
    arg: str


@dataclass(frozen=True)
class Literal:
    """A patch with a direction: positive applies, negative un-applies."""

    polarity: Polarity
    atom: Any


@dataclass(frozen=True)
class Word:
    """A sequence of polarized literals, applied left to right."""

    literals: Tuple[Literal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(self.literals))


# ---------------------------------------------------------------------------
# inversion


@functools.singledispatch
def inv(x: Any):
    raise TypeError(f"no inverse defined for {type(x).__name__}")


@inv.register
def _(x: Polarity) -> Polarity:
    return Polarity.NEGATIVE if x is Polarity.POSITIVE else Polarity.POSITIVE


@inv.register
def _(x: EditOp) -> EditOp:
    return EditOp.DELETE if x is EditOp.INSERT else EditOp.INSERT


@inv.register
def _(x: Edit) -> Edit:
    return Edit(inv(x.op), x.pos, x.arg)


@inv.register
def _(x: Literal) -> Literal:
    return Literal(inv(x.polarity), x.atom)


@inv.register
def _(x: Word) -> Word:
    # undoing a sequence undoes each step in reverse order
    return Word(tuple(inv(lit) for lit in reversed(x.literals)))


# ---------------------------------------------------------------------------
# the string instance of single edits


def string_insert(s: str, i: int, c: str) -> Optional[str]:
    """Insert ``c`` before position ``i``; defined iff 0 <= i <= len(s)."""
    if 0 <= i <= len(s):
        return s[:i] + c + s[i:]
    return None


def string_delete(s: str, i: int, c: str) -> Optional[str]:
    """Delete the character at ``i``, which must be ``c``; defined iff
    0 <= i < len(s) and s[i] == c.  Requiring the expected character makes
    deletion invertible."""
    if 0 <= i < len(s) and s[i] == c:
        return s[:i] + s[i + 1 :]
    return None


# ---------------------------------------------------------------------------
# actions

# state type -> (insert, delete), each (state, pos, char) -> Optional[state]
_EDITABLE: dict = {}

# patch type -> handler(state, patch) -> Optional[state], for patch kinds
# defined outside this module (the automata of purecheck.editor)
_ACTIONS: dict = {}


def register_editable(state_type: type, insert: Callable, delete: Callable) -> None:
    """Declare how single edits splice into states of the given type."""
    _EDITABLE[state_type] = (insert, delete)


def register_patch_kind(patch_type: type, handler: Callable) -> None:
    """Declare the action of an additional patch representation."""
    _ACTIONS[patch_type] = handler


register_editable(str, string_insert, string_delete)


def _edit_action(s: Any, e: Edit) -> Optional[Any]:
    try:
        insert, delete = _EDITABLE[type(s)]
    except KeyError:
        raise TypeError(f"states of type {type(s).__name__} do not support edits") from None
    fn = insert if e.op is EditOp.INSERT else delete
    return fn(s, e.pos, e.arg)


def action(s: Any, p: Any) -> Optional[Any]:
    """Apply patch ``p`` to state ``s``; ``None`` when it does not apply."""
    if isinstance(p, Edit):
        return _edit_action(s, p)
    if isinstance(p, Literal):
        if p.polarity is Polarity.POSITIVE:
            return action(s, p.atom)
        return undo(s, p.atom)
    if isinstance(p, Word):
        state: Optional[Any] = s
        for lit in p.literals:
            state = action(state, lit)
            if state is None:
                return None
        return state
    handler = _ACTIONS.get(type(p))
    if handler is not None:
        return handler(s, p)
    raise TypeError(f"not a patch: {type(p).__name__}")


def undo(s: Any, p: Any) -> Optional[Any]:
    """Revert ``p`` on ``s``: the action of the inverse patch."""
    return action(s, inv(p))


# ---------------------------------------------------------------------------
# words


def from_list(edits: Iterable[Edit]) -> Word:
    """Wrap plain edits as an all-positive word."""
    return Word(tuple(Literal(Polarity.POSITIVE, e) for e in edits))


def to_list(w: Word) -> list:
    return list(w.literals)


# ---------------------------------------------------------------------------
# text rendering ("+2:a" inserts 'a' at 2; "-3:b" deletes 'b' at 3;
# a "~" prefix marks a negative-polarity literal)

_EDIT_RE = re.compile(r"([+-])(\d+):(.)\Z")


def render_edit(e: Edit) -> str:
    return f"{e.op.value}{e.pos}:{e.arg}"


def render_literal(lit: Literal) -> str:
    mark = "" if lit.polarity is Polarity.POSITIVE else "~"
    return mark + render_edit(lit.atom)


def render_word(w: Word) -> str:
    return ",".join(render_literal(lit) for lit in w.literals)


def parse_edit(text: str) -> Edit:
    m = _EDIT_RE.match(text)
    if m is None:
        raise ValueError(f"not an edit: {text!r}")
    op = EditOp.INSERT if m.group(1) == "+" else EditOp.DELETE
    return Edit(op, int(m.group(2)), m.group(3))


def parse_literal(text: str) -> Literal:
    if text.startswith("~"):
        return Literal(Polarity.NEGATIVE, parse_edit(text[1:]))
    return Literal(Polarity.POSITIVE, parse_edit(text))


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return Word(())
    return Word(tuple(parse_literal(part.strip()) for part in text.split(",")))


@render.register
def _(value: Edit) -> str:
    return render_edit(value)


@render.register
def _(value: Literal) -> str:
    return render_literal(value)


@render.register
def _(value: Word) -> str:
    return render_word(value)


# ---------------------------------------------------------------------------
# default generators

edit_ops = generators.from_values([EditOp.INSERT, EditOp.DELETE])
polarities = generators.from_values([Polarity.POSITIVE, Polarity.NEGATIVE])

#: op × position × character, balanced so that no component races ahead
edits = gmap(
    lambda t: Edit(t[0][0], t[0][1], t[1]),
    gpair(gpair(edit_ops, generators.naturals()), generators.characters()),
)

literals = gmap(lambda t: Literal(t[0], t[1]), gpair(polarities, edits))

words = gmap(lambda ls: Word(tuple(ls)), lists_of(literals))

register_default(Edit, edits)
register_default(Literal, literals)
register_default(Word, words)
