"""Deciding whether two edit words do the same thing.

Comparing words by their effect on every string is impossible to run and
easy to define; comparing their normal-form automata is one structural
equality.  This script shows both, agreeing.

Run me:  python3 demos/word_problem.py
"""
from purecheck import (
    brute_force_equiv,
    editor_action,
    parse_word,
    render,
    semantics,
    witness_diff,
    word_equiv,
)

PAIRS = [
    ("+2:a,-3:b", "-2:b,+2:a"),  # insert then delete vs delete then insert
    ("+0:a,~+0:a", ""),  # do and immediately undo
    ("+0:a", "+0:b"),  # different characters
    ("-0:a,-0:b", "-1:b,-0:a"),  # two deletions, two schedules
    ("+1:a,-1:a", ""),  # net effect: demands one character, changes nothing
]

for left_text, right_text in PAIRS:
    left = parse_word(left_text)
    right = parse_word(right_text)
    print(f"left  = {render(left) or '(empty)'}")
    print(f"        {render(semantics(left))}")
    print(f"right = {render(right) or '(empty)'}")
    print(f"        {render(semantics(right))}")

    decided = word_equiv(left, right)
    forced = brute_force_equiv(left, right, "ab", 6)
    print(f"  normal forms equal? {decided}   brute force agrees? {decided == forced}")

    if not decided:
        s = witness_diff(semantics(left), semantics(right))
        a = editor_action(s, semantics(left))
        b = editor_action(s, semantics(right))
        print(f"  a string telling them apart: {s!r}  ({a!r} vs {b!r})")
    print()
