"""Edits as group words: compose, invert, apply, roll back."""
from purecheck import Edit, EditOp, action, from_list, inv, parse_word, render, undo

doc = "the quick fox"

# one character per edit, words read left to right; build programmatically
# (the comma text form is for single printable edits, not prose)
insert_brown = from_list(
    [Edit(EditOp.INSERT, 9 + i, c) for i, c in enumerate(" brown")]
)

after = action(doc, insert_brown)
print(f"start:   {doc!r}")
print(f"patch:   {render(insert_brown)}")
print(f"after:   {after!r}")

back = undo(after, insert_brown)
print(f"undone:  {back!r}  (round trip: {back == doc})")
print()

# partiality: a delete must name the character it removes
wrong = parse_word("-0:x")
print(f"{render(wrong)!r} on {doc!r} -> {action(doc, wrong)}")
right = parse_word("-0:t")
print(f"{render(right)!r} on {doc!r} -> {action(doc, right)!r}")
print()

# inversion reverses the word and flips every polarity
w = parse_word("+0:a,-1:h,~-2:q")
print(f"word:     {render(w)}")
print(f"inverse:  {render(inv(w))}")
print(f"inv(inv): {render(inv(inv(w)))}")
print()

# applying a word then its inverse is a no-op wherever the word applies
s = "hat"
t = action(s, w)
print(f"{s!r} --w--> {t!r} --inv(w)--> {action(t, inv(w))!r}")
