"""A tour of checks: budgets, the four verdicts, and conjunction.

Run me:  python3 demos/budgets_and_verdicts.py
"""
from purecheck import Meta, check, check_with, foreach, integers, strings


def show(title, verdict):
    print(f"  {title:<44} -> {verdict}")


print("one property, growing budgets")
not_all_negative = check_with(integers(), lambda x: x > -2)
for n in (1, 2, 4, 8):
    show(f"x > -2 at confidence {n}", not_all_negative.perform(n))
# -2 is the fifth sample (0, 1, -1, 2, -2), so the verdict flips at n=5.
show("x > -2 at confidence 5", not_all_negative.perform(5))

print()
print("all four verdicts")
show("trivial truth", check_with(integers(), lambda x: x == x).perform(30))
show("short strings only", check_with(strings(), lambda s: len(s) < 2).perform(30))
show("body that crashes", check_with(integers(), lambda x: 1 // x == 1).perform(30))
show("no way to sample", check(Meta(lambda mystery: True)).perform(30))

print()
print("conjunction: every clause gets the whole budget")


@foreach
def keeps_sign(x: int):
    return abs(x) * (1 if x >= 0 else -1) == x


@foreach
def doubles_evenly(x: int):
    return (2 * x) % 2 == 0


both = check(keeps_sign) & check(doubles_evenly)
show("keeps_sign AND doubles_evenly", both.perform(40))

broken = check(keeps_sign) & check_with(integers(), lambda x: x < 3)
show("with a false right clause", broken.perform(40))
