"""Named laws over real carriers, plus a tactic that is allowed to say no.

The axiom values are ordinary data.  Mapping them to checkable
propositions is one function; deciding them at a budget is another.
"""
from purecheck import (
    INT_ADD,
    STRING,
    Monoid,
    MonoidCommute,
    RepeatLength,
    axiomatic,
    check,
    integers,
    monoid_laws,
    nonneg_lift,
)


def main():
    print("the three monoid laws for string concatenation:")
    for name, chk in monoid_laws(STRING):
        print(f"  {name:<30} {chk.perform(100)}")

    print()
    print("commutativity is not one of them:")
    v = check(axiomatic(MonoidCommute(STRING))).perform(100)
    print(f"  monoid.commute<string>        {v}")
    print("  ...but integer addition commutes just fine:")
    v = check(axiomatic(MonoidCommute(INT_ADD))).perform(100)
    print(f"  monoid.commute<int-addition>  {v}")

    print()
    print("a law that is only true on half its domain:")
    law = axiomatic(RepeatLength("ab"))
    print(f"  len('ab'*k) == 2*k, k from all ints   {check(law).perform(50)}")
    lifted = nonneg_lift(RepeatLength("ab"))
    print(f"  same law through |k|                  {check(lifted).perform(50)}")

    print()
    print("lifting guards its doorway:")
    try:
        nonneg_lift(MonoidCommute(INT_ADD))
    except TypeError as e:
        print(f"  TypeError: {e}")

    print()
    print("and a deliberately wrong monoid, caught:")
    shifted = Monoid("shifted-add", 0, lambda a, b: a + b + 1, integers())
    for name, chk in monoid_laws(shifted):
        print(f"  {name:<30} {chk.perform(30)}")


if __name__ == "__main__":
    main()
