"""Existential quantification by explicit witness construction.

An existential claim is checked here not by sampling but by *computing*
a witness: a value carrying the claim exposes ``witness()``, returning
either a concrete witness or ``None``.  Witness construction must be
deterministic and must not consult ambient state.

The quantifiers themselves are ordinary boolean functions — deliberately
not marked — so they can be used inside operational code as well as
inside marked propositions (wrap the result in ``Meta`` for the latter).
"""

from __future__ import annotations

from typing import Callable, Optional, Protocol, TypeVar

B = TypeVar("B")


class WitnessSource(Protocol[B]):
    """Anything that can try to produce a witness for its own claim."""

    def witness(self) -> Optional[B]:
        ...


def exists(p: WitnessSource[B], q: Callable[[B], bool]) -> bool:
    """True iff a witness is produced and satisfies ``q``.

    No witness means the claim is refuted: ``False``.
    """
    w = p.witness()
    if w is None:
        return False
    return q(w)


def exists_some(p: WitnessSource[B]) -> bool:
    """True iff any witness at all is produced."""
    return exists(p, lambda _x: True)


def exists_or_vacuous(p: WitnessSource[B], q: Callable[[B], bool]) -> bool:
    """Like `exists`, but an absent witness counts as (vacuously) true.

    Use this for claims of the form "every witness, if any, satisfies q".
    """
    w = p.witness()
    if w is None:
        return True
    return q(w)
