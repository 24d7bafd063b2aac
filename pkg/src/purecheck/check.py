"""Checks, four-valued verdicts, and the Meta marking layer.

The unit of testable obligation is a :class:`Check`: a pure function from
an integer *confidence* (a sample budget) to a :data:`Verdict`.  Raising
the confidence may expose counterexamples that a smaller budget missed,
but can never un-falsify anything — checks built from the enumeration
rules in :mod:`purecheck.generators` are monotone in this sense.

Propositions are *marked* before they are checked: wrapping a value in
:class:`Meta` declares it meta-logical, i.e. about the program rather
than part of it.  The wrapper is inert — it computes nothing — but it
stratifies a code base cleanly: operational code never touches marked
values, assertions build them, tactics (like quantifier merging) rewrite
them, and the most abstract layer reasons about the tactics themselves.

Checking a marked proposition yields one of four verdicts:

=====================  =====================================================
``Holds``              the proposition evaluated to true on every sample
``Falsified``          a sample refuted it (a genuine logical falsehood)
``LogicalError``       the proposition exists but cannot be decided
                       (its body crashed, or produced a non-boolean)
``TacticalError``      the proposition could not even be stated
                       (no sample domain, malformed shape)
=====================  =====================================================

The distinction matters: a ``Falsified`` law is news about the subject
under test, while either error verdict is news about the test itself.
"""

from __future__ import annotations

import functools
import inspect
import typing
from dataclasses import dataclass
from typing import Any, Callable, Optional, Union

from .generators import Generator, default_generator, gpair

# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class Falsified:
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class LogicalError:
    diagnostic: str


@dataclass(frozen=True)
class TacticalError:
    diagnostic: str


Verdict = Union[Holds, Falsified, LogicalError, TacticalError]


# ---------------------------------------------------------------------------
# rendering of counterexamples


@functools.singledispatch
def render(value: Any) -> str:
    """Stable text rendering used in counterexample reports.

    Other modules register their own cases (edits, words, automata).
    """
    return repr(value)


@render.register(tuple)
def _render_tuple(value: tuple) -> str:
    return "(" + ", ".join(render(v) for v in value) + ")"


@render.register(list)
def _render_list(value: list) -> str:
    return "[" + ", ".join(render(v) for v in value) + "]"


def _clip(text: str, limit: int = 200) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


# ---------------------------------------------------------------------------
# marking


@dataclass(frozen=True)
class Meta:
    """Inert marker separating meta-logical values from operational ones.

    ``Meta(x).reflect`` is ``x``: wrapping then reflecting is the identity.
    """

    reflect: Any


def foreach(f: Callable[[Any], Any]) -> Meta:
    """Explicit universal quantifier: turn ``A -> Meta[B]`` into ``Meta[A -> B]``.

    The returned marked function satisfies
    ``foreach(f).reflect(x) == f(x).reflect`` for every ``x``.  Parameter
    annotations survive the wrapping, so the default sample domain of the
    quantified variable is still discoverable.
    """

    @functools.wraps(f)
    def body(x):
        r = f(x)
        return r.reflect if isinstance(r, Meta) else r

    return Meta(body)


# ---------------------------------------------------------------------------
# checks


@dataclass(frozen=True)
class Check:
    """A confidence-parameterized heuristic decision of a proposition."""

    perform: Callable[[int], Verdict]

    def __and__(self, other: "Check") -> "Check":
        return conjoin(self, other)


def check_true() -> Check:
    """The unit of the conjunctive structure: holds at every confidence."""
    return Check(lambda n: Holds())


def conjoin(c: Check, d: Check) -> Check:
    """Conjunction of checks; the confidence is passed to each clause.

    The first clause (left to right) that does not hold determines the
    verdict, so reports are deterministic.
    """

    def perform(n: int) -> Verdict:
        v = c.perform(n)
        if not isinstance(v, Holds):
            return v
        return d.perform(n)

    return Check(perform)


def check_with(g: Generator, p: Union[Meta, Callable]) -> Check:
    """Check a predicate on every sample that ``g`` yields at the given budget.

    A budget of zero (or less) produces no samples and therefore holds
    vacuously — "no evidence" is not a failure.
    """
    fn = p.reflect if isinstance(p, Meta) else p

    def perform(n: int) -> Verdict:
        try:
            samples = g.generate(n)
        except Exception as e:  # noqa: BLE001 — sampling failure is a verdict, not a crash
            return TacticalError(f"sample enumeration failed: {e!r}")
        for x in samples:
            try:
                result = fn(x)
            except Exception as e:  # noqa: BLE001
                return LogicalError(f"body raised on {render(x)}: {e!r}")
            if not isinstance(result, bool):
                return LogicalError(
                    f"body returned {type(result).__name__}, not bool, on {render(x)}"
                )
            if not result:
                return Falsified(_clip(render(x)))
        return Holds()

    return Check(perform)


# ---------------------------------------------------------------------------
# bounded quantification


@dataclass(frozen=True)
class For:
    """A universally quantified proposition with an explicit sample bound."""

    bound: Generator
    body: Callable[[Any], Any]


@dataclass(frozen=True)
class NestedFor:
    """Two nested bounded quantifiers whose inner bound does not depend on
    the outer variable.  Storing the inner generator separately makes that
    independence structural, which is what licenses merging."""

    outer_bound: Generator
    inner_bound: Generator
    body: Callable[[Any, Any], Any]


def qmerge(q: NestedFor) -> For:
    """Merge nested quantifiers into one over the product of their bounds.

    The merged bound is ``gpair(outer, inner)``, so a budget of ``n``
    explores roughly sqrt(n) samples of each variable instead of spending
    the whole budget on the outer one.
    """
    body = q.body
    return For(gpair(q.outer_bound, q.inner_bound), lambda xy: body(xy[0], xy[1]))


# ---------------------------------------------------------------------------
# turning marked propositions into checks


def check(p: Meta) -> Check:
    """Decide a marked proposition.

    The proposition's shape selects the reading:

    * ``bool`` — constant verdict, confidence ignored;
    * ``None`` — the trivially true proposition;
    * ``tuple``/``list`` — conjunction of the components, in order
      (the empty collection holds);
    * :class:`For` — bounded universal quantification over its generator;
    * a callable — universal quantification over the default generator of
      the first parameter's annotated type.

    Anything else cannot be stated as a proposition and yields a
    ``TacticalError`` when performed.
    """
    if not isinstance(p, Meta):
        return Check(lambda n: TacticalError("proposition is not marked with Meta"))
    value = p.reflect
    if isinstance(value, bool):
        return Check(lambda n: Holds() if value else Falsified())
    if value is None:
        return check_true()
    if isinstance(value, (tuple, list)):
        result = check_true()
        for component in value:
            wrapped = component if isinstance(component, Meta) else Meta(component)
            result = conjoin(result, check(wrapped))
        return result
    if isinstance(value, For):
        return check_with(value.bound, Meta(value.body))
    if callable(value):
        return _check_callable(value)
    bad = type(value).__name__
    return Check(lambda n: TacticalError(f"no checkable reading for {bad}"))


def _check_callable(fn: Callable) -> Check:
    def perform(n: int) -> Verdict:
        try:
            g = _domain_of(fn)
        except Exception as e:  # noqa: BLE001
            return TacticalError(f"cannot infer a sample domain: {e}")
        return check_with(g, fn).perform(n)

    return Check(perform)


# Monomorphic spellings of the dispatcher, one per proposition shape.
# Each is the same decision procedure `check` applies once it has seen
# that shape; the names exist so call sites can state their intent.

def check_bool(p: Meta) -> Check:
    """Decide a marked boolean: a constant verdict at any confidence."""
    return check(p)


def check_conjoin(c: Check, d: Check) -> Check:
    """The conjunction of two checks; same as ``c & d``."""
    return conjoin(c, d)


def check_unit(p: Meta) -> Check:
    """Decide a marked ``None``: trivially true."""
    return check(p)


def check_pair(p: Meta) -> Check:
    """Decide a marked pair as the conjunction of its components."""
    return check(p)


def check_list(p: Meta) -> Check:
    """Decide a marked list as the conjunction of its items (empty holds)."""
    return check(p)


def check_predicate(p) -> Check:
    """Decide a marked predicate over its annotation's default generator."""
    return check(p if isinstance(p, Meta) else Meta(p))


def check_for(q: Meta) -> Check:
    """Decide a marked bounded quantification (a :class:`For`)."""
    return check(q)


def _domain_of(fn: Callable) -> Generator:
    sig = inspect.signature(fn)
    params = list(sig.parameters.values())
    if not params:
        raise ValueError("predicate takes no argument")
    try:
        hints = typing.get_type_hints(fn)
    except Exception:  # noqa: BLE001 — unresolvable forward references etc.
        hints = {}
    ann = hints.get(params[0].name, params[0].annotation)
    if ann is inspect.Parameter.empty:
        raise ValueError("first parameter lacks a type annotation")
    return default_generator(ann)
