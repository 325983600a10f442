"""Degree formulas, recursive upper bounds, and the finiteness classifier.

T(n, C) is the least t such that every finite coloring of the n-element
subchains of C admits a copy of C realizing at most t colors.  The exact
family formulas, the three bound rules (tail, product, power), and
:func:`classify` below operate purely on Cantor normal forms and integer
tables; T(n, a) is finite for every a below w^w and infinite for n >= 2
once a reaches w^w.

Degree tables are plain sequences: ``table[j]`` holds the value (or an
upper bound) of T(j, a) for the base ordinal a of the rule being applied.
Every result carries a trace of rule applications that
:func:`replay_trace` re-executes independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .ordinal import OMEGA, Ordinal
from .typecalc import binom, enum_power, out_degrees, rank_counts

EXACT = "exact"
UPPER_BOUND = "upper-bound"
INFINITE = "infinite"
FINITE_UNBOUNDED = "finite-unbounded"

_ANCHORS = {
    "zero-domain": "T(0, C) = 1 for every chain C",
    "finite-chain-convention": "convention: T(n, c) = C(c, n) for finite c >= n >= 1, else 1",
    "ramsey-omega": "T(n, w) = 1",
    "omega-plus-m": "T(n, w + m) = sum_{j=0..n} C(m, j)",
    "omega-times-m": "T(n, w*m) = m^n",
    "signed-sum": "T(n, w^(s_0) + ... + w^(s_{m-1})) = m^n",
    "integers": "T(n, Z) = 2^n",
    "omega-times-m-table": "T(j, w*m) = m^j for j = 0..R",
    "bound-add": "T(n, a + m) <= sum_{j=0..n} C(m, j) * T(n - j, a)",
    "bound-mul": "T(n, a*m) <= sum over (n, m)-multiplicative types t of T(rank(t), a)",
    "bound-pow": "T(n, a^d) <= sum over (n, d)-power types of the product bound on their out-degrees",
    "subsum": "T(n, b) <= T(n, a) when b is a subsum of a's remainder-invariant summands",
    "infinite": "T(n, a) = infinity for a >= w^w and n >= 2",
    "finite-unbounded": "T(1, a) is finite for every countable ordinal; no value derived here",
}


class ResourceCapError(RuntimeError):
    """Requested computation exceeds the configured desk-scale cap."""


@dataclass(frozen=True)
class TraceStep:
    """One rule application: its name, statement, inputs, and output.

    ``value`` is an int for scalar steps and a tuple for table steps.
    """

    rule: str
    inputs: dict
    value: object = None

    @property
    def anchor(self) -> str:
        return _ANCHORS[self.rule]

    def as_json(self) -> dict:
        value = list(self.value) if isinstance(self.value, tuple) else self.value
        return {
            "rule": self.rule,
            "anchor": self.anchor,
            "inputs": dict(self.inputs),
            "value": value,
        }


@dataclass(frozen=True)
class DegreeResult:
    """Outcome of the calculus: kind, value when finite, and the trace."""

    kind: str
    value: Optional[int] = None
    trace: Tuple[TraceStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind in (EXACT, UPPER_BOUND):
            if not isinstance(self.value, int) or self.value < 1:
                raise ValueError(f"{self.kind} results need a positive value")
        elif self.kind in (INFINITE, FINITE_UNBOUNDED):
            if self.value is not None:
                raise ValueError(f"{self.kind} results carry no value")
        else:
            raise ValueError(f"unknown result kind {self.kind!r}")

    def as_json(self) -> dict:
        out = {"kind": self.kind, "trace": [s.as_json() for s in self.trace]}
        if self.value is not None:
            out["value"] = self.value
        return out


# -- exact families --------------------------------------------------


def exact_omega(n: int) -> int:
    """T(n, w) = 1: some copy of w is monochromatic in every coloring."""
    _check_n(n)
    return 1


def exact_omega_plus_m(n: int, m: int) -> int:
    """T(n, w + m) = sum of C(m, j) for j <= n, which is 2^m once n >= m."""
    _check_n(n)
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum(binom(m, j) for j in range(n + 1))


def exact_omega_times_m(n: int, m: int) -> int:
    """T(n, w*m) = m^n."""
    _check_n(n)
    if m < 1:
        raise ValueError("m must be >= 1")
    return m**n


def exact_signed(n: int, signs: Sequence[str]) -> int:
    """T(n, w^(s_0) + ... + w^(s_{m-1})) = m^n for any sign vector.

    Reversing parts transports colorings back and forth, so only the
    number of parts matters.
    """
    _check_n(n)
    signs = tuple(signs)
    if not signs or any(s not in ("+", "-") for s in signs):
        raise ValueError("signs must be a nonempty sequence over '+'/'-'")
    return len(signs) ** n


def exact_integers(n: int) -> int:
    """T(n, Z) = 2^n: the integers are the two-part case w^(-) + w."""
    _check_n(n)
    return 2**n


def _check_n(n: int):
    if n < 0:
        raise ValueError("n must be >= 0")


# -- bound rules -----------------------------------------------------


def bound_add(n: int, m: int, table: Sequence[int]) -> int:
    """Tail rule: T(n, a + m) <= sum_j C(m, j) * T(n - j, a).

    ``table[j]`` must bound T(j, a) for j = 0..n.
    """
    _check_n(n)
    if m < 0:
        raise ValueError("m must be >= 0")
    _check_table(table, n)
    return sum(binom(m, j) * table[n - j] for j in range(n + 1))


def bound_mul(n: int, m: int, table: Sequence[int]) -> int:
    """Product rule: sum of T(rank(t), a) over all (n, m)-multiplicative types.

    Evaluated through the closed-form rank counts; the verify module pins
    agreement with the explicit type enumeration.
    """
    _check_n(n)
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_table(table, n)
    from .typecalc import _compositions

    total = 0
    for p in _compositions(n, m):
        for r, count in rank_counts(tuple(x for x in p if x)):
            total += count * table[r]
    return total


def product_bound(parts: Sequence[int], table: Sequence[int]) -> int:
    """Sum of T(rank(t), a) over types with level counts exactly ``parts``.

    ``table`` must cover ranks up to sum(parts).
    """
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise ValueError("parts must be positive")
    _check_table(table, sum(parts))
    return sum(count * table[r] for r, count in rank_counts(parts))


def bound_pow(n: int, m: int, table: Sequence[int]) -> int:
    """Power rule: T(n, a^m) <= sum over (n, m)-power types of the product
    bound on their out-degree sequences.

    Out-degrees across a tree sum to at most n*m, so ``table`` must cover
    ranks that far.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    _check_table(table, n * m)
    return sum(product_bound(out_degrees(t), table) for t in enum_power(n, m))


def _check_table(table: Sequence[int], upto: int):
    if len(table) <= upto:
        raise ValueError(f"table must cover 0..{upto}, got length {len(table)}")


def monotonicity_check(table: Sequence[int]) -> bool:
    """Degree tables never decrease in n; False flags a computed anomaly."""
    return all(a <= b for a, b in zip(table, table[1:]))


# -- classifier ------------------------------------------------------


def classify(a: Ordinal, n: int, cap: int = 5) -> DegreeResult:
    """Settle T(n, a) for a countable ordinal in Cantor normal form.

    Routes, in order: n = 0; finite a; the exact families w, w + m, w*m;
    w*m + p through the tail rule over the exact table; every other
    a below w^w through the power-of-successor pipeline; and the
    infinite / finite-without-value split at w^w and beyond.

    ``cap`` guards the type enumerations underneath; n above it raises
    :class:`ResourceCapError`.
    """
    _check_n(n)
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds the cap {cap}")
    if n == 0:
        step = TraceStep("zero-domain", {"alpha": str(a), "n": 0}, 1)
        return DegreeResult(EXACT, 1, (step,))
    if a.is_finite:
        c = a.as_int()
        value = binom(c, n) if c >= n else 1
        step = TraceStep("finite-chain-convention", {"c": c, "n": n}, value)
        return DegreeResult(EXACT, value, (step,))
    if not a.below_omega_omega():
        if n >= 2:
            step = TraceStep("infinite", {"alpha": str(a), "n": n})
            return DegreeResult(INFINITE, trace=(step,))
        step = TraceStep("finite-unbounded", {"alpha": str(a), "n": n})
        return DegreeResult(FINITE_UNBOUNDED, trace=(step,))

    terms = a.terms
    if a == OMEGA:
        step = TraceStep("ramsey-omega", {"n": n}, 1)
        return DegreeResult(EXACT, 1, (step,))
    if terms[0][0] == Ordinal.from_int(1):
        # leading exponent 1 leaves only w*m or w*m + p shapes
        m = terms[0][1]
        tail = terms[1][1] if len(terms) == 2 else 0
        if m == 1:
            value = exact_omega_plus_m(n, tail)
            step = TraceStep("omega-plus-m", {"m": tail, "n": n}, value)
            return DegreeResult(EXACT, value, (step,))
        if tail == 0:
            value = exact_omega_times_m(n, m)
            step = TraceStep("omega-times-m", {"m": m, "n": n}, value)
            return DegreeResult(EXACT, value, (step,))
        table = tuple(m**j for j in range(n + 1))
        steps = [TraceStep("omega-times-m-table", {"m": m, "max_rank": n}, table)]
        value = bound_add(n, tail, table)
        steps.append(TraceStep("bound-add", {"m": tail, "n": n}, value))
        return DegreeResult(UPPER_BOUND, value, tuple(steps))

    value, steps = _pipeline(a, n)
    return DegreeResult(UPPER_BOUND, value, tuple(steps))


def pipeline_bound(a: Ordinal, n: int, cap: int = 5) -> DegreeResult:
    """The general pipeline bound itself, without exact-family shortcuts.

    Defined for infinite a below w^w; :func:`classify` prefers exact
    formulas where they exist, this entry point always runs the pipeline.
    """
    _check_n(n)
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds the cap {cap}")
    if a.is_finite:
        raise ValueError("the pipeline needs an infinite ordinal below w^w")
    if not a.below_omega_omega():
        raise ValueError("no finite bound exists at or above w^w")
    if n == 0:
        step = TraceStep("zero-domain", {"alpha": str(a), "n": 0}, 1)
        return DegreeResult(EXACT, 1, (step,))
    value, steps = _pipeline(a, n)
    return DegreeResult(UPPER_BOUND, value, tuple(steps))


def _pipeline(a: Ordinal, n: int):
    """Bound T(n, a) for infinite a < w^w via a power of w*m + 1.

    With m the largest core coefficient and d the leading exponent,
    (w*m + 1)^d expands to w^d*m + ... + w*m + 1, and the core of a is a
    subsum of that expansion; a finite tail is then restored by the tail
    rule.  Tables run to rank R = n*d because the power rule consumes
    ranks up to the total out-degree of its trees.
    """
    core = [(e.as_int(), c) for e, c in a.terms if not e.is_zero]
    tail = a.terms[-1][1] if a.terms[-1][0].is_zero else 0
    m = max(c for _, c in core)
    d = core[0][0]
    r_max = n * d

    base = tuple(m**j for j in range(r_max + 1))
    steps = [TraceStep("omega-times-m-table", {"m": m, "max_rank": r_max}, base)]

    lifted = tuple(bound_add(j, 1, base) for j in range(r_max + 1))
    steps.append(TraceStep("bound-add", {"m": 1, "max_rank": r_max}, lifted))

    powered = (1,) + tuple(bound_pow(j, d, lifted) for j in range(1, n + 1))
    steps.append(TraceStep("bound-pow", {"d": d, "max_rank": n}, powered))

    core_str = str(Ordinal(tuple((e, c) for e, c in a.terms if not e.is_zero)))
    value = powered[n]
    steps.append(
        TraceStep(
            "subsum",
            {"core": core_str, "power_base": f"w*{m} + 1", "exponent": d, "n": n},
            value,
        )
    )
    if tail:
        value = bound_add(n, tail, powered)
        steps.append(TraceStep("bound-add", {"m": tail, "n": n}, value))
    return value, steps


# -- trace replay ----------------------------------------------------


def replay_trace(result: DegreeResult) -> Optional[int]:
    """Re-execute a trace from its recorded inputs and check every step.

    Returns the reproduced value (None for the valueless kinds); raises
    ValueError on any step that does not recompute to its recorded output.
    """
    table = None
    value = None
    for step in result.trace:
        rule, inputs = step.rule, step.inputs
        if rule == "zero-domain":
            value = 1
        elif rule == "finite-chain-convention":
            c, n = inputs["c"], inputs["n"]
            value = binom(c, n) if c >= n else 1
        elif rule == "ramsey-omega":
            value = 1
        elif rule == "omega-plus-m":
            value = exact_omega_plus_m(inputs["n"], inputs["m"])
        elif rule == "omega-times-m":
            value = exact_omega_times_m(inputs["n"], inputs["m"])
        elif rule == "signed-sum":
            value = len(inputs["signs"]) ** inputs["n"]
        elif rule == "integers":
            value = exact_integers(inputs["n"])
        elif rule == "omega-times-m-table":
            table = tuple(inputs["m"] ** j for j in range(inputs["max_rank"] + 1))
            value = None
        elif rule == "bound-add":
            if "max_rank" in inputs:
                table = tuple(
                    bound_add(j, inputs["m"], table)
                    for j in range(inputs["max_rank"] + 1)
                )
                value = None
            else:
                value = bound_add(inputs["n"], inputs["m"], table)
        elif rule == "bound-mul":
            value = bound_mul(inputs["n"], inputs["m"], table)
        elif rule == "bound-pow":
            table = (1,) + tuple(
                bound_pow(j, inputs["d"], table)
                for j in range(1, inputs["max_rank"] + 1)
            )
            value = None
        elif rule == "subsum":
            value = table[inputs["n"]]
        elif rule in ("infinite", "finite-unbounded"):
            value = None
        else:
            raise ValueError(f"unknown trace rule {rule!r}")
        recorded = step.value
        produced = table if recorded is not None and value is None else value
        if recorded is not None and produced != recorded:
            raise ValueError(f"step {rule} replayed to {produced}, not {recorded}")
    if value != result.value:
        raise ValueError(f"trace replays to {value}, result holds {result.value}")
    return value
