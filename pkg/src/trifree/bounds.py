"""Closed-form chromatic bounds for 3K1-free graphs and the R(3,k)
knowledge table, plus per-graph bound evaluation.

All formulas are exact integer arithmetic.  The divisibility each
formula relies on (by 8 for the chromatic bounds, by 4 for the Ramsey
candidates) is asserted, never rounded away.  Formulas stay evaluable
outside their proven clique-number ranges; reports carry a ``proven``
flag so exploratory values are never mistaken for theorems.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from importlib import resources

from .errors import OutOfTable, ParityError, RamseyUnknown
from .graphs import Graph, max_degree_vertex
from .invariants import chromatic_number, clique_number, independence_number

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

# Clique-number ranges the chromatic bounds are actually proven for.
# The odd bound's case analysis covers omega in {3, 5, 7, 9, 11} (at
# omega = 1 the formula value is 0, which K1 already beats), the even
# bound covers omega in {2, ..., 10}.
LEMMA1_PROVEN = frozenset({3, 5, 7, 9, 11})
LEMMA2_PROVEN = frozenset({2, 4, 6, 8, 10})

# Tabulated bounds by clique number: the parity-matched formula value,
# strengthened by dedicated arguments at omega = 7 (15 -> 14) and
# omega = 9 (22 -> 21).
TABLE1_STRENGTHENED = {7: 14, 9: 21}


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise ArithmeticError(f"{what}: {num} not divisible by {den}")
    return num // den


def lemma1_bound(omega: int) -> int:
    """Chromatic bound (omega^2 + 12*omega - 13)/8 for odd clique number."""
    if omega < 1 or omega % 2 == 0:
        raise ParityError(f"odd-omega bound evaluated at omega={omega}")
    return _exact_div(omega * omega + 12 * omega - 13, 8, "odd-omega bound")


def lemma2_bound(omega: int) -> int:
    """Chromatic bound (omega^2 + 10*omega)/8 for even clique number."""
    if omega < 2 or omega % 2 == 1:
        raise ParityError(f"even-omega bound evaluated at omega={omega}")
    return _exact_div(omega * omega + 10 * omega, 8, "even-omega bound")


def table1_bound(omega: int) -> int:
    """Tabulated chromatic bound for 2 <= omega <= 11."""
    if not 2 <= omega <= 11:
        raise OutOfTable(f"tabulated bounds cover omega in 2..11, got {omega}")
    if omega in TABLE1_STRENGTHENED:
        return TABLE1_STRENGTHENED[omega]
    return lemma1_bound(omega) if omega % 2 else lemma2_bound(omega)


def reed_bound(delta: int, omega: int) -> int:
    """ceil((delta + omega + 1)/2); proven for independence number 2."""
    return (delta + omega + 1 + 1) // 2


def conjecture2_bound(delta: int, omega: int) -> int:
    """floor((delta + omega + 1)/2); conjectured for odd omega."""
    return (delta + omega + 1) // 2


@dataclass(frozen=True)
class RamseyCandidate:
    """One conjectured closed form for R(3, omega) with its parity demand."""

    label: str     # "A".."D"
    value: int
    requires: str  # "even" or "odd": the parity R(3, omega) must have

    @property
    def self_consistent(self) -> bool:
        return (self.value % 2 == 0) == (self.requires == "even")


def conjecture1_candidates(omega: int) -> tuple[RamseyCandidate, RamseyCandidate]:
    """The two parity-conditional closed forms for R(3, omega)."""
    if omega < 1:
        raise ValueError(f"omega must be positive, got {omega}")
    if omega % 2:
        a = _exact_div(omega * omega + 8 * omega - 9, 4, "candidate A")
        b = _exact_div(omega * omega + 8 * omega - 13, 4, "candidate B")
        return (RamseyCandidate("A", a, "even"), RamseyCandidate("B", b, "odd"))
    c = _exact_div(omega * omega + 6 * omega, 4, "candidate C")
    d = _exact_div(omega * omega + 6 * omega - 4, 4, "candidate D")
    return (RamseyCandidate("C", c, "even"), RamseyCandidate("D", d, "odd"))


def conjecture1_check(omega: int, r_actual: int) -> bool:
    """True iff the candidate matching r_actual's parity equals r_actual."""
    parity = "even" if r_actual % 2 == 0 else "odd"
    for cand in conjecture1_candidates(omega):
        if cand.requires == parity:
            return cand.value == r_actual
    raise AssertionError("candidates always cover both parities")


@dataclass(frozen=True)
class RamseyKnowledge:
    """What is known about R(3,k): an exact value or a [lower, upper] pair."""

    k: int
    lower: int
    upper: int
    source: str

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None


# Values quoted with the results this package verifies; upper bounds for
# k = 10..12 come from the same computational-bounds literature.
_QUOTED_EXACT = {3: 6, 5: 14, 6: 18, 9: 36}
_QUOTED_UPPER = {10: 42, 11: 50, 12: 59}
RAMSEY_MAX_K = 12


def _load_config() -> dict[int, RamseyKnowledge]:
    """Config entries are ``k = value`` or ``k = [lower, upper]`` under
    [ramsey], with a matching source string under [sources]."""
    with resources.files("trifree.data").joinpath("ramsey_known.toml").open("rb") as fh:
        raw = tomllib.load(fh)
    sources = raw.get("sources", {})
    out = {}
    for key, entry in raw.get("ramsey", {}).items():
        k = int(key)
        source = sources.get(key, "config")
        if isinstance(entry, list):
            lower, upper = entry
        else:
            lower = upper = entry
        if lower > upper:
            raise ValueError(f"config entry for k={k} has lower > upper")
        out[k] = RamseyKnowledge(k, lower, upper, source)
    return out


_CONFIG_CACHE: dict[int, RamseyKnowledge] | None = None


def known_ramsey(k: int) -> RamseyKnowledge:
    """Stored knowledge of R(3,k) for 1 <= k <= 12.

    Exact for k <= 9 (quoted values plus the config file); bound pairs
    for k = 10..12, whose lower bounds are the conservative chain
    R(3,k) >= R(3,k-1) + 1 obtained by adding an isolated vertex to a
    witness.
    """
    global _CONFIG_CACHE
    if not 1 <= k <= RAMSEY_MAX_K:
        raise RamseyUnknown(f"no stored knowledge for R(3,{k})")
    if _CONFIG_CACHE is None:
        _CONFIG_CACHE = _load_config()
    if k in _QUOTED_EXACT:
        return RamseyKnowledge(k, _QUOTED_EXACT[k], _QUOTED_EXACT[k], "quoted")
    if k in _CONFIG_CACHE:
        return _CONFIG_CACHE[k]
    lower = _QUOTED_EXACT[9] + (k - 9)
    return RamseyKnowledge(k, lower, _QUOTED_UPPER[k],
                           "upper: quoted; lower: monotone chain from R(3,9)")


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int
    applicable: bool   # formula's stated hypothesis matches this graph
    proven: bool       # within the range the bound is a theorem
    slack: int         # value - chi

    @property
    def satisfied(self) -> bool:
        return self.slack >= 0


@dataclass(frozen=True)
class BoundReport:
    """Invariants of one graph and its slack against every bound."""

    n: int
    omega: int
    alpha: int
    delta: int
    chi: int
    applicable: bool   # graph is 3K1-free; bounds only claim this class
    entries: tuple[BoundEntry, ...]

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def violations(self) -> list[BoundEntry]:
        """Proven, applicable bounds this graph breaks (expected empty)."""
        if not self.applicable:
            return []
        return [e for e in self.entries
                if e.applicable and e.proven and not e.satisfied]


def evaluate_graph(g: Graph) -> BoundReport:
    """Compute invariants and fill slack entries for every bound."""
    omega = clique_number(g)
    alpha = independence_number(g)
    delta = max_degree_vertex(g)[1]
    chi = chromatic_number(g)[0]
    applicable = alpha <= 2

    entries = []
    if omega % 2:
        v = lemma1_bound(omega)
        entries.append(BoundEntry("lemma1", v, True, omega in LEMMA1_PROVEN, v - chi))
    else:
        v = lemma2_bound(omega)
        entries.append(BoundEntry("lemma2", v, True, omega in LEMMA2_PROVEN, v - chi))
    if 2 <= omega <= 11:
        v = table1_bound(omega)
        entries.append(BoundEntry("table1", v, True, True, v - chi))
    v = reed_bound(delta, omega)
    entries.append(BoundEntry("reed", v, True, True, v - chi))
    v = conjecture2_bound(delta, omega)
    entries.append(BoundEntry("conjecture2", v, omega % 2 == 1, False, v - chi))
    return BoundReport(g.n, omega, alpha, delta, chi, applicable, tuple(entries))
