"""Hierarchical word families over {0,1,2} and their forbidden-word enumerator.

Level 0 starts from the seed words 01 and 02 next to the constant words 11
and 22.  Each level k >= 1 either repeats the previous block N_k times or
wraps two copies of it around a constant marker run, with the roles of the
two families swapping at every level.  Shorter "primed" blocks of length
N'_k * l_{k-1} mark the initial/terminal segments used by the planar
occupancy analysis.

Alongside the explicit toy parameters there is an exact big-integer schedule
that produces (l_k, beta_k, rho_k^A, rho_k^B) recursively; its growth is
doubly exponential, so word construction under the schedule is guarded by a
resource limit.

The forbidden words of the induced concatenation subshift are produced two
independent ways: an enumerator that walks a base-3 counter and tests each
candidate against boundary-window concatenations, and a brute-force oracle
over two-block concatenations.  The two must agree exactly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

ALPHABET = "012"


class ResourceLimitError(RuntimeError):
    """A tower or schedule computation exceeded its configured resource bound."""

    def __init__(self, message: str, level: int):
        super().__init__(message)
        self.level = level


# -- parameters ---------------------------------------------------------

@dataclass(frozen=True)
class TowerParams:
    """Construction parameters.

    mode "toy" takes explicit block counts N and N' for levels 1..depth and
    enforces N'_k >= 4 with N'_k dividing N_k.  mode "schedule" derives the
    counts from the exact recursion; constraint violations there (the level-1
    value N'_1 = 1 in particular) are reported on the level, never clamped.
    """

    depth: int
    mode: str = "toy"
    N: tuple[int, ...] = ()
    Nprime: tuple[int, ...] = ()
    max_word_length: int = 10**6
    max_exp_bits: int = 100_000

    def __post_init__(self):
        if self.mode not in ("toy", "schedule"):
            raise ValueError("mode must be 'toy' or 'schedule'")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if self.mode == "toy":
            if len(self.N) != self.depth or len(self.Nprime) != self.depth:
                raise ValueError("toy mode needs N and Nprime sequences of length depth")
            for k, (n, np_) in enumerate(zip(self.N, self.Nprime), start=1):
                if np_ < 4:
                    raise ValueError(f"N'_{k}={np_} violates the standing assumption N' >= 4")
                if n % np_ != 0:
                    raise ValueError(f"N_{k}={n} is not a multiple of N'_{k}={np_}")
                if n < 2:
                    raise ValueError(f"N_{k} must be >= 2")


def toy_params(N: Sequence[int], Nprime: Sequence[int]) -> TowerParams:
    return TowerParams(depth=len(N), mode="toy", N=tuple(N), Nprime=tuple(Nprime))


# -- exact schedule ------------------------------------------------------

@dataclass(frozen=True)
class ScheduleLevel:
    """One level of the exact recursion, all values big integers."""

    k: int
    ell: int
    beta: int
    rho_a: int
    rho_b: int
    nprime: "int | None" = None
    ell_prime: "int | None" = None
    n: "int | None" = None
    conflicts: tuple[str, ...] = ()

    def state(self) -> tuple[int, int, int, int]:
        return (self.ell, self.beta, self.rho_a, self.rho_b)


SCHEDULE_SEED = ScheduleLevel(k=0, ell=2, beta=0, rho_a=1, rho_b=1)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def schedule_step(state: tuple[int, int, int, int], k: int,
                  max_exp_bits: int = 100_000) -> ScheduleLevel:
    """Exact evaluation of one recursion level from the level k-1 state.

    Even levels use the displayed formulas; odd levels use them with the two
    families permuted.  The 2^(k*l') factor explodes doubly exponentially, so
    the exponent is capped by max_exp_bits (in bits) and a breach raises
    ResourceLimitError naming the offending level.
    """
    if k < 1:
        raise ValueError("schedule levels start at k=1")
    ell_prev, _beta_prev, rho_a_prev, rho_b_prev = state
    # "lead" is the family whose zero count enters the denominators:
    # A for even k, B for odd k (the recursion permutes the roles).
    lead = rho_a_prev if k % 2 == 0 else rho_b_prev
    other = rho_b_prev if k % 2 == 0 else rho_a_prev
    nprime = _ceil_div(k * lead, other)
    ell_prime = nprime * ell_prev
    exponent = k * ell_prime
    if exponent > max_exp_bits:
        raise ResourceLimitError(
            f"schedule level {k} needs 2^{exponent}, beyond the {max_exp_bits}-bit cap", k)
    beta = _ceil_div(ell_prev * ell_prev * (1 << exponent), other * other)
    n = nprime * _ceil_div(k * beta, nprime * other)
    ell = n * ell_prev
    if k % 2 == 0:
        rho_a, rho_b = 2 * rho_a_prev, n * rho_b_prev
    else:
        rho_a, rho_b = n * rho_a_prev, 2 * rho_b_prev
    conflicts = []
    if nprime < 4:
        conflicts.append(f"N'_{k}={nprime} violates N' >= 4")
    return ScheduleLevel(k=k, ell=ell, beta=beta, rho_a=rho_a, rho_b=rho_b,
                         nprime=nprime, ell_prime=ell_prime, n=n,
                         conflicts=tuple(conflicts))


def compute_schedule(depth: int, max_exp_bits: int = 100_000) -> list[ScheduleLevel]:
    """Levels 0..depth of the exact recursion from the seed (2, 0, 1, 1)."""
    levels = [SCHEDULE_SEED]
    for k in range(1, depth + 1):
        levels.append(schedule_step(levels[-1].state(), k, max_exp_bits))
    return levels


# -- word tower ----------------------------------------------------------

@dataclass(frozen=True)
class TowerLevel:
    """Words and counts of one construction level."""

    k: int
    ell: int
    a: str
    b: str
    n: "int | None" = None
    nprime: "int | None" = None
    ell_prime: "int | None" = None
    a_primes: tuple[str, ...] = ()   # non-constant primed A words (a' [, a''])
    b_primes: tuple[str, ...] = ()   # non-constant primed B words (b' [, b''])
    conflicts: tuple[str, ...] = ()

    @property
    def ones(self) -> str:
        return "1" * self.ell

    @property
    def twos(self) -> str:
        return "2" * self.ell

    @property
    def family_a(self) -> tuple[str, str]:
        return (self.a, self.ones)

    @property
    def family_b(self) -> tuple[str, str]:
        return (self.b, self.twos)

    @property
    def words(self) -> tuple[str, ...]:
        """The four level words, canonical order (a, 1-run, b, 2-run)."""
        return (self.a, self.ones, self.b, self.twos)

    @property
    def family_a_prime(self) -> tuple[str, ...]:
        return self.a_primes + ("1" * self.ell_prime,)

    @property
    def family_b_prime(self) -> tuple[str, ...]:
        return self.b_primes + ("2" * self.ell_prime,)

    @property
    def rho_a(self) -> int:
        return self.a.count("0")

    @property
    def rho_b(self) -> int:
        return self.b.count("0")

    @property
    def f_a(self) -> Fraction:
        return Fraction(self.rho_a, self.ell)

    @property
    def f_b(self) -> Fraction:
        return Fraction(self.rho_b, self.ell)

    @property
    def f_a_prime(self) -> Fraction:
        return max(frequency(w) for w in self.family_a_prime)

    @property
    def f_b_prime(self) -> Fraction:
        return max(frequency(w) for w in self.family_b_prime)


class WordTower:
    """Built word families for levels 0..depth."""

    def __init__(self, params: TowerParams, levels: list[TowerLevel]):
        self.params = params
        self.levels = levels

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level(self, k: int) -> TowerLevel:
        if not 0 <= k <= self.depth:
            raise ValueError(f"level {k} outside 0..{self.depth}")
        return self.levels[k]

    def __repr__(self) -> str:
        return f"WordTower(depth={self.depth}, lengths={[lv.ell for lv in self.levels]})"


LEVEL0 = TowerLevel(k=0, ell=2, a="01", b="02")


def _build_level(k: int, prev: TowerLevel, n: int, nprime: int,
                 conflicts: tuple[str, ...] = ()) -> TowerLevel:
    ell_prev = prev.ell
    if k % 2 == 1:
        a = prev.a * n
        b = prev.b + "2" * ((n - 2) * ell_prev) + prev.b
        a_primes = (prev.a * nprime,)
        b_primes = (prev.b + "2" * ((nprime - 1) * ell_prev),
                    "2" * ((nprime - 1) * ell_prev) + prev.b)
    else:
        a = prev.a + "1" * ((n - 2) * ell_prev) + prev.a
        b = prev.b * n
        a_primes = (prev.a + "1" * ((nprime - 1) * ell_prev),
                    "1" * ((nprime - 1) * ell_prev) + prev.a)
        b_primes = (prev.b * nprime,)
    return TowerLevel(k=k, ell=n * ell_prev, a=a, b=b, n=n, nprime=nprime,
                      ell_prime=nprime * ell_prev, a_primes=a_primes,
                      b_primes=b_primes, conflicts=conflicts)


def build_tower(params: TowerParams) -> WordTower:
    """Construct the word families level by level.

    In schedule mode the block counts come from the exact recursion and the
    length of the level words is checked against params.max_word_length; a
    breach raises ResourceLimitError with the offending level.
    """
    levels = [LEVEL0]
    if params.mode == "toy":
        counts = list(zip(params.N, params.Nprime))
        conflicts_by_level = [()] * params.depth
    else:
        schedule = compute_schedule(params.depth, params.max_exp_bits)
        counts = [(lv.n, lv.nprime) for lv in schedule[1:]]
        conflicts_by_level = [lv.conflicts for lv in schedule[1:]]
    for k, (n, nprime) in enumerate(counts, start=1):
        new_len = n * levels[-1].ell
        if new_len > params.max_word_length:
            raise ResourceLimitError(
                f"level {k} words have length {new_len}, beyond the "
                f"{params.max_word_length} cap", k)
        levels.append(_build_level(k, levels[-1], n, nprime,
                                   conflicts_by_level[k - 1]))
    return WordTower(params, levels)


def toy_tower(N: Sequence[int] = (4, 4, 4), Nprime: "Sequence[int] | None" = None) -> WordTower:
    if Nprime is None:
        Nprime = tuple(N)
    return build_tower(toy_params(N, Nprime))


# -- frequencies ---------------------------------------------------------

def frequency(word: str) -> Fraction:
    """Exact frequency of the symbol 0 in a word."""
    if not word:
        raise ValueError("frequency of the empty word is undefined")
    return Fraction(word.count("0"), len(word))


def closed_form_frequency(k: int, family: str, Ns: Sequence[int]) -> Fraction:
    """Closed-form zero frequency of the level-k a/b word from the counts.

    Ns lists N_1..N_k (at least); the virtual N_0 = 2 makes the level-0
    factor exactly one.  Family "A" multiplies the factors 2/N_j over even j
    (j = 0, 2, ... below k for odd k; j = 2, 4, ... up to k for even k) and
    family "B" over odd j up to k; both start from the seed frequency 1/2.
    """
    if family not in ("A", "B"):
        raise ValueError("family must be 'A' or 'B'")
    if k < 0:
        raise ValueError("level must be >= 0")
    if len(Ns) < k:
        raise ValueError(f"need N_1..N_{k}, got {len(Ns)} values")

    def count(j: int) -> int:
        return 2 if j == 0 else Ns[j - 1]

    if family == "A":
        indices = range(0, k, 2) if k % 2 == 1 else range(2, k + 1, 2)
    else:
        indices = range(1, k + 1, 2)
    f = Fraction(1, 2)
    for j in indices:
        f *= Fraction(2, count(j))
    return f


# -- overlaps ------------------------------------------------------------

def overlaps(u: str, v: str) -> set[int]:
    """Non-trivial overlap lengths: s in (0, len) with u[-s:] == v[:s]."""
    if len(u) != len(v):
        raise ValueError("overlap detection needs words of equal length")
    return {s for s in range(1, len(u)) if u[-s:] == v[:s]}


@dataclass
class OverlapClaim:
    name: str
    ok: bool
    found: "set[int] | None" = None
    allowed: "str | None" = None
    counterexamples: tuple[int, ...] = ()


@dataclass
class OverlapReport:
    k: int
    parity: str
    claims: list[OverlapClaim] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def failures(self) -> list[OverlapClaim]:
        return [c for c in self.claims if not c.ok]


def _claim_empty(name: str, found: set[int]) -> OverlapClaim:
    return OverlapClaim(name, not found, found, "none",
                        tuple(sorted(found)))


def _claim_subset(name: str, found: set[int], allowed, allowed_desc: str) -> OverlapClaim:
    bad = {s for s in found if not allowed(s)}
    return OverlapClaim(name, not bad, found, allowed_desc, tuple(sorted(bad)))


def verify_overlap_lemmas(tower: WordTower, k: int) -> OverlapReport:
    """Exhaustively verify the level-k overlap structure.

    At even k the marker-shaped word is a_k and the repetition-shaped word is
    b_k; odd k swaps the roles.  Overlap lengths s correspond to shifts
    l_k - s, so the "shift >= (N_k - 1) l_{k-1}" claim reads s <= l_{k-1}.
    """
    if k < 1:
        raise ValueError("overlap lemmas concern levels k >= 1")
    lv, prev = tower.level(k), tower.level(k - 1)
    even = k % 2 == 0
    report = OverlapReport(k=k, parity="even" if even else "odd")
    add = report.claims.append

    # no cross-overlaps between the two families, plain or primed
    for tag, xs, ys in (("plain", lv.family_a, lv.family_b),
                        ("primed", lv.family_a_prime, lv.family_b_prime)):
        found = set()
        for x in xs:
            for y in ys:
                found |= overlaps(x, y) | overlaps(y, x)
        add(_claim_empty(f"cross-{tag}", found))

    marker_word = lv.a if even else lv.b
    repeat_word = lv.b if even else lv.a
    add(_claim_subset(
        "marker-self", overlaps(marker_word, marker_word),
        lambda s: lv.ell - s >= (lv.n - 1) * prev.ell,
        f"shift >= {(lv.n - 1) * prev.ell}"))

    end_case = tower.level(k - 2).ell if k >= 2 else None
    add(_claim_subset(
        "repeat-self", overlaps(repeat_word, repeat_word),
        lambda s: s % prev.ell == 0 or s == end_case,
        f"multiples of {prev.ell}" + (f" or {end_case}" if end_case else "")))

    prime, dprime = (lv.a_primes if even else lv.b_primes)
    base = prev.a if even else prev.b
    add(_claim_empty("prime-self", overlaps(prime, prime)))
    add(_claim_empty("dprime-self", overlaps(dprime, dprime)))
    marker_len = (lv.nprime - 1) * prev.ell
    add(_claim_subset("prime-dprime", overlaps(prime, dprime),
                      lambda s: s <= marker_len,
                      f"marker overlaps s <= {marker_len}"))
    base_overlaps = overlaps(base, base) | {prev.ell}
    add(_claim_subset("dprime-prime", overlaps(dprime, prime),
                      lambda s: s in base_overlaps,
                      f"in {sorted(base_overlaps)}"))
    return report


# -- forbidden words -------------------------------------------------------

@dataclass
class EnumerationCost:
    """Instrumentation counters for the forbidden-word enumerator."""

    candidates: int = 0
    subword_tests: int = 0
    scan_chars: int = 0

    @property
    def steps(self) -> int:
        """Combined work measure: candidate writes plus character scans."""
        return self.candidates + self.scan_chars


def level_for_length(tower: WordTower, n: int) -> int:
    """The unique k with l_{k-1} < n <= l_k (k = 0 for n up to l_0)."""
    if n < 1:
        raise ValueError("word length must be >= 1")
    if n <= tower.level(0).ell:
        return 0
    for k in range(1, tower.depth + 1):
        if tower.level(k - 1).ell < n <= tower.level(k).ell:
            return k
    raise ValueError(
        f"length {n} exceeds the deepest level length {tower.level(tower.depth).ell}")


def window_concatenations(tower: WordTower, n: int) -> list[str]:
    """Boundary windows covering every length-n subword of two-block joins.

    For l_{k-1} < n <= l_k with p = ceil(n / l_{k-1}), the window for the
    ordered pair (w1, w2) is the terminal segment of w1 of (p+1) blocks of
    length l_{k-1} followed by the initial segment of w2 of the same length
    (segments capped at the whole word).  All 16 ordered pairs of the four
    level words are used: a length-n word is a subword of some two-block
    concatenation exactly when it is a subword of one of these windows.
    For n up to l_0 the windows are the 16 plain two-block concatenations.
    """
    k = level_for_length(tower, n)
    fam = tower.level(k).words
    if k == 0:
        return sorted({w1 + w2 for w1 in fam for w2 in fam})
    prev_ell = tower.level(k - 1).ell
    p = _ceil_div(n, prev_ell)
    seg = min((p + 1) * prev_ell, tower.level(k).ell)
    tails = sorted({w[-seg:] for w in fam})
    heads = sorted({w[:seg] for w in fam})
    return sorted({t + h for t in tails for h in heads})


def forbidden_words(tower: WordTower, n: int,
                    cost: "EnumerationCost | None" = None) -> set[str]:
    """Length-n forbidden words via the counter-and-window enumerator.

    Walks all 3^n candidates in base-3 counter order (alphabet order 0 < 1 < 2)
    and keeps those that are a subword of none of the boundary windows.  The
    optional cost record accumulates candidate and scan counters.
    """
    windows = window_concatenations(tower, n)
    out = set()
    if cost is None:
        for tup in itertools.product(ALPHABET, repeat=n):
            w = "".join(tup)
            if not any(w in cat for cat in windows):
                out.add(w)
        return out
    for tup in itertools.product(ALPHABET, repeat=n):
        w = "".join(tup)
        cost.candidates += 1
        hit = False
        for cat in windows:
            cost.subword_tests += 1
            cost.scan_chars += len(cat)
            if w in cat:
                hit = True
                break
        if not hit:
            out.add(w)
    return out


def forbidden_oracle(tower: WordTower, n: int) -> set[str]:
    """Brute-force reference: words of length n missing from every w1 w2.

    Collects every length-n subword of the 16 two-block concatenations of the
    level-k words and returns the complement of that allowed set.
    """
    k = level_for_length(tower, n)
    fam = tower.level(k).words
    allowed = set()
    for w1 in fam:
        for w2 in fam:
            cat = w1 + w2
            for i in range(len(cat) - n + 1):
                allowed.add(cat[i:i + n])
    return {"".join(t) for t in itertools.product(ALPHABET, repeat=n)} - allowed


def iter_forbidden(tower: WordTower, max_n: int,
                   cost: "EnumerationCost | None" = None) -> Iterator[tuple[int, str]]:
    """Forbidden words in increasing (length, counter) order up to max_n."""
    for n in range(1, max_n + 1):
        for w in sorted(forbidden_words(tower, n, cost)):
            yield n, w


def enumeration_cost(tower: WordTower, max_n: int) -> list[tuple[int, EnumerationCost, int]]:
    """Per-length cost records and the cumulative step count tau(n)."""
    rows = []
    total = 0
    for n in range(1, max_n + 1):
        cost = EnumerationCost()
        forbidden_words(tower, n, cost)
        total += cost.steps
        rows.append((n, cost, total))
    return rows


def fitted_cost_constant(rows: Iterable[tuple[int, EnumerationCost, int]]) -> float:
    """Smallest c with tau(n) <= c * n^3 * 3^n over the measured lengths."""
    return max(tau / (n**3 * 3**n) for n, _, tau in rows)


# -- structure checks ------------------------------------------------------

def split_blocks(word: str, block: int) -> list[str]:
    if len(word) % block != 0:
        raise ValueError("word length is not a multiple of the block length")
    return [word[i:i + block] for i in range(0, len(word), block)]


def check_nesting(tower: WordTower, k: int) -> bool:
    """Every level-(k+1) word splits literally into level-k words."""
    fine = set(tower.level(k).words)
    coarse = tower.level(k + 1).words
    return all(set(split_blocks(w, tower.level(k).ell)) <= fine for w in coarse)


# -- serialisation ---------------------------------------------------------

def tower_to_dict(tower: WordTower) -> dict:
    levels = []
    for lv in tower.levels:
        entry = {
            "k": lv.k,
            "length": lv.ell,
            "a": lv.a,
            "b": lv.b,
            "zeros_a": lv.rho_a,
            "zeros_b": lv.rho_b,
            "freq_a": str(lv.f_a),
            "freq_b": str(lv.f_b),
        }
        if lv.k >= 1:
            entry.update({
                "N": lv.n,
                "Nprime": lv.nprime,
                "length_prime": lv.ell_prime,
                "a_primes": list(lv.a_primes),
                "b_primes": list(lv.b_primes),
                "freq_a_prime": str(lv.f_a_prime),
                "freq_b_prime": str(lv.f_b_prime),
                "conflicts": list(lv.conflicts),
            })
        levels.append(entry)
    return {"mode": tower.params.mode, "depth": tower.depth, "levels": levels}


def schedule_to_dict(levels: Iterable[ScheduleLevel]) -> dict:
    out = []
    for lv in levels:
        entry = {
            "k": lv.k,
            "ell": str(lv.ell),
            "beta": str(lv.beta),
            "rho_a": str(lv.rho_a),
            "rho_b": str(lv.rho_b),
        }
        if lv.k >= 1:
            entry.update({
                "Nprime": str(lv.nprime),
                "ell_prime": str(lv.ell_prime),
                "N": str(lv.n),
                "conflicts": list(lv.conflicts),
            })
        out.append(entry)
    return {"levels": out}


def tower_to_json(tower: WordTower, indent: int = 2) -> str:
    return json.dumps(tower_to_dict(tower), indent=indent, sort_keys=True)
