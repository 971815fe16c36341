"""Deterministic Turing machines: simulation, enumeration, diagrams, tiles.

Machines follow the 7-tuple convention with a partial transition table; an
undefined transition halts the run as "stuck", which is deliberately distinct
from entering the reject state.  Transitions into the accept/reject states
carry a write and a move like any other rule, so the halting step appears in
space-time diagrams and is covered by the 3x2 tile encoding.

A space-time diagram is a 2D pattern whose row y = t + 1 is the configuration
after t steps; the cell under the head holds a composite (state, symbol)
value.  Diagrams are stored bottom-up and serialised top-row-first.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .patterns import Pattern

Move = int  # -1 or +1


@dataclass(frozen=True)
class TuringMachine:
    """Deterministic machine (Q, A, T, delta, q0, qa, qr) plus print events."""

    name: str
    states: tuple[str, ...]
    input_alphabet: tuple[str, ...]
    tape_alphabet: tuple[str, ...]
    blank: str
    transitions: Mapping[tuple[str, str], tuple[str, str, Move]]
    start: str
    accept: str
    reject: str
    print_events: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        if self.accept == self.reject:
            raise ValueError("accept and reject states must differ")
        if self.blank in self.input_alphabet:
            raise ValueError("input alphabet must not contain the blank symbol")
        if self.blank not in self.tape_alphabet:
            raise ValueError("tape alphabet must contain the blank symbol")
        if not set(self.input_alphabet) <= set(self.tape_alphabet):
            raise ValueError("input alphabet must be contained in the tape alphabet")
        for q in (self.start, self.accept, self.reject):
            if q not in self.states:
                raise ValueError(f"state {q!r} missing from state set")
        for (q, s), (q2, s2, move) in self.transitions.items():
            if q in (self.accept, self.reject):
                raise ValueError("transitions must not leave the accept/reject states")
            if q not in self.states or q2 not in self.states:
                raise ValueError(f"unknown state in rule {(q, s)!r}")
            if s not in self.tape_alphabet or s2 not in self.tape_alphabet:
                raise ValueError(f"unknown tape symbol in rule {(q, s)!r}")
            if move not in (-1, +1):
                raise ValueError("moves are -1 or +1")

    def rule(self, state: str, symbol: str):
        return self.transitions.get((state, symbol))


@dataclass
class MachineConfig:
    """Snapshot of tape, head and state; tape stores non-blank cells only."""

    tape: dict[int, str]
    head: int
    state: str
    steps: int = 0

    def read(self, machine: TuringMachine) -> str:
        return self.tape.get(self.head, machine.blank)

    def clone(self) -> "MachineConfig":
        return MachineConfig(dict(self.tape), self.head, self.state, self.steps)

    def written_segment(self, machine: TuringMachine) -> str:
        """Longest contiguous run of non-blank cells (leftmost on ties)."""
        if not self.tape:
            return ""
        cells = sorted(p for p, s in self.tape.items() if s != machine.blank)
        if not cells:
            return ""
        best_start = start = prev = cells[0]
        best_len = cur_len = 1
        for p in cells[1:]:
            if p == prev + 1:
                cur_len += 1
            else:
                start, cur_len = p, 1
            if cur_len > best_len:
                best_start, best_len = start, cur_len
            prev = p
        return "".join(self.tape[best_start + i] for i in range(best_len))


def initial_config(machine: TuringMachine, word: str) -> MachineConfig:
    """Head on the leftmost input symbol (cell 0) in the start state."""
    for s in word:
        if s not in machine.input_alphabet:
            raise ValueError(f"input symbol {s!r} is not in the input alphabet")
    return MachineConfig({i: s for i, s in enumerate(word)}, 0, machine.start)


@dataclass(frozen=True)
class StepResult:
    config: MachineConfig
    halted: "str | None"  # None, "accept", "reject" or "stuck"


def step(machine: TuringMachine, config: MachineConfig) -> StepResult:
    """Apply the transition once; pure (the input config is not mutated)."""
    if config.state in (machine.accept, machine.reject):
        raise ValueError("machine already halted")
    symbol = config.read(machine)
    rule = machine.rule(config.state, symbol)
    if rule is None:
        return StepResult(config.clone(), "stuck")
    q2, s2, move = rule
    nxt = config.clone()
    if s2 == machine.blank:
        nxt.tape.pop(nxt.head, None)
    else:
        nxt.tape[nxt.head] = s2
    nxt.head += move
    nxt.state = q2
    nxt.steps += 1
    if q2 == machine.accept:
        return StepResult(nxt, "accept")
    if q2 == machine.reject:
        return StepResult(nxt, "reject")
    return StepResult(nxt, None)


@dataclass(frozen=True)
class RunResult:
    outcome: str  # accept | reject | stuck | timeout
    config: MachineConfig


def run_bounded(machine: TuringMachine, word: str, fuel: int) -> RunResult:
    """Simulate at most ``fuel`` steps from the standard initial configuration."""
    if fuel < 0:
        raise ValueError("fuel must be >= 0")
    config = initial_config(machine, word)
    for _ in range(fuel):
        result = step(machine, config)
        config = result.config
        if result.halted is not None:
            return RunResult(result.halted, config)
    return RunResult("timeout", config)


@dataclass(frozen=True)
class EnumerationResult:
    words: tuple[str, ...]
    fuel_exhausted: bool
    steps: int


def enumerate_prints(machine: TuringMachine, fuel: int) -> EnumerationResult:
    """Run from the blank tape, emitting on every visit to a print event.

    The emission is the longest contiguous non-blank tape segment with every
    symbol outside the input alphabet (markers) stripped.  Order of emission
    is preserved; running out of fuel flags the list as partial.
    """
    if not machine.print_events:
        raise ValueError("machine has no print events")
    config = initial_config(machine, "")
    words: list[str] = []
    inp = set(machine.input_alphabet)
    for t in range(fuel):
        if (config.state, config.read(machine)) in machine.print_events:
            raw = config.written_segment(machine)
            words.append("".join(s for s in raw if s in inp))
        result = step(machine, config)
        config = result.config
        if result.halted is not None:
            return EnumerationResult(tuple(words), False, config.steps)
    return EnumerationResult(tuple(words), True, config.steps)


class WindowEscapeError(RuntimeError):
    """The head left the requested diagram window."""

    def __init__(self, step_index: int, head: int):
        super().__init__(f"head escaped the window at step {step_index} (position {head})")
        self.step_index = step_index
        self.head = head


@dataclass(frozen=True)
class DiagramResult:
    pattern: Pattern           # 2D, support (1..width) x (1..rows)
    window: tuple[int, int]    # tape cells covered (inclusive)
    rows: int                  # number of configuration rows
    outcome: str               # ran | accept | reject | stuck
    steps_run: int


def _config_row(machine: TuringMachine, config: MachineConfig,
                window: tuple[int, int]) -> list:
    lo, hi = window
    row = []
    for pos in range(lo, hi + 1):
        sym = config.tape.get(pos, machine.blank)
        row.append((config.state, sym) if pos == config.head else sym)
    return row


def space_time_diagram(machine: TuringMachine, word: str, steps: int,
                       window: "tuple[int, int] | None" = None) -> DiagramResult:
    """Diagram with row t the configuration after t steps, t = 0..steps.

    If the machine halts or gets stuck before ``steps`` the diagram ends at
    the halting row.  With an explicit window, a head excursion outside it
    raises WindowEscapeError carrying the offending step.
    """
    config = initial_config(machine, word)
    trail = [config]
    outcome = "ran"
    for _ in range(steps):
        result = step(machine, config)
        config = result.config
        trail.append(config)
        if result.halted is not None:
            outcome = result.halted
            break
    if window is None:
        heads = [c.head for c in trail]
        cells = [p for c in trail for p in c.tape] + heads
        window = (min(cells) - 1, max(cells) + 1)
    else:
        for t, c in enumerate(trail):
            if not window[0] <= c.head <= window[1]:
                raise WindowEscapeError(t, c.head)
    rows = [_config_row(machine, c, window) for c in trail]
    return DiagramResult(Pattern.from_rows(rows), window, len(rows), outcome,
                         trail[-1].steps)


def format_diagram(machine: TuringMachine, diagram: DiagramResult) -> str:
    """Serialise using the shared 2D pattern format (latest row first)."""
    from .patterns import format_patterns
    return format_patterns([diagram.pattern])


# -- 3x2 tile encoding -------------------------------------------------
#
# A window is ((b1, b2, b3), (t1, t2, t3)): bottom row then top row, three
# cells wide.  For each rule delta(q, x) = (q2, y, d) the head can occur in
# the window in four ways (at each bottom cell, or entering from outside),
# instantiated over all context symbols; one extra family covers windows the
# head never touches.

Window = tuple[tuple, tuple]


@dataclass(frozen=True)
class Tileset:
    machine_name: str
    allowed: frozenset[Window]
    cell_symbols: frozenset

    def is_allowed(self, window: Window) -> bool:
        return window in self.allowed

    def __len__(self) -> int:
        return len(self.allowed)


@dataclass(frozen=True)
class TilesetComplement:
    """Descriptor of the forbidden 3x2 windows (not materialised).

    The complement of the allowed set over all cell values is astronomically
    large, so membership is answered by testing against the allowed set.
    """

    tileset: Tileset

    def is_forbidden(self, window: Window) -> bool:
        return not self.tileset.is_allowed(window)

    @property
    def total_windows(self) -> int:
        return len(self.tileset.cell_symbols) ** 6

    @property
    def forbidden_count(self) -> int:
        return self.total_windows - len(self.tileset)


def compile_tileset(machine: TuringMachine) -> tuple[Tileset, TilesetComplement]:
    """All 3x2 windows consistent with one machine step (or no head)."""
    tape = machine.tape_alphabet
    allowed: set[Window] = set()

    # no head anywhere: both rows identical
    for s1 in tape:
        for s2 in tape:
            for s3 in tape:
                allowed.add(((s1, s2, s3), (s1, s2, s3)))

    for (q, x), (q2, y, d) in machine.transitions.items():
        for s1 in tape:
            for s2 in tape:
                if d == +1:
                    # head at centre, moving right
                    allowed.add(((s1, (q, x), s2), (s1, y, (q2, s2))))
                    # head at left cell, moving right into the centre
                    allowed.add((((q, x), s1, s2), (y, (q2, s1), s2)))
                    # head at right cell, leaving the window
                    allowed.add(((s1, s2, (q, x)), (s1, s2, y)))
                    for s3 in tape:
                        # head outside to the left, entering at the left cell
                        allowed.add(((s1, s2, s3), ((q2, s1), s2, s3)))
                else:
                    allowed.add(((s1, (q, x), s2), ((q2, s1), y, s2)))
                    allowed.add(((s1, s2, (q, x)), (s1, (q2, s2), y)))
                    allowed.add((((q, x), s1, s2), (y, s1, s2)))
                    for s3 in tape:
                        allowed.add(((s1, s2, s3), (s1, s2, (q2, s3))))

    cells = set(tape) | {(q, s) for q in machine.states for s in tape}
    tileset = Tileset(machine.name, frozenset(allowed), frozenset(cells))
    return tileset, TilesetComplement(tileset)


@dataclass(frozen=True)
class DiagramCheck:
    ok: bool
    violations: tuple[tuple[int, int], ...]  # window offsets (x, y), sorted


def check_diagram(tileset: Tileset, grid: Pattern) -> DiagramCheck:
    """Scan every 3x2 window of a full-rectangle grid against the tileset."""
    if grid.dimension != 2 or not grid.is_full_rectangle():
        raise ValueError("diagram check needs a full rectangular 2D pattern")
    (x0, x1), (y0, y1) = grid.bounding_box()
    width, height = x1 - x0 + 1, y1 - y0 + 1
    if width < 3 or height < 2:
        raise ValueError("grid must be at least 3 wide and 2 tall")
    bad = []
    for y in range(y0, y1):
        for x in range(x0, x1 - 1):
            window = (
                (grid[(x, y)], grid[(x + 1, y)], grid[(x + 2, y)]),
                (grid[(x, y + 1)], grid[(x + 1, y + 1)], grid[(x + 2, y + 1)]),
            )
            if not tileset.is_allowed(window):
                bad.append((x, y))
    return DiagramCheck(not bad, tuple(sorted(bad)))


# -- machine files ------------------------------------------------------
#
# Line oriented, UTF-8, `#` comments (so machines should use a blank symbol
# other than `#`; the builtins use `_`):
#   states: q0 q1 ...          input: a b           tape: a b _
#   blank: _    start: q0    accept: qa    reject: qr
#   print: q _                 (optional, repeatable)
#   delta: q a -> q' a' +1     (one per rule)


def parse_machine(text: str, name: str = "machine") -> TuringMachine:
    fields: dict[str, list[str]] = {}
    deltas = []
    prints = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        key, _, rest = line.partition(":")
        key = key.strip()
        tokens = rest.split()
        if key == "delta":
            if "->" not in tokens:
                raise ValueError(f"malformed delta line: {raw!r}")
            arrow = tokens.index("->")
            lhs, rhs = tokens[:arrow], tokens[arrow + 1:]
            if len(lhs) != 2 or len(rhs) != 3:
                raise ValueError(f"malformed delta line: {raw!r}")
            move = {"+1": 1, "-1": -1}.get(rhs[2])
            if move is None:
                raise ValueError(f"move must be +1 or -1 in: {raw!r}")
            deltas.append(((lhs[0], lhs[1]), (rhs[0], rhs[1], move)))
        elif key == "print":
            if len(tokens) != 2:
                raise ValueError(f"malformed print line: {raw!r}")
            prints.append((tokens[0], tokens[1]))
        else:
            fields[key] = tokens
    try:
        return TuringMachine(
            name=name,
            states=tuple(fields["states"]),
            input_alphabet=tuple(fields["input"]),
            tape_alphabet=tuple(fields["tape"]),
            blank=fields["blank"][0],
            transitions=dict(deltas),
            start=fields["start"][0],
            accept=fields["accept"][0],
            reject=fields["reject"][0],
            print_events=frozenset(prints),
        )
    except KeyError as exc:
        raise ValueError(f"machine file is missing the {exc.args[0]!r} line") from None


def format_machine(machine: TuringMachine) -> str:
    lines = [
        "states: " + " ".join(machine.states),
        "input: " + " ".join(machine.input_alphabet),
        "tape: " + " ".join(machine.tape_alphabet),
        "blank: " + machine.blank,
        "start: " + machine.start,
        "accept: " + machine.accept,
        "reject: " + machine.reject,
    ]
    for q, s in sorted(machine.print_events):
        lines.append(f"print: {q} {s}")
    for (q, s), (q2, s2, move) in sorted(machine.transitions.items()):
        lines.append(f"delta: {q} {s} -> {q2} {s2} {'+1' if move > 0 else '-1'}")
    return "\n".join(lines) + "\n"


# -- built-in machines --------------------------------------------------

_ANBN_DECIDER_SRC = """
states: q0 q1 q2 q3 q4 q5 q6 qa qr
input: a b
tape: a b _
blank: _
start: q0
accept: qa
reject: qr
delta: q0 a -> q1 _ +1
delta: q0 b -> qr b +1
delta: q1 a -> q1 a +1
delta: q1 b -> q2 b +1
delta: q1 _ -> qr _ +1
delta: q2 b -> q2 b +1
delta: q2 a -> qr a +1
delta: q2 _ -> q3 _ -1
delta: q3 b -> q4 _ -1
delta: q4 b -> q5 b -1
delta: q4 a -> qr a +1
delta: q4 _ -> qa _ +1
delta: q5 b -> q5 b -1
delta: q5 a -> q6 a -1
delta: q5 _ -> qr _ +1
delta: q6 a -> q6 a -1
delta: q6 _ -> q0 _ +1
"""

_ANBN_ENUMERATOR_SRC = """
states: q0 qa+ qb+ qb++ qm qa qr
input: a b
tape: a b _ |
blank: _
start: q0
accept: qa
reject: qr
print: qm _
delta: q0 _ -> qb+ a +1
delta: qb+ _ -> qm b +1
delta: qm _ -> qm | -1
delta: qm b -> qm b -1
delta: qm a -> qa+ a +1
delta: qa+ b -> qb++ a +1
delta: qb++ b -> qb++ b +1
delta: qb++ | -> qb+ b +1
"""

_BUILTINS = {
    "anbn_dec": _ANBN_DECIDER_SRC,
    "anbn_enum": _ANBN_ENUMERATOR_SRC,
}


def builtin_machine(name: str) -> TuringMachine:
    """Embedded machines: the a^n b^n decider and the a^n b^n enumerator."""
    try:
        return parse_machine(_BUILTINS[name], name=name)
    except KeyError:
        raise ValueError(f"unknown builtin machine {name!r} "
                         f"(available: {', '.join(sorted(_BUILTINS))})") from None


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)
