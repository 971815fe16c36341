"""Finite patterns on the 1D/2D lattice and subshift admissibility machinery.

A pattern is a finite assignment of symbols to lattice points.  The same
representation carries words (interval support), square blocks, and the
space-time diagrams produced by the machine simulator.  On top of patterns
this module provides the shift action, occurrence search, local and bounded
global admissibility against a forbidden set, language enumeration for
subshifts, two-block concatenation languages of dictionaries, and a
reconstruction-radius search.

Conventions fixed here and relied on everywhere else:

* words live on the interval ``1..len``, square blocks on ``(1..n) x (1..n)``;
* 2D points are ``(x, y)`` pairs, ``x`` horizontal, ``y`` vertical;
* the shift ``sigma^u`` moves a pattern with support ``S`` to support
  ``S - u``, reading the value at ``v`` from the old value at ``v + u``;
* enumeration order is alphabet order extended lexicographically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Symbol = Hashable
Point = "int | tuple[int, int]"

DEFAULT_NODE_BUDGET = 10**7


class Admissibility(Enum):
    """Tri-state outcome of a bounded global-admissibility search."""

    YES = "yes"
    NO = "no"
    BOUND_EXCEEDED = "bound-exceeded"

    def __bool__(self) -> bool:
        return self is Admissibility.YES


class BudgetExceededError(RuntimeError):
    """A search ran out of its configured node budget."""


class Alphabet:
    """Ordered finite set of symbols; the order drives all enumerations."""

    def __init__(self, symbols: Iterable[Symbol]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("alphabet must be non-empty")
        if len(set(syms)) != len(syms):
            raise ValueError("alphabet symbols must be distinct")
        self.symbols = syms
        self._index = {s: i for i, s in enumerate(syms)}

    def index(self, symbol: Symbol) -> int:
        return self._index[symbol]

    def __contains__(self, symbol: Symbol) -> bool:
        return symbol in self._index

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"


def _point_key(pt):
    # ints and (x, y) tuples sort together once normalised to tuples
    return pt if isinstance(pt, tuple) else (pt,)


class Pattern:
    """Immutable finite-support symbol assignment on Z or Z^2."""

    __slots__ = ("dimension", "_cells", "_key", "_hash")

    def __init__(self, dimension: int, cells: Mapping):
        if dimension not in (1, 2):
            raise ValueError("only dimensions 1 and 2 are supported")
        for pt in cells:
            if dimension == 1 and not isinstance(pt, int):
                raise ValueError(f"1D pattern point {pt!r} is not an int")
            if dimension == 2 and not (isinstance(pt, tuple) and len(pt) == 2):
                raise ValueError(f"2D pattern point {pt!r} is not an (x, y) pair")
        self.dimension = dimension
        self._cells = dict(cells)
        self._key = (dimension, tuple(sorted(self._cells.items(), key=lambda kv: _point_key(kv[0]))))
        self._hash = hash(self._key)

    # -- constructors -------------------------------------------------

    @classmethod
    def word(cls, symbols: "str | Sequence[Symbol]") -> "Pattern":
        """1D pattern on ``1..len`` from a string or symbol sequence."""
        return cls(1, {i + 1: s for i, s in enumerate(symbols)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Symbol]]) -> "Pattern":
        """2D pattern from rows listed bottom-up: ``rows[0]`` is y = 1."""
        cells = {}
        for j, row in enumerate(rows):
            for i, s in enumerate(row):
                cells[(i + 1, j + 1)] = s
        return cls(2, cells)

    # -- basic access -------------------------------------------------

    def support(self) -> frozenset:
        return frozenset(self._cells)

    def items(self):
        return self._cells.items()

    def get(self, point, default=None):
        return self._cells.get(point, default)

    def __getitem__(self, point):
        return self._cells[point]

    def __contains__(self, point) -> bool:
        return point in self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other) -> bool:
        return isinstance(other, Pattern) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Pattern") -> bool:
        return self._key < other._key

    def __repr__(self) -> str:
        if self.dimension == 1 and self.is_interval():
            return f"Pattern.word({''.join(str(s) for s in self.as_word())!r})"
        return f"Pattern(dim={self.dimension}, cells={len(self._cells)})"

    # -- shape queries ------------------------------------------------

    def bounding_box(self):
        """((min, max),) in 1D or ((xmin, xmax), (ymin, ymax)) in 2D."""
        if not self._cells:
            raise ValueError("empty pattern has no bounding box")
        if self.dimension == 1:
            pts = self._cells.keys()
            return ((min(pts), max(pts)),)
        xs = [p[0] for p in self._cells]
        ys = [p[1] for p in self._cells]
        return ((min(xs), max(xs)), (min(ys), max(ys)))

    def is_interval(self) -> bool:
        if self.dimension != 1 or not self._cells:
            return False
        (lo, hi), = self.bounding_box()
        return len(self._cells) == hi - lo + 1

    def is_square(self) -> bool:
        if self.dimension != 2 or not self._cells:
            return False
        (x0, x1), (y0, y1) = self.bounding_box()
        return x1 - x0 == y1 - y0 and len(self._cells) == (x1 - x0 + 1) ** 2

    def is_full_rectangle(self) -> bool:
        if self.dimension != 2 or not self._cells:
            return False
        (x0, x1), (y0, y1) = self.bounding_box()
        return len(self._cells) == (x1 - x0 + 1) * (y1 - y0 + 1)

    @property
    def size(self) -> int:
        """Side length of an interval word or square block."""
        if self.dimension == 1:
            if not self.is_interval():
                raise ValueError("pattern is not an interval word")
            (lo, hi), = self.bounding_box()
            return hi - lo + 1
        if not self.is_square():
            raise ValueError("pattern is not a square block")
        (x0, x1), _ = self.bounding_box()
        return x1 - x0 + 1

    def as_word(self) -> tuple:
        """Symbols of an interval word, left to right."""
        if self.dimension != 1 or not self.is_interval():
            raise ValueError("pattern is not an interval word")
        (lo, hi), = self.bounding_box()
        return tuple(self._cells[i] for i in range(lo, hi + 1))

    def as_text(self) -> str:
        """Interval word as a plain string (single-character symbols only)."""
        word = self.as_word()
        if any(not isinstance(s, str) or len(s) != 1 for s in word):
            raise ValueError("word has symbols that are not single characters")
        return "".join(word)

    def as_rows(self) -> list:
        """Rows of a full-rectangle 2D pattern, bottom-up."""
        if self.dimension != 2 or not self.is_full_rectangle():
            raise ValueError("pattern is not a full rectangle")
        (x0, x1), (y0, y1) = self.bounding_box()
        return [[self._cells[(x, y)] for x in range(x0, x1 + 1)] for y in range(y0, y1 + 1)]

    def row_text(self, y: int) -> str:
        (x0, x1), _ = self.bounding_box()
        return "".join(str(self._cells[(x, y)]) for x in range(x0, x1 + 1))

    # -- geometry -----------------------------------------------------

    def shift(self, u) -> "Pattern":
        """sigma^u: support moves to S - u, value at v is the old value at v + u."""
        if self.dimension == 1:
            if not isinstance(u, int):
                raise ValueError("1D shift offset must be an int")
            return Pattern(1, {p - u: s for p, s in self._cells.items()})
        ux, uy = u
        return Pattern(2, {(x - ux, y - uy): s for (x, y), s in self._cells.items()})

    def translate(self, u) -> "Pattern":
        """Move the support by +u (the inverse shift)."""
        if self.dimension == 1:
            return self.shift(-u)
        return self.shift((-u[0], -u[1]))

    def restrict(self, points: Iterable) -> "Pattern":
        pts = set(points)
        missing = pts - set(self._cells)
        if missing:
            raise KeyError(f"points not in support: {sorted(missing, key=_point_key)[:4]}")
        return Pattern(self.dimension, {p: self._cells[p] for p in pts})


def shift(p: Pattern, u) -> Pattern:
    """Shift action on a finite pattern (see ``Pattern.shift``)."""
    return p.shift(u)


def occurrences(p: Pattern, q: Pattern) -> set:
    """Offsets u at which p occurs in q, i.e. q(v + u) = p(v) on supp(p).

    Returned offsets are ints in 1D and (x, y) pairs in 2D; the set is empty
    whenever p does not fit inside q.
    """
    if p.dimension != q.dimension:
        raise ValueError("patterns must share a dimension")
    if len(p) == 0:
        raise ValueError("cannot search for an empty pattern")
    if len(p) > len(q):
        return set()
    found = set()
    if p.dimension == 1:
        (plo, phi), = p.bounding_box()
        (qlo, qhi), = q.bounding_box()
        for u in range(qlo - plo, qhi - phi + 1):
            if all(q.get(v + u) == s for v, s in p.items()):
                found.add(u)
        return found
    (px0, px1), (py0, py1) = p.bounding_box()
    (qx0, qx1), (qy0, qy1) = q.bounding_box()
    for ux in range(qx0 - px0, qx1 - px1 + 1):
        for uy in range(qy0 - py0, qy1 - py1 + 1):
            if all(q.get((x + ux, y + uy)) == s for (x, y), s in p.items()):
                found.add((ux, uy))
    return found


class ForbiddenSet:
    """Finite set of forbidden patterns, mixed sizes allowed.

    Members must have full interval (1D) or full rectangular (2D) support so
    that window indexing is well defined; the vertical-pair constraints used
    by the planar layer are 1x2 rectangles and are accepted.
    """

    def __init__(self, patterns: Iterable[Pattern] = ()):
        pats = frozenset(patterns)
        dims = {p.dimension for p in pats}
        if len(dims) > 1:
            raise ValueError("forbidden patterns must share a dimension")
        for p in pats:
            if p.dimension == 1 and not p.is_interval():
                raise ValueError("1D forbidden patterns must be interval words")
            if p.dimension == 2 and not p.is_full_rectangle():
                raise ValueError("2D forbidden patterns must be full rectangles")
        self.patterns = pats
        self.dimension = dims.pop() if dims else None
        self._by_shape: dict[tuple, set] = {}
        for p in pats:
            if p.dimension == 1:
                shape = (len(p),)
                key = p.as_word()
            else:
                (x0, x1), (y0, y1) = p.bounding_box()
                shape = (x1 - x0 + 1, y1 - y0 + 1)
                key = tuple(tuple(r) for r in p.as_rows())
            self._by_shape.setdefault(shape, set()).add(key)

    @classmethod
    def from_words(cls, words: Iterable) -> "ForbiddenSet":
        return cls(Pattern.word(w) for w in words)

    @property
    def max_size(self) -> int:
        """Largest member extent D (0 for the empty set / full shift)."""
        if not self._by_shape:
            return 0
        return max(max(shape) for shape in self._by_shape)

    def shapes(self):
        return sorted(self._by_shape)

    def window_forbidden(self, shape: tuple, window: tuple) -> bool:
        """Membership test for an extracted window in canonical key form."""
        bucket = self._by_shape.get(shape)
        return bucket is not None and window in bucket

    def symbols(self) -> set:
        return {s for p in self.patterns for _, s in p.items()}

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __repr__(self) -> str:
        return f"ForbiddenSet({len(self.patterns)} patterns, D={self.max_size})"


@dataclass
class SubshiftSpec:
    """A subshift given by an alphabet and forbidden patterns.

    ``forbidden`` is either a ForbiddenSet or a zero-argument callable
    returning a deterministic iterator of forbidden words in increasing
    length (the effectively-closed case); ``materialize`` truncates such a
    generator at a maximum length.
    """

    alphabet: Alphabet
    forbidden: "ForbiddenSet | Callable[[], Iterator]"
    dimension: int = 1

    def materialize(self, max_len: int) -> ForbiddenSet:
        if isinstance(self.forbidden, ForbiddenSet):
            return self.forbidden
        pats = []
        for w in self.forbidden():
            if len(w) > max_len:
                break
            pats.append(Pattern.word(w))
        return ForbiddenSet(pats)


def locally_admissible(w: Pattern, forbidden: ForbiddenSet) -> bool:
    """True iff no forbidden pattern occurs anywhere inside w.

    Members larger than w cannot fit and are vacuously satisfied, matching
    the quantifier over in-window placements.
    """
    for f in forbidden.patterns:
        if len(f) <= len(w) and occurrences(f, w):
            return False
    return True


def _grid_fill_order(width: int, height: int):
    # row-major: y rises slowest so a placement completes at its top-right cell
    return [(x, y) for y in range(1, height + 1) for x in range(1, width + 1)]


class _BoxSearch:
    """Backtracking completion search over a dense box with forward checking."""

    def __init__(self, dimension, width, height, alphabet_symbols, forbidden: ForbiddenSet,
                 fixed: dict, node_budget: int):
        self.dimension = dimension
        self.width = width
        self.height = height
        self.symbols = tuple(alphabet_symbols)
        self.forbidden = forbidden
        self.fixed = fixed
        self.node_budget = node_budget
        self.nodes = 0
        if dimension == 1:
            self.order = list(range(1, width + 1))
        else:
            self.order = _grid_fill_order(width, height)
        self.grid: dict = {}

    def _violates(self, cell) -> bool:
        # check every forbidden placement whose fill-order-last cell is `cell`
        fb = self.forbidden
        if self.dimension == 1:
            i = cell
            for shape in fb.shapes():
                (s,) = shape
                if i - s + 1 < 1:
                    continue
                window = tuple(self.grid[j] for j in range(i - s + 1, i + 1))
                if fb.window_forbidden(shape, window):
                    return True
            return False
        x, y = cell
        for shape in fb.shapes():
            w, h = shape
            x0, y0 = x - w + 1, y - h + 1
            if x0 < 1 or y0 < 1:
                continue
            window = tuple(
                tuple(self.grid[(xx, yy)] for xx in range(x0, x0 + w))
                for yy in range(y0, y0 + h)
            )
            if fb.window_forbidden(shape, window):
                return True
        return False

    def run(self) -> Admissibility:
        order = self.order
        n = len(order)

        def extend(idx: int) -> "Admissibility | None":
            if idx == n:
                return Admissibility.YES
            cell = order[idx]
            candidates = (self.fixed[cell],) if cell in self.fixed else self.symbols
            for sym in candidates:
                self.nodes += 1
                if self.nodes > self.node_budget:
                    return Admissibility.BOUND_EXCEEDED
                self.grid[cell] = sym
                if not self._violates(cell):
                    result = extend(idx + 1)
                    if result is not None:
                        return result
                del self.grid[cell]
            return None

        result = extend(0)
        return Admissibility.NO if result is None else result


def _center_offset(box_side: int, block_side: int) -> int:
    # central-block anchor T, matching floor(B/2 - n/2) for the square window
    return (box_side - block_side) // 2


def globally_admissible_within(w: Pattern, forbidden: ForbiddenSet, R: int,
                               alphabet: "Alphabet | None" = None,
                               node_budget: int = DEFAULT_NODE_BUDGET) -> Admissibility:
    """Search for a locally admissible extension of w to the box of side 2R.

    w sits in the central block of the box; cells are filled in row-major
    order with forward checking.  Returns YES when a completion exists, NO
    when the search space is exhausted, and BOUND_EXCEEDED when the node
    budget runs out (never silently truncated).

    The alphabet defaults to the symbols seen in w and in the forbidden set;
    pass one explicitly when the extension may use other symbols.
    """
    n = w.size
    if R < n:
        raise ValueError(f"radius R={R} must be at least the pattern size {n}")
    if alphabet is None:
        syms = {s for _, s in w.items()} | forbidden.symbols()
        alphabet = Alphabet(sorted(syms, key=repr))
    box = 2 * R
    t = _center_offset(box, n)
    if w.dimension == 1:
        (lo, _), = w.bounding_box()
        fixed = {t + 1 + (p - lo): s for p, s in w.items()}
        search = _BoxSearch(1, box, 1, alphabet.symbols, forbidden, fixed, node_budget)
    else:
        (x0, _), (y0, _) = w.bounding_box()
        fixed = {(t + 1 + (x - x0), t + 1 + (y - y0)): s for (x, y), s in w.items()}
        search = _BoxSearch(2, box, box, alphabet.symbols, forbidden, fixed, node_budget)
    return search.run()


def _admissible_blocks(alphabet: Alphabet, forbidden: ForbiddenSet, n: int,
                       dimension: int) -> Iterator[Pattern]:
    """Locally admissible size-n blocks, in alphabet/lexicographic order."""
    if dimension == 1:
        def extend(prefix: list):
            if len(prefix) == n:
                yield Pattern.word(prefix)
                return
            for sym in alphabet.symbols:
                prefix.append(sym)
                ok = True
                i = len(prefix)
                for shape in forbidden.shapes():
                    (s,) = shape
                    if s <= i and forbidden.window_forbidden(shape, tuple(prefix[i - s:i])):
                        ok = False
                        break
                if ok:
                    yield from extend(prefix)
                prefix.pop()
        yield from extend([])
        return

    order = _grid_fill_order(n, n)
    grid: dict = {}

    def extend2(idx: int):
        if idx == len(order):
            yield Pattern(2, dict(grid))
            return
        x, y = order[idx]
        for sym in alphabet.symbols:
            grid[(x, y)] = sym
            ok = True
            for shape in forbidden.shapes():
                w, h = shape
                x0, y0 = x - w + 1, y - h + 1
                if x0 < 1 or y0 < 1:
                    continue
                window = tuple(
                    tuple(grid[(xx, yy)] for xx in range(x0, x0 + w))
                    for yy in range(y0, y0 + h)
                )
                if forbidden.window_forbidden(shape, window):
                    ok = False
                    break
            if ok:
                yield from extend2(idx + 1)
            del grid[(x, y)]

    yield from extend2(0)


def language(spec: SubshiftSpec, n: int, R: int,
             node_budget: int = DEFAULT_NODE_BUDGET) -> set[Pattern]:
    """Size-n patterns surviving the bounded global-admissibility test at radius R.

    The result is monotone non-increasing in R and coincides with the exact
    language for SFTs whose reconstruction radius is at most R.  A budget
    exhaustion anywhere propagates as BudgetExceededError.
    """
    if n < 1:
        raise ValueError("pattern size must be >= 1")
    forbidden = spec.materialize(2 * R)
    out = set()
    for block in _admissible_blocks(spec.alphabet, forbidden, n, spec.dimension):
        verdict = globally_admissible_within(block, forbidden, R,
                                             alphabet=spec.alphabet,
                                             node_budget=node_budget)
        if verdict is Admissibility.BOUND_EXCEEDED:
            raise BudgetExceededError(f"node budget exhausted on a size-{n} block")
        if verdict:
            out.add(block)
    return out


def _dictionary_words(dictionary) -> list[tuple]:
    """Normalise a dictionary argument to a list of 1D words (tuples)."""
    if hasattr(dictionary, "members"):
        members = dictionary.members
    else:
        members = dictionary
    words = []
    for m in members:
        if isinstance(m, Pattern):
            if m.dimension != 1:
                raise ValueError("concatenation language is defined for 1D dictionaries")
            words.append(m.as_word())
        else:
            words.append(tuple(m))
    sizes = {len(w) for w in words}
    if len(sizes) > 1:
        raise ValueError("dictionary members must share one length")
    return words


def concat_language(dictionary, n: int) -> set:
    """All length-n subwords of two-block concatenations w1 w2 of the dictionary.

    Requires 1 <= n <= 2*len; at n = 2*len the result is exactly the set of
    concatenations themselves.  Words come back as strings when every symbol
    is a single character, as tuples otherwise.
    """
    words = _dictionary_words(dictionary)
    if not words:
        return set()
    ell = len(words[0])
    if not 1 <= n <= 2 * ell:
        raise ValueError(f"need 1 <= n <= {2 * ell}, got n={n}")
    stringy = all(isinstance(s, str) and len(s) == 1 for w in words for s in w)
    out = set()
    for w1 in words:
        for w2 in words:
            cat = w1 + w2
            for i in range(len(cat) - n + 1):
                piece = cat[i:i + n]
                out.add("".join(piece) if stringy else piece)
    return out


@dataclass
class Dictionary:
    """Set of same-size patterns used as concatenation blocks."""

    size: int
    dimension: int
    members: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_words(cls, words: Iterable) -> "Dictionary":
        pats = frozenset(Pattern.word(w) for w in words)
        sizes = {p.size for p in pats}
        if len(sizes) != 1:
            raise ValueError("dictionary members must share one length")
        return cls(size=sizes.pop(), dimension=1, members=pats)

    def words(self) -> list[tuple]:
        return sorted(_dictionary_words(self))


def reconstruction_radius(forbidden: ForbiddenSet, n: int, R_max: int,
                          alphabet: "Alphabet | None" = None,
                          extension_radius: "int | None" = None,
                          node_budget: int = DEFAULT_NODE_BUDGET,
                          dimension: int = 1) -> "int | Admissibility":
    """Smallest R in n..R_max making every locally admissible 2R-window reconstruct.

    For each candidate R, every locally admissible pattern of side 2R must
    have a globally admissible central block of side n.  Global admissibility
    of the block is approximated by extendability to the box of side
    2*extension_radius (default R_max, the largest affordable box); for the
    SFTs exercised at desk scale this proxy is exact.  Returns
    Admissibility.BOUND_EXCEEDED when no R <= R_max works.
    """
    if n < 1:
        raise ValueError("block size must be >= 1")
    if alphabet is None:
        syms = forbidden.symbols()
        if not syms:
            raise ValueError("an alphabet is required when the forbidden set is empty")
        alphabet = Alphabet(sorted(syms, key=repr))
    ext = extension_radius if extension_radius is not None else R_max
    cache: dict[Pattern, Admissibility] = {}

    def block_ok(block: Pattern) -> Admissibility:
        if block not in cache:
            cache[block] = globally_admissible_within(block, forbidden, ext,
                                                      alphabet=alphabet,
                                                      node_budget=node_budget)
        return cache[block]

    for R in range(n, R_max + 1):
        box = 2 * R
        t = _center_offset(box, n)
        all_ok = True
        for window in _admissible_blocks(alphabet, forbidden, box, dimension):
            if dimension == 1:
                center = Pattern.word(window.as_word()[t:t + n])
            else:
                pts = [(x, y) for x in range(t + 1, t + n + 1) for y in range(t + 1, t + n + 1)]
                center = Pattern(2, {(x - t, y - t): window[(x, y)] for (x, y) in pts})
            verdict = block_ok(center)
            if verdict is Admissibility.BOUND_EXCEEDED:
                raise BudgetExceededError("node budget exhausted during reconstruction search")
            if not verdict:
                all_ok = False
                break
        if all_ok:
            return R
    return Admissibility.BOUND_EXCEEDED


# -- pattern file format ----------------------------------------------
#
# One pattern per entry, UTF-8, `#` comments.  A 1D word is a bare symbol
# string on its own line.  A 2D pattern is a header `rows=r;cols=c;`
# followed by r lines of c whitespace-separated symbols, top row (largest y)
# first.  Composite machine cells serialise as `(state,symbol)`.


def _format_cell(sym) -> str:
    if isinstance(sym, tuple):
        return "(" + ",".join(str(s) for s in sym) + ")"
    return str(sym)


def _parse_cell(token: str):
    if token.startswith("(") and token.endswith(")") and "," in token:
        inner = token[1:-1]
        state, sym = inner.split(",", 1)
        return (state, sym)
    return token


def format_patterns(patterns: Iterable[Pattern]) -> str:
    lines = []
    for p in patterns:
        if p.dimension == 1:
            lines.append(p.as_text())
        else:
            rows = p.as_rows()
            cols = len(rows[0])
            lines.append(f"rows={len(rows)};cols={cols};")
            for row in reversed(rows):
                lines.append(" ".join(_format_cell(s) for s in row))
    return "\n".join(lines) + "\n"


def parse_patterns(text: str) -> list[Pattern]:
    lines = [ln.split("#", 1)[0].rstrip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    out = []
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        if line.startswith("rows="):
            head = dict(part.split("=") for part in line.rstrip(";").split(";"))
            r, c = int(head["rows"]), int(head["cols"])
            rows_top_first = []
            for j in range(r):
                tokens = lines[i + 1 + j].split()
                if len(tokens) != c:
                    raise ValueError(f"expected {c} symbols, got {len(tokens)}: {lines[i + 1 + j]!r}")
                rows_top_first.append([_parse_cell(t) for t in tokens])
            out.append(Pattern.from_rows(list(reversed(rows_top_first))))
            i += 1 + r
        else:
            out.append(Pattern.word(line))
            i += 1
    return out


def load_forbidden(text: str) -> ForbiddenSet:
    return ForbiddenSet(parse_patterns(text))
