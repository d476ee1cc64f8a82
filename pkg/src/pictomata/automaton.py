"""Two-dimensional finite automata with restricted head movement.

A machine reads the cell under its head and moves one step per
transition.  The ``variant`` field restricts the available directions:

* ``4W`` may move up, down, left, right;
* ``3W`` may move down, left, right;
* ``2W`` may move down and right only.

The transition map is partial: a missing entry halts and rejects.  There
is a single accepting state, which has no outgoing transitions; reaching
it accepts immediately, wherever the head is.
"""

from dataclasses import dataclass, field

from .errors import ToolkitError, VariantError
from .picture import BOUNDARY, Alphabet

DIRECTIONS = ("U", "D", "L", "R")
MOVES = {"U": (-1, 0), "D": (1, 0), "L": (0, -1), "R": (0, 1)}
VARIANT_DIRS = {"4W": {"U", "D", "L", "R"}, "3W": {"D", "L", "R"}, "2W": {"D", "R"}}
MODES = ("det", "nondet")

#: delta maps (state, symbol-or-'#') to a frozenset of (state, direction).
Delta = dict[tuple[str, str], frozenset[tuple[str, str]]]


@dataclass(eq=True)
class Automaton2D:
    name: str
    variant: str
    mode: str
    alphabet: Alphabet
    states: tuple[str, ...]
    initial: str
    accept: str
    delta: Delta
    _compiled: object = field(default=None, compare=False, repr=False)

    def image(self, state: str, sym: str) -> frozenset[tuple[str, str]]:
        return self.delta.get((state, sym), frozenset())


def make_delta(entries) -> Delta:
    """Build a transition map from (state, sym, state, dir) tuples.

    Repeated (state, sym) keys accumulate into one image set.
    """
    delta: dict[tuple[str, str], set] = {}
    for q, sym, q2, d in entries:
        delta.setdefault((q, sym), set()).add((q2, d))
    return {k: frozenset(v) for k, v in delta.items()}


def validate(a: Automaton2D) -> list[str]:
    """Check every structural invariant; an empty list means well-formed.

    Violations are returned as data rather than raised, so callers can
    report all of them at once.
    """
    bad = []
    if a.variant not in VARIANT_DIRS:
        bad.append(f"unknown variant {a.variant!r}")
        return bad
    if a.mode not in MODES:
        bad.append(f"unknown mode {a.mode!r}")
    if len(set(a.states)) != len(a.states):
        bad.append("duplicate state identifiers")
    known = set(a.states)
    if a.initial not in known:
        bad.append(f"initial state {a.initial!r} not declared")
    if a.accept not in known:
        bad.append(f"accepting state {a.accept!r} not declared")
    legal_dirs = VARIANT_DIRS[a.variant]
    legal_syms = set(a.alphabet.symbols) | {BOUNDARY}
    for (q, sym), image in sorted(a.delta.items()):
        where = f"({q},{sym!r})"
        if q == a.accept:
            bad.append(f"transition from accepting state at {where}")
        if q not in known:
            bad.append(f"unknown source state at {where}")
        if sym not in legal_syms:
            bad.append(f"unknown symbol at {where}")
        if not image:
            bad.append(f"empty image at {where}")
        if a.mode == "det" and len(image) > 1:
            bad.append(f"nondeterministic fan-out in det mode at {where}")
        for q2, d in sorted(image):
            if q2 not in known:
                bad.append(f"unknown target state {q2!r} at {where}")
            if d not in MOVES:
                bad.append(f"unknown direction {d!r} at {where}")
            elif d not in legal_dirs:
                bad.append(f"illegal direction {d!r} for variant {a.variant} at {where}")
    return bad


def require_valid(a: Automaton2D) -> None:
    problems = validate(a)
    if problems:
        raise ToolkitError(f"invalid automaton {a.name!r}: " + "; ".join(problems))


_SWAP = {"D": "R", "R": "D", "U": "L", "L": "U"}


def transpose_automaton(a: Automaton2D) -> Automaton2D:
    """Swap the roles of rows and columns in a machine.

    Every downward move becomes rightward and vice versa (likewise U/L),
    so acceptance commutes with transposing the input picture.  A 3W
    machine has no counterpart with {D, L, R} transposed, hence only the
    2W and 4W variants are supported.
    """
    if a.variant == "3W":
        raise VariantError("cannot transpose a three-way machine")
    delta = {
        key: frozenset((q2, _SWAP[d]) for q2, d in image)
        for key, image in a.delta.items()
    }
    return Automaton2D(a.name, a.variant, a.mode, a.alphabet, a.states, a.initial, a.accept, delta)


def serialize_automaton(a: Automaton2D) -> str:
    """Render the line-oriented automaton file format."""
    lines = [
        f"automaton {a.name}",
        f"variant {a.variant}",
        f"mode {a.mode}",
        "alphabet " + " ".join(a.alphabet.symbols),
        "states " + " ".join(a.states),
        f"initial {a.initial}",
        f"accept {a.accept}",
    ]
    order = {q: i for i, q in enumerate(a.states)}
    for (q, sym), image in sorted(a.delta.items(), key=lambda kv: (order.get(kv[0][0], 1 << 30), kv[0][1])):
        for q2, d in sorted(image):
            lines.append(f"{q} {sym} -> {q2} {d}")
    return "\n".join(lines) + "\n"


def parse_automaton(text: str) -> Automaton2D:
    """Parse the automaton file format; inverse of :func:`serialize_automaton`.

    ``;`` begins a comment.  Duplicate transition lines for one
    (state, symbol) pair accumulate images; that is only legal in nondet
    mode, which :func:`validate` enforces.
    """
    name = variant = mode = initial = accept = None
    symbols: tuple[str, ...] = ()
    states: tuple[str, ...] = ()
    entries = []
    for raw in text.splitlines():
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        if head == "automaton":
            name = parts[1]
        elif head == "variant":
            variant = parts[1]
        elif head == "mode":
            mode = parts[1]
        elif head == "alphabet":
            symbols = tuple(parts[1:])
        elif head == "states":
            states = tuple(parts[1:])
        elif head == "initial":
            initial = parts[1]
        elif head == "accept":
            accept = parts[1]
        elif len(parts) == 5 and parts[2] == "->":
            entries.append((parts[0], parts[1], parts[3], parts[4]))
        else:
            raise ToolkitError(f"cannot parse automaton line: {raw!r}")
    missing = [k for k, v in [("automaton", name), ("variant", variant), ("mode", mode),
                              ("initial", initial), ("accept", accept)] if v is None]
    if missing or not symbols or not states:
        raise ToolkitError(f"automaton file incomplete (missing {missing or 'alphabet/states'})")
    return Automaton2D(name, variant, mode, Alphabet(symbols), states, initial, accept, make_delta(entries))


def load_automaton(path) -> Automaton2D:
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def save_automaton(a: Automaton2D, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_automaton(a))
