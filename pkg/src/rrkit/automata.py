"""Finite automata over explicit, ordered alphabets.

Machines are immutable values with integer state IDs. Words are plain
strings and "" is the empty word. Alphabets keep their declared symbol
order; that order drives breadth-first tie-breaking, so any witness word
returned by an operation is shortest first, then lexicographically
smallest. Every construction renumbers its result canonically (BFS
discovery order), which makes serialization byte-stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class FormatError(ValueError):
    """Malformed machine/graph/certificate text."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class AlphabetError(ValueError):
    """Operation applied to machines or words over incompatible alphabets."""


EPS = None  # label of an epsilon transition inside an Nfa


def _check_symbol(sym: str, line: int | None = None) -> str:
    if len(sym) != 1 or not (sym.isascii() and sym.isalnum()):
        raise FormatError(f"bad symbol {sym!r}: want one ASCII letter or digit", line)
    return sym


def word_to_text(w: str) -> str:
    """Render a word for line-based output; the empty word prints as `-`."""
    return w if w else "-"


def word_from_text(tok: str) -> str:
    return "" if tok == "-" else tok


@dataclass(frozen=True, eq=False)
class Dfa:
    """Deterministic automaton; transitions may be partial."""

    alphabet: tuple[str, ...]
    states: frozenset[int]
    initial: int
    accepting: frozenset[int]
    transitions: dict[tuple[int, str], int]

    def __post_init__(self):
        alpha = set(self.alphabet)
        if self.initial not in self.states:
            raise ValueError(f"initial state {self.initial} not a state")
        if not self.accepting <= self.states:
            raise ValueError("accepting states must be states")
        for (q, sym), t in self.transitions.items():
            if q not in self.states or t not in self.states:
                raise ValueError(f"transition {q}-{sym}->{t} leaves the state set")
            if sym not in alpha:
                raise ValueError(f"transition symbol {sym!r} not in alphabet")

    def step(self, q: int, sym: str) -> int | None:
        return self.transitions.get((q, sym))

    def walk(self, q: int, word: str) -> int | None:
        """Follow `word` from state q; None once a transition is missing."""
        for c in word:
            q = self.transitions.get((q, c))
            if q is None:
                return None
        return q

    def to_nfa(self) -> "Nfa":
        triples = tuple((q, sym, t) for (q, sym), t in sorted(self.transitions.items()))
        return Nfa(self.alphabet, self.states, frozenset({self.initial}),
                   self.accepting, triples)


@dataclass(frozen=True, eq=False)
class Nfa:
    """Nondeterministic automaton; `EPS` (None) marks epsilon transitions."""

    alphabet: tuple[str, ...]
    states: frozenset[int]
    initial: frozenset[int]
    accepting: frozenset[int]
    transitions: tuple[tuple[int, str | None, int], ...]

    def __post_init__(self):
        alpha = set(self.alphabet)
        if not (self.initial <= self.states and self.accepting <= self.states):
            raise ValueError("initial/accepting states must be states")
        for q, sym, t in self.transitions:
            if q not in self.states or t not in self.states:
                raise ValueError(f"transition {q}-{sym}->{t} leaves the state set")
            if sym is not EPS and sym not in alpha:
                raise ValueError(f"transition symbol {sym!r} not in alphabet")


# ---------------------------------------------------------------------------
# parsing and serialization
#
# Line-based text, `#` starts a comment, blank lines ignored:
#   dfa|nfa
#   alphabet a b ...
#   states 0 1 ...
#   initial 0        (dfa: exactly one; nfa: any number)
#   accept 1 2 ...
#   trans <src> <symbol|eps> <dst>


def _logical_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body.split()))
    return out


def _section(lines, i, keyword):
    if i >= len(lines):
        raise FormatError(f"missing `{keyword}` line")
    no, toks = lines[i]
    if toks[0] != keyword:
        raise FormatError(f"expected `{keyword}`, got `{toks[0]}`", no)
    return no, toks[1:]


def _parse_alphabet(toks, no) -> tuple[str, ...]:
    seen = set()
    for tok in toks:
        _check_symbol(tok, no)
        if tok in seen:
            raise FormatError(f"duplicate alphabet symbol {tok!r}", no)
        seen.add(tok)
    return tuple(toks)


def _parse_state_list(toks, no) -> list[int]:
    out = []
    for tok in toks:
        if not tok.isdigit():
            raise FormatError(f"bad state id {tok!r}", no)
        out.append(int(tok))
    if len(set(out)) != len(out):
        raise FormatError("duplicate state id", no)
    return out


def _parse_state(tok, states, no) -> int:
    if not tok.isdigit() or int(tok) not in states:
        raise FormatError(f"undeclared state {tok!r}", no)
    return int(tok)


def parse_dfa(text: str) -> Dfa:
    """Parse the `dfa` text format; rejects duplicate (state, symbol) edges."""
    lines = _logical_lines(text)
    no, rest = _section(lines, 0, "dfa")
    if rest:
        raise FormatError("unexpected tokens after header", no)
    alphabet, states, initials, accepting, i = _parse_common(lines)
    if len(initials) != 1:
        raise FormatError("a dfa needs exactly one initial state", lines[3][0])
    transitions: dict[tuple[int, str], int] = {}
    for no, toks in lines[i:]:
        if toks[0] != "trans":
            raise FormatError(f"unexpected `{toks[0]}`", no)
        if len(toks) != 4:
            raise FormatError("want `trans <src> <symbol> <dst>`", no)
        src = _parse_state(toks[1], states, no)
        if toks[2] == "eps":
            raise FormatError("eps transitions are not allowed in a dfa", no)
        sym = toks[2]
        if sym not in alphabet:
            raise FormatError(f"undeclared symbol {sym!r}", no)
        dst = _parse_state(toks[3], states, no)
        if (src, sym) in transitions:
            raise FormatError(f"duplicate transition from state {src} on {sym!r}", no)
        transitions[(src, sym)] = dst
    return Dfa(alphabet, frozenset(states), initials[0], frozenset(accepting), transitions)


def parse_nfa(text: str) -> Nfa:
    lines = _logical_lines(text)
    no, rest = _section(lines, 0, "nfa")
    if rest:
        raise FormatError("unexpected tokens after header", no)
    alphabet, states, initials, accepting, i = _parse_common(lines)
    triples: list[tuple[int, str | None, int]] = []
    for no, toks in lines[i:]:
        if toks[0] != "trans":
            raise FormatError(f"unexpected `{toks[0]}`", no)
        if len(toks) != 4:
            raise FormatError("want `trans <src> <symbol|eps> <dst>`", no)
        src = _parse_state(toks[1], states, no)
        sym: str | None = None if toks[2] == "eps" else toks[2]
        if sym is not None and sym not in alphabet:
            raise FormatError(f"undeclared symbol {sym!r}", no)
        dst = _parse_state(toks[3], states, no)
        triples.append((src, sym, dst))
    return Nfa(alphabet, frozenset(states), frozenset(initials),
               frozenset(accepting), tuple(triples))


def _parse_common(lines):
    no, toks = _section(lines, 1, "alphabet")
    alphabet = _parse_alphabet(toks, no)
    no, toks = _section(lines, 2, "states")
    states = set(_parse_state_list(toks, no))
    no, toks = _section(lines, 3, "initial")
    initials = [_parse_state(t, states, no) for t in toks]
    no, toks = _section(lines, 4, "accept")
    accepting = {_parse_state(t, states, no) for t in toks}
    return alphabet, states, initials, accepting, 5


def parse_automaton(text: str) -> Dfa | Nfa:
    """Parse either machine format, dispatching on the header line."""
    lines = _logical_lines(text)
    if not lines:
        raise FormatError("empty input")
    head = lines[0][1][0]
    if head == "dfa":
        return parse_dfa(text)
    if head == "nfa":
        return parse_nfa(text)
    raise FormatError(f"unknown header `{head}`", lines[0][0])


def _kw_line(keyword: str, items) -> str:
    items = list(items)
    return keyword + (" " + " ".join(items) if items else "")


def dfa_to_text(d: Dfa) -> str:
    d = canonical_dfa(d)
    idx = {sym: k for k, sym in enumerate(d.alphabet)}
    lines = [
        "dfa",
        _kw_line("alphabet", d.alphabet),
        _kw_line("states", (str(q) for q in sorted(d.states))),
        f"initial {d.initial}",
        _kw_line("accept", (str(q) for q in sorted(d.accepting))),
    ]
    for (q, sym), t in sorted(d.transitions.items(), key=lambda e: (e[0][0], idx[e[0][1]])):
        lines.append(f"trans {q} {sym} {t}")
    return "\n".join(lines) + "\n"


def nfa_to_text(n: Nfa) -> str:
    n = canonical_nfa(n)
    idx = {sym: k for k, sym in enumerate(n.alphabet)}

    def key(tr):
        q, sym, t = tr
        return (q, -1 if sym is EPS else idx[sym], t)

    lines = [
        "nfa",
        _kw_line("alphabet", n.alphabet),
        _kw_line("states", (str(q) for q in sorted(n.states))),
        _kw_line("initial", (str(q) for q in sorted(n.initial))),
        _kw_line("accept", (str(q) for q in sorted(n.accepting))),
    ]
    for q, sym, t in sorted(n.transitions, key=key):
        lines.append(f"trans {q} {'eps' if sym is EPS else sym} {t}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# canonical renumbering


def canonical_dfa(d: Dfa) -> Dfa:
    """Renumber by BFS discovery order; unreachable states are dropped."""
    order = {d.initial: 0}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for sym in d.alphabet:
            t = d.transitions.get((q, sym))
            if t is not None and t not in order:
                order[t] = len(order)
                queue.append(t)
    transitions = {
        (order[q], sym): order[t]
        for (q, sym), t in d.transitions.items()
        if q in order
    }
    return Dfa(d.alphabet, frozenset(order.values()), 0,
               frozenset(order[q] for q in d.accepting if q in order), transitions)


def canonical_nfa(n: Nfa) -> Nfa:
    """BFS renumbering seeded by the initial states in ascending order.

    Epsilon successors are explored before symbol successors. States not
    reachable from any initial state are dropped.
    """
    idx = {sym: k for k, sym in enumerate(n.alphabet)}
    adj: dict[int, list[tuple[int, int]]] = {}
    for q, sym, t in n.transitions:
        adj.setdefault(q, []).append((-1 if sym is EPS else idx[sym], t))
    order: dict[int, int] = {}
    queue: deque[int] = deque()
    for q in sorted(n.initial):
        order[q] = len(order)
        queue.append(q)
    while queue:
        q = queue.popleft()
        for _, t in sorted(adj.get(q, ())):
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    triples = [
        (order[q], sym, order[t])
        for q, sym, t in n.transitions
        if q in order
    ]
    triples.sort(key=lambda tr: (tr[0], -1 if tr[1] is EPS else idx[tr[1]], tr[2]))
    return Nfa(n.alphabet, frozenset(order.values()),
               frozenset(order[q] for q in n.initial),
               frozenset(order[q] for q in n.accepting if q in order),
               tuple(triples))


# ---------------------------------------------------------------------------
# alphabet plumbing


def merge_alphabets(a, b) -> tuple[str, ...]:
    """Union of two alphabets: left operand's order first, then new symbols."""
    left = tuple(a)
    seen = set(left)
    return left + tuple(s for s in b if s not in seen)


def widen_dfa(d: Dfa, alphabet) -> Dfa:
    alphabet = tuple(alphabet)
    if not set(d.alphabet) <= set(alphabet):
        raise AlphabetError("cannot widen: target alphabet drops symbols")
    if alphabet == d.alphabet:
        return d
    return Dfa(alphabet, d.states, d.initial, d.accepting, dict(d.transitions))


def widen_nfa(n: Nfa, alphabet) -> Nfa:
    alphabet = tuple(alphabet)
    if not set(n.alphabet) <= set(alphabet):
        raise AlphabetError("cannot widen: target alphabet drops symbols")
    if alphabet == n.alphabet:
        return n
    return Nfa(alphabet, n.states, n.initial, n.accepting, n.transitions)


def empty_dfa(alphabet) -> Dfa:
    """Canonical machine for the empty language: one bare initial state."""
    return Dfa(tuple(alphabet), frozenset({0}), 0, frozenset(), {})


def universal_dfa(alphabet) -> Dfa:
    alphabet = tuple(alphabet)
    return Dfa(alphabet, frozenset({0}), 0, frozenset({0}),
               {(0, sym): 0 for sym in alphabet})


# ---------------------------------------------------------------------------
# running words


def run(d: Dfa, word: str) -> bool:
    alpha = set(d.alphabet)
    q: int | None = d.initial
    for c in word:
        if c not in alpha:
            raise AlphabetError(f"symbol {c!r} not in the machine's alphabet")
        q = d.transitions.get((q, c))
        if q is None:
            return False
    return q in d.accepting


def _eps_adjacency(n: Nfa) -> dict[int, list[int]]:
    eps: dict[int, list[int]] = {}
    for q, sym, t in n.transitions:
        if sym is EPS:
            eps.setdefault(q, []).append(t)
    return eps


def _closure(states, eps: dict[int, list[int]]) -> frozenset[int]:
    seen = set(states)
    stack = list(states)
    while stack:
        q = stack.pop()
        for t in eps.get(q, ()):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def run_nfa(n: Nfa, word: str) -> bool:
    alpha = set(n.alphabet)
    eps = _eps_adjacency(n)
    moves: dict[tuple[int, str], list[int]] = {}
    for q, sym, t in n.transitions:
        if sym is not EPS:
            moves.setdefault((q, sym), []).append(t)
    cur = _closure(n.initial, eps)
    for c in word:
        if c not in alpha:
            raise AlphabetError(f"symbol {c!r} not in the machine's alphabet")
        nxt = set()
        for q in cur:
            nxt.update(moves.get((q, c), ()))
        cur = _closure(nxt, eps)
    return bool(cur & n.accepting)


# ---------------------------------------------------------------------------
# constructions


def determinize(n: Nfa) -> Dfa:
    """Subset construction over epsilon closures; the output is partial
    (no transition where the successor subset would be empty)."""
    eps = _eps_adjacency(n)
    moves: dict[tuple[int, str], list[int]] = {}
    for q, sym, t in n.transitions:
        if sym is not EPS:
            moves.setdefault((q, sym), []).append(t)
    start = _closure(n.initial, eps)
    ids: dict[frozenset[int], int] = {start: 0}
    queue = deque([start])
    transitions: dict[tuple[int, str], int] = {}
    accepting = set()
    while queue:
        subset = queue.popleft()
        i = ids[subset]
        if subset & n.accepting:
            accepting.add(i)
        for sym in n.alphabet:
            nxt = set()
            for q in subset:
                nxt.update(moves.get((q, sym), ()))
            if not nxt:
                continue
            target = _closure(nxt, eps)
            j = ids.get(target)
            if j is None:
                j = ids[target] = len(ids)
                queue.append(target)
            transitions[(i, sym)] = j
    return Dfa(n.alphabet, frozenset(range(len(ids))), 0, frozenset(accepting), transitions)


def _reachable(seeds, adjacency) -> set[int]:
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        q = queue.popleft()
        for t in adjacency.get(q, ()):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def trim(d: Dfa) -> Dfa:
    """Keep exactly the states both reachable from the initial state and
    co-reachable to an accepting one; an empty language collapses to the
    canonical one-state machine."""
    fwd: dict[int, list[int]] = {}
    back: dict[int, list[int]] = {}
    for (q, _), t in d.transitions.items():
        fwd.setdefault(q, []).append(t)
        back.setdefault(t, []).append(q)
    keep = _reachable({d.initial}, fwd) & _reachable(set(d.accepting), back)
    if d.initial not in keep:
        return empty_dfa(d.alphabet)
    transitions = {
        (q, sym): t
        for (q, sym), t in d.transitions.items()
        if q in keep and t in keep
    }
    return canonical_dfa(Dfa(d.alphabet, frozenset(keep), d.initial,
                             d.accepting & keep, transitions))


def product_intersect(a: Nfa, b: Nfa) -> Nfa:
    """Pair construction for the intersection; epsilon moves advance one
    side at a time. Requires equal alphabets (widen beforehand)."""
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetError("intersection requires equal alphabets; widen first")
    a_eps: dict[int, list[int]] = {}
    a_moves: dict[tuple[int, str], list[int]] = {}
    for q, sym, t in a.transitions:
        (a_eps.setdefault(q, []) if sym is EPS else a_moves.setdefault((q, sym), [])).append(t)
    b_eps: dict[int, list[int]] = {}
    b_moves: dict[tuple[int, str], list[int]] = {}
    for q, sym, t in b.transitions:
        (b_eps.setdefault(q, []) if sym is EPS else b_moves.setdefault((q, sym), [])).append(t)

    ids: dict[tuple[int, int], int] = {}
    queue: deque[tuple[int, int]] = deque()
    for pair in sorted((p, q) for p in a.initial for q in b.initial):
        ids[pair] = len(ids)
        queue.append(pair)
    triples: list[tuple[int, str | None, int]] = []

    def visit(pair):
        j = ids.get(pair)
        if j is None:
            j = ids[pair] = len(ids)
            queue.append(pair)
        return j

    while queue:
        pair = queue.popleft()
        p, q = pair
        i = ids[pair]
        for t in sorted(a_eps.get(p, ())):
            triples.append((i, EPS, visit((t, q))))
        for t in sorted(b_eps.get(q, ())):
            triples.append((i, EPS, visit((p, t))))
        for sym in a.alphabet:
            for tp in sorted(a_moves.get((p, sym), ())):
                for tq in sorted(b_moves.get((q, sym), ())):
                    triples.append((i, sym, visit((tp, tq))))
    accepting = frozenset(
        i for (p, q), i in ids.items() if p in a.accepting and q in b.accepting
    )
    raw = Nfa(a.alphabet, frozenset(ids.values()),
              frozenset(ids[pair] for pair in ids if pair[0] in a.initial and pair[1] in b.initial),
              accepting, tuple(triples))
    return canonical_nfa(raw)


def shortest_word(n: Nfa) -> str | None:
    """Shortest accepted word (lexicographic in alphabet order among ties),
    or None for the empty language. BFS over closure subsets."""
    eps = _eps_adjacency(n)
    moves: dict[tuple[int, str], list[int]] = {}
    for q, sym, t in n.transitions:
        if sym is not EPS:
            moves.setdefault((q, sym), []).append(t)
    start = _closure(n.initial, eps)
    if start & n.accepting:
        return ""
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        subset, word = queue.popleft()
        for sym in n.alphabet:
            nxt = set()
            for q in subset:
                nxt.update(moves.get((q, sym), ()))
            if not nxt:
                continue
            target = _closure(nxt, eps)
            if target in seen:
                continue
            if target & n.accepting:
                return word + sym
            seen.add(target)
            queue.append((target, word + sym))
    return None


def complement(d: Dfa) -> Dfa:
    """Complete with a sink, then flip acceptance."""
    sink = max(d.states) + 1
    states = set(d.states) | {sink}
    transitions = dict(d.transitions)
    for q in states:
        for sym in d.alphabet:
            transitions.setdefault((q, sym), sink)
    return canonical_dfa(Dfa(d.alphabet, frozenset(states), d.initial,
                             frozenset(states) - d.accepting, transitions))


def inclusion_counterexample(sup: Dfa, sub: Nfa) -> str | None:
    """Shortest word of L(sub) outside L(sup), or None when L(sub) ⊆ L(sup).
    Both machines are widened to the merged alphabet first."""
    alpha = merge_alphabets(sup.alphabet, sub.alphabet)
    bad = product_intersect(widen_nfa(sub, alpha), complement(widen_dfa(sup, alpha)).to_nfa())
    return shortest_word(bad)


def includes(sup: Dfa, sub: Nfa) -> bool:
    return inclusion_counterexample(sup, sub) is None


def separating_word(a: Nfa, b: Nfa) -> str | None:
    """Shortest word accepted by exactly one machine (None if equivalent)."""
    alpha = merge_alphabets(a.alphabet, b.alphabet)
    da = determinize(widen_nfa(a, alpha))
    db = determinize(widen_nfa(b, alpha))
    in_a = inclusion_counterexample(db, da.to_nfa())
    in_b = inclusion_counterexample(da, db.to_nfa())
    if in_a is None:
        return in_b
    if in_b is None:
        return in_a
    return min((in_a, in_b), key=lambda w: (len(w), w))


def equivalent(a: Nfa, b: Nfa) -> bool:
    return separating_word(a, b) is None


def nfa_union(parts, alphabet) -> Nfa:
    """Union via a fresh initial state with epsilon edges into each part."""
    alphabet = tuple(alphabet)
    states = {0}
    initial = {0}
    accepting: set[int] = set()
    triples: list[tuple[int, str | None, int]] = []
    base = 1
    for part in parts:
        if not set(part.alphabet) <= set(alphabet):
            raise AlphabetError("union part uses symbols outside the target alphabet")
        remap = {q: base + k for k, q in enumerate(sorted(part.states))}
        base += len(remap)
        states.update(remap.values())
        for q in sorted(part.initial):
            triples.append((0, EPS, remap[q]))
        accepting.update(remap[q] for q in part.accepting)
        triples.extend((remap[q], sym, remap[t]) for q, sym, t in part.transitions)
    raw = Nfa(alphabet, frozenset(states), frozenset(initial),
              frozenset(accepting), tuple(triples))
    return canonical_nfa(raw)


# ---------------------------------------------------------------------------
# regular expressions (literals, concatenation, |, *, parentheses)


class _RegexParser:
    def __init__(self, pattern: str):
        self.pattern = pattern
        self.pos = 0
        self.count = 0
        self.triples: list[tuple[int, str | None, int]] = []

    def fresh(self) -> int:
        self.count += 1
        return self.count - 1

    def edge(self, src, sym, dst):
        self.triples.append((src, sym, dst))

    def peek(self) -> str | None:
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def parse(self):
        frag = self.alternation()
        if self.peek() is not None:
            raise FormatError(f"unbalanced `)` at position {self.pos}")
        return frag

    def alternation(self):
        frags = [self.concatenation()]
        while self.peek() == "|":
            self.pos += 1
            frags.append(self.concatenation())
        if len(frags) == 1:
            return frags[0]
        s, t = self.fresh(), self.fresh()
        for fs, ft in frags:
            self.edge(s, EPS, fs)
            self.edge(ft, EPS, t)
        return s, t

    def concatenation(self):
        frags = []
        while self.peek() not in (None, "|", ")"):
            frags.append(self.starred())
        if not frags:
            s = self.fresh()
            return s, s
        for (_, t1), (s2, _) in zip(frags, frags[1:]):
            self.edge(t1, EPS, s2)
        return frags[0][0], frags[-1][1]

    def starred(self):
        frag = self.atom()
        while self.peek() == "*":
            self.pos += 1
            fs, ft = frag
            s, t = self.fresh(), self.fresh()
            self.edge(s, EPS, fs)
            self.edge(s, EPS, t)
            self.edge(ft, EPS, fs)
            self.edge(ft, EPS, t)
            frag = s, t
        return frag

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            frag = self.alternation()
            if self.peek() != ")":
                raise FormatError("unbalanced `(`")
            self.pos += 1
            return frag
        if c == "*":
            raise FormatError(f"dangling `*` at position {self.pos}")
        if len(c) != 1 or not (c.isascii() and c.isalnum()):
            raise FormatError(f"unexpected character {c!r} in pattern")
        self.pos += 1
        s, t = self.fresh(), self.fresh()
        self.edge(s, c, t)
        return s, t


def regex_to_nfa(pattern: str) -> Nfa:
    """Inductive construction; the alphabet is the sorted set of literals.
    The empty pattern denotes the language containing only the empty word."""
    parser = _RegexParser(pattern)
    start, end = parser.parse()
    alphabet = tuple(sorted({c for c in pattern if c not in "()|*"}))
    raw = Nfa(alphabet, frozenset(range(parser.count)), frozenset({start}),
              frozenset({end}), tuple(parser.triples))
    return canonical_nfa(raw)


# ---------------------------------------------------------------------------
# strongly connected components


@dataclass(frozen=True, eq=False)
class Condensation:
    """SCC decomposition of a machine's transition graph.

    Components are numbered by their smallest member state. `dag_edges`
    holds one entry per automaton edge crossing components, so parallel
    edges are kept.
    """

    scc_of: dict[int, int]
    components: tuple[frozenset[int], ...]
    dag_edges: tuple[tuple[int, int], ...]
    nontrivial: tuple[bool, ...]


def condense(d: Dfa) -> Condensation:
    succ: dict[int, list[int]] = {q: [] for q in d.states}
    for (q, sym), t in sorted(d.transitions.items(),
                              key=lambda e: (e[0][0], d.alphabet.index(e[0][1]))):
        succ[q].append(t)

    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[frozenset[int]] = []
    counter = 0

    for root in sorted(d.states):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            q, k = work[-1]
            if k == 0:
                index[q] = low[q] = counter
                counter += 1
                stack.append(q)
                on_stack.add(q)
            advanced = False
            while k < len(succ[q]):
                t = succ[q][k]
                k += 1
                if t not in index:
                    work[-1] = (q, k)
                    work.append((t, 0))
                    advanced = True
                    break
                if t in on_stack:
                    low[q] = min(low[q], index[t])
            if advanced:
                continue
            work.pop()
            if low[q] == index[q]:
                comp = set()
                while True:
                    t = stack.pop()
                    on_stack.discard(t)
                    comp.add(t)
                    if t == q:
                        break
                components.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[q])

    components.sort(key=min)
    scc_of = {q: i for i, comp in enumerate(components) for q in comp}
    dag_edges = []
    internal = [False] * len(components)
    for (q, _), t in d.transitions.items():
        cq, ct = scc_of[q], scc_of[t]
        if cq == ct:
            internal[cq] = True
        else:
            dag_edges.append((cq, ct))
    return Condensation(scc_of, tuple(components), tuple(sorted(dag_edges)),
                        tuple(internal))
