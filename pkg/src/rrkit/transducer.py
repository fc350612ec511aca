"""Deterministic finite-state transducers.

A transducer here consumes exactly one input symbol per transition and may
emit any word (possibly empty); accepting states may carry an extra word
emitted at end of input. This normal form keeps determinism syntactically
checkable (at most one transition per state and input symbol) while still
expressing chains of silent moves. A transducer computes a partial
function on words: the result is undefined whenever a transition is
missing or the run ends in a non-accepting state.

Composition follows application order: composing first `t1` then `t2`
yields the machine computing t2(t1(x)).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .automata import (
    EPS,
    AlphabetError,
    Dfa,
    FormatError,
    Nfa,
    _kw_line,
    _logical_lines,
    _parse_alphabet,
    _parse_state,
    _parse_state_list,
    _section,
    canonical_nfa,
    word_from_text,
    word_to_text,
)


@dataclass(frozen=True, eq=False)
class Dfst:
    in_alphabet: tuple[str, ...]
    out_alphabet: tuple[str, ...]
    states: frozenset[int]
    initial: int
    accepting: frozenset[int]
    transitions: dict[tuple[int, str], tuple[str, int]]
    final_output: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        in_alpha = set(self.in_alphabet)
        out_alpha = set(self.out_alphabet)
        if self.initial not in self.states:
            raise ValueError(f"initial state {self.initial} not a state")
        if not self.accepting <= self.states:
            raise ValueError("accepting states must be states")
        for (q, sym), (out, t) in self.transitions.items():
            if q not in self.states or t not in self.states:
                raise ValueError(f"transition {q}-{sym}->{t} leaves the state set")
            if sym not in in_alpha:
                raise ValueError(f"input symbol {sym!r} not in input alphabet")
            if not set(out) <= out_alpha:
                raise ValueError(f"output {out!r} uses symbols outside the output alphabet")
        for q, out in self.final_output.items():
            if q not in self.accepting:
                raise ValueError(f"final output on non-accepting state {q}")
            if not set(out) <= out_alpha:
                raise ValueError(f"final output {out!r} uses symbols outside the output alphabet")


def apply(t: Dfst, x: str) -> str | None:
    """Transduce `x`; None when the machine is undefined on it."""
    alpha = set(t.in_alphabet)
    q = t.initial
    out: list[str] = []
    for c in x:
        if c not in alpha:
            raise AlphabetError(f"symbol {c!r} not in the input alphabet")
        tr = t.transitions.get((q, c))
        if tr is None:
            return None
        emitted, q = tr
        out.append(emitted)
    if q not in t.accepting:
        return None
    out.append(t.final_output.get(q, ""))
    return "".join(out)


def _feed(t: Dfst, q: int, word: str) -> tuple[str, int] | None:
    """Run `word` through t from state q, collecting output; None if stuck."""
    out: list[str] = []
    for c in word:
        tr = t.transitions.get((q, c))
        if tr is None:
            return None
        emitted, q = tr
        out.append(emitted)
    return "".join(out), q


def compose_dfst(t1: Dfst, t2: Dfst) -> Dfst:
    """Product machine computing t2(t1(x)); undefinedness propagates."""
    if not set(t1.out_alphabet) <= set(t2.in_alphabet):
        raise AlphabetError("first machine emits symbols the second cannot read")
    ids: dict[tuple[int, int], int] = {(t1.initial, t2.initial): 0}
    queue = deque([(t1.initial, t2.initial)])
    transitions: dict[tuple[int, str], tuple[str, int]] = {}
    accepting: set[int] = set()
    final_output: dict[int, str] = {}
    while queue:
        pair = queue.popleft()
        q1, q2 = pair
        i = ids[pair]
        if q1 in t1.accepting:
            fed = _feed(t2, q2, t1.final_output.get(q1, ""))
            if fed is not None and fed[1] in t2.accepting:
                accepting.add(i)
                tail = fed[0] + t2.final_output.get(fed[1], "")
                if tail:
                    final_output[i] = tail
        for sym in t1.in_alphabet:
            tr = t1.transitions.get((q1, sym))
            if tr is None:
                continue
            mid, q1next = tr
            fed = _feed(t2, q2, mid)
            if fed is None:
                continue
            out, q2next = fed
            j = ids.get((q1next, q2next))
            if j is None:
                j = ids[(q1next, q2next)] = len(ids)
                queue.append((q1next, q2next))
            transitions[(i, sym)] = (out, j)
    raw = Dfst(t1.in_alphabet, t2.out_alphabet, frozenset(ids.values()), 0,
               frozenset(accepting), transitions, final_output)
    return canonical_dfst(raw)


def preimage_automaton(t: Dfst, a: Dfa) -> Nfa:
    """Recognizer of { x : t(x) is defined and t(x) ∈ L(a) }."""
    if not set(t.out_alphabet) <= set(a.alphabet):
        raise AlphabetError("transducer emits symbols outside the automaton's alphabet")
    ids: dict[tuple[int, int], int] = {(t.initial, a.initial): 0}
    queue = deque([(t.initial, a.initial)])
    triples: list[tuple[int, str | None, int]] = []
    accepting: set[int] = set()
    while queue:
        pair = queue.popleft()
        qt, qa = pair
        i = ids[pair]
        if qt in t.accepting:
            end = a.walk(qa, t.final_output.get(qt, ""))
            if end is not None and end in a.accepting:
                accepting.add(i)
        for sym in t.in_alphabet:
            tr = t.transitions.get((qt, sym))
            if tr is None:
                continue
            out, qt2 = tr
            qa2 = a.walk(qa, out)
            if qa2 is None:
                continue
            j = ids.get((qt2, qa2))
            if j is None:
                j = ids[(qt2, qa2)] = len(ids)
                queue.append((qt2, qa2))
            triples.append((i, sym, j))
    raw = Nfa(t.in_alphabet, frozenset(ids.values()), frozenset({0}),
              frozenset(accepting), tuple(triples))
    return canonical_nfa(raw)


def image_nfa(t: Dfst, a: Dfa) -> Nfa:
    """Recognizer of { t(x) : x ∈ L(a), t(x) defined }.

    Pair states track the joint run; a transition emitting a word becomes a
    path over its letters (an epsilon edge when the word is empty), and
    final outputs become suffix paths into a single accepting sink.
    """
    if not set(a.alphabet) <= set(t.in_alphabet):
        raise AlphabetError("automaton uses symbols the transducer cannot read")
    ids: dict[tuple, int] = {}

    def node(key) -> int:
        j = ids.get(key)
        if j is None:
            j = ids[key] = len(ids)
        return j

    sink = node(("acc",))
    start = node((t.initial, a.initial))
    queue = deque([(t.initial, a.initial)])
    seen = {(t.initial, a.initial)}
    triples: list[tuple[int, str | None, int]] = []

    def emit_path(src: int, word: str, dst: int, tag):
        if not word:
            triples.append((src, EPS, dst))
            return
        cur = src
        for k, c in enumerate(word[:-1]):
            nxt = node(("path", tag, k))
            triples.append((cur, c, nxt))
            cur = nxt
        triples.append((cur, word[-1], dst))

    while queue:
        pair = queue.popleft()
        qt, qa = pair
        i = ids[pair]
        if qt in t.accepting and qa in a.accepting:
            emit_path(i, t.final_output.get(qt, ""), sink, ("fin", pair))
        for sym in a.alphabet:
            qa2 = a.transitions.get((qa, sym))
            tr = t.transitions.get((qt, sym))
            if qa2 is None or tr is None:
                continue
            out, qt2 = tr
            if (qt2, qa2) not in seen:
                seen.add((qt2, qa2))
                queue.append((qt2, qa2))
            emit_path(i, out, node((qt2, qa2)), ("step", pair, sym))
    raw = Nfa(t.out_alphabet, frozenset(ids.values()), frozenset({start}),
              frozenset({sink}), tuple(triples))
    return canonical_nfa(raw)


def identity_transducer(a: Dfa) -> Dfst:
    """Copy machine defined exactly on L(a): each transition re-emits its
    own input symbol."""
    transitions = {
        (q, sym): (sym, t) for (q, sym), t in a.transitions.items()
    }
    raw = Dfst(a.alphabet, a.alphabet, a.states, a.initial, a.accepting,
               transitions, {})
    return canonical_dfst(raw)


def canonical_dfst(t: Dfst) -> Dfst:
    """BFS renumbering over input symbols in alphabet order; unreachable
    states are dropped."""
    order = {t.initial: 0}
    queue = deque([t.initial])
    while queue:
        q = queue.popleft()
        for sym in t.in_alphabet:
            tr = t.transitions.get((q, sym))
            if tr is not None and tr[1] not in order:
                order[tr[1]] = len(order)
                queue.append(tr[1])
    transitions = {
        (order[q], sym): (out, order[dst])
        for (q, sym), (out, dst) in t.transitions.items()
        if q in order
    }
    final_output = {
        order[q]: out for q, out in t.final_output.items() if q in order and out
    }
    return Dfst(t.in_alphabet, t.out_alphabet, frozenset(order.values()), 0,
                frozenset(order[q] for q in t.accepting if q in order),
                transitions, final_output)


# ---------------------------------------------------------------------------
# text format
#
#   dfst
#   in_alphabet a b
#   out_alphabet a b
#   states 0 1
#   initial 0
#   accept 1
#   trans <src> <in-symbol> <out-word|-> <dst>
#   final <state> <out-word|->          (optional)


def parse_dfst(text: str) -> Dfst:
    lines = _logical_lines(text)
    no, rest = _section(lines, 0, "dfst")
    if rest:
        raise FormatError("unexpected tokens after header", no)
    no, toks = _section(lines, 1, "in_alphabet")
    in_alphabet = _parse_alphabet(toks, no)
    no, toks = _section(lines, 2, "out_alphabet")
    out_alphabet = _parse_alphabet(toks, no)
    no, toks = _section(lines, 3, "states")
    states = set(_parse_state_list(toks, no))
    no, toks = _section(lines, 4, "initial")
    if len(toks) != 1:
        raise FormatError("a dfst needs exactly one initial state", no)
    initial = _parse_state(toks[0], states, no)
    no, toks = _section(lines, 5, "accept")
    accepting = {_parse_state(tok, states, no) for tok in toks}

    transitions: dict[tuple[int, str], tuple[str, int]] = {}
    final_output: dict[int, str] = {}
    for no, toks in lines[6:]:
        if toks[0] == "trans":
            if len(toks) != 5:
                raise FormatError("want `trans <src> <in-symbol> <out-word|-> <dst>`", no)
            src = _parse_state(toks[1], states, no)
            if toks[2] == "eps":
                raise FormatError("a dfst consumes exactly one input symbol per transition", no)
            sym = toks[2]
            if sym not in in_alphabet:
                raise FormatError(f"undeclared input symbol {sym!r}", no)
            out = word_from_text(toks[3])
            for c in out:
                if c not in out_alphabet:
                    raise FormatError(f"undeclared output symbol {c!r}", no)
            dst = _parse_state(toks[4], states, no)
            if (src, sym) in transitions:
                raise FormatError(f"duplicate transition from state {src} on {sym!r}", no)
            transitions[(src, sym)] = (out, dst)
        elif toks[0] == "final":
            if len(toks) != 3:
                raise FormatError("want `final <state> <out-word|->`", no)
            q = _parse_state(toks[1], states, no)
            if q not in accepting:
                raise FormatError(f"final output on non-accepting state {q}", no)
            if q in final_output:
                raise FormatError(f"duplicate final output for state {q}", no)
            out = word_from_text(toks[2])
            for c in out:
                if c not in out_alphabet:
                    raise FormatError(f"undeclared output symbol {c!r}", no)
            final_output[q] = out
        else:
            raise FormatError(f"unexpected `{toks[0]}`", no)
    return Dfst(in_alphabet, out_alphabet, frozenset(states), initial,
                frozenset(accepting), transitions, final_output)


def dfst_to_text(t: Dfst) -> str:
    t = canonical_dfst(t)
    idx = {sym: k for k, sym in enumerate(t.in_alphabet)}
    lines = [
        "dfst",
        _kw_line("in_alphabet", t.in_alphabet),
        _kw_line("out_alphabet", t.out_alphabet),
        _kw_line("states", (str(q) for q in sorted(t.states))),
        f"initial {t.initial}",
        _kw_line("accept", (str(q) for q in sorted(t.accepting))),
    ]
    for (q, sym), (out, dst) in sorted(t.transitions.items(),
                                       key=lambda e: (e[0][0], idx[e[0][1]])):
        lines.append(f"trans {q} {sym} {word_to_text(out)} {dst}")
    for q in sorted(t.final_output):
        lines.append(f"final {q} {word_to_text(t.final_output[q])}")
    return "\n".join(lines) + "\n"
