"""Realizability solvers and reduction builders.

An instance pairs a fixed filter language with an input machine and asks
whether the two languages intersect; solvers answer with a shortest
witness word. For easy filters there is also a counter-style solver that
works directly on a bounded decomposition, searching loop exponents only
until the input machine's state map repeats. `reduce_rr` rewrites an
instance through a transducer (the preimage construction), and
`reachability_gadget` turns an s-t digraph reachability question into an
instance whose answer is "yes" exactly when the target is reachable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    EPS,
    AlphabetError,
    Dfa,
    FormatError,
    Nfa,
    _logical_lines,
    determinize,
    merge_alphabets,
    product_intersect,
    run,
    run_nfa,
    shortest_word,
    widen_dfa,
    widen_nfa,
)
from .classify import expr_to_nfa
from .transducer import Dfst, preimage_automaton


def solve_rr(filter_dfa: Dfa, a: Dfa) -> str | None:
    """Shortest word in L(a) ∩ L(filter), or None when the instance is a no."""
    alpha = merge_alphabets(filter_dfa.alphabet, a.alphabet)
    meet = product_intersect(widen_dfa(filter_dfa, alpha).to_nfa(),
                             widen_dfa(a, alpha).to_nfa())
    return shortest_word(meet)


def solve_rr_nfa(filter_nfa: Nfa, a: Nfa) -> str | None:
    """Same contract as solve_rr with both machines nondeterministic."""
    alpha = merge_alphabets(filter_nfa.alphabet, a.alphabet)
    meet = product_intersect(widen_nfa(filter_nfa, alpha), widen_nfa(a, alpha))
    return shortest_word(meet)


def solve_rr_bounded_detail(exprs, a: Dfa):
    """Counter search over a bounded decomposition.

    Tries, expression by expression, words  prefix x1^i1 y1 ... xn^in yn
    accepted by `a`. Per block the exponent only grows until the state map
    q -> q·x revisits a state, since larger powers land on states already
    tried with an identical remaining suffix. Returns (word, expression
    index, exponent vector) or None; any witness is re-checked against both
    the machine and its generating expression before being returned.
    """
    exprs = list(exprs)
    for e in exprs:
        for loop, _ in e.blocks:
            if not loop:
                raise ValueError("bounded expression has an empty loop word")

    def advance(q: int | None, word: str) -> int | None:
        for c in word:
            if q is None:
                return None
            q = a.transitions.get((q, c))
        return q

    for index, e in enumerate(exprs):
        dead: set[tuple[int, int]] = set()

        def search(i: int, q: int) -> list[int] | None:
            if i == len(e.blocks):
                return [] if q in a.accepting else None
            if (i, q) in dead:
                return None
            loop, bridge = e.blocks[i]
            cur = q
            seen = set()
            exponent = 0
            while cur is not None and cur not in seen:
                seen.add(cur)
                after = advance(cur, bridge)
                if after is not None:
                    rest = search(i + 1, after)
                    if rest is not None:
                        return [exponent, *rest]
                cur = advance(cur, loop)
                exponent += 1
            dead.add((i, q))
            return None

        start = advance(a.initial, e.prefix)
        if start is None:
            continue
        exponents = search(0, start)
        if exponents is None:
            continue
        word = e.prefix + "".join(
            loop * k + bridge for (loop, bridge), k in zip(e.blocks, exponents)
        )
        if not run(a, word):
            raise AssertionError("bounded solver produced a word the machine rejects")
        expr_symbols = sorted(set(e.prefix) | {c for x, y in e.blocks for c in x + y})
        alpha = merge_alphabets(a.alphabet, expr_symbols)
        if not run_nfa(expr_to_nfa(e, alpha), word):
            raise AssertionError("bounded solver produced a word outside its expression")
        return word, index, exponents
    return None


def solve_rr_bounded(exprs, a: Dfa) -> str | None:
    """Witness word for a bounded-decomposition instance, or None."""
    hit = solve_rr_bounded_detail(exprs, a)
    return None if hit is None else hit[0]


def reduce_rr(t: Dfst, a: Dfa) -> Dfa:
    """Rewrite an instance through a transducer: the returned machine
    accepts { x : t(x) ∈ L(a) }, so a filter F meets it exactly when the
    image of F under t meets L(a)."""
    return determinize(preimage_automaton(t, a))


# ---------------------------------------------------------------------------
# digraph reachability gadget
#
#   graph
#   nodes N
#   source s
#   target t
#   edge u v


@dataclass(frozen=True)
class Digraph:
    nodes: int
    edges: tuple[tuple[int, int], ...]
    source: int
    target: int

    def __post_init__(self):
        if not (0 <= self.source < self.nodes and 0 <= self.target < self.nodes):
            raise ValueError("source/target outside the node range")
        for u, v in self.edges:
            if not (0 <= u < self.nodes and 0 <= v < self.nodes):
                raise ValueError(f"edge ({u}, {v}) outside the node range")


def parse_digraph(text: str) -> Digraph:
    lines = _logical_lines(text)
    if not lines or lines[0][1] != ["graph"]:
        raise FormatError("expected header `graph`", lines[0][0] if lines else None)

    def int_line(i, keyword):
        if i >= len(lines):
            raise FormatError(f"missing `{keyword}` line")
        no, toks = lines[i]
        if toks[0] != keyword:
            raise FormatError(f"expected `{keyword}`, got `{toks[0]}`", no)
        if len(toks) != 2 or not toks[1].isdigit():
            raise FormatError(f"want `{keyword} <number>`", no)
        return no, int(toks[1])

    no, nodes = int_line(1, "nodes")
    no, source = int_line(2, "source")
    no, target = int_line(3, "target")
    edges: list[tuple[int, int]] = []
    for no, toks in lines[4:]:
        if toks[0] != "edge" or len(toks) != 3:
            raise FormatError("want `edge <from> <to>`", no)
        if not (toks[1].isdigit() and toks[2].isdigit()):
            raise FormatError("edge endpoints must be node numbers", no)
        u, v = int(toks[1]), int(toks[2])
        if u >= nodes or v >= nodes:
            raise FormatError(f"edge ({u}, {v}) outside the node range", no)
        edges.append((u, v))
    try:
        return Digraph(nodes, tuple(edges), source, target)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def reachability_gadget(g: Digraph, word: str, alphabet) -> Nfa:
    """Machine accepting {word} when g's target is reachable from its
    source, and nothing otherwise: one state per node, an epsilon edge per
    graph edge, and a path labeled by `word` from the target node to the
    single accepting state."""
    alphabet = tuple(alphabet)
    alpha = set(alphabet)
    for c in word:
        if c not in alpha:
            raise AlphabetError(f"symbol {c!r} not in the alphabet")
    triples: list[tuple[int, str | None, int]] = [
        (u, EPS, v) for u, v in g.edges
    ]
    cur = g.target
    for k, c in enumerate(word):
        nxt = g.nodes + k
        triples.append((cur, c, nxt))
        cur = nxt
    states = frozenset(range(g.nodes + len(word)))
    return Nfa(alphabet, states, frozenset({g.source}), frozenset({cur}),
               tuple(triples))
