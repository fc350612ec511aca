"""Shared test plumbing: independent brute-force oracles and seeded
generators. The simulators here are written from the definitions, not via
the library's constructions, so they can serve as cross-checks."""

import itertools
import random

from rrkit import Dfa, Dfst, Nfa


def words_upto(alphabet, n):
    """All words over `alphabet` of length 0..n, shortest first."""
    for k in range(n + 1):
        for tup in itertools.product(alphabet, repeat=k):
            yield "".join(tup)


def naive_dfa_accepts(d: Dfa, word: str) -> bool:
    q = d.initial
    for c in word:
        q = d.transitions.get((q, c))
        if q is None:
            return False
    return q in d.accepting


def naive_nfa_accepts(n: Nfa, word: str) -> bool:
    eps = {}
    moves = {}
    for q, sym, t in n.transitions:
        if sym is None:
            eps.setdefault(q, set()).add(t)
        else:
            moves.setdefault((q, sym), set()).add(t)

    def close(states):
        seen = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for t in eps.get(q, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    cur = close(n.initial)
    for c in word:
        nxt = set()
        for q in cur:
            nxt |= moves.get((q, c), set())
        cur = close(nxt)
    return bool(cur & n.accepting)


def accepts(machine, word: str) -> bool:
    if isinstance(machine, Dfa):
        return naive_dfa_accepts(machine, word)
    return naive_nfa_accepts(machine, word)


def lang_upto(machine, n) -> set:
    alphabet = machine.alphabet
    return {w for w in words_upto(alphabet, n) if accepts(machine, w)}


def naive_apply(t: Dfst, x: str):
    """Transduce by stepping the definition directly; None if undefined."""
    q = t.initial
    out = []
    for c in x:
        tr = t.transitions.get((q, c))
        if tr is None:
            return None
        emitted, q = tr
        out.append(emitted)
    if q not in t.accepting:
        return None
    return "".join(out) + t.final_output.get(q, "")


def image_member(t: Dfst, a: Dfa, y: str) -> bool:
    """Does the image of L(a) under t contain y? BFS over configurations
    (transducer state, automaton state, matched length of y)."""
    start = (t.initial, a.initial, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for qt, qa, i in frontier:
            if qt in t.accepting and qa in a.accepting:
                if y[i:] == t.final_output.get(qt, ""):
                    return True
            for sym in a.alphabet:
                qa2 = a.transitions.get((qa, sym))
                tr = t.transitions.get((qt, sym))
                if qa2 is None or tr is None:
                    continue
                out, qt2 = tr
                if y[i:i + len(out)] != out:
                    continue
                conf = (qt2, qa2, i + len(out))
                if conf not in seen:
                    seen.add(conf)
                    nxt.append(conf)
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# exhaustive machine enumeration (small alphabets, small state counts)


def enumerate_dfas(n, alphabet=("a", "b")):
    """Every partial-transition machine on states 0..n-1 with initial 0."""
    slots = [(q, s) for q in range(n) for s in alphabet]
    targets = list(range(n)) + [None]
    for accepting_bits in range(2 ** n):
        accepting = frozenset(i for i in range(n) if accepting_bits >> i & 1)
        for combo in itertools.product(targets, repeat=len(slots)):
            trans = {slot: t for slot, t in zip(slots, combo) if t is not None}
            yield Dfa(tuple(alphabet), frozenset(range(n)), 0, accepting, trans)


def is_trim_already(d: Dfa) -> bool:
    fwd = {}
    back = {}
    for (q, _), t in d.transitions.items():
        fwd.setdefault(q, set()).add(t)
        back.setdefault(t, set()).add(q)

    def sweep(seeds, adj):
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            q = stack.pop()
            for t in adj.get(q, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    reach = sweep({d.initial}, fwd)
    co = sweep(set(d.accepting), back)
    live = reach & co
    if live == d.states:
        return True
    # the canonical empty machine counts as trim
    return not d.accepting and not d.transitions and len(d.states) == 1


def trim_dfas_upto(max_states, alphabet=("a", "b")):
    for n in range(1, max_states + 1):
        for d in enumerate_dfas(n, alphabet):
            if is_trim_already(d):
                yield d


def bfs_reachable_oracle(g) -> bool:
    """Plain graph search deciding whether the target node is reachable."""
    adj = {}
    for u, v in g.edges:
        adj.setdefault(u, set()).add(v)
    seen = {g.source}
    stack = [g.source]
    while stack:
        u = stack.pop()
        for v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return g.target in seen


def oracle_noncommuting_cycles(d: Dfa) -> bool:
    """Brute force: some state carries two cycle labels, each of length at
    most 2·|states|, that do not commute."""
    bound = 2 * len(d.states)
    for q in sorted(d.states):
        cycles = [w for w in words_upto(d.alphabet, bound) if w and d.walk(q, w) == q]
        for c1, c2 in itertools.combinations(cycles, 2):
            if c1 + c2 != c2 + c1:
                return True
    return False


# ---------------------------------------------------------------------------
# seeded random generators


def random_dfa(rng: random.Random, n, alphabet=("a", "b"),
               density=0.8, accept_prob=0.5) -> Dfa:
    trans = {}
    for q in range(n):
        for sym in alphabet:
            if rng.random() < density:
                trans[(q, sym)] = rng.randrange(n)
    accepting = frozenset(q for q in range(n) if rng.random() < accept_prob)
    return Dfa(tuple(alphabet), frozenset(range(n)), 0, accepting, trans)


def random_nfa(rng: random.Random, n, alphabet=("a", "b"),
               edge_count=None, eps_prob=0.2) -> Nfa:
    if edge_count is None:
        edge_count = 2 * n
    triples = set()
    for _ in range(edge_count):
        sym = None if rng.random() < eps_prob else rng.choice(alphabet)
        triples.add((rng.randrange(n), sym, rng.randrange(n)))
    initial = frozenset(rng.sample(range(n), k=max(1, rng.randrange(1, n + 1) // 2)))
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Nfa(tuple(alphabet), frozenset(range(n)), initial, accepting,
               tuple(sorted(triples, key=repr)))


def random_dfst(rng: random.Random, n, in_alphabet=("a", "b"),
                out_alphabet=("a", "b"), density=0.8, max_out=2,
                min_out=0, final_prob=0.3) -> Dfst:
    trans = {}
    for q in range(n):
        for sym in in_alphabet:
            if rng.random() < density:
                length = rng.randint(min_out, max_out)
                out = "".join(rng.choice(out_alphabet) for _ in range(length))
                trans[(q, sym)] = (out, rng.randrange(n))
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    final_output = {}
    for q in accepting:
        if rng.random() < final_prob:
            length = rng.randint(1, max_out)
            final_output[q] = "".join(rng.choice(out_alphabet) for _ in range(length))
    return Dfst(tuple(in_alphabet), tuple(out_alphabet), frozenset(range(n)), 0,
                accepting, trans, final_output)
