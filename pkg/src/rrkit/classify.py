"""Decide whether a regular filter is hard or easy, with checkable proof.

A filter is *hard* when some state of its trimmed automaton carries two
cycles neither of which is a prefix of the other; such a filter can be
mapped onto any regular language by a deterministic transducer. Otherwise
the filter is *easy*: its language is bounded, i.e. contained in a product
w1* w2* ... wn*, and it decomposes into finitely many expressions of the
shape p x1* y1 ... xn* yn.

Both verdicts come with certificates that are re-verified before being
returned:

* ``Hard`` carries a ``HardnessWitness``: an access word to the pivot
  state, two equal-length prefix-incomparable cycles there, and an exit
  word to acceptance. Replaying those words on the trimmed machine checks
  the certificate.
* ``Easy`` carries the decomposition (proved equivalent to the filter) and
  the envelope words (whose star product provably includes the filter).

Detection reduces the cycle condition to a regular inclusion: for each
state q inside a cycle-bearing component, take a shortest cycle u at q and
test whether every cycle at q is a power of u's primitive root x. A
counterexample cycle v cannot commute with u (two commuting cycles are
powers of one root), so (u v, v u) is an equal-length, prefix-incomparable
pair witnessing hardness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automata import (
    AlphabetError,
    Dfa,
    FormatError,
    Nfa,
    canonical_nfa,
    condense,
    determinize,
    inclusion_counterexample,
    nfa_union,
    separating_word,
    trim,
    word_from_text,
    word_to_text,
)


class ClassificationMismatch(ValueError):
    """An operation that needs one verdict was handed a filter of the other."""


class CertificateError(ValueError):
    """A hardness witness or bounded decomposition failed verification."""


@dataclass(frozen=True)
class HardnessWitness:
    """Pivot state with two prefix-incomparable cycles.

    `access` leads from the initial state to `state`; `cycle_a` and
    `cycle_b` both loop at `state`; `exit_word` leads from `state` to an
    accepting state.
    """

    state: int
    access: str
    cycle_a: str
    cycle_b: str
    exit_word: str


@dataclass(frozen=True)
class BoundedExpr:
    """The language  prefix · x1* y1 · ... · xn* yn  for blocks (xi, yi)."""

    prefix: str
    blocks: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class Hard:
    witness: HardnessWitness


@dataclass(frozen=True)
class Easy:
    decomposition: tuple[BoundedExpr, ...]
    envelope: tuple[str, ...]


Classification = Hard | Easy


def primitive_root(w: str) -> str:
    """Shortest x with w = x^k; the word itself when it is primitive."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    raise AssertionError("unreachable")


def normalize_witness(u0: str, v0: str) -> tuple[str, str]:
    """Turn a non-commuting cycle pair into an equal-length,
    prefix-incomparable pair at the same state: (u0 v0, v0 u0)."""
    if u0 + v0 == v0 + u0:
        raise ValueError("cycle words commute; they are powers of a common root")
    return u0 + v0, v0 + u0


# ---------------------------------------------------------------------------
# hardness detection


def _shortest_path_word(d: Dfa, starts, goals, within=None) -> str | None:
    goals = set(goals)
    for q in sorted(starts):
        if q in goals:
            return ""
    seen = set(starts)
    queue = deque((q, "") for q in sorted(starts))
    while queue:
        q, word = queue.popleft()
        for sym in d.alphabet:
            t = d.transitions.get((q, sym))
            if t is None or t in seen:
                continue
            if within is not None and t not in within:
                continue
            if t in goals:
                return word + sym
            seen.add(t)
            queue.append((t, word + sym))
    return None


def _shortest_cycle(d: Dfa, q: int, component) -> str:
    """Shortest nonempty word looping at q without leaving its component."""
    queue = deque()
    seen = set()
    for sym in d.alphabet:
        t = d.transitions.get((q, sym))
        if t is None or t not in component:
            continue
        if t == q:
            return sym
        if t not in seen:
            seen.add(t)
            queue.append((t, sym))
    while queue:
        cur, word = queue.popleft()
        for sym in d.alphabet:
            t = d.transitions.get((cur, sym))
            if t is None or t not in component:
                continue
            if t == q:
                return word + sym
            if t not in seen:
                seen.add(t)
                queue.append((t, word + sym))
    raise AssertionError("state in a cycle-bearing component has no cycle")


def _cycle_nfa(d: Dfa, q: int, component) -> Nfa:
    """All words looping at q while staying inside q's component."""
    triples = tuple(
        (src, sym, dst)
        for (src, sym), dst in sorted(d.transitions.items())
        if src in component and dst in component
    )
    return Nfa(d.alphabet, frozenset(component), frozenset({q}),
               frozenset({q}), triples)


def _power_dfa(x: str, alphabet) -> Dfa:
    """Machine for x*: a cycle of |x| states reading x."""
    n = len(x)
    transitions = {(i, x[i]): (i + 1) % n for i in range(n)}
    return Dfa(tuple(alphabet), frozenset(range(n)), 0, frozenset({0}), transitions)


def _find_witness(ft: Dfa) -> HardnessWitness | None:
    """Scan the trimmed machine for a state with prefix-incomparable cycles."""
    cond = condense(ft)
    for q in sorted(ft.states):
        comp_idx = cond.scc_of[q]
        if not cond.nontrivial[comp_idx]:
            continue
        component = cond.components[comp_idx]
        u0 = _shortest_cycle(ft, q, component)
        x = primitive_root(u0)
        v0 = inclusion_counterexample(_power_dfa(x, ft.alphabet),
                                      _cycle_nfa(ft, q, component))
        if v0 is None:
            continue
        cycle_a, cycle_b = normalize_witness(u0, v0)
        access = _shortest_path_word(ft, {ft.initial}, {q})
        exit_word = _shortest_path_word(ft, {q}, ft.accepting)
        assert access is not None and exit_word is not None
        return HardnessWitness(q, access, cycle_a, cycle_b, exit_word)
    return None


def verify_witness(f: Dfa, w: HardnessWitness) -> None:
    """Replay a witness against trim(f); raises CertificateError if any
    invariant fails."""
    ft = trim(f)
    if w.state not in ft.states:
        raise CertificateError(f"witness state {w.state} is not a state of the trimmed filter")
    if ft.walk(ft.initial, w.access) != w.state:
        raise CertificateError("access word does not reach the witness state")
    if ft.walk(w.state, w.cycle_a) != w.state:
        raise CertificateError("first cycle word does not loop at the witness state")
    if ft.walk(w.state, w.cycle_b) != w.state:
        raise CertificateError("second cycle word does not loop at the witness state")
    end = ft.walk(w.state, w.exit_word)
    if end is None or end not in ft.accepting:
        raise CertificateError("exit word does not reach an accepting state")
    if w.cycle_a.startswith(w.cycle_b) or w.cycle_b.startswith(w.cycle_a):
        raise CertificateError("cycle words must be prefix-incomparable")


# ---------------------------------------------------------------------------
# bounded decomposition


def _forced_ring(d: Dfa, entry: int, component, scc_of) -> tuple[str, list[int]]:
    """The unique cycle through an easy machine's component, starting at
    `entry`. Returns its label and the visited states in order."""
    comp_idx = scc_of[entry]
    word = []
    ring = [entry]
    q = entry
    while True:
        succs = [
            (sym, t)
            for sym in d.alphabet
            if (t := d.transitions.get((q, sym))) is not None and scc_of[t] == comp_idx
        ]
        assert len(succs) == 1, "easy component must have exactly one inner successor per state"
        sym, q = succs[0]
        word.append(sym)
        if q == entry:
            return "".join(word), ring
        ring.append(q)


def _segments_to_expr(segments) -> BoundedExpr:
    prefix: list[str] = []
    blocks: list[list[str]] = []
    for kind, word in segments:
        if kind == "lit":
            if blocks:
                blocks[-1][1] += word
            else:
                prefix.append(word)
        else:
            blocks.append([word, ""])
    return BoundedExpr("".join(prefix), tuple((x, y) for x, y in blocks))


def _easy_exprs(ft: Dfa) -> tuple[BoundedExpr, ...]:
    """Enumerate accepting run shapes through the component DAG.

    Inside a cycle-bearing component the walk is forced, so a traversal
    entering at state e contributes one starred loop (the full ring word at
    e) plus a literal ring prefix to the stop or exit point. The
    enumeration is exponential in the DAG size, which is fine at the scale
    this library targets; correctness rests on the equivalence check, not
    on minimality.
    """
    if not ft.accepting:
        return ()
    cond = condense(ft)
    out: list[BoundedExpr] = []

    def explore(q: int, segments) -> None:
        comp_idx = cond.scc_of[q]
        if not cond.nontrivial[comp_idx]:
            if q in ft.accepting:
                out.append(_segments_to_expr(segments))
            for sym in ft.alphabet:
                t = ft.transitions.get((q, sym))
                if t is not None:
                    explore(t, segments + [("lit", sym)])
            return
        ring_word, ring = _forced_ring(ft, q, cond.components[comp_idx], cond.scc_of)
        looped = segments + [("star", ring_word)]
        for i, d in enumerate(ring):
            if d in ft.accepting:
                out.append(_segments_to_expr(looped + [("lit", ring_word[:i])]))
            for sym in ft.alphabet:
                t = ft.transitions.get((d, sym))
                if t is not None and cond.scc_of[t] != comp_idx:
                    explore(t, looped + [("lit", ring_word[:i] + sym)])

    explore(ft.initial, [])
    return tuple(dict.fromkeys(out))


def _envelope_of(exprs) -> tuple[str, ...]:
    """Envelope factors: in expression order, each prefix/bridge letter and
    each loop word; consecutive duplicates merge (w* w* = w*)."""
    factors: list[str] = []

    def push(word: str) -> None:
        if not factors or factors[-1] != word:
            factors.append(word)

    for e in exprs:
        for c in e.prefix:
            push(c)
        for loop, bridge in e.blocks:
            push(loop)
            for c in bridge:
                push(c)
    return tuple(factors)


def expr_to_nfa(e: BoundedExpr, alphabet) -> Nfa:
    """Recognizer of a bounded expression's language."""
    alphabet = tuple(alphabet)
    alpha = set(alphabet)
    for word in [e.prefix, *(w for block in e.blocks for w in block)]:
        for c in word:
            if c not in alpha:
                raise AlphabetError(f"symbol {c!r} not in the alphabet")
    triples: list[tuple[int, str | None, int]] = []
    count = 0

    def fresh() -> int:
        nonlocal count
        count += 1
        return count - 1

    def chain(src: int, word: str) -> int:
        for c in word:
            nxt = fresh()
            triples.append((src, c, nxt))
            src = nxt
        return src

    cur = fresh()
    start = cur
    cur = chain(cur, e.prefix)
    for loop, bridge in e.blocks:
        if not loop:
            raise ValueError("loop word of a bounded expression must be nonempty")
        back = chain(cur, loop[:-1])
        triples.append((back, loop[-1], cur))
        cur = chain(cur, bridge)
    raw = Nfa(alphabet, frozenset(range(count)), frozenset({start}),
              frozenset({cur}), tuple(triples))
    return canonical_nfa(raw)


def _star_product_nfa(words, alphabet) -> Nfa:
    """Recognizer of w1* w2* ... wn* (the empty product is {empty word})."""
    alphabet = tuple(alphabet)
    triples: list[tuple[int, str | None, int]] = []
    count = 1  # state 0 opens the product
    anchor = 0
    for word in words:
        back = anchor
        for c in word[:-1]:
            triples.append((back, c, count))
            back = count
            count += 1
        triples.append((back, word[-1], anchor))
        triples.append((anchor, None, count))
        anchor = count
        count += 1
    raw = Nfa(alphabet, frozenset(range(count)), frozenset({0}),
              frozenset({anchor}), tuple(triples))
    return canonical_nfa(raw)


def verify_easy(f: Dfa, decomposition, envelope) -> None:
    """Check an easy certificate: the decomposition's union must equal the
    filter's language and the envelope's star product must include it."""
    alphabet = f.alphabet
    union = nfa_union([expr_to_nfa(e, alphabet) for e in decomposition], alphabet)
    gap = separating_word(union, f.to_nfa())
    if gap is not None:
        raise CertificateError(
            f"decomposition differs from the filter on {word_to_text(gap)!r}")
    env_dfa = determinize(_star_product_nfa(envelope, alphabet))
    leak = inclusion_counterexample(env_dfa, f.to_nfa())
    if leak is not None:
        raise CertificateError(
            f"envelope star product misses the filter word {word_to_text(leak)!r}")
    for e in decomposition:
        for loop, _ in e.blocks:
            if not loop:
                raise CertificateError("decomposition contains an empty loop word")


# ---------------------------------------------------------------------------
# the classifier


def classify(f: Dfa) -> Classification:
    """Hard with a verified witness, or Easy with a verified decomposition
    and envelope. The empty language is easy with an empty certificate."""
    ft = trim(f)
    witness = _find_witness(ft)
    if witness is not None:
        verify_witness(ft, witness)
        return Hard(witness)
    exprs = _easy_exprs(ft)
    envelope_words = _envelope_of(exprs)
    verify_easy(ft, exprs, envelope_words)
    return Easy(exprs, envelope_words)


def decompose(f: Dfa) -> tuple[BoundedExpr, ...]:
    """Bounded decomposition of an easy filter; raises
    ClassificationMismatch if the filter is hard."""
    verdict = classify(f)
    if isinstance(verdict, Hard):
        raise ClassificationMismatch("filter is hard; it has no bounded decomposition")
    return verdict.decomposition


def envelope(f: Dfa) -> tuple[str, ...]:
    """Words w1..wn with L(f) ⊆ w1*...wn*, for an easy filter."""
    verdict = classify(f)
    if isinstance(verdict, Hard):
        raise ClassificationMismatch("filter is hard; it is not a bounded language")
    return verdict.envelope


# ---------------------------------------------------------------------------
# certificate text
#
#   hard q=<id> p=<word|-> u=<word> v=<word> s=<word|->
# or
#   easy
#   expr p=<word|-> blocks=(x,y);(x,y);...
#   envelope w1 w2 ...


def classification_to_text(c: Classification) -> str:
    if isinstance(c, Hard):
        w = c.witness
        return (f"hard q={w.state} p={word_to_text(w.access)}"
                f" u={w.cycle_a} v={w.cycle_b}"
                f" s={word_to_text(w.exit_word)}\n")
    lines = ["easy"]
    for e in c.decomposition:
        blocks = ";".join(f"({x},{word_to_text(y)})" for x, y in e.blocks)
        lines.append(f"expr p={word_to_text(e.prefix)} blocks={blocks}")
    lines.append(" ".join(["envelope", *c.envelope]).rstrip())
    return "\n".join(lines) + "\n"


def _field(tok: str, key: str, no: int) -> str:
    if not tok.startswith(key + "="):
        raise FormatError(f"expected `{key}=...`, got `{tok}`", no)
    return tok[len(key) + 1:]


def classification_from_text(text: str) -> Classification:
    lines = [(no, raw.split("#", 1)[0].strip())
             for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, body) for no, body in lines if body]
    if not lines:
        raise FormatError("empty certificate")
    no, head = lines[0]
    toks = head.split()
    kind = toks[0].lower()
    if kind == "hard":
        if len(toks) != 6:
            raise FormatError("want `hard q=<id> p=<word> u=<word> v=<word> s=<word>`", no)
        state = _field(toks[1], "q", no)
        if not state.isdigit():
            raise FormatError(f"bad state id {state!r}", no)
        return Hard(HardnessWitness(
            int(state),
            word_from_text(_field(toks[2], "p", no)),
            word_from_text(_field(toks[3], "u", no)),
            word_from_text(_field(toks[4], "v", no)),
            word_from_text(_field(toks[5], "s", no)),
        ))
    if kind != "easy":
        raise FormatError(f"unknown certificate kind `{toks[0]}`", no)
    exprs: list[BoundedExpr] = []
    envelope_words: tuple[str, ...] | None = None
    for no, body in lines[1:]:
        toks = body.split()
        if toks[0] == "expr":
            if envelope_words is not None:
                raise FormatError("expr line after envelope line", no)
            if len(toks) != 3:
                raise FormatError("want `expr p=<word> blocks=...`", no)
            prefix = word_from_text(_field(toks[1], "p", no))
            blocks_text = _field(toks[2], "blocks", no)
            blocks: list[tuple[str, str]] = []
            if blocks_text:
                for piece in blocks_text.split(";"):
                    if not (piece.startswith("(") and piece.endswith(")") and "," in piece):
                        raise FormatError(f"bad block `{piece}`", no)
                    x, y = piece[1:-1].split(",", 1)
                    blocks.append((word_from_text(x), word_from_text(y)))
            exprs.append(BoundedExpr(prefix, tuple(blocks)))
        elif toks[0] == "envelope":
            if envelope_words is not None:
                raise FormatError("duplicate envelope line", no)
            envelope_words = tuple(toks[1:])
        else:
            raise FormatError(f"unexpected `{toks[0]}` in certificate", no)
    if envelope_words is None:
        raise FormatError("easy certificate is missing its envelope line")
    return Easy(tuple(exprs), envelope_words)
