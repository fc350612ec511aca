"""Covering transducers for hard filters.

A hard filter can be mapped onto any regular language. The construction
first builds a surjection onto Γ*: after silently consuming the access
word, the machine repeatedly distinguishes two loop codes at the pivot
state (reading one stands for bit 0, the other for bit 1) and after a
fixed number of bits emits the letter of Γ they encode; a third code word
leads to the single accepting state. From a witness with equal-length,
prefix-incomparable cycles u and v the three codes are

    zero word  u v      one word  v u      stop word  u u s

which are pairwise prefix-incomparable, so the dispatch trie is
deterministic. Composing the surjection with the copy machine of the
target language restricts the image to exactly that language. Every
returned transducer has its image equivalence re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    Dfa,
    determinize,
    inclusion_counterexample,
    merge_alphabets,
    separating_word,
    trim,
    universal_dfa,
    widen_dfa,
    widen_nfa,
)
from .classify import (
    CertificateError,
    ClassificationMismatch,
    Hard,
    HardnessWitness,
    classify,
    verify_witness,
)
from .transducer import Dfst, canonical_dfst, compose_dfst, identity_transducer, image_nfa


@dataclass(frozen=True)
class CoverPlan:
    """Dispatch data for one surjection: the three trie codes, the target
    letters, and the fixed-width bit code assigned to each letter."""

    witness: HardnessWitness
    zero_word: str
    one_word: str
    stop_word: str
    letters: tuple[str, ...]
    bits_per_letter: int
    letter_codes: tuple[tuple[str, str], ...]

    def __post_init__(self):
        words = [self.zero_word, self.one_word, self.stop_word]
        for i, a in enumerate(words):
            for b in words[i + 1:]:
                if a.startswith(b) or b.startswith(a):
                    raise CertificateError(
                        f"dispatch words {a!r} and {b!r} are prefix-comparable")


def plan_cover(witness: HardnessWitness, letters) -> CoverPlan:
    letters = tuple(letters)
    if not letters:
        raise ValueError("target alphabet must be nonempty")
    u, v, s = witness.cycle_a, witness.cycle_b, witness.exit_word
    bits = max(1, (len(letters) - 1).bit_length())
    codes = tuple(
        (letter, format(i, f"0{bits}b")) for i, letter in enumerate(letters)
    )
    return CoverPlan(witness, u + v, v + u, u + u + s, letters, bits, codes)


def _decode(plan: CoverPlan, bits: str) -> str:
    i = int(bits, 2)
    return plan.letters[i] if i < len(plan.letters) else plan.letters[-1]


def _build_dispatch(plan: CoverPlan, access: str, in_alphabet) -> Dfst:
    transitions: dict[tuple[tuple, str], tuple[str, tuple]] = {}

    def add(src, sym, out, dst):
        prior = transitions.get((src, sym))
        if prior is not None:
            assert prior == (out, dst), "dispatch trie collision"
            return
        transitions[(src, sym)] = (out, dst)

    def hub(bits: str) -> tuple:
        return ("hub", bits)

    accept = ("accept",)
    if access:
        start = ("access", 0)
        for i, c in enumerate(access):
            dst = ("access", i + 1) if i + 1 < len(access) else hub("")
            add(("access", i), c, "", dst)
    else:
        start = hub("")

    pending = [""]
    seen_bits = {""}
    while pending:
        bits = pending.pop()
        branches: list[tuple[str, str, tuple]] = []
        for word, bit in ((plan.zero_word, "0"), (plan.one_word, "1")):
            grown = bits + bit
            if len(grown) == plan.bits_per_letter:
                branches.append((word, _decode(plan, grown), hub("")))
            else:
                branches.append((word, "", hub(grown)))
                if grown not in seen_bits:
                    seen_bits.add(grown)
                    pending.append(grown)
        if bits == "":
            branches.append((plan.stop_word, "", accept))
        for word, out, target in branches:
            src = hub(bits)
            for k, c in enumerate(word[:-1]):
                mid = ("trie", bits, word[:k + 1])
                add(src, c, "", mid)
                src = mid
            add(src, word[-1], out, target)

    keys = {start, accept}
    for (src, _), (_, dst) in transitions.items():
        keys.add(src)
        keys.add(dst)
    ids = {key: i for i, key in enumerate(sorted(keys, key=repr))}
    raw = Dfst(
        tuple(in_alphabet),
        plan.letters,
        frozenset(ids.values()),
        ids[start],
        frozenset({ids[accept]}),
        {(ids[src], sym): (out, ids[dst])
         for (src, sym), (out, dst) in transitions.items()},
        {},
    )
    return canonical_dfst(raw)


def surjection_to_star(f: Dfa, witness: HardnessWitness, letters) -> Dfst:
    """Transducer whose image over L(f) is exactly Γ* for Γ = `letters`.

    The witness must be valid for trim(f); the image equivalence is checked
    before returning.
    """
    ft = trim(f)
    verify_witness(ft, witness)
    plan = plan_cover(witness, letters)
    t = _build_dispatch(plan, witness.access, ft.alphabet)
    target = universal_dfa(plan.letters)
    gap = separating_word(image_nfa(t, f), target.to_nfa())
    if gap is not None:
        raise CertificateError(
            f"surjection image differs from the full language on {gap!r}")
    return t


def cover(f: Dfa, r: Dfa) -> Dfst:
    """Transducer mapping the hard filter f onto L(r): the surjection onto
    the target alphabet's words composed with the copy machine of r."""
    verdict = classify(f)
    if not isinstance(verdict, Hard):
        raise ClassificationMismatch("filter is easy; it does not cover arbitrary languages")
    letters = r.alphabet if r.alphabet else f.alphabet
    surjection = surjection_to_star(f, verdict.witness, letters)
    copier = identity_transducer(widen_dfa(r, letters))
    combined = compose_dfst(surjection, copier)
    gap = separating_word(image_nfa(combined, f), r.to_nfa())
    if gap is not None:
        raise CertificateError(f"cover image differs from the target on {gap!r}")
    return combined


def cover_gap(t: Dfst, f: Dfa, r: Dfa) -> tuple[str, str] | None:
    """None when image(t over f) equals L(r); otherwise a separating word
    tagged with the side it belongs to ("image" or "target")."""
    image = image_nfa(t, f)
    alpha = merge_alphabets(image.alphabet, r.alphabet)
    image_dfa = determinize(widen_nfa(image, alpha))
    target_dfa = widen_dfa(r, alpha)
    extra = inclusion_counterexample(target_dfa, image_dfa.to_nfa())
    missing = inclusion_counterexample(image_dfa, target_dfa.to_nfa())
    if extra is None and missing is None:
        return None
    if missing is None or (extra is not None and (len(extra), extra) <= (len(missing), missing)):
        return extra, "image"
    return missing, "target"


def verify_cover(t: Dfst, f: Dfa, r: Dfa) -> bool:
    """True iff t's image over L(f) is exactly L(r)."""
    return cover_gap(t, f, r) is None
