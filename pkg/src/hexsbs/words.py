"""Word algebra over the step alphabet XYZxyz and edge alphabet ABGabg.

Conventions
-----------
* Step letters: X, Y, Z are the three moves between shaded vertices of the
  hexagonal grid; lowercase letters are their inverses.
* Edge letters: A/B/G stand for the alpha/beta/gamma edge generators,
  lowercase for their inverses.
* A written word composes like functions: matrices multiply left-to-right
  in written order, and as a grid path the word is traversed starting from
  its RIGHTMOST letter.  Under this reading the word "XYZ" is the closed
  zero-area triangle, while "ZYX" walks counterclockwise around one cell.
* Step matrices: M(X) = beta*alpha, M(Y) = alpha^-1*gamma and
  M(Z) = gamma^-1*beta^-1.  The pair order inside M(Z) is pinned by the
  tile calibration suite (all bone/snake boundary words must evaluate to I
  and both stone words to -I, in both alphabets); the suite is asserted
  once at import via fixtures.TILE_WORDS.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import (ALPHA, BETA, GAMMA, IDENTITY, Mat2, PMClass, classify_pm)

STEP_LETTERS = "XYZxyz"
EDGE_LETTERS = "ABGabg"

_STEP_INVERT = str.maketrans("XYZxyz", "xyzXYZ")
_STEP_ROTATE = str.maketrans("XYZxyz", "YZXyzx")
_EDGE_INVERT = str.maketrans("ABGabg", "abgABG")


class WordError(ValueError):
    """Malformed word input; carries the offending position when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Word:
    """A sequence of letters over one alphabet, stored as a plain string."""

    alphabet: str  # "step" | "edge"
    letters: str

    def __post_init__(self):
        allowed = STEP_LETTERS if self.alphabet == "step" else EDGE_LETTERS
        if self.alphabet not in ("step", "edge"):
            raise WordError(f"unknown alphabet {self.alphabet!r}")
        for i, ch in enumerate(self.letters):
            if ch not in allowed:
                raise WordError(
                    f"invalid {self.alphabet} letter {ch!r} at index {i}", i)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


def step_word(letters: str) -> Word:
    return Word("step", letters)


def edge_word(letters: str) -> Word:
    return Word("edge", letters)


def parse_word(text: str, alphabet: str = "step") -> Word:
    return Word(alphabet, text)


def letter_inverted(ch: str) -> bool:
    return ch.islower()


def letter_axis(ch: str) -> str:
    """Axis of a step letter (X/Y/Z) or label of an edge letter (A/B/G)."""
    return ch.upper()


def free_reduce(w: Word) -> Word:
    table = _STEP_INVERT if w.alphabet == "step" else _EDGE_INVERT
    out: list[str] = []
    for ch in w.letters:
        if out and out[-1] == ch.translate(table):
            out.pop()
        else:
            out.append(ch)
    return Word(w.alphabet, "".join(out))


def is_freely_reduced(w: Word) -> bool:
    return free_reduce(w).letters == w.letters


def is_cyclically_reduced(w: Word) -> bool:
    table = _STEP_INVERT if w.alphabet == "step" else _EDGE_INVERT
    s = w.letters
    return is_freely_reduced(w) and not (s and s[0] == s[-1].translate(table))


def invert_word(w: Word) -> Word:
    table = _STEP_INVERT if w.alphabet == "step" else _EDGE_INVERT
    return Word(w.alphabet, w.letters[::-1].translate(table))


def rotate120(w: Word) -> Word:
    """Rotate a step word by 120 degrees (X -> Y -> Z -> X, letterwise)."""
    if w.alphabet != "step":
        raise WordError("rotate120 is defined on the step alphabet only")
    return Word("step", w.letters.translate(_STEP_ROTATE))


@dataclass(frozen=True)
class ClosureClass:
    """All cyclic permutations, 120-degree rotations and inverses of a word.

    The representative is the lexicographically least member under the
    plain string order of the letters X < Y < Z < x < y < z.
    """

    representative: Word
    members: frozenset

    def __contains__(self, w) -> bool:
        letters = w.letters if isinstance(w, Word) else w
        return letters in self.members

    def to_json(self) -> dict:
        return {"representative": self.representative.letters,
                "members": sorted(self.members)}


def closure_members(letters: str) -> frozenset:
    rot1 = letters.translate(_STEP_ROTATE)
    rot2 = rot1.translate(_STEP_ROTATE)
    out = set()
    for base in (letters, rot1, rot2):
        for var in (base, base[::-1].translate(_STEP_INVERT)):
            if not var:
                out.add(var)
                continue
            for i in range(len(var)):
                out.add(var[i:] + var[:i])
    return frozenset(out)


def closure(w: Word) -> ClosureClass:
    if w.alphabet != "step":
        raise WordError("closure is defined on the step alphabet only")
    members = closure_members(w.letters)
    return ClosureClass(Word("step", min(members)), members)


def canonical_representative(letters: str) -> str:
    return min(closure_members(letters))


# letter -> matrix, words multiply left-to-right
STEP_MATRICES: dict[str, Mat2] = {
    "X": BETA * ALPHA,
    "Y": ALPHA.inv() * GAMMA,
    "Z": GAMMA.inv() * BETA.inv(),
}
STEP_MATRICES["x"] = STEP_MATRICES["X"].inv()
STEP_MATRICES["y"] = STEP_MATRICES["Y"].inv()
STEP_MATRICES["z"] = STEP_MATRICES["Z"].inv()

EDGE_MATRICES: dict[str, Mat2] = {
    "A": ALPHA, "B": BETA, "G": GAMMA,
    "a": ALPHA.inv(), "b": BETA.inv(), "g": GAMMA.inv(),
}


def eval_word(w: Word) -> Mat2:
    table = STEP_MATRICES if w.alphabet == "step" else EDGE_MATRICES
    m = IDENTITY
    for ch in w.letters:
        m = m * table[ch]
    return m


def eval_letters(letters: str, alphabet: str = "step") -> Mat2:
    return eval_word(Word(alphabet, letters))


# step letter -> written edge pair (left-to-right composition order)
STEP_TO_EDGES = {"X": "BA", "Y": "aG", "Z": "gb",
                 "x": "ab", "y": "gA", "z": "BG"}
_EDGES_TO_STEP = {v: k for k, v in STEP_TO_EDGES.items()}


def step_to_edge(w: Word) -> Word:
    if w.alphabet != "step":
        raise WordError("step_to_edge expects a step word")
    return Word("edge", "".join(STEP_TO_EDGES[ch] for ch in w.letters))


def edge_to_step(w: Word) -> tuple[Word, int]:
    """Group an edge word into step letters.

    Boundary words read from an arbitrary starting edge may be off-phase
    by one edge, so grouping is retried once after a cyclic shift by one
    letter; the applied shift (0 or 1) is returned alongside the word.
    """
    if w.alphabet != "edge":
        raise WordError("edge_to_step expects an edge word")
    s = w.letters
    if len(s) % 2:
        raise WordError(f"edge word has odd length {len(s)}")
    first_error = None
    for shift in (0, 1):
        shifted = s[shift:] + s[:shift]
        steps = []
        for i in range(0, len(shifted), 2):
            pair = shifted[i:i + 2]
            step = _EDGES_TO_STEP.get(pair)
            if step is None:
                if first_error is None:
                    first_error = WordError(
                        f"edge pair {pair!r} at index {i} is not a step move", i)
                break
            steps.append(step)
        else:
            return Word("step", "".join(steps)), shift
    raise first_error


def _startup_calibration() -> None:
    # Bones and snakes must evaluate to I and stones to -I, in both
    # alphabets; guards the composition-order convention above.
    from . import fixtures
    for name, step_letters in fixtures.TILE_WORDS.items():
        expect = (PMClass.MINUS_IDENTITY if name.startswith("stone")
                  else PMClass.PLUS_IDENTITY)
        got = classify_pm(eval_letters(step_letters))
        if got is not expect:
            raise AssertionError(
                f"composition-order calibration failed on {name}: {got}")
        got_edge = classify_pm(eval_letters(
            fixtures.TILE_EDGE_WORDS[name], "edge"))
        if got_edge is not expect:
            raise AssertionError(
                f"edge-alphabet calibration failed on {name}: {got_edge}")


_startup_calibration()
