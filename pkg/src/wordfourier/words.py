"""Free-group words over an explicit ambient alphabet.

A word is a finite sequence of signed generator letters.  The ambient
alphabet is carried explicitly by every word because the number of
generators it contains changes the distribution the word induces on a
finite group, even for generators that never occur in the word.

Grammar accepted by :func:`parse_word`::

    WORD   := TERM+
    TERM   := FACTOR ("^" SIGNED_INT)?
    FACTOR := "1" | SYMBOL | "(" WORD ")" | "[" WORD "," WORD "]"
            | "{" WORD "," WORD "}"
    SYMBOL := letter followed by letters, digits or underscores

Juxtaposition or "*" denotes concatenation and whitespace is ignored.
"[a,b]" expands to a b a^-1 b^-1, "{a,b}" expands to a b a b^-1, and "1"
denotes the empty word.  A zero exponent is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import WordSyntaxError

# A letter is (generator index, sign) with sign +1 or -1.
Letter = tuple[int, int]


@dataclass(frozen=True)
class Alphabet:
    """Ordered, distinct generator names of the ambient free group."""

    names: tuple[str, ...]
    #: set when the alphabet was inferred from word text rather than given
    #: explicitly; ignored by equality so inferred and declared alphabets
    #: with the same generators compare equal.
    inferred: bool = field(default=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if any(not n for n in names):
            raise ValueError("generator names must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def without(self, drop: Iterable[str]) -> "Alphabet":
        gone = set(drop)
        return Alphabet(tuple(n for n in self.names if n not in gone))

    def __iter__(self):
        return iter(self.names)

    def __str__(self) -> str:
        return "(" + ",".join(self.names) + ")"


EMPTY_ALPHABET = Alphabet(())


@dataclass(frozen=True)
class Word:
    """An unreduced sequence of signed letters over an ambient alphabet."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(s)) for g, s in self.letters)
        object.__setattr__(self, "letters", letters)
        rank = self.alphabet.rank
        for g, s in letters:
            if not 0 <= g < rank:
                raise ValueError(f"letter index {g} outside alphabet {self.alphabet}")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __str__(self) -> str:
        return word_to_str(self)


def empty_word(alphabet: Alphabet = EMPTY_ALPHABET) -> Word:
    return Word(alphabet, ())


def word_from_syms(alphabet: Alphabet, pairs: Iterable[tuple[str, int]]) -> Word:
    """Build a word from (generator name, sign) pairs."""
    return Word(alphabet, tuple((alphabet.index(n), s) for n, s in pairs))


def word_to_str(word: Word) -> str:
    """Render with "*" separators, collapsing runs into powers: x*y^-2."""
    if not word.letters:
        return "1"
    runs: list[tuple[int, int, int]] = []  # (gen, sign, count)
    for g, s in word.letters:
        if runs and runs[-1][0] == g and runs[-1][1] == s:
            runs[-1] = (g, s, runs[-1][2] + 1)
        else:
            runs.append((g, s, 1))
    parts = []
    for g, s, c in runs:
        e = s * c
        name = word.alphabet.names[g]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class _Parser:
    """Recursive-descent parser for the word grammar."""

    def __init__(self, text: str, alphabet: Alphabet | None):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.seen: list[str] = []  # inference order of first appearance

    def fail(self, message: str, position: int | None = None):
        raise WordSyntaxError(message, self.pos if position is None else position)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Word:
        letters = self.word_body(stoppers="")
        if self.peek() != "":
            self.fail("unexpected trailing input")
        if self.alphabet is not None:
            alphabet = self.alphabet
        else:
            alphabet = Alphabet(tuple(self.seen), inferred=True)
        return Word(alphabet, tuple((alphabet.index(n), s) for n, s in letters))

    def word_body(self, stoppers: str) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        saw_term = False
        while True:
            ch = self.peek()
            if ch == "" or ch in stoppers:
                break
            if ch == "*":
                self.pos += 1
                continue
            out.extend(self.term())
            saw_term = True
        if not saw_term:
            self.fail('empty word (write "1" for the identity)')
        return out

    def term(self) -> list[tuple[str, int]]:
        ch = self.peek()
        if ch.isalpha():
            # a run of juxtaposed generators; the exponent binds to the last
            names = self.symbols()
            letters = [(n, 1) for n in names[:-1]]
            tail = [(names[-1], 1)]
            return letters + self._apply_exponent(tail)
        return self._apply_exponent(self.factor())

    def _apply_exponent(self, letters: list[tuple[str, int]]) -> list[tuple[str, int]]:
        if self.peek() != "^":
            return letters
        self.pos += 1
        at = self.pos
        exponent = self.signed_int()
        if exponent == 0:
            self.fail("zero exponent is not allowed", at)
        if exponent < 0:
            letters = [(n, -s) for n, s in reversed(letters)]
            exponent = -exponent
        return letters * exponent

    def factor(self) -> list[tuple[str, int]]:
        ch = self.peek()
        if ch == "1":
            self.pos += 1
            return []
        if ch == "(":
            self.pos += 1
            body = self.word_body(stoppers=")")
            self.expect(")")
            return body
        if ch in "[{":
            closing = "]" if ch == "[" else "}"
            self.pos += 1
            left = self.word_body(stoppers=",")
            self.expect(",")
            right = self.word_body(stoppers=closing)
            self.expect(closing)
            left_inv = [(n, -s) for n, s in reversed(left)]
            right_inv = [(n, -s) for n, s in reversed(right)]
            if ch == "[":  # [a,b] -> a b a^-1 b^-1
                return left + right + left_inv + right_inv
            return left + right + left + right_inv  # {a,b} -> a b a b^-1
        if ch.isalpha():
            return [(n, 1) for n in self.symbols()]
        self.fail("expected a generator symbol, '1', '(', '[' or '{'")

    def symbols(self) -> list[str]:
        """Read one maximal symbol run and resolve it to generator names.

        Against an explicit alphabet the run is split greedily into known
        names (so "xy" over (x, y) means x*y); with an inferred alphabet
        the whole run is a single generator.
        """
        start = self.pos
        self.pos += 1
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        run = self.text[start : self.pos]
        if self.alphabet is None:
            if run not in self.seen:
                self.seen.append(run)
            return [run]
        by_length = sorted(self.alphabet.names, key=len, reverse=True)
        names = []
        rest = run
        while rest:
            match = next((n for n in by_length if rest.startswith(n)), None)
            if match is None:
                self.fail(f"unknown generator {run!r}", start)
            names.append(match)
            rest = rest[len(match) :]
        return names

    def signed_int(self) -> int:
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.fail("expected an integer exponent", start)
        return int(self.text[start : self.pos])


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse word text; returns the literal (unreduced) word.

    With an explicit alphabet every symbol must belong to it; otherwise
    the alphabet is inferred as the distinct symbols in order of first
    appearance and flagged as inferred.
    """
    return _Parser(text, alphabet).parse()


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain.  Idempotent."""
    out: list[Letter] = []
    for g, s in word.letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    if len(out) == len(word.letters):
        return word
    return Word(word.alphabet, tuple(out))


def is_reduced(word: Word) -> bool:
    return len(free_reduce(word)) == len(word)


def invert(word: Word) -> Word:
    """Reverse the letter sequence and flip every sign."""
    return Word(word.alphabet, tuple((g, -s) for g, s in reversed(word.letters)))


def cyclic_shift(word: Word, k: int) -> Word:
    """Rotate the letters left by k (mod length); empty words are fixed."""
    if not word.letters:
        return word
    k %= len(word.letters)
    if k == 0:
        return word
    return Word(word.alphabet, word.letters[k:] + word.letters[:k])


def concat(first: Word, second: Word) -> Word:
    if first.alphabet != second.alphabet:
        raise ValueError(
            f"cannot concatenate words over {first.alphabet} and {second.alphabet}"
        )
    return Word(first.alphabet, first.letters + second.letters)


def concat_all(alphabet: Alphabet, words: Iterable[Word]) -> Word:
    letters: tuple[Letter, ...] = ()
    for w in words:
        if w.alphabet != alphabet:
            raise ValueError("alphabet mismatch in concatenation")
        letters += w.letters
    return Word(alphabet, letters)


def evaluate(word: Word, assignment: Mapping[str, int], group) -> int:
    """Left-to-right product of the assigned elements in the group.

    The assignment maps every generator name of the word's alphabet to an
    element index of ``group``.  The empty word evaluates to the identity.
    """
    values = [assignment[name] for name in word.alphabet.names]
    acc = group.identity
    mul = group.mul
    inv = group.inv
    for g, s in word.letters:
        x = values[g]
        if s < 0:
            x = inv[x]
        acc = mul[acc, x]
    return int(acc)
