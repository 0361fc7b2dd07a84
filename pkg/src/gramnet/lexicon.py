"""Alphabet, word encoding, and the bag-of-N-grams vocabulary.

Words are sequences of class indices over a fixed 36-symbol alphabet
(digits then lowercase letters), with a 37th null class used only to pad
words to a fixed maximum length.  The N-gram vocabulary maps a
frequency-thresholded set of substrings to dense indices, which the
detector head and the edge-score table of the decoder share.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyVocab, EmptyWord, TooLong, BadMagic

SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"
NULL_INDEX = 36
N_CLASSES = 37
N_MAX_DEFAULT = 23


@dataclass(frozen=True)
class Alphabet:
    """The 36 recognisable symbols plus the null padding class.

    Digits occupy indices 0-9 and lowercase letters 10-35; index 36 is
    the null class and never appears inside a word.
    """

    symbols: str = SYMBOLS

    @property
    def null_index(self) -> int:
        return len(self.symbols)

    @property
    def n_classes(self) -> int:
        return len(self.symbols) + 1

    def index_of(self, ch: str) -> int:
        i = self.symbols.find(ch)
        if i < 0:
            raise KeyError(f"character {ch!r} not in alphabet")
        return i

    def char_of(self, idx: int) -> str:
        return self.symbols[idx]


DEFAULT_ALPHABET = Alphabet()


@dataclass(frozen=True, order=True)
class Word:
    """An index-encoded word; never contains the null class internally.

    Ordering is lexicographic on the index tuple, which coincides with
    lexicographic ordering of the text because the alphabet is sorted.
    """

    chars: tuple[int, ...]

    def __post_init__(self):
        if len(self.chars) == 0:
            raise EmptyWord("a word must contain at least one character")
        if any(not (0 <= c < len(SYMBOLS)) for c in self.chars):
            raise ValueError("word contains an out-of-alphabet index")

    def __len__(self) -> int:
        return len(self.chars)

    def __iter__(self):
        return iter(self.chars)

    @property
    def text(self) -> str:
        return "".join(SYMBOLS[c] for c in self.chars)

    def padded(self, n_max: int) -> np.ndarray:
        """Index sequence padded with nulls to length ``n_max``."""
        if len(self.chars) > n_max:
            raise TooLong(f"word of length {len(self.chars)} exceeds n_max={n_max}")
        out = np.full(n_max, NULL_INDEX, dtype=np.int64)
        out[: len(self.chars)] = self.chars
        return out


def word(text: str) -> Word:
    """Build a Word from already-clean lowercase alphanumeric text."""
    return Word(tuple(SYMBOLS.index(ch) for ch in text))


def encode_word(text: str, alphabet: Alphabet = DEFAULT_ALPHABET,
                n_max: int = N_MAX_DEFAULT) -> Word:
    """Lowercase, strip non-alphanumerics, and index-encode a string.

    Raises EmptyWord if nothing remains and TooLong if the cleaned text
    exceeds ``n_max``.
    """
    cleaned = [ch for ch in text.lower() if ch in alphabet.symbols]
    if not cleaned:
        raise EmptyWord(f"no alphabet characters in {text!r}")
    if len(cleaned) > n_max:
        raise TooLong(f"{''.join(cleaned)!r} longer than n_max={n_max}")
    return Word(tuple(alphabet.index_of(ch) for ch in cleaned))


@dataclass(frozen=True)
class Corpus:
    """A list of words with a provenance tag."""

    words: tuple[Word, ...]
    source: str = ""

    def __post_init__(self):
        if len(self.words) == 0:
            raise ValueError("corpus must be non-empty")

    def __len__(self) -> int:
        return len(self.words)

    def texts(self) -> list[str]:
        return [w.text for w in self.words]


def ngrams_of(w: Word | str, n: int) -> set[str]:
    """All contiguous substrings of ``w`` of length 1..n, as a set."""
    if n < 1:
        raise ValueError("n must be >= 1")
    text = w if isinstance(w, str) else w.text
    out = set()
    for length in range(1, min(n, len(text)) + 1):
        for start in range(len(text) - length + 1):
            out.add(text[start: start + length])
    return out


class NGramVocab:
    """Ordered set of modelled N-grams with counts and gradient weights.

    Entries are ordered by (length, lexicographic), which fixes the index
    assignment used by the detector head, the edge-score table, and the
    persistence formats.
    """

    def __init__(self, entries, counts, weights, n_order: int):
        self.entries: tuple[str, ...] = tuple(entries)
        self.counts = np.asarray(counts, dtype=np.int64)
        self.weights = np.asarray(weights, dtype=np.float64)
        self.n_order = int(n_order)
        if len(self.entries) == 0:
            raise EmptyVocab("vocabulary has no entries")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("duplicate vocabulary entries")
        if self.counts.shape != (len(self.entries),) or self.weights.shape != (len(self.entries),):
            raise ValueError("counts/weights length disagrees with entries")
        if np.any(self.weights <= 0):
            raise ValueError("weights must be strictly positive")
        if any(not (1 <= len(e) <= self.n_order) for e in self.entries):
            raise ValueError("entry length outside 1..n_order")
        self.index: dict[str, int] = {e: i for i, e in enumerate(self.entries)}
        # Index keyed by character-index tuples; decoders look up substrings
        # of index-encoded words without building intermediate strings.
        self.index_tuples: dict[tuple[int, ...], int] = {
            tuple(SYMBOLS.index(ch) for ch in e): i for i, e in enumerate(self.entries)
        }

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, NGramVocab)
                and self.entries == other.entries
                and self.n_order == other.n_order
                and np.array_equal(self.counts, other.counts)
                and np.array_equal(self.weights, other.weights))


WEIGHT_CLAMP = (0.01, 100.0)


def build_vocab(corpus: Corpus, n_order: int = 4, min_count: int = 1) -> NGramVocab:
    """Collect all N-grams of order <= n_order occurring >= min_count times.

    Occurrences are counted per starting position per word, so "aaa"
    contributes two occurrences of "aa".  Weights are mean-normalised
    inverse counts clamped to [0.01, 100].
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts: dict[str, int] = {}
    for w in corpus.words:
        text = w.text
        for length in range(1, min(n_order, len(text)) + 1):
            for start in range(len(text) - length + 1):
                s = text[start: start + length]
                counts[s] = counts.get(s, 0) + 1
    entries = sorted((s for s, c in counts.items() if c >= min_count),
                     key=lambda s: (len(s), s))
    if not entries:
        raise EmptyVocab(f"no N-gram occurs at least {min_count} times")
    kept = np.array([counts[s] for s in entries], dtype=np.int64)
    weights = np.clip(kept.mean() / kept, *WEIGHT_CLAMP)
    return NGramVocab(entries, kept, weights, n_order)


def encode_bag(w: Word | str, vocab: NGramVocab) -> np.ndarray:
    """Binary occurrence vector of ``w``'s N-grams over the vocabulary.

    N-grams of ``w`` absent from the vocabulary are silently dropped.
    """
    bag = np.zeros(len(vocab), dtype=np.float32)
    for s in ngrams_of(w, vocab.n_order):
        i = vocab.index.get(s)
        if i is not None:
            bag[i] = 1.0
    return bag


def collision_count(corpus: Corpus, vocab: NGramVocab) -> int:
    """Unordered pairs of corpus words whose bag encodings coincide."""
    groups: dict[bytes, int] = {}
    for w in corpus.words:
        key = encode_bag(w, vocab).tobytes()
        groups[key] = groups.get(key, 0) + 1
    return sum(k * (k - 1) // 2 for k in groups.values())


# ---------------------------------------------------------------------------
# Persistence: vocab and corpus files

VOCAB_MAGIC = "NGRAMVOCAB"
VOCAB_VERSION = 1


def save_vocab(vocab: NGramVocab, path) -> None:
    lines = [f"{VOCAB_MAGIC} {VOCAB_VERSION} {vocab.n_order} {len(vocab)}"]
    for e, c, w in zip(vocab.entries, vocab.counts, vocab.weights):
        lines.append(f"{e}\t{int(c)}\t{float(w)!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_vocab(path) -> NGramVocab:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 4 or header[0] != VOCAB_MAGIC:
            raise BadMagic(f"{path}: not a vocab file")
        if int(header[1]) != VOCAB_VERSION:
            raise BadMagic(f"{path}: unsupported vocab version {header[1]}")
        n_order, size = int(header[2]), int(header[3])
        entries, counts, weights = [], [], []
        for line in fh:
            if not line.strip():
                continue
            e, c, w = line.rstrip("\n").split("\t")
            entries.append(e)
            counts.append(int(c))
            weights.append(float(w))
    if len(entries) != size:
        raise BadMagic(f"{path}: header declares {size} entries, found {len(entries)}")
    return NGramVocab(entries, counts, weights, n_order)


def load_corpus(path, source: str = "", n_max: int = N_MAX_DEFAULT) -> Corpus:
    """Read a one-word-per-line corpus file; words are cleaned on load."""
    words = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                words.append(encode_word(line, n_max=n_max))
    return Corpus(tuple(words), source or str(path))


def save_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for w in corpus.words:
            fh.write(w.text + "\n")
