"""Word-image recognition with a character-sequence head, an N-gram
detector head, and a higher-order CRF decoder that combines them.

The package is organised as a small numpy library:

- :mod:`gramnet.lexicon` - alphabet, words, bag-of-N-grams vocabulary
- :mod:`gramnet.synth` - deterministic synthetic word-image generator
- :mod:`gramnet.net` - from-scratch CNN with CHAR and NGRAM heads
- :mod:`gramnet.structured` - path scoring, beam/exact/lexicon decoding,
  structured hinge loss, joint training step
- :mod:`gramnet.evaluate` - accuracy, max F-score, benchmark harness
- :mod:`gramnet.cli` - command-line pipeline driver
"""

from .lexicon import (
    Alphabet,
    Corpus,
    DEFAULT_ALPHABET,
    NGramVocab,
    NULL_INDEX,
    N_MAX_DEFAULT,
    SYMBOLS,
    Word,
    build_vocab,
    collision_count,
    encode_bag,
    encode_word,
    load_corpus,
    load_vocab,
    ngrams_of,
    save_corpus,
    save_vocab,
    word,
)
from .structured import (
    ScoreTables,
    StructHyper,
    LinearWeights,
    beam_decode,
    exact_decode,
    lexicon_decode,
    path_score,
    structured_loss,
    fit_linear_weights,
    joint_train_step,
)
from .net import (
    NetConfig,
    NetParams,
    SGDHyper,
    char_loss,
    forward,
    backward,
    init_params,
    load_model,
    ngram_loss,
    normalize_image,
    save_model,
    sgd_step,
)
from .synth import (
    DatasetManifest,
    RenderParams,
    gen_dataset,
    load_manifest,
    random_string,
    render_word,
    split_vocab,
)
from .evaluate import EvalReport, accuracy, max_fscore, run_benchmark

__version__ = "0.1.0"
