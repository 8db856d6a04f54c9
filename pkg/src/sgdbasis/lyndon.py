"""Lyndon-Shirshov words over the graded alphabet of derivative letters.

Words are compared letter by letter, and a proper beginning of a word is
*greater* than the word itself.  An associative LS word is strictly greater
than all of its proper rotations; its standard bracketing gives a basis
element of the free Lie algebra.

A bracket tree is either a :class:`DLetter` or a pair ``(left, right)``.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .comder import DLetter
from .errors import NotLieElementError, NotLSError
from .linear import LinComb, accumulate

# greater than every letter key, so a proper prefix sorts above its extensions
_END = (1 << 62, 0)


def word_key(letters):
    return tuple(l.key for l in letters) + (_END,)


def word_less(u, v):
    """Shirshov order on associative words; the empty word is the greatest."""
    return word_key(u) < word_key(v)


@dataclass(frozen=True)
class AWord:
    letters: tuple
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty word")
        object.__setattr__(self, "key", (len(self.letters),) + word_key(self.letters))

    def __repr__(self):
        return "".join(map(repr, self.letters))


def is_ls(w):
    w = tuple(w)
    k = word_key(w)
    return all(word_key(w[i:] + w[:i]) < k for i in range(1, len(w)))


@lru_cache(maxsize=None)
def _standard_tree(w):
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        if is_ls(w[i:]):
            return (_standard_tree(w[:i]), _standard_tree(w[i:]))
    raise AssertionError("an LS word of length >= 2 always has an LS proper suffix")


def tree_word(t):
    if isinstance(t, DLetter):
        return (t,)
    return tree_word(t[0]) + tree_word(t[1])


def is_ls_bracketing(t):
    """Conditions (LS1)-(LS3) of a nonassociative LS word, checked directly."""
    if not is_ls(tree_word(t)):
        return False
    if isinstance(t, DLetter):
        return True
    t1, t2 = t
    if not (is_ls_bracketing(t1) and is_ls_bracketing(t2)):
        return False
    if not word_less(tree_word(t2), tree_word(t1)):
        return False
    if not isinstance(t1, DLetter):
        # u2 >= u12
        if word_less(tree_word(t2), tree_word(t1[1])):
            return False
    return True


def _involves_d(w):
    return any(l.order for l in w)


@dataclass(frozen=True)
class LSWord:
    """An LS word with its canonical bracketing.  Build with :func:`ls_word`."""

    word: tuple
    tree: object = field(repr=False, compare=False)
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        w = self.word
        if len(w) == 1:
            cls = 1
        else:
            cls = 2 if _involves_d(w) else 0
        object.__setattr__(self, "key", (cls, len(w), word_key(w)))

    @property
    def degree(self):
        return len(self.word)

    @property
    def order(self):
        """Total number of derivatives on the letters."""
        return sum(l.order for l in self.word)

    def involves_d(self):
        return _involves_d(self.word)

    def is_letter(self):
        return len(self.word) == 1

    def __repr__(self):
        return format_tree(self.tree)


def format_tree(t):
    if isinstance(t, DLetter):
        return repr(t)
    return "{" + format_tree(t[0]) + ", " + format_tree(t[1]) + "}"


@lru_cache(maxsize=None)
def ls_word(w):
    w = tuple(w)
    if not w or not is_ls(w):
        raise NotLSError(f"{''.join(map(repr, w))} is not a Lyndon-Shirshov word")
    return LSWord(w, _standard_tree(w))


def ls_bracket(w):
    return ls_word(tuple(w))


def ls_letter(gen, order=0):
    return ls_word((DLetter(gen, order),))


def ls_less(a, b):
    """Degree-first order on LS words, refined by the letter separation rule.

    d-free words of degree >= 2 are below every single letter, and words of
    degree >= 2 that involve d are above every single letter.
    """
    return a.key < b.key


# associative expansion ------------------------------------------------------


def _mul_words(p, q):
    d = {}
    for u, a in p.items():
        for v, b in q.items():
            accumulate(d, u + v, a * b)
    return d


def _expand_tree(t):
    if isinstance(t, DLetter):
        return {(t,): 1}
    p, q = _expand_tree(t[0]), _expand_tree(t[1])
    d = _mul_words(p, q)
    for w, c in _mul_words(q, p).items():
        accumulate(d, w, -c)
    return d


@lru_cache(maxsize=None)
def _expand_ls(w):
    return _expand_tree(ls_word(w).tree)


def lie_expand(t):
    """Commutator expansion ``[p, q] -> pq - qp`` into associative words."""
    if isinstance(t, LSWord):
        t = t.tree
    return LinComb({AWord(w): c for w, c in _expand_tree(t).items()})


def _peel(d):
    """Rewrite an associative Lie polynomial (dict of tuples) in the LS basis."""
    d = dict(d)
    out = {}
    while d:
        w = max(d, key=word_key)
        c = d[w]
        if not is_ls(w):
            raise NotLieElementError(
                f"leading word {''.join(map(repr, w))} is not Lyndon-Shirshov"
            )
        out[ls_word(w)] = c
        for u, b in _expand_ls(w).items():
            accumulate(d, u, -c * b)
    return out


def lie_nf(t):
    """Express a bracket tree (or LinComb of trees) in the LS basis."""
    if isinstance(t, LinComb):
        d = {}
        for tree, c in t.as_dict().items():
            for w, b in _expand_tree(tree).items():
                accumulate(d, w, c * b)
        return LinComb(_peel(d))
    if isinstance(t, LSWord):
        t = t.tree
    return LinComb(_peel(_expand_tree(t)))


@lru_cache(maxsize=None)
def lie_bracket_ls(a, b):
    """``[a, b]`` for LS words as a dict ``LSWord -> coefficient``."""
    if a == b:
        return {}
    return _peel(_expand_tree((a.tree, b.tree)))


def _derive_tree_at(t, pos):
    """Tree with the letter at leaf position ``pos`` differentiated once."""
    if isinstance(t, DLetter):
        return t.derived()
    n_left = len(tree_word(t[0]))
    if pos < n_left:
        return (_derive_tree_at(t[0], pos), t[1])
    return (t[0], _derive_tree_at(t[1], pos - n_left))


@lru_cache(maxsize=None)
def derive_ls(a):
    """Derivation of an LS word as a dict ``LSWord -> coefficient``."""
    d = {}
    for pos in range(a.degree):
        for w, c in _expand_tree(_derive_tree_at(a.tree, pos)).items():
            accumulate(d, w, c)
    return _peel(d)


# enumeration ----------------------------------------------------------------


def _lyndon_ranks(k, n):
    """Duval's algorithm: Lyndon words over ranks ``0..k-1`` up to length n."""
    if k <= 0:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def ls_enumerate(max_gen, max_order, degree):
    """All LS words of the given length over ``x_i^(r)``, i <= max_gen, r <= max_order."""
    alphabet = [DLetter(g, r) for r in range(max_order + 1) for g in range(1, max_gen + 1)]
    # rank 0 is the greatest letter; standard Lyndon words over ranks are LS words
    alphabet.sort(key=lambda l: l.key, reverse=True)
    out = [
        ls_word(tuple(alphabet[i] for i in ranks))
        for ranks in _lyndon_ranks(len(alphabet), degree)
        if len(ranks) == degree
    ]
    return sorted(out, key=lambda a: a.key)
