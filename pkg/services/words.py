"""
Words over the generating alphabets, the named word families, the relation
sets of the presentations and the substitutions between them
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from constants import LETTER_S, LETTER_T, LETTER_X, MIN_DEGREE_F, MIN_DEGREE_LOCAL, MIN_DEGREE_X
from errors import DegreeTooSmall, IndexOutOfRange, ParseError
from models import LOCAL_UNIT_CELLS, NORMAL_FORMS_3, SQUARE_CONJUGATE_CELLS
from services.blockbij import BlockBijection, compose, epsilon, gen_s, gen_x, identity
from utils.formatting import format_word
from utils.validation import tokenize_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Letter:
    """x, t, or s_i (i >= 1). Ordered x = t < s_1 < s_2 < ..."""

    index: int
    kind: str

    def __post_init__(self):
        if self.kind == LETTER_S and self.index < 1:
            raise IndexOutOfRange(f"s-letter index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"s{self.index}" if self.kind == LETTER_S else self.kind


Word = Tuple[Letter, ...]

X = Letter(0, LETTER_X)
T = Letter(0, LETTER_T)


@lru_cache(maxsize=None)
def s(i: int) -> Letter:
    return Letter(i, LETTER_S)


def word(*parts) -> Word:
    """Concatenate letters and words into one word"""
    out: List[Letter] = []
    for part in parts:
        if isinstance(part, Letter):
            out.append(part)
        else:
            out.extend(part)
    return tuple(out)


def shortlex_key(w: Word) -> Tuple[int, Tuple[Letter, ...]]:
    return len(w), w


def rev(w: Word) -> Word:
    return tuple(reversed(w))


def is_valid(w: Word, n: int) -> bool:
    """Every s-letter of w exists at degree n"""
    return all(letter.kind != LETTER_S or letter.index <= n - 1 for letter in w)


@dataclass(frozen=True)
class Presentation:
    """Alphabet (in shortlex order) and ground relation pairs at one degree"""

    name: str
    degree: int
    alphabet: Tuple[Letter, ...]
    relations: Tuple[Tuple[Word, Word], ...]

    def letter_index(self) -> Dict[Letter, int]:
        return {letter: i for i, letter in enumerate(self.alphabet)}


# Exponents and named words


def m_exp(i: int, j: int, n: Optional[int] = None) -> int:
    """Order of s_i s_j: 1 if i = j, 3 if |i-j| = 1, 2 otherwise"""
    upper = n - 1 if n is not None else None
    for k in (i, j):
        if k < 1 or (upper is not None and k > upper):
            raise IndexOutOfRange(f"s_{k} is not a generator" + (f" at degree {n}" if n else ""))
    if i == j:
        return 1
    if abs(i - j) == 1:
        return 3
    return 2


def sigma_word() -> Word:
    return (s(2), s(3), s(1), s(2))


@lru_cache(maxsize=None)
def l_word(i: int) -> Word:
    """l_2 = x s_2 s_1 and l_{i+1} = s_{i+1} l_i s_{i+1} s_i"""
    if i < 2:
        raise IndexOutOfRange(f"l_{i} is defined for i >= 2")
    if i == 2:
        return (X, s(2), s(1))
    return word(s(i), l_word(i - 1), s(i), s(i - 1))


@lru_cache(maxsize=None)
def y_word(j: int) -> Word:
    """y_3 = x and y_{i+1} = l_i y_i s_i"""
    if j < 3:
        raise IndexOutOfRange(f"y_{j} is defined for j >= 3")
    if j == 3:
        return (X,)
    return word(l_word(j - 1), y_word(j - 1), s(j - 1))


def _boolean_power(i: int, k: int) -> Word:
    # s_i^k is s_i when i <= k and the empty word otherwise
    return (s(i),) if i <= k else ()


def pi_word(k: int, l: int) -> Word:
    """s_2^k s_3^k s_4^k s_1^l s_2^l s_3^l with the boolean exponent convention"""
    if k < 1 or l < 0:
        raise IndexOutOfRange(f"pi_word needs k >= 1 and l >= 0, got ({k}, {l})")
    return word(*(_boolean_power(i, k) for i in (2, 3, 4)), *(_boolean_power(i, l) for i in (1, 2, 3)))


def pi_local_word(i: int, j: int) -> Word:
    """s_2^j s_3^j s_1^i s_2^i, the unit part of e pi e in the local submonoid"""
    if j < 1 or i < 0:
        raise IndexOutOfRange(f"pi_local_word needs j >= 1 and i >= 0, got ({i}, {j})")
    return word(_boolean_power(2, j), _boolean_power(3, j), _boolean_power(1, i), _boolean_power(2, i))


def e_i_word(i: int) -> Word:
    """e_i = g^-1 x^2 g with g = (s_2 ... s_i)(s_1 ... s_{i-1}); e_1 = x x"""
    if i < 1:
        raise IndexOutOfRange(f"e_{i} is defined for i >= 1")
    g = tuple(s(k) for k in range(2, i + 1)) + tuple(s(k) for k in range(1, i))
    return word(rev(g), X, X, g)


def upper_x_word() -> Word:
    """X = s_3 x sigma x s_3"""
    return word(s(3), X, sigma_word(), X, s(3))


def upper_s_word(j: int) -> Word:
    """S_1 = x and S_j = e s_{j+1} for j >= 2"""
    if j < 1:
        raise IndexOutOfRange(f"S_{j} is defined for j >= 1")
    if j == 1:
        return (X,)
    return (X, X, s(j + 1))


# Relation sets


def _relation_pairs_r1(n: int) -> List[Tuple[Word, Word]]:
    pairs = []
    for i in range(1, n):
        for j in range(i, n):
            pairs.append(((s(i), s(j)) * m_exp(i, j), ()))
    return pairs


def _filter_vacuous(pairs: List[Tuple[Word, Word]], n: int) -> Tuple[Tuple[Word, Word], ...]:
    return tuple((u, v) for u, v in pairs if is_valid(u, n) and is_valid(v, n))


def moore_relations(n: int) -> Presentation:
    """(s_i s_j)^{m_ij} = 1, the defining relations of the symmetric group"""
    if n < 2:
        raise DegreeTooSmall(f"Symmetric group presentation needs degree >= 2, got {n}")
    alphabet = tuple(s(i) for i in range(1, n))
    return Presentation("moore", n, alphabet, tuple(_relation_pairs_r1(n)))


def relations_R(n: int) -> Presentation:
    """Defining relations of I_n* over {x, s_1, ..., s_{n-1}}; pairs missing at degree n are dropped"""
    if n < MIN_DEGREE_X:
        raise DegreeTooSmall(f"relations_R needs degree >= {MIN_DEGREE_X}, got {n}")
    x, s1, s2, s3 = X, s(1), s(2), s(3)
    sig = sigma_word()
    pairs = _relation_pairs_r1(n)
    # x^3 = x
    pairs.append(((x, x, x), (x,)))
    # s_1 is absorbed on both sides
    pairs.append(((x, s1), (x,)))
    pairs.append(((s1, x), (x,)))
    # x s2 x absorbs x and s2 on both sides
    zero = (x, s2, x)
    for other in ((x, s2, x, s2), (s2, x, s2, x), (x, s2, x, x), (x, x, s2, x)):
        pairs.append((zero, other))
    # x^2 commutes with its conjugate by sigma
    left = word(x, x, sig, x, x, sig)
    pairs.append((left, word(sig, x, x, sig, x, x)))
    pairs.append((left, (x, s2, s3, s2, x)))
    # braid-like relation for y_i and s_i
    for i in range(3, n):
        yi = y_word(i)
        pairs.append((word(yi, s(i), yi), word(s(i), yi, s(i))))
    # x commutes with the transpositions it does not touch
    for i in range(4, n):
        pairs.append(((x, s(i)), (s(i), x)))
    alphabet = (X,) + tuple(s(i) for i in range(1, n))
    return Presentation("R", n, alphabet, _filter_vacuous(pairs, n))


def relations_F(n: int) -> Presentation:
    """Defining relations of the factorizable part over {t, s_1, ..., s_{n-1}}"""
    if n < MIN_DEGREE_F:
        raise DegreeTooSmall(f"relations_F needs degree >= {MIN_DEGREE_F}, got {n}")
    t, s1, s2 = T, s(1), s(2)
    sig = sigma_word()
    pairs = _relation_pairs_r1(n)
    pairs.append(((t, t), (t,)))
    pairs.append(((t, s1), (t,)))
    pairs.append(((s1, t), (t,)))
    for i in range(3, n):
        pairs.append(((t, s(i)), (s(i), t)))
    pairs.append(((t, s2, t, s2), (s2, t, s2, t)))
    pairs.append((word(t, sig, t, sig), word(sig, t, sig, t)))
    alphabet = (T,) + tuple(s(i) for i in range(1, n))
    return Presentation("F", n, alphabet, _filter_vacuous(pairs, n))


# Substitutions


def theta_subst(w: Word) -> Word:
    """t -> x x, s_i -> s_i"""
    return word(*((X, X) if letter.kind == LETTER_T else (letter,) for letter in w))


def psi_subst(w: Word, n: int) -> Word:
    """Word over X_{n-1} -> word over X_n: x -> X, s_1 -> x, s_j -> x x s_{j+1}"""
    if n < MIN_DEGREE_LOCAL:
        raise DegreeTooSmall(f"psi_subst needs degree >= {MIN_DEGREE_LOCAL}, got {n}")
    if not is_valid(w, n - 1):
        raise IndexOutOfRange(f"{format_letters(w)} is not a word at degree {n - 1}")
    out: List[Letter] = []
    for letter in w:
        if letter.kind == LETTER_X:
            out.extend(upper_x_word())
        elif letter.kind == LETTER_S:
            out.extend(upper_s_word(letter.index))
        else:
            raise IndexOutOfRange(f"psi_subst is defined on x and s-letters, got {letter}")
    return tuple(out)


# Fixed word lists


def normal_forms_3() -> List[Word]:
    """The 25 words whose images are the elements of I_3*"""
    return [parse_word(text) for text in NORMAL_FORMS_3]


def square_conjugate_cells() -> List[Tuple[str, str, Tuple[int, ...], Tuple[int, ...], Word]]:
    """(k class, l class, k values, l values, claimed expression) per cell"""
    return [(kc, lc, ks, ls, parse_word(expr)) for kc, lc, ks, ls, expr in SQUARE_CONJUGATE_CELLS]


def local_unit_cells() -> List[Tuple[str, str, Tuple[int, ...], Tuple[int, ...], Word]]:
    """(i class, j class, i values, j values, expression over X_{n-1}) per cell"""
    return [(ic, jc, is_, js, parse_word(expr)) for ic, jc, is_, js, expr in LOCAL_UNIT_CELLS]


def words_up_to(alphabet: Sequence[Letter], max_len: int) -> Iterator[Word]:
    """Every word of length <= max_len in shortlex order"""
    layer: List[Word] = [()]
    yield ()
    for _ in range(max_len):
        layer = [w + (letter,) for w in layer for letter in alphabet]
        yield from layer


# Text grammar

_MACRO = re.compile(r"^([lyeS])([0-9]+)$")


def parse_word(text: str, n: Optional[int] = None) -> Word:
    """
    Parse whitespace-separated tokens: x, t, s<i>, 1 (empty word) and the macros
    sigma, l<i>, y<j>, e<i>, X, S<j>, Sigma. If n is given the result is checked
    against degree n.
    """
    out: List[Letter] = []
    for token in tokenize_word(text):
        if token == LETTER_X:
            out.append(X)
        elif token == LETTER_T:
            out.append(T)
        elif token == "sigma":
            out.extend(sigma_word())
        elif token == "X":
            out.extend(upper_x_word())
        elif token == "Sigma":
            out.extend(word(upper_s_word(2), upper_s_word(3), upper_s_word(1), upper_s_word(2)))
        elif token.startswith(LETTER_S) and token[1:].isdigit():
            out.append(s(int(token[1:])))
        else:
            match = _MACRO.match(token)
            if not match:
                raise ParseError(f"Unknown word token {token!r}")
            kind, index = match.group(1), int(match.group(2))
            builder = {"l": l_word, "y": y_word, "e": e_i_word, "S": upper_s_word}[kind]
            out.extend(builder(index))
    w = tuple(out)
    if n is not None and not is_valid(w, n):
        raise IndexOutOfRange(f"{text!r} uses a generator missing at degree {n}")
    return w


def format_letters(w: Word) -> str:
    return format_word([str(letter) for letter in w])


# Evaluation


def generator_image(letter: Letter, n: int) -> BlockBijection:
    """x -> x Phi, s_i -> s_i Phi, t -> epsilon (= x^2 Phi)"""
    if letter.kind == LETTER_X:
        return gen_x(n)
    if letter.kind == LETTER_T:
        return epsilon(n)
    if letter.index > n - 1:
        raise IndexOutOfRange(f"s_{letter.index} is not a generator at degree {n}")
    return gen_s(n, letter.index)


def phi_eval(w: Word, n: int) -> BlockBijection:
    """Left-to-right product of the generator images; the empty word is the identity"""
    if n < 1:
        raise DegreeTooSmall(f"Degree must be positive, got {n}")
    return reduce(compose, (generator_image(letter, n) for letter in w), identity(n))
