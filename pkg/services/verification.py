"""
Verification suites: machine checks of the presentation of I_n* and the
identities and structural properties it rests on
"""

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from config import Config
from constants import (
    DEFAULT_SYMMETRIC_LENGTH,
    MAX_EXHAUSTIVE_INVERSE_DEGREE,
    MAX_ORACLE_DEGREE,
    MAX_PROP_DEGREE,
    MAX_PROPERTY_P_DEGREE,
    MAX_SYMMETRIC_DEGREE,
    MAX_SYMMETRIC_LENGTH,
    MIN_DEGREE_LOCAL,
    MIN_DEGREE_X,
    VERIFY_SUITES,
)
from errors import DegreeTooSmall, OutOfRange
from services.blockbij import (
    BlockBijection,
    compose,
    conjugate,
    epsilon,
    gen_x,
    identity,
    in_local_submonoid,
    inverse,
    is_uniform,
    upsilon,
    upsilon_inverse,
)
from services.froidure_pin import enumerate_dual_symmetric, froidure_pin, phi_generators
from services.partitions import enumerate_partitions, restricted_growth_strings
from services.structure import (
    factorizable_part,
    factorizable_part_right,
    has_unique_inverses,
    idempotents,
    idempotents_commute,
    is_regular,
    uniform_elements,
    units,
)
from services.todd_coxeter import todd_coxeter
from services.words import (
    X,
    Word,
    generator_image,
    l_word,
    local_unit_cells,
    moore_relations,
    normal_forms_3,
    parse_word,
    phi_eval,
    pi_local_word,
    pi_word,
    psi_subst,
    relations_F,
    relations_R,
    rev,
    s,
    square_conjugate_cells,
    theta_subst,
    word,
    y_word,
)
from utils.formatting import format_check_line
from utils.performance import monitor_performance

logger = logging.getLogger(__name__)


def compact(w: Word) -> str:
    """Word without spaces, for report fields: ``xs2x``; ``1`` when empty"""
    return "".join(str(letter) for letter in w) or "1"


@dataclass
class CheckResult:
    name: str
    passed: bool
    fields: Dict[str, Any] = field(default_factory=dict)

    def line(self) -> str:
        return format_check_line(self.name, self.passed, **self.fields)


@dataclass
class Report:
    """Ordered check results plus free-text notes"""

    title: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, **fields) -> bool:
        result = CheckResult(name, bool(passed), fields)
        self.checks.append(result)
        if not passed:
            logger.warning(f"{self.title}: {result.line()}")
        return result.passed

    def note(self, text: str):
        self.notes.append(text)

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def lines(self) -> List[str]:
        return [check.line() for check in self.checks] + [f"# {text}" for text in self.notes]


def _first_failure(pairs: Iterable[Tuple[Word, Word]], equal: Callable[[Word, Word], bool]):
    """Count pairs and return (count, first pair that is not equal)"""
    count = 0
    witness = None
    for u, v in pairs:
        count += 1
        if witness is None and not equal(u, v):
            witness = (u, v)
    return count, witness


def _witness(value) -> Dict[str, Any]:
    return {} if value is None else {"witness": value}


def _witness_fields(witness) -> Dict[str, str]:
    if witness is None:
        return {}
    u, v = witness
    return {"witness": f"{compact(u)}={compact(v)}"}


# Ground truth


def cardinality_oracle(n: int) -> int:
    """Number of partitions of the 2n vertices in which every block meets both rows"""
    if n < 1 or n > MAX_ORACLE_DEGREE:
        raise OutOfRange(f"cardinality_oracle supports 1 <= n <= {MAX_ORACLE_DEGREE}, got {n}")
    count = 0
    for rgs in restricted_growth_strings(2 * n):
        if set(rgs[:n]) == set(rgs[n:]):
            count += 1
    return count


def bell_number(n: int) -> int:
    return sum(1 for _ in restricted_growth_strings(n))


def all_units(n: int) -> List[BlockBijection]:
    return [BlockBijection.from_permutation(p) for p in permutations(range(1, n + 1))]


# Presentation


@monitor_performance("check_presentation")
def check_presentation(n: int, cap: Optional[int] = None) -> Report:
    """
    Relations hold under phi, so phi induces a surjection from the presented
    monoid M_n onto I_n*; equal finite sizes make it a bijection.
    """
    if n < MIN_DEGREE_X:
        raise DegreeTooSmall(f"check_presentation needs degree >= {MIN_DEGREE_X}, got {n}")
    report = Report("check_presentation")
    presentation = relations_R(n)

    count, witness = _first_failure(
        presentation.relations, lambda u, v: phi_eval(u, n) == phi_eval(v, n)
    )
    relations_ok = report.add(
        "relations_hold", witness is None, n=n, count=count, **_witness_fields(witness)
    )

    monoid = enumerate_dual_symmetric(n, cap=cap)
    table = todd_coxeter(presentation, cap=cap)
    sizes_ok = report.add(
        "check_presentation", table.size == monoid.size, n=n, lhs=table.size, rhs=monoid.size
    )

    if n <= 5:
        oracle = cardinality_oracle(n)
        report.add("cardinality_oracle", monoid.size == oracle, n=n, lhs=monoid.size, rhs=oracle)

    moore = todd_coxeter(moore_relations(n), cap=cap).size
    report.add("moore", moore == math.factorial(n), n=n, lhs=moore, rhs=math.factorial(n))

    if relations_ok and sizes_ok:
        report.note(
            f"every relation of R holds under phi and the images generate I_{n}*, "
            f"so phi induces a surjection M_{n} -> I_{n}*"
        )
        report.note(
            f"|M_{n}| = |I_{n}*| = {monoid.size} is finite, so the surjection is a bijection: "
            f"M_{n} is isomorphic to I_{n}*"
        )
    return report


@monitor_performance("verify_relations")
def verify_relations(n: int) -> Report:
    """R under phi, F under t -> epsilon and under theta, plus derived identities"""
    if n < 2:
        raise DegreeTooSmall(f"verify_relations needs degree >= 2, got {n}")
    report = Report("verify_relations")

    def holds(u: Word, v: Word) -> bool:
        return phi_eval(u, n) == phi_eval(v, n)

    if n >= MIN_DEGREE_X:
        count, witness = _first_failure(relations_R(n).relations, holds)
        report.add("relations_R", witness is None, n=n, count=count, **_witness_fields(witness))

    pairs_f = relations_F(n).relations
    count, witness = _first_failure(pairs_f, holds)
    report.add("relations_F", witness is None, n=n, count=count, **_witness_fields(witness))

    if n >= MIN_DEGREE_X:
        count, witness = _first_failure(
            ((theta_subst(u), theta_subst(v)) for u, v in pairs_f), holds
        )
        report.add("relations_F_theta", witness is None, n=n, count=count, **_witness_fields(witness))

    if n >= 4:
        sigma = parse_word("sigma")
        derived = [
            (word(X, X, s(3)), word(s(3), X, X)),
            (word(sigma, s(3)), word(s(1), sigma)),
        ]
        count, witness = _first_failure(derived, holds)
        report.add("derived_identities", witness is None, n=n, count=count, **_witness_fields(witness))

    if n == 3:
        zero = parse_word("x s2 x")
        pairs = [(word(zero, g), zero) for g in (X, s(1), s(2))]
        pairs += [(word(g, zero), zero) for g in (X, s(1), s(2))]
        count, witness = _first_failure(pairs, holds)
        report.add("zero_element", witness is None, n=n, count=count, **_witness_fields(witness))
    return report


# Inverse and factorizable structure


@monitor_performance("verify_factorizable")
def verify_factorizable(n: int, cap: Optional[int] = None) -> Report:
    """Uniform elements = E G = G E, and the F-presentation has that many classes"""
    report = Report("verify_factorizable")
    M = enumerate_dual_symmetric(n, cap=cap)
    uniform = uniform_elements(M)
    left, right = factorizable_part(M), factorizable_part_right(M)
    report.add("factorizable_uniform", left == uniform, n=n, lhs=len(left), rhs=len(uniform))
    report.add("factorizable_sides", left == right, n=n, lhs=len(left), rhs=len(right))

    letters, gens = phi_generators(n, "f")
    F = froidure_pin(gens, letters, cap=cap)
    report.add("factorizable_generated", F.size == len(uniform), n=n, lhs=F.size, rhs=len(uniform))
    if n >= 2:
        presented = todd_coxeter(relations_F(n), cap=cap).size
        report.add("presentation_F", presented == len(uniform), n=n, lhs=presented, rhs=len(uniform))
    return report


@monitor_performance("verify_inverse_structure")
def verify_inverse_structure(
    n: int, cap: Optional[int] = None, sample: Optional[int] = None, seed: Optional[int] = None
) -> Report:
    """
    Unique inverses, commuting idempotents, Bell(n) idempotents and n! units.
    Exhaustive up to degree 4. Beyond that unique inverses follow from regularity
    and commuting idempotents, and only the anti-homomorphism law is sampled.
    """
    report = Report("verify_inverse_structure")
    sample = sample or Config.SAMPLE_PAIRS
    seed = Config.RANDOM_SEED if seed is None else seed
    M = enumerate_dual_symmetric(n, cap=cap)

    es = idempotents(M)
    bell = bell_number(n)
    report.add("idempotents", len(es) == bell, n=n, lhs=len(es), rhs=bell)
    expected = {BlockBijection.from_equivalence(p) for p in enumerate_partitions(n)}
    report.add("idempotents_are_equivalences", {M.elements[e] for e in es} == expected, n=n)

    group = M.units()
    report.add("units", len(group) == math.factorial(n), n=n, lhs=len(group), rhs=math.factorial(n))
    report.add("units_are_permutations", group == units(M), n=n)

    if n <= MAX_EXHAUSTIVE_INVERSE_DEGREE:
        report.add("unique_inverses", has_unique_inverses(M), n=n, mode="exhaustive")
        report.add("idempotents_commute", idempotents_commute(M), n=n, mode="exhaustive")
        report.add("regular", is_regular(M), n=n, mode="exhaustive")
        return report

    # a regular monoid has unique inverses iff its idempotents commute
    regular = is_regular(M)
    commute = idempotents_commute(M)
    report.add("regular", regular, n=n, mode="exhaustive")
    report.add("idempotents_commute", commute, n=n, mode="exhaustive")
    report.add("unique_inverses", regular and commute, n=n, mode="derived")

    rng = random.Random(seed)
    elements = M.elements
    clash = None
    for _ in range(sample):
        a, b = rng.choice(elements), rng.choice(elements)
        if inverse(compose(a, b)) != compose(inverse(b), inverse(a)):
            clash = (a, b)
            break
    fields = {"witness": f"{clash[0]}~{clash[1]}"} if clash else {}
    report.add(
        "inverse_antihomomorphism", clash is None, n=n, mode="sampled", pairs=sample, **fields
    )
    return report


# Image-level conditions on units and the idempotent epsilon


def closure(gens: List[BlockBijection]) -> set:
    """Elements of the monoid generated by ``gens``"""
    return set(froidure_pin(gens).elements)


@monitor_performance("verify_prop_conditions")
def verify_prop_conditions(n: int) -> Report:
    """
    For every unit g, with x2 = x^2 and c = g^-1 x2 g:
    c x2 = x2 c, and x c x is uniform. For the generators {units} and the
    conjugates of x: their x^0 commute pairwise, and y^-1 x^0 y is an
    idempotent of the monoid generated by the x^0.
    """
    if not MIN_DEGREE_X <= n <= MAX_PROP_DEGREE:
        raise OutOfRange(f"verify_prop_conditions supports {MIN_DEGREE_X} <= n <= {MAX_PROP_DEGREE}")
    report = Report("verify_prop_conditions")
    x = gen_x(n)
    x2 = compose(x, x)
    group = all_units(n)

    c1_fail = c2_fail = None
    for g in group:
        c = conjugate(x2, g)
        if c1_fail is None and compose(c, x2) != compose(x2, c):
            c1_fail = g
        if c2_fail is None and not is_uniform(compose(compose(x, c), x)):
            c2_fail = g
    report.add("c1", c1_fail is None, n=n, units=len(group), **_witness(c1_fail))
    report.add("c2", c2_fail is None, n=n, units=len(group), **_witness(c2_fail))

    x_conjugates = list(dict.fromkeys(conjugate(x, g) for g in group))
    gens = group + x_conjugates
    # x^0 is the identity for a unit and y^2 for a conjugate y of x
    zeros = list(dict.fromkeys([identity(n)] + [compose(y, y) for y in x_conjugates]))
    commuting = all(compose(e, f) == compose(f, e) for e in zeros for f in zeros)
    report.add("prop_commuting_zeros", commuting, n=n, zeros=len(zeros))

    generated = closure(zeros)
    bad = None
    for y in gens:
        y_inv = inverse(y)
        for z in zeros:
            candidate = compose(compose(y_inv, z), y)
            if candidate not in generated or not candidate.is_idempotent():
                bad = (y, z)
                break
        if bad:
            break
    fields = {"witness": f"{bad[0]}~{bad[1]}"} if bad else {}
    report.add("prop_conjugated_zeros", bad is None, n=n, generators=len(gens), **fields)
    return report


@monitor_performance("verify_property_P")
def verify_property_P(n: int) -> Report:
    """Every non-identity idempotent f has a unit g with g^-1 f g in the local submonoid of epsilon"""
    if not 2 <= n <= MAX_PROPERTY_P_DEGREE:
        raise OutOfRange(f"verify_property_P supports 2 <= n <= {MAX_PROPERTY_P_DEGREE}")
    report = Report("verify_property_P")
    e = epsilon(n)
    group = all_units(n)
    missing = []
    checked = 0
    for p in enumerate_partitions(n):
        f = BlockBijection.from_equivalence(p)
        if f == identity(n):
            continue
        checked += 1
        if not any(in_local_submonoid(conjugate(f, g)) for g in group):
            missing.append(f)
    fields = {"witness": missing[0]} if missing else {}
    report.add("property_P", not missing, n=n, idempotents=checked, **fields)
    # e itself needs no conjugation
    report.add("property_P_trivial", in_local_submonoid(e), n=n)
    return report


# Proof tables


@monitor_performance("verify_table1")
def verify_table1(n: int = 5) -> Report:
    """x (x^2)^pi x against the tabulated expression, pi = s2^k s3^k s4^k s1^l s2^l s3^l"""
    if n < 5:
        raise DegreeTooSmall(f"verify_table1 needs degree >= 5, got {n}")
    report = Report("verify_table1")
    for k_class, l_class, ks, ls, expression in square_conjugate_cells():
        rhs = phi_eval(expression, n)
        for k in ks:
            for l in ls:
                pi = pi_word(k, l)
                lhs = phi_eval(word(X, rev(pi), X, X, pi, X), n)
                report.add("table1", lhs == rhs, n=n, k=k, l=l, cell=f"{k_class},{l_class}")
    return report


@monitor_performance("verify_table2")
def verify_table2(n: int) -> Report:
    """e pi e against the tabulated word over X_{n-1}, read through psi; pi = s2^j s3^j s1^i s2^i"""
    if n < MIN_DEGREE_LOCAL:
        raise DegreeTooSmall(f"verify_table2 needs degree >= {MIN_DEGREE_LOCAL}, got {n}")
    report = Report("verify_table2")
    e = (X, X)
    for i_class, j_class, is_, js, expression in local_unit_cells():
        rhs = phi_eval(word(e, psi_subst(expression, n), e), n)
        for i in is_:
            for j in js:
                lhs = phi_eval(word(e, pi_local_word(i, j), e), n)
                report.add("table2", lhs == rhs, n=n, i=i, j=j, cell=f"{i_class},{j_class}")
    return report


# Local submonoid


@monitor_performance("verify_local_iso")
def verify_local_iso(n: int, cap: Optional[int] = None) -> Report:
    """
    upsilon is a product-preserving bijection from the local submonoid of
    epsilon onto I_{n-1}*, and agrees with the letters of X_{n-1} read through psi
    """
    if not MIN_DEGREE_LOCAL <= n <= MAX_PROP_DEGREE:
        raise OutOfRange(f"verify_local_iso supports {MIN_DEGREE_LOCAL} <= n <= {MAX_PROP_DEGREE}")
    report = Report("verify_local_iso")
    M = enumerate_dual_symmetric(n, cap=cap)
    smaller = enumerate_dual_symmetric(n - 1, cap=cap)

    local = [i for i, a in enumerate(M.elements) if in_local_submonoid(a)]
    report.add("local_size", len(local) == smaller.size, n=n, lhs=len(local), rhs=smaller.size)

    image = {i: smaller.index_of(upsilon(M.elements[i])) for i in local}
    report.add("upsilon_bijective", len(set(image.values())) == smaller.size == len(local), n=n)
    round_trip = all(upsilon_inverse(upsilon(M.elements[i])) == M.elements[i] for i in local)
    report.add("upsilon_inverse", round_trip, n=n)

    bad = None
    for i in local:
        for j in local:
            if image[M.multiply(i, j)] != smaller.multiply(image[i], image[j]):
                bad = (i, j)
                break
        if bad:
            break
    fields = {"witness": f"{M.elements[bad[0]]}~{M.elements[bad[1]]}"} if bad else {}
    report.add("upsilon_homomorphism", bad is None, n=n, pairs=len(local) ** 2, **fields)

    letters, _ = phi_generators(n - 1, "xs")
    for c in letters:
        lhs = upsilon(phi_eval(psi_subst((c,), n), n))
        rhs = phi_eval((c,), n - 1)
        report.add("letter_agreement", lhs == rhs, n=n, letter=str(c))

    y_images = [phi_eval(psi_subst((c,), n), n) for c in letters]
    generated = froidure_pin(y_images, unit=epsilon(n), cap=cap)
    report.add("local_generated", generated.size == len(local), n=n, lhs=generated.size, rhs=len(local))

    # the empty word maps to epsilon, the identity of the local submonoid
    e = (X, X)
    count, witness = _first_failure(
        ((psi_subst(u, n), psi_subst(v, n)) for u, v in relations_R(n - 1).relations),
        lambda u, v: phi_eval(word(e, u, e), n) == phi_eval(word(e, v, e), n),
    )
    report.add("transported_relations", witness is None, n=n, count=count, **_witness_fields(witness))

    if n >= 5:
        report.extend(_upper_word_identities(n))
    return report


def _upper_word_identities(n: int) -> Report:
    report = Report("verify_local_iso")

    def same(u: Word, v: Word) -> bool:
        return phi_eval(u, n) == phi_eval(v, n)

    e = (X, X)
    upper_x, sigma = parse_word("X"), parse_word("Sigma")
    report.add("upper_sigma", same(sigma, parse_word("s3 s4 x s3")), n=n)
    x2 = word(upper_x, upper_x)
    report.add("upper_r5", same(word(x2, sigma, x2, sigma), word(sigma, x2, sigma, x2)), n=n)
    report.add(
        "upper_r5_zero",
        same(parse_word("X S2 S3 S2 X"), word(sigma, x2, sigma, x2)),
        n=n,
    )
    for i in range(2, n - 1):
        report.add("upper_l", same(psi_subst(l_word(i), n), word(l_word(i + 1), e)), n=n, i=i)
    for j in range(3, n):
        report.add("upper_y", same(psi_subst(y_word(j), n), y_word(j + 1)), n=n, j=j)
    return report


# Normal forms and symmetric words


@monitor_performance("verify_normal_forms_3")
def verify_normal_forms_3() -> Report:
    """The 25 listed words: distinct images, closed on the right, with absorbing x s2 x"""
    n = 3
    report = Report("verify_normal_forms_3")
    forms = normal_forms_3()
    images = [phi_eval(w, n) for w in forms]
    distinct = set(images)
    report.add("normal_forms_distinct", len(distinct) == len(forms), n=n, lhs=len(distinct), rhs=len(forms))

    letters = (X, s(1), s(2))
    missing = None
    for w, image in zip(forms, images):
        for g in letters:
            if missing is None and compose(image, generator_image(g, n)) not in distinct:
                missing = (w, g)
    fields = {"witness": f"{compact(missing[0])}*{missing[1]}"} if missing else {}
    report.add("normal_forms_closed", missing is None, n=n, **fields)

    zero = phi_eval(parse_word("x s2 x"), n)
    absorbing = all(
        compose(zero, generator_image(g, n)) == zero and compose(generator_image(g, n), zero) == zero
        for g in letters
    )
    report.add("normal_forms_zero", absorbing, n=n)
    oracle = cardinality_oracle(n)
    report.add("normal_forms_count", len(distinct) == oracle, n=n, lhs=len(distinct), rhs=oracle)
    return report


@monitor_performance("verify_symmetric_words")
def verify_symmetric_words(n: int, max_len: int = DEFAULT_SYMMETRIC_LENGTH) -> Report:
    """
    Every word w up to ``max_len``: rev(w) evaluates to the inverse of w, and
    for w = rev(w) the image satisfies w^3 = w with w^2 idempotent.
    """
    if not MIN_DEGREE_X <= n <= MAX_SYMMETRIC_DEGREE or not 0 <= max_len <= MAX_SYMMETRIC_LENGTH:
        raise OutOfRange(
            f"verify_symmetric_words supports {MIN_DEGREE_X} <= n <= {MAX_SYMMETRIC_DEGREE} "
            f"and max_len <= {MAX_SYMMETRIC_LENGTH}"
        )
    report = Report("verify_symmetric_words")
    letters, gens = phi_generators(n, "xs")
    start = identity(n)

    total = symmetric = 0
    rev_fail = cube_fail = None
    # depth-first over words, carrying the images of w and of rev(w)
    stack: List[Tuple[Word, BlockBijection, BlockBijection]] = [((), start, start)]
    while stack:
        w, image, rev_image = stack.pop()
        total += 1
        if rev_fail is None and rev_image != inverse(image):
            rev_fail = w
        if w == w[::-1]:
            symmetric += 1
            square = compose(image, image)
            if cube_fail is None and (compose(square, image) != image or not square.is_idempotent()):
                cube_fail = w
        if len(w) < max_len:
            for letter, g in zip(letters, gens):
                stack.append((w + (letter,), compose(image, g), compose(g, rev_image)))

    report.add(
        "rev_is_inverse",
        rev_fail is None,
        n=n,
        max_len=max_len,
        words=total,
        **_witness(None if rev_fail is None else compact(rev_fail)),
    )
    report.add(
        "symmetric_cube",
        cube_fail is None,
        n=n,
        max_len=max_len,
        words=symmetric,
        **_witness(None if cube_fail is None else compact(cube_fail)),
    )
    return report


# Dispatch


def _suite_relations(n: int, cap: Optional[int]) -> Report:
    return verify_relations(n)


def _suite_presentation(n: int, cap: Optional[int]) -> Report:
    return check_presentation(n, cap=cap)


def _suite_tables(n: int, cap: Optional[int]) -> Report:
    report = Report("tables")
    if n >= 5:
        report.extend(verify_table1(n))
    else:
        report.note(f"table1 skipped: needs degree >= 5, got {n}")
    report.extend(verify_table2(n))
    return report


def _suite_local(n: int, cap: Optional[int]) -> Report:
    return verify_local_iso(n, cap=cap)


def _suite_normal_forms(n: int, cap: Optional[int]) -> Report:
    return verify_normal_forms_3()


def _suite_inverse(n: int, cap: Optional[int]) -> Report:
    report = verify_inverse_structure(n, cap=cap)
    report.extend(verify_factorizable(n, cap=cap))
    return report


def _suite_properties(n: int, cap: Optional[int]) -> Report:
    report = verify_prop_conditions(n)
    if n <= MAX_PROPERTY_P_DEGREE:
        report.extend(verify_property_P(n))
    else:
        report.note(f"property_P skipped: exhaustive search limited to degree {MAX_PROPERTY_P_DEGREE}")
    report.extend(verify_symmetric_words(n, DEFAULT_SYMMETRIC_LENGTH if n <= 4 else 4))
    return report


SUITES: Dict[str, Tuple[Callable[[int, Optional[int]], Report], int, int]] = {
    # name: (runner, smallest degree, largest degree)
    "relations": (_suite_relations, 2, 10),
    "presentation": (_suite_presentation, MIN_DEGREE_X, MAX_ORACLE_DEGREE),
    "tables": (_suite_tables, MIN_DEGREE_LOCAL, 10),
    "local": (_suite_local, MIN_DEGREE_LOCAL, MAX_PROP_DEGREE),
    "normal-forms": (_suite_normal_forms, 1, 10),
    "inverse": (_suite_inverse, 2, 5),
    "properties": (_suite_properties, MIN_DEGREE_X, MAX_PROP_DEGREE),
}


def run_suite(name: str, n: int, cap: Optional[int] = None) -> Report:
    """
    Run one named suite, or every applicable one for ``all``.

    Raises:
        OutOfRange: unknown suite, or a named suite outside its degree range
    """
    if name not in VERIFY_SUITES:
        raise OutOfRange(f"Unknown suite {name!r}; choose from {', '.join(VERIFY_SUITES)}")
    if name != "all":
        runner, low, high = SUITES[name]
        if not low <= n <= high:
            raise OutOfRange(f"Suite {name!r} supports {low} <= n <= {high}, got {n}")
        logger.info(f"Running suite {name} at degree {n}")
        return runner(n, cap)

    report = Report("all")
    for suite, (runner, low, high) in SUITES.items():
        if not low <= n <= high:
            report.note(f"{suite} skipped: supports {low} <= n <= {high}")
            continue
        logger.info(f"Running suite {suite} at degree {n}")
        report.extend(runner(n, cap))
    return report
