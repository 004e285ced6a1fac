"""
Static data: proof-table cells, the degree-3 normal-form list and reference literals
"""

from typing import Dict, List, Tuple

# Case classes: label -> representative values (boundary and boundary + 1 for open classes)
K_CLASSES: Dict[str, Tuple[int, ...]] = {"1": (1,), "2": (2,), "3": (3,), ">=4": (4, 5)}
L_CLASSES: Dict[str, Tuple[int, ...]] = {"0": (0,), "1": (1,), "2": (2,), ">=3": (3, 4)}
I_CLASSES: Dict[str, Tuple[int, ...]] = {"0": (0,), "1": (1,), ">=2": (2, 3)}
J_CLASSES: Dict[str, Tuple[int, ...]] = {"1": (1,), "2": (2,), ">=3": (3, 4)}

# Expressions for x (x^2)^pi x, pi = s2^k s3^k s4^k s1^l s2^l s3^l, as words over X_n
SQUARE_CONJUGATE_TABLE: Dict[Tuple[str, str], str] = {
    ("1", "0"): "x x",
    ("1", "1"): "x x",
    ("1", "2"): "x x s2 x x",
    ("1", ">=3"): "x x sigma x x sigma",
    ("2", "0"): "x x s2 x x",
    ("2", "1"): "x x s2 x x",
    ("2", "2"): "x x s2 x x",
    ("2", ">=3"): "x x sigma x x sigma",
    ("3", "0"): "x x sigma x x sigma",
    ("3", "1"): "x x sigma x x sigma",
    ("3", "2"): "x x s2 s3 s2 x x",
    ("3", ">=3"): "x x s2 s3 s2 x x",
    (">=4", "0"): "s4 x x sigma x x sigma s4",
    (">=4", "1"): "s4 x x sigma x x sigma s4",
    (">=4", "2"): "s4 x x s2 s3 s2 x x s4",
    (">=4", ">=3"): "s3 s4 x x sigma x x sigma s4 s3",
}

# Expressions for e pi e, pi = s2^j s3^j s1^i s2^i, as words over X_{n-1}
# (read through x -> X, s1 -> S1, s_j -> S_j; "1" is e, the identity of eMe)
LOCAL_UNIT_TABLE: Dict[Tuple[str, str], str] = {
    ("0", "1"): "1",
    ("0", "2"): "x x",
    ("0", ">=3"): "x x s2",
    ("1", "1"): "1",
    ("1", "2"): "x x",
    ("1", ">=3"): "x x s2",
    (">=2", "1"): "x x",
    (">=2", "2"): "x x",
    (">=2", ">=3"): "s1 s2 x s2 s1",
}

TableCell = Tuple[str, str, Tuple[int, ...], Tuple[int, ...], str]

SQUARE_CONJUGATE_CELLS: List[TableCell] = [
    (kc, lc, K_CLASSES[kc], L_CLASSES[lc], expr) for (kc, lc), expr in SQUARE_CONJUGATE_TABLE.items()
]
LOCAL_UNIT_CELLS: List[TableCell] = [
    (ic, jc, I_CLASSES[ic], J_CLASSES[jc], expr) for (ic, jc), expr in LOCAL_UNIT_TABLE.items()
]

# Words whose images are the 25 elements of I_3*: 6 units, 18 products, the zero
_UNITS_3 = ["1", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"]
_PRODUCTS_3 = [
    " ".join(part for part in (left, middle, right) if part)
    for left in ("", "s2", "s1 s2")
    for middle in ("x", "x x")
    for right in ("", "s2", "s2 s1")
]
NORMAL_FORMS_3: List[str] = _UNITS_3 + _PRODUCTS_3 + ["x s2 x"]

# Reference block bijection at degree 8: domain (1,2|3|4,6,7|5,8), range (1|2,4|3|5,6,7,8)
REFERENCE_DEGREE = 8
REFERENCE_LITERAL = "1,2;2,4|3;5,6,7,8|4,6,7;1|5,8;3"

# An element of the local submonoid of epsilon at degree 5 and its image under upsilon
LOCAL_DEGREE = 5
LOCAL_LITERAL = "1,2,4;1,2|3;4,5|5;3"
LOCAL_IMAGE_LITERAL = "1,3;1|2;3,4|4;2"

# Known cardinalities of I_n*, n = 1..6
CARDINALITIES: Dict[int, int] = {1: 1, 2: 3, 3: 25, 4: 339, 5: 6721, 6: 179643}
