"""
Input validation and parsing for the text grammars used by the CLI and tests
"""

import re
import logging
from typing import List, Tuple

from constants import BLOCK_SEPARATOR, EMPTY_WORD_TOKEN, POINT_SEPARATOR, ROW_SEPARATOR
from errors import ParseError

logger = logging.getLogger(__name__)

# Letters and macros accepted in words
WORD_TOKEN_PATTERN = re.compile(r"^(x|t|1|sigma|Sigma|X|s[1-9][0-9]*|S[1-9][0-9]*|[ley][1-9][0-9]*)$")

LABEL_PATTERN = re.compile(r"^[1-9][0-9]*$")


def _strip_all(text: str) -> str:
    return re.sub(r"\s+", "", text)


def _parse_labels(chunk: str, context: str) -> List[int]:
    if chunk == "":
        return []
    labels = []
    for item in chunk.split(POINT_SEPARATOR):
        if not LABEL_PATTERN.match(item):
            raise ParseError(f"Invalid vertex label {item!r} in {context!r}")
        labels.append(int(item))
    return labels


def parse_partition_text(text: str) -> List[List[int]]:
    """``1,2|3`` -> [[1, 2], [3]] (1-based, not yet checked for coverage)"""
    if not isinstance(text, str):
        raise ParseError("Partition text must be a string")
    body = _strip_all(text)
    if body == "":
        return []
    blocks = []
    for chunk in body.split(BLOCK_SEPARATOR):
        block = _parse_labels(chunk, text)
        if not block:
            raise ParseError(f"Empty block in {text!r}")
        blocks.append(block)
    return blocks


def parse_block_bijection_text(text: str) -> List[Tuple[List[int], List[int]]]:
    """``1,2;3|3;1,2`` -> [([1, 2], [3]), ([3], [1, 2])]"""
    if not isinstance(text, str):
        raise ParseError("Block bijection literal must be a string")
    body = _strip_all(text)
    if body == "":
        raise ParseError("Empty block bijection literal")
    blocks = []
    for chunk in body.split(BLOCK_SEPARATOR):
        if chunk.count(ROW_SEPARATOR) != 1:
            raise ParseError(f"Block {chunk!r} must contain exactly one {ROW_SEPARATOR!r}")
        top, bottom = chunk.split(ROW_SEPARATOR)
        blocks.append((_parse_labels(top, text), _parse_labels(bottom, text)))
    return blocks


def tokenize_word(text: str) -> List[str]:
    """Split a word into validated tokens; ``1`` (the empty word) contributes nothing"""
    if not isinstance(text, str):
        raise ParseError("Word must be a string")
    tokens = []
    for token in text.split():
        if not WORD_TOKEN_PATTERN.match(token):
            raise ParseError(f"Unknown word token {token!r}")
        if token != EMPTY_WORD_TOKEN:
            tokens.append(token)
    return tokens


def validate_block_bijection_text(text: str) -> bool:
    try:
        parse_block_bijection_text(text)
    except ParseError:
        return False
    return True


def validate_word_text(text: str) -> bool:
    try:
        tokenize_word(text)
    except ParseError:
        return False
    return True
