"""
Text output: literals, ASCII diagrams, DOT export and report lines
"""

import logging
from string import ascii_lowercase
from typing import Iterable, List, Sequence, Tuple

from constants import BLOCK_SEPARATOR, EMPTY_WORD_TOKEN, POINT_SEPARATOR, ROW_SEPARATOR

logger = logging.getLogger(__name__)

# (top labels, bottom labels), both 1-based
DiagramBlocks = Sequence[Tuple[Sequence[int], Sequence[int]]]


def format_partition(blocks: Iterable[Sequence[int]]) -> str:
    """0-based canonical blocks -> 1-based text such as ``1,2|3``"""
    return BLOCK_SEPARATOR.join(
        POINT_SEPARATOR.join(str(p + 1) for p in block) for block in blocks
    )


def format_block_bijection(blocks: DiagramBlocks) -> str:
    """Literal such as ``1,2;3|3;1,2`` (blocks in canonical order)"""
    return BLOCK_SEPARATOR.join(
        POINT_SEPARATOR.join(map(str, top)) + ROW_SEPARATOR + POINT_SEPARATOR.join(map(str, bottom))
        for top, bottom in blocks
    )


def format_word(tokens: Sequence[str]) -> str:
    return " ".join(tokens) if tokens else EMPTY_WORD_TOKEN


def _block_tag(index: int) -> str:
    if index < len(ascii_lowercase):
        return ascii_lowercase[index]
    return f"b{index + 1}"


def render_ascii(n: int, blocks: DiagramBlocks) -> str:
    """
    Two rows of vertices; the tag under a vertex names its block.

    Example for the generator x at n = 3::

             1  2  3
        top  a  a  b
        bot  b  b  a
             1' 2' 3'
    """
    top_tags = [""] * n
    bottom_tags = [""] * n
    for index, (top, bottom) in enumerate(blocks):
        tag = _block_tag(index)
        for v in top:
            top_tags[v - 1] = tag
        for v in bottom:
            bottom_tags[v - 1] = tag

    width = max([len(f"{n}'")] + [len(t) for t in top_tags + bottom_tags]) + 1

    def row(prefix: str, cells: List[str]) -> str:
        return (prefix + "".join(c.ljust(width) for c in cells)).rstrip()

    lines = [
        row("     ", [str(v) for v in range(1, n + 1)]),
        row("top  ", top_tags),
        row("bot  ", bottom_tags),
        row("     ", [f"{v}'" for v in range(1, n + 1)]),
    ]
    return "\n".join(lines)


def render_dot(n: int, blocks: DiagramBlocks, name: str = "blockbijection") -> str:
    """Graphviz source: one node per vertex, a spanning path per block"""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines.append(
        "  { rank=same; " + " ".join(f't{v} [label="{v}"];' for v in range(1, n + 1)) + " }"
    )
    lines.append(
        "  { rank=same; " + " ".join(f'b{v} [label="{v}\'"];' for v in range(1, n + 1)) + " }"
    )
    for v in range(1, n + 1):
        # invisible column edges keep vertex v above vertex v'
        lines.append(f"  t{v} -- b{v} [style=invis];")
    for top, bottom in blocks:
        path = [f"t{v}" for v in top] + [f"b{v}" for v in bottom]
        lines.append("  " + " -- ".join(path) + ";")
    lines.append("}")
    return "\n".join(lines)


def format_check_line(name: str, passed: bool, **fields) -> str:
    """Machine-readable report line, e.g. ``check_presentation n=4 lhs=339 rhs=339 PASS``"""
    parts = [name] + [f"{key}={value}" for key, value in fields.items()]
    parts.append("PASS" if passed else "FAIL")
    return " ".join(parts)
