"""Deduplicated subformula DAG shared by both network compilers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from logic.formula import Formula, Prop


@dataclass(frozen=True)
class SubformulaDag:
    """Unique subformulas in dependency order; ``children[i]`` indexes into ``nodes``."""

    nodes: Tuple[Formula, ...]
    children: Tuple[Tuple[int, ...], ...]
    root: int

    def __len__(self) -> int:
        return len(self.nodes)

    def index(self, f: Formula) -> int:
        return self.nodes.index(f)

    @property
    def formula(self) -> Formula:
        return self.nodes[self.root]

    def operator_count(self) -> int:
        """Number of non-propositional nodes."""
        return sum(1 for node in self.nodes if not isinstance(node, Prop))


def build_dag(f: Formula) -> SubformulaDag:
    index: Dict[Formula, int] = {}
    nodes = []
    children = []
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if node in index:
            continue
        if expanded:
            index[node] = len(nodes)
            nodes.append(node)
            children.append(tuple(index[c] for c in node.children()))
            continue
        stack.append((node, True))
        for child in reversed(node.children()):
            if child not in index:
                stack.append((child, False))
    return SubformulaDag(tuple(nodes), tuple(children), index[f])
