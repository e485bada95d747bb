"""Binary trees whose nodes carry vertex sets.

Decomposition trees and binary total partitions are both values of
:class:`SetTree`; they differ only in which invariants they satisfy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Tuple

Label = Tuple[int, ...]


def _label(xs) -> Label:
    return tuple(sorted(set(xs)))


@dataclass(frozen=True)
class SetTree:
    """A node labelled by a vertex set, with an older and a younger child (or none)."""

    label: Label
    older: Optional["SetTree"] = None
    younger: Optional["SetTree"] = None

    def __post_init__(self):
        object.__setattr__(self, "label", _label(self.label))
        if (self.older is None) != (self.younger is None):
            raise ValueError("a node has either two children or none")

    @classmethod
    def leaf(cls, label) -> "SetTree":
        return cls(_label(label))

    @classmethod
    def node(cls, label, older: "SetTree", younger: "SetTree") -> "SetTree":
        return cls(_label(label), older, younger)

    @property
    def is_leaf(self) -> bool:
        return self.older is None

    @property
    def labelset(self) -> frozenset:
        return frozenset(self.label)

    def preorder(self) -> Iterator["SetTree"]:
        """Root, then the older subtree, then the younger subtree."""
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            if not t.is_leaf:
                stack.append(t.younger)
                stack.append(t.older)

    def traversal(self) -> Tuple[Label, ...]:
        return tuple(t.label for t in self.preorder())

    def size(self) -> int:
        return sum(1 for _ in self.preorder())

    def shape(self):
        """The unlabelled shape, as nested tuples."""
        if self.is_leaf:
            return ()
        return (self.older.shape(), self.younger.shape())

    def firstborn(self) -> Iterator["SetTree"]:
        """Every node that is the older child of its parent."""
        for t in self.preorder():
            if not t.is_leaf:
                yield t.older

    def with_root(self, label) -> "SetTree":
        return SetTree(_label(label), self.older, self.younger)

    def map_labels(self, fn: Callable[[int], int], root: bool = True) -> "SetTree":
        """Apply ``fn`` to every element of every label (optionally sparing the root)."""

        def walk(t, is_root):
            lab = t.label if (is_root and not root) else _label(fn(x) for x in t.label)
            if t.is_leaf:
                return SetTree(lab)
            return SetTree(lab, walk(t.older, False), walk(t.younger, False))

        return walk(self, True)

    # -- text and json ---------------------------------------------------------

    def to_text(self) -> str:
        """Nested parenthesised form, e.g. ``(12345 (4) (125 (1) (25 (2) (5))))``."""
        wide = any(x >= 10 for x in self.label)
        sep = "," if wide else ""

        def walk(t):
            lab = sep.join(map(str, t.label))
            if t.is_leaf:
                return f"({lab})"
            return f"({lab} {walk(t.older)} {walk(t.younger)})"

        text = walk(self)
        if wide and self.is_leaf and len(self.label) == 1:
            text = f"({self.label[0]},)"
        return text

    def __str__(self):
        return self.to_text()

    @classmethod
    def parse(cls, text: str) -> "SetTree":
        tokens = text.replace("(", " ( ").replace(")", " ) ").split()
        # one comma anywhere means every label is comma separated
        wide = any("," in tok for tok in tokens)
        pos = 0

        def read():
            nonlocal pos
            if tokens[pos] != "(":
                raise ValueError(f"expected '(' at token {pos}")
            pos += 1
            raw = tokens[pos]
            pos += 1
            lab = [int(x) for x in raw.split(",") if x] if wide else [int(c) for c in raw]
            kids = []
            while tokens[pos] != ")":
                kids.append(read())
            pos += 1
            if len(kids) not in (0, 2):
                raise ValueError("nodes need zero or two children")
            return cls(_label(lab), *kids) if kids else cls(_label(lab))

        try:
            tree = read()
        except IndexError as exc:
            raise ValueError("unbalanced tree text") from exc
        if pos != len(tokens):
            raise ValueError("trailing text after tree")
        return tree

    def to_json(self):
        """``[label]`` for a leaf, ``[label, older, younger]`` otherwise."""
        if self.is_leaf:
            return [list(self.label)]
        return [list(self.label), self.older.to_json(), self.younger.to_json()]

    @classmethod
    def from_json(cls, data) -> "SetTree":
        if isinstance(data, str):
            data = json.loads(data)
        if len(data) == 1:
            return cls(_label(data[0]))
        return cls(_label(data[0]), cls.from_json(data[1]), cls.from_json(data[2]))


def graft_subtree(tree: SetTree, path: Tuple[int, ...], new: SetTree) -> SetTree:
    """Replace the subtree at ``path`` (0 = older, 1 = younger) by ``new``."""
    if not path:
        return new
    head, rest = path[0], path[1:]
    if head == 0:
        return SetTree(tree.label, graft_subtree(tree.older, rest, new), tree.younger)
    return SetTree(tree.label, tree.older, graft_subtree(tree.younger, rest, new))
