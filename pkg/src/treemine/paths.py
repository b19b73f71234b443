"""Path-context mining.

A path-context joins two AST leaves through their lowest common ancestor:
(start token, node-type path, end token) plus resolved types. Contexts are
bounded by path node count and by width, the child-index gap of the two
branches at the LCA. Oversized bags are down-sampled deterministically.
"""

import hashlib
import random
import re
from dataclasses import dataclass

from .ast_builder import AstNode
from .type_resolver import NO_TYPE


@dataclass(frozen=True)
class MinerLimits:
    max_path_nodes: int = 9
    max_path_width: int = 2
    max_contexts: int = 200
    rng_seed: int = 0


@dataclass(frozen=True)
class PathContext:
    start_token: tuple[str, ...]
    start_type: str
    path: tuple[str, ...]
    end_token: tuple[str, ...]
    end_type: str


_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z])(?=[A-Z])")
_NON_ALNUM = re.compile(r"[^0-9A-Za-z]+")


def split_subtokens(token: str) -> list[str]:
    """Split on underscores and lower-to-upper boundaries, lowercased.

    Characters outside letters and digits are removed. A token with nothing
    left yields the singleton ["_"].
    """
    parts = []
    for chunk in token.split("_"):
        for piece in _CAMEL_BOUNDARY.split(chunk):
            cleaned = _NON_ALNUM.sub("", piece).lower()
            if cleaned:
                parts.append(cleaned)
    return parts or ["_"]


def enumerate_paths(tree: AstNode, limits: MinerLimits) -> list[PathContext]:
    """All leaf-pair contexts within the limits, ordered by leaf indices."""
    leaves: list[tuple[AstNode, list[AstNode], list[int]]] = []

    def walk(node: AstNode, chain: list[AstNode], indices: list[int]) -> None:
        chain = chain + [node]
        if node.is_leaf():
            leaves.append((node, chain, indices))
        else:
            for i, child in enumerate(node.children):
                walk(child, chain, indices + [i])

    walk(tree, [], [])

    contexts = []
    for i in range(len(leaves)):
        a_leaf, a_chain, a_idx = leaves[i]
        for j in range(i + 1, len(leaves)):
            b_leaf, b_chain, b_idx = leaves[j]
            # k = number of shared ancestors; chain[k-1] is the LCA
            k = 0
            limit = min(len(a_chain), len(b_chain))
            while k < limit and a_chain[k] is b_chain[k]:
                k += 1
            path_nodes = len(a_chain) + len(b_chain) - 2 * k + 1
            if path_nodes > limits.max_path_nodes:
                continue
            width = abs(a_idx[k - 1] - b_idx[k - 1])
            if width > limits.max_path_width:
                continue
            up = [n.node_type for n in reversed(a_chain[k - 1:])]
            down = [n.node_type for n in b_chain[k:]]
            contexts.append(PathContext(
                start_token=tuple(split_subtokens(a_leaf.token or "")),
                start_type=a_leaf.resolved_type or NO_TYPE,
                path=tuple(up + down),
                end_token=tuple(split_subtokens(b_leaf.token or "")),
                end_type=b_leaf.resolved_type or NO_TYPE,
            ))
    return contexts


def sample_contexts(contexts: list[PathContext], limits: MinerLimits,
                    tree_key: str = "") -> list[PathContext]:
    """Deterministically down-sample to max_contexts, preserving order.

    The generator is seeded from rng_seed plus a stable per-tree key so
    results do not depend on processing order across trees.
    """
    if len(contexts) <= limits.max_contexts:
        return list(contexts)
    digest = hashlib.sha256(
        f"{limits.rng_seed}:{tree_key}".encode("utf-8")).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    picked = sorted(rng.sample(range(len(contexts)), limits.max_contexts))
    return [contexts[i] for i in picked]
