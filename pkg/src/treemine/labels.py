"""Label extraction: produce (label, tree) pairs for supervised mining.

The method-name extractor hides the target from the input tree: the
declaration name becomes a placeholder token and every same-name call site
is masked, so the label cannot leak through recursive calls.
"""

import copy
from dataclasses import dataclass

from .ast_builder import AstNode
from .errors import ConfigError

NO_LABEL = "NO_LABEL"
DEFAULT_NAME_TOKEN = "METHOD_NAME"
DEFAULT_RECURSION_TOKEN = "SELF"

_METHOD_ROOTS = ("METHOD_DECL", "CONSTRUCTOR_DECL")


@dataclass(frozen=True)
class LabeledTree:
    label: str
    tree: AstNode


def extract_none(tree: AstNode) -> LabeledTree:
    return LabeledTree(NO_LABEL, tree)


def extract_method_name(tree: AstNode,
                        name_token: str = DEFAULT_NAME_TOKEN,
                        recursion_token: str = DEFAULT_RECURSION_TOKEN) -> LabeledTree:
    """Label a method-rooted tree with its declared name, then hide it.

    The name leaf is replaced by name_token and every METHOD_CALL callee
    matching the name by recursion_token. Constructors are labeled with the
    class name. Tree shape, other tokens and resolved types are untouched.
    """
    if tree.node_type not in _METHOD_ROOTS:
        raise ConfigError(
            "method_name extraction requires method granularity; "
            f"got a {tree.node_type} tree")
    label = None
    for child in tree.children:
        if child.is_leaf() and child.node_type == "IDENTIFIER":
            label = child.token
            break
    if not label:
        raise ConfigError("method tree has no declaration name leaf")

    masked = copy.deepcopy(tree)
    named = False
    for child in masked.children:
        if not named and child.is_leaf() and child.node_type == "IDENTIFIER":
            child.token = name_token
            named = True
    _mask_calls(masked, label, recursion_token)
    return LabeledTree(label, masked)


def _mask_calls(node: AstNode, name: str, recursion_token: str) -> None:
    if node.node_type == "METHOD_CALL":
        for child in node.children:
            if (child.is_leaf() and child.node_type == "IDENTIFIER"
                    and child.token == name):
                child.token = recursion_token
    for child in node.children:
        _mask_calls(child, name, recursion_token)
