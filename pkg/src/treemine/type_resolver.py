"""Scoped symbol table type enrichment for ASTs.

Annotates IDENTIFIER and LITERAL leaves with a resolved type string, or the
NO_TYPE sentinel when resolution fails. Resolution is single-file: class
members are visible order-independently, locals only at and after their
declaration, inner bindings shadow outer ones.
"""

from dataclasses import dataclass, field, replace

from .ast_builder import AstNode

NO_TYPE = "NO_TYPE"

_COMMENT_TYPES = ("LINE_COMMENT", "BLOCK_COMMENT")


@dataclass
class Scope:
    kind: str  # "class", "method" or "block"
    bindings: dict[str, str] = field(default_factory=dict)
    parent: "Scope | None" = None

    def lookup(self, name: str) -> str | None:
        scope: Scope | None = self
        while scope is not None:
            if name in scope.bindings:
                return scope.bindings[name]
            scope = scope.parent
        return None


def resolve_identifier(name: str, scope: Scope) -> str:
    found = scope.lookup(name)
    return found if found is not None else NO_TYPE


def annotate_types(tree: AstNode) -> AstNode:
    """Return a copy of a FILE-rooted AST with resolved_type filled in.

    Never fails: anything unresolvable gets NO_TYPE. The input tree is not
    modified.
    """
    classes = {}
    for child in tree.children:
        if child.node_type == "CLASS_DECL":
            name = _first_identifier_token(child)
            if name:
                classes[name] = name
    children = []
    for child in tree.children:
        if child.node_type == "CLASS_DECL":
            children.append(_annotate_class(child, classes))
        else:
            children.append(_annotate(child, Scope("class", dict(classes)), {}))
    return replace(tree, children=children)


def _annotate_class(node: AstNode, classes: dict[str, str]) -> AstNode:
    class_name = _first_identifier_token(node)
    bindings = dict(classes)
    methods: dict[str, str] = {}
    for member in node.children:
        name = _first_identifier_token(member)
        if not name:
            continue
        if member.node_type == "FIELD_DECL":
            bindings[name] = _declared_type_text(member) or NO_TYPE
        elif member.node_type == "METHOD_DECL":
            methods[name] = _declared_type_text(member) or NO_TYPE
        elif member.node_type == "CONSTRUCTOR_DECL":
            methods[name] = class_name or NO_TYPE
    scope = Scope("class", bindings)

    children = []
    named = False
    for child in node.children:
        if not named and child.is_leaf() and child.node_type == "IDENTIFIER":
            children.append(replace(child, resolved_type=class_name or NO_TYPE))
            named = True
        elif child.node_type == "METHOD_DECL":
            children.append(_annotate_callable(
                child, scope, methods, _declared_type_text(child) or NO_TYPE))
        elif child.node_type == "CONSTRUCTOR_DECL":
            children.append(_annotate_callable(
                child, scope, methods, class_name or NO_TYPE))
        elif child.node_type == "FIELD_DECL":
            children.append(_annotate_declarator(child, scope, methods,
                                                 _declared_type_text(child) or NO_TYPE))
        else:
            children.append(_annotate(child, scope, methods))
    return replace(node, children=children)


def _annotate_callable(node: AstNode, class_scope: Scope,
                       methods: dict[str, str], decl_type: str) -> AstNode:
    scope = Scope("method", {}, class_scope)
    for child in node.children:
        if child.node_type == "PARAMETER_LIST":
            for param in child.children:
                if param.node_type == "PARAMETER":
                    name = _first_identifier_token(param)
                    if name:
                        scope.bindings[name] = _declared_type_text(param) or NO_TYPE
    children = []
    named = False
    for child in node.children:
        if not named and child.is_leaf() and child.node_type == "IDENTIFIER":
            children.append(replace(child, resolved_type=decl_type))
            named = True
        elif child.node_type == "PARAMETER_LIST":
            params = []
            for param in child.children:
                if param.node_type == "PARAMETER":
                    params.append(_annotate_declarator(
                        param, scope, methods, _declared_type_text(param) or NO_TYPE))
                else:
                    params.append(_annotate(param, scope, methods))
            children.append(replace(child, children=params))
        else:
            children.append(_annotate(child, scope, methods))
    return replace(node, children=children)


def _annotate_declarator(node: AstNode, scope: Scope,
                         methods: dict[str, str], decl_type: str) -> AstNode:
    # fields, parameters and locals: the declared-name leaf gets the
    # declared type; the rest of the subtree resolves normally
    children = []
    named = False
    for child in node.children:
        if not named and child.is_leaf() and child.node_type == "IDENTIFIER":
            children.append(replace(child, resolved_type=decl_type))
            named = True
        else:
            children.append(_annotate(child, scope, methods))
    return replace(node, children=children)


def _annotate(node: AstNode, scope: Scope, methods: dict[str, str]) -> AstNode:
    base = node.node_type.split(":", 1)[0]
    if node.is_leaf():
        if base == "IDENTIFIER":
            return replace(node, resolved_type=resolve_identifier(node.token or "", scope))
        if base == "LITERAL":
            return replace(node, resolved_type=_literal_type(node.token or ""))
        return replace(node)

    if base == "CODE_BLOCK":
        inner = Scope("block", {}, scope)
        return replace(node, children=[_annotate(c, inner, methods)
                                       for c in node.children])
    if base == "FOR_STMT":
        # loop variable scoped to the whole for statement
        inner = Scope("block", {}, scope)
        return replace(node, children=[_annotate(c, inner, methods)
                                       for c in node.children])
    if base == "LOCAL_VAR_DECL":
        decl_type = _declared_type_text(node) or NO_TYPE
        name = _first_identifier_token(node)
        if name:
            # visible from the declaration itself onward
            scope.bindings[name] = decl_type
        return _annotate_declarator(node, scope, methods, decl_type)
    if base in ("REFERENCE_EXPR", "METHOD_CALL"):
        children = []
        for i, child in enumerate(node.children):
            if child.is_leaf() and child.node_type == "IDENTIFIER":
                if i > 0:
                    # trailing segment of a qualified chain
                    resolved = NO_TYPE
                elif base == "METHOD_CALL":
                    resolved = methods.get(child.token or "", NO_TYPE)
                else:
                    resolved = resolve_identifier(child.token or "", scope)
                children.append(replace(child, resolved_type=resolved))
            else:
                children.append(_annotate(child, scope, methods))
        return replace(node, children=children)

    return replace(node, children=[_annotate(c, scope, methods)
                                   for c in node.children])


def _literal_type(text: str) -> str:
    if text.startswith('"'):
        return "String"
    if text.startswith("'"):
        return "char"
    if text in ("true", "false"):
        return "boolean"
    if text == "null":
        return NO_TYPE
    if text and (text[-1] in "fFdD" or any(c in ".eE" for c in text)):
        return "double"
    return "int"


def _first_identifier_token(node: AstNode) -> str | None:
    for child in node.children:
        if child.is_leaf() and child.node_type == "IDENTIFIER":
            return child.token
    return None


def _declared_type_text(node: AstNode) -> str | None:
    for child in node.children:
        if child.node_type == "TYPE_REF":
            return _type_text(child)
    return None


def _type_text(type_ref: AstNode) -> str:
    if type_ref.is_leaf():
        return type_ref.token or ""
    return "".join(leaf.token or "" for leaf in type_ref.leaves()
                   if leaf.node_type not in _COMMENT_TYPES)
