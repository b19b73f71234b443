"""Concrete syntax tree model.

A CST is lossless: every byte of the source file, including whitespace,
punctuation and comments, lives in exactly one leaf, and concatenating the
leaf texts in order reproduces the file.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class CstKind(Enum):
    FILE = "FILE"
    CLASS_DECL = "CLASS_DECL"
    MODIFIER_LIST = "MODIFIER_LIST"
    MODIFIER = "MODIFIER"
    ANNOTATION = "ANNOTATION"
    FIELD_DECL = "FIELD_DECL"
    METHOD_DECL = "METHOD_DECL"
    CONSTRUCTOR_DECL = "CONSTRUCTOR_DECL"
    PARAMETER_LIST = "PARAMETER_LIST"
    PARAMETER = "PARAMETER"
    TYPE_REF = "TYPE_REF"
    CODE_BLOCK = "CODE_BLOCK"
    LOCAL_VAR_DECL = "LOCAL_VAR_DECL"
    IF_STMT = "IF_STMT"
    WHILE_STMT = "WHILE_STMT"
    FOR_STMT = "FOR_STMT"
    RETURN_STMT = "RETURN_STMT"
    EXPR_STMT = "EXPR_STMT"
    ASSIGNMENT_EXPR = "ASSIGNMENT_EXPR"
    BINARY_EXPR = "BINARY_EXPR"
    UNARY_EXPR = "UNARY_EXPR"
    METHOD_CALL = "METHOD_CALL"
    ARGUMENT_LIST = "ARGUMENT_LIST"
    REFERENCE_EXPR = "REFERENCE_EXPR"
    NEW_EXPR = "NEW_EXPR"
    ARRAY_ACCESS_EXPR = "ARRAY_ACCESS_EXPR"
    PAREN_EXPR = "PAREN_EXPR"
    LITERAL = "LITERAL"
    IDENTIFIER = "IDENTIFIER"
    KEYWORD = "KEYWORD"
    OPERATOR = "OPERATOR"
    PUNCTUATION = "PUNCTUATION"
    WHITE_SPACE = "WHITE_SPACE"
    LINE_COMMENT = "LINE_COMMENT"
    BLOCK_COMMENT = "BLOCK_COMMENT"


# Kinds produced by the tokenizer; these are the only leaf kinds.
TOKEN_KINDS = frozenset({
    CstKind.IDENTIFIER,
    CstKind.KEYWORD,
    CstKind.LITERAL,
    CstKind.OPERATOR,
    CstKind.PUNCTUATION,
    CstKind.WHITE_SPACE,
    CstKind.LINE_COMMENT,
    CstKind.BLOCK_COMMENT,
})

COMMENT_KINDS = frozenset({CstKind.LINE_COMMENT, CstKind.BLOCK_COMMENT})

# Token kinds that structure-building skips over (they still become leaves).
TRIVIA_KINDS = frozenset({CstKind.WHITE_SPACE}) | COMMENT_KINDS

CST_KIND_NAMES = frozenset(k.name for k in CstKind)


@dataclass(frozen=True)
class SourceSpan:
    """Half-open byte range plus the 1-based line range it covers."""

    byte_offset_start: int
    byte_offset_end: int
    line_start: int
    line_end: int

    def line_count(self) -> int:
        return self.line_end - self.line_start + 1


@dataclass
class CstNode:
    kind: CstKind
    span: SourceSpan
    text: str | None = None
    children: list["CstNode"] = field(default_factory=list)

    def is_leaf(self) -> bool:
        return self.kind in TOKEN_KINDS

    def leaves(self) -> Iterator["CstNode"]:
        """All leaves in source order."""
        if self.is_leaf():
            yield self
        else:
            for child in self.children:
                yield from child.leaves()

    def reconstruct(self) -> str:
        """In-order leaf-text concatenation; equals the original source."""
        return "".join(leaf.text or "" for leaf in self.leaves())
