"""Tokenizer shared by the scalar, free-algebra and model text formats."""

import re

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<int>\d+)"
    r"|(?P<z>z\d+)"
    r"|(?P<word>[xy]+|e)(?![A-Za-z0-9])"
    r"|(?P<q>q)(?![A-Za-z0-9])"
    r"|(?P<tensor>\(\*\)|⊗)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


class ParseError(ValueError):
    pass


def tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


class TokenStream:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, offset=0):
        i = self.pos + offset
        if i < len(self.tokens):
            return self.tokens[i]
        return (None, None)

    def next(self):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def accept(self, kind, value=None):
        k, v = self.peek()
        if k == kind and (value is None or v == value):
            self.pos += 1
            return v
        return None

    def expect(self, kind, value=None):
        v = self.accept(kind, value)
        if v is None:
            raise ParseError(f"expected {value or kind}, got {self.peek()[1]!r}")
        return v

    def at_end(self):
        return self.pos >= len(self.tokens)
