from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from maskrepair.syntax import TokenType, tokenize


def test_basic_java_line():
    tokens = tokenize("int indexOfDot = namespace.indexOf('.');")
    texts = [t.text for t in tokens if t.type is not TokenType.EOF]
    assert texts == ["int", "indexOfDot", "=", "namespace", ".", "indexOf", "(", "'.'", ")", ";"]
    assert tokens[0].type is TokenType.KEYWORD
    assert tokens[1].type is TokenType.IDENT
    assert [t.type for t in tokens if t.text == "'.'"] == [TokenType.CHAR]


def test_comments_and_strings():
    src = 'x = "a // not a comment"; // trailing\n/* block\n comment */ y = 1;'
    tokens = tokenize(src)
    comments = [t for t in tokens if t.type is TokenType.COMMENT]
    assert len(comments) == 2
    strings = [t for t in tokens if t.type is TokenType.STRING]
    assert strings[0].text == '"a // not a comment"'


def test_multichar_operators_longest_match():
    tokens = tokenize("a >>>= b >>> c >= d -> e")
    ops = [t.text for t in tokens if t.type is TokenType.OP]
    assert ops == [">>>=", ">>>", ">=", "->"]


def test_number_forms():
    for text in ["0", "42L", "0x1F", "3.14", "1e-9", "2.5f", "0b1010"]:
        tokens = tokenize(text)
        assert tokens[0].type is TokenType.NUMBER
        assert tokens[0].text == text


def test_unterminated_string_stops_at_newline():
    tokens = tokenize('s = "oops\nnext;')
    string_tok = next(t for t in tokens if t.type is TokenType.STRING)
    assert string_tok.text == '"oops'
    assert any(t.text == "next" for t in tokens)


@given(st.text(max_size=300))
def test_tokens_tile_the_source(source):
    """Tokens are in order, non-overlapping, exact slices, and only
    whitespace falls in the gaps."""
    tokens = tokenize(source)
    assert tokens[-1].type is TokenType.EOF
    prev_end = 0
    for tok in tokens[:-1]:
        assert prev_end <= tok.start < tok.end <= len(source)
        assert source[tok.start : tok.end] == tok.text
        assert source[prev_end : tok.start].strip(" \t\r\n\f") == ""
        prev_end = tok.end
    assert source[prev_end:].strip(" \t\r\n\f") == ""
