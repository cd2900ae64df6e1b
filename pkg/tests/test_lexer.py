import pytest

from pyquartet.errors import LexError
from pyquartet.lexer import tokenize


def kinds_and_texts(source):
    return [(t.kind, t.text) for t in tokenize(source)]


def test_statement_tokens():
    tokens = tokenize("T1 = Te(m, n);")
    assert [(t.kind, t.text, t.line, t.col) for t in tokens] == [
        ("ident", "T1", 1, 1),
        ("punct", "=", 1, 4),
        ("ident", "Te", 1, 6),
        ("punct", "(", 1, 8),
        ("ident", "m", 1, 9),
        ("punct", ",", 1, 10),
        ("ident", "n", 1, 12),
        ("punct", ")", 1, 13),
        ("punct", ";", 1, 14),
        ("eof", "", 1, 15),
    ]


def test_rational_literal_is_one_token():
    assert kinds_and_texts("1/2") == [("number", "1/2"), ("eof", "")]
    assert kinds_and_texts("1 / 2") == [("number", "1"), ("punct", "/"), ("number", "2"), ("eof", "")]
    assert kinds_and_texts("m/2") == [("ident", "m"), ("punct", "/"), ("number", "2"), ("eof", "")]


def test_keywords_and_operators():
    assert kinds_and_texts("assert a != b; show shows;") == [
        ("keyword", "assert"), ("ident", "a"), ("punct", "!="), ("ident", "b"), ("punct", ";"),
        ("keyword", "show"), ("ident", "shows"), ("punct", ";"), ("eof", ""),
    ]
    assert [t for _, t in kinds_and_texts("a==b=c^2")] == ["a", "==", "b", "=", "c", "^", "2", ""]


def test_comments_and_positions():
    tokens = tokenize("# header\n  vars m; # trailing\nshow m;")
    assert [(t.text, t.line, t.col) for t in tokens[:3]] == [("vars", 2, 3), ("m", 2, 8), (";", 2, 9)]
    assert (tokens[3].line, tokens[3].col) == (3, 1)
    assert tokens[-1].kind == "eof"


def test_empty_source():
    assert kinds_and_texts("") == [("eof", "")]
    assert kinds_and_texts("# nothing\n") == [("eof", "")]


@pytest.mark.parametrize(
    "source,line,col",
    [
        ("@", 1, 1),
        ("x = 1.5;", 1, 6),
        ("x = 1;\n  $", 2, 3),
        ("x = !1;", 1, 5),
        ("café = 1;", 1, 4),
    ],
)
def test_lex_errors(source, line, col):
    with pytest.raises(LexError) as info:
        tokenize(source)
    assert (info.value.line, info.value.col) == (line, col)
