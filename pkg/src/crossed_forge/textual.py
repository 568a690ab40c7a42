"""Small helpers for the textual element syntax."""
from .errors import ParseError

_OPEN = "([<"
_CLOSE = ")]>"


def split_signed_terms(text):
    """Split ``text`` at top-level ``+``/``-`` signs.

    Returns ``[(sign, term), ...]`` with sign in {+1, -1}.  A ``-`` directly
    after ``^`` is an exponent sign and does not split.
    """
    terms = []
    depth = 0
    sign = 1
    cur = []
    prev = ""
    for ch in text:
        if depth == 0 and ch in "+-" and prev != "^":
            body = "".join(cur).strip()
            if body:
                terms.append((sign, body))
                sign = 1
            if ch == "-":
                sign = -sign
            cur = []
            prev = ch
            continue
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        cur.append(ch)
        if not ch.isspace():
            prev = ch
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    body = "".join(cur).strip()
    if body:
        terms.append((sign, body))
    elif text.strip():
        raise ParseError(f"dangling sign in {text!r}")
    return terms


def split_top_level(text, sep=","):
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def strip_parens(text):
    text = text.strip()
    while text.startswith("(") and text.endswith(")") and _matching(text):
        text = text[1:-1].strip()
    return text


def _matching(text):
    depth = 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth == 0 and i != len(text) - 1:
                return False
    return True


def needs_parens(text):
    """True when ``text`` has a top-level sign past its first character."""
    depth = 0
    prev = ""
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-" and prev != "^":
            return True
        if not ch.isspace():
            prev = ch
    return False
