"""Text syntax of continued fractions, sequences and exact values.

    [a0; p1, p2, (q1, q2, q3)]        eventually periodic continued fraction
    <(l1, l2)| c1 c2 c3 |(r1, r2)>     bi-infinite sequence, index 0 at c1
    (a + b*sqrt(d))/c                  quadratic surd
    s0 + s1*sqrt(d1) + s2*sqrt(d2) + s12*sqrt(d1*d2)
                                       element of a biquadratic field

Letters are separated by commas and/or spaces. Parse errors raise
`CFSyntaxError` with the offset of the offending character.

"""

import re
from fractions import Fraction

from parse import parse, Result

from markoff.cf.words import Word
from markoff.errors import CFSyntaxError
from markoff.exact.surd import QuadSurd, qs_normalize, squarefree_split
from markoff.exact.surdsum import SurdSum

TOKEN = re.compile(r"[^,\s]+")

CF_FORMATS = ("[{a0:d};{body}]", "[{a0:d};]", "[{a0:d}]")
BISEQ_FORMATS = ("<({left})|{center}|({right})>", "<({left})||({right})>")
SURD_FORMAT = "({a:d} + {b:d}*sqrt({d:d}))/{c:d}"
SURDSUM_FORMAT = (
    "{base} + {s1}*sqrt({d1:d}) + {s2}*sqrt({d2:d}) + "
    "{s12}*sqrt({p1:d}*{p2:d})"
)


def parse_word(segment: str, text: str, offset: int) -> Word:
    """Parse letters separated by commas or spaces.

    Args:
        segment (str): the part of `text` holding the letters.
        text (str): the whole text, for error reports.
        offset (int): the position of `segment` in `text`.

    """
    letters = []
    for match in TOKEN.finditer(segment):
        result = parse("{:d}", match.group())
        if result is None or result.fixed[0] < 1:
            raise CFSyntaxError(
                f"{match.group()!r} isn't a positive partial quotient",
                text,
                offset + match.start(),
            )

        letters.append(result.fixed[0])

    return tuple(letters)


def format_word(word: Word, separator: str = ", ") -> str:
    """Return the letters joined by a separator."""
    return separator.join(str(letter) for letter in word)


def _shape_error(text: str, opening: str, closing: str, expected: str):
    """Return the syntax error of text not matching any format."""
    stripped = text.strip()
    start = len(text) - len(text.lstrip())
    if not stripped.startswith(opening):
        return CFSyntaxError(f"expected {opening!r}", text, start)

    if not stripped.endswith(closing):
        return CFSyntaxError(
            f"expected {closing!r}", text, start + len(stripped) - 1
        )

    return CFSyntaxError(f"expected {expected}", text, start + len(opening))


def _first_match(formats, text: str) -> tuple[Result | None, int]:
    """Return the first format result on the stripped text and its offset."""
    start = len(text) - len(text.lstrip())
    stripped = text.strip()
    for format in formats:
        result = parse(format, stripped)
        if result is not None:
            return result, start

    return None, start


def parse_cf_parts(text: str) -> tuple[int, Word, Word]:
    """Parse "[a0; p1, p2, (q1, q2)]" into (a0, preperiod, period).

    The period is empty when the text has no parentheses.

    Raises:
        CFSyntaxError: the text isn't a continued fraction.

    """
    result, start = _first_match(CF_FORMATS, text)
    if result is None:
        raise _shape_error(text, "[", "]", "an integer part")

    a0 = result["a0"]
    if "body" not in result.named:
        return (a0, (), ())

    body = result["body"]
    body_start = start + result.spans["body"][0]
    opening = body.find("(")
    if opening < 0:
        if ")" in body:
            raise CFSyntaxError(
                "unbalanced ')'", text, body_start + body.index(")")
            )
        return (a0, parse_word(body, text, body_start), ())

    closing = body.rfind(")")
    if closing < opening:
        raise CFSyntaxError("unclosed period", text, body_start + opening)

    trailing = body[closing + 1:]
    if trailing.strip():
        position = closing + 1 + len(trailing) - len(trailing.lstrip())
        raise CFSyntaxError(
            "the period must come last", text, body_start + position
        )

    preperiod = parse_word(body[:opening], text, body_start)
    period = parse_word(
        body[opening + 1:closing], text, body_start + opening + 1
    )
    if not period:
        raise CFSyntaxError("empty period", text, body_start + opening)

    return (a0, preperiod, period)


def format_cf(a0: int, preperiod: Word, period: Word) -> str:
    """Return the text of a continued fraction, parsed by `parse_cf_parts`."""
    parts = [str(letter) for letter in preperiod]
    if period:
        parts.append(f"({format_word(period)})")

    if not parts:
        return f"[{a0}]"

    return f"[{a0}; {', '.join(parts)}]"


def parse_biseq_parts(text: str) -> tuple[Word, Word, Word]:
    """Parse "<(L)| c1 c2 |(R)>" into (left, center, right).

    Raises:
        CFSyntaxError: the text isn't a sequence or a period is empty.

    """
    result, start = _first_match(BISEQ_FORMATS, text)
    if result is None:
        raise _shape_error(text, "<(", ")>", "'<(L)| center |(R)>'")

    words = {}
    for name in ("left", "center", "right"):
        if name not in result.named:
            words[name] = ()
            continue

        span_start = start + result.spans[name][0]
        words[name] = parse_word(result[name], text, span_start)
        if name != "center" and not words[name]:
            raise CFSyntaxError(f"empty {name} period", text, span_start)

    return (words["left"], words["center"], words["right"])


def format_biseq(left: Word, center: Word, right: Word) -> str:
    """Return the text of a sequence, parsed by `parse_biseq_parts`."""
    middle = f" {format_word(center, ' ')} " if center else ""
    return f"<({format_word(left)})|{middle}|({format_word(right)})>"


def _radical(coefficient: Fraction, radicand: int) -> SurdSum:
    """Return coefficient * sqrt(radicand) as a canonical sum."""
    if not coefficient or radicand == 0:
        return SurdSum.of({})

    factor, rest = squarefree_split(radicand)
    return SurdSum.of({rest: coefficient * factor})


def _fraction(result: Result, name: str, text: str, start: int) -> Fraction:
    try:
        return Fraction(result[name].strip())
    except ValueError:
        raise CFSyntaxError(
            f"{result[name]!r} isn't a rational number",
            text,
            start + result.spans[name][0],
        ) from None


def parse_value(text: str) -> QuadSurd | SurdSum:
    """Parse the printed form of a `QuadSurd` or a `SurdSum`.

    Raises:
        CFSyntaxError: the text is neither form.

    """
    result, start = _first_match((SURD_FORMAT,), text)
    if result is not None:
        if result["d"] < 0:
            raise CFSyntaxError(
                "negative radicand", text, start + result.spans["d"][0]
            )
        if result["c"] == 0:
            raise CFSyntaxError(
                "zero denominator", text, start + result.spans["c"][0]
            )
        return qs_normalize(result["a"], result["b"], result["c"], result["d"])

    result, start = _first_match((SURDSUM_FORMAT,), text)
    if result is None:
        raise CFSyntaxError(
            "expected '(a + b*sqrt(d))/c' or "
            "'s0 + s1*sqrt(d1) + s2*sqrt(d2) + s12*sqrt(d1*d2)'",
            text,
            start,
        )

    for name in ("d1", "d2", "p1", "p2"):
        if result[name] < 0:
            raise CFSyntaxError(
                "negative radicand", text, start + result.spans[name][0]
            )

    base, s1, s2, s12 = (
        _fraction(result, name, text, start)
        for name in ("base", "s1", "s2", "s12")
    )
    return (
        SurdSum.of({1: base})
        + _radical(s1, result["d1"])
        + _radical(s2, result["d2"])
        + _radical(s12, result["p1"] * result["p2"])
    )
