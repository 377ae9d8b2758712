"""
parsing.py
==========

Exact-real literal grammar, shared by the CLI and the test fixtures.

    rational := int | int "/" posint
    real     := rational
              | rational "*sqrt(" posint ")"
              | rational sign rational "*sqrt(" posint ")"

Whitespace between tokens is ignored. Decimal points, exponents and bare
``sqrt(d)`` are rejected: every literal denotes an exact value.

Typical Usage
-------------
>>> from beatty_stadium.parsing import parse_real
>>> str(parse_real("1/2 + 1/2*sqrt(5)"))
'1/2+1/2*sqrt(5)'
>>> parse_real("0.5")
Traceback (most recent call last):
...
beatty_stadium.errors.ParseError: unexpected input '.' (at position 1)
"""

from fractions import Fraction

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, VisitError

from .errors import BeattyError, ParseError, RadicandNotSquarefree
from .exact import ExactReal, is_squarefree

REAL_GRAMMAR = r"""
    ?start: real

    real: rational                          -> plain
        | rational "*" surd                 -> surd_only
        | rational SIGN rational "*" surd   -> mixed

    surd: "sqrt" "(" INT ")"
    rational: SIGNED_INT ("/" INT)?

    SIGN: "+" | "-"

    %import common.INT
    %import common.SIGNED_INT
    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class RealTransformer(Transformer):
    """Build an ExactReal from a parse tree."""

    def rational(self, num, den=None):
        if den is not None and int(den) == 0:
            raise ParseError("zero denominator", getattr(den, "start_pos", None))
        return Fraction(int(num), int(den) if den is not None else 1)

    def surd(self, radicand):
        d = int(radicand)
        if d < 2 or not is_squarefree(d):
            raise RadicandNotSquarefree(f"sqrt({d}): radicand must be a squarefree integer >= 2")
        return d

    def plain(self, value):
        return ExactReal(value)

    def surd_only(self, coeff, d):
        return ExactReal(0, coeff, d)

    def mixed(self, a, sign, coeff, d):
        return ExactReal(a, coeff if sign == "+" else -coeff, d)


_PARSER = Lark(REAL_GRAMMAR, parser="lalr")


def parse_real(text: str) -> ExactReal:
    """
    Parse an exact-real literal.

    Raises
    ------
    ParseError
        Input does not match the grammar (position = character offset).
    RadicandNotSquarefree
        ``sqrt(d)`` with d < 2 or d divisible by a square.
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedCharacters as e:
        raise ParseError(f"unexpected input {text[e.pos_in_stream]!r}", e.pos_in_stream) from None
    except UnexpectedInput as e:
        pos = getattr(e, "pos_in_stream", None)
        raise ParseError("malformed exact-real literal", pos if pos is not None and pos >= 0 else len(text)) from None
    try:
        return RealTransformer().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, BeattyError):
            raise e.orig_exc from None
        raise


def format_real(x: ExactReal) -> str:
    """Inverse of `parse_real`."""
    return str(x)
