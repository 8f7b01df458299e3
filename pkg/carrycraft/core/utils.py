import sys
import logging

from fractions import Fraction

try:
    import core.error_handling as eh
except ImportError:
    import carrycraft.core.error_handling as eh

logger = logging.getLogger("main.{}".format(__name__))

COLORS = {
    "green_bold": "1;32m",
    "red_bold": "1;31m",
    "white": "0;38m",
    "white_bold": "1;38m",
    "white_underline": "4;38m",
    "blue_bold": "1;36m",
    "purple_bold": "1;34m",
    "yellow_bold": "1;93m"
}


def colored_print(msg, color_label="white_bold"):
    """
    Wraps a message in the ANSI escape sequence of a color from
    :py:data:`COLORS`. Non-ASCII characters are stripped when stderr is not
    UTF-8 encoded.

    Parameters
    ----------
    msg: str
        The actual text to be printed
    color_label: str
        Key of :py:data:`COLORS`. Unknown labels are used as the raw color
        code.

    Returns
    -------
    str
        The colored message
    """

    encoding = getattr(sys.stderr, "encoding", None) or ""
    if encoding.upper() != "UTF-8":
        msg = "".join([i if ord(i) < 128 else "" for i in msg])

    try:
        col = COLORS[color_label]
    except KeyError:
        col = color_label

    return "\x1b[{}{}\x1b[0m".format(col, msg)


def parse_int_list(text, name="value"):
    """Parses a comma separated list of integers, e.g. ``"3,5,7"``

    Parameters
    ----------
    text : str
        Comma separated integers. Whitespace around items is ignored.
    name : str
        Name of the option, used in the error message.

    Returns
    -------
    list of int

    Raises
    ------
    SanityError
        If any item is not an integer or the list is empty.
    """

    items = [x.strip() for x in text.split(",") if x.strip()]

    if not items:
        raise eh.SanityError("'{}' received an empty list".format(name))

    try:
        return [int(x) for x in items]
    except ValueError:
        raise eh.SanityError("'{}' must be a comma separated list of "
                             "integers. Got: '{}'".format(name, text))


def parse_fraction(text, name="value"):
    """Parses ``"1/2"``, ``"0.25"`` or ``"3"`` into an exact Fraction"""

    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise eh.SanityError("'{}' must be a rational number such as 1/2 or "
                             "0.25. Got: '{}'".format(name, text))
