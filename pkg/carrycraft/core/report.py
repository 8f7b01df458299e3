"""
Output helpers shared by the command line: deterministic JSON and jinja2
text reports.
"""

import os
import json
import logging

from enum import Enum
from fractions import Fraction
from os.path import dirname, join, abspath

import jinja2

logger = logging.getLogger("main.{}".format(__name__))

TEMPLATE_DIR = join(dirname(abspath(__file__)), "templates")


def _default(obj):

    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return "{}".format(obj.numerator)
        return "{}/{}".format(obj.numerator, obj.denominator)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    if hasattr(obj, "as_dict"):
        return obj.as_dict()
    # gmpy2 integers
    try:
        return int(obj)
    except (TypeError, ValueError):
        raise TypeError("Object of type {} is not JSON serializable".format(
            type(obj).__name__))


def dump_json(obj):
    """JSON with sorted keys; Fractions become ``"p/q"`` strings"""
    return json.dumps(obj, default=_default, sort_keys=True, indent=2)


def render(template, context):
    """Wrapper to the jinja2 render method from a template file

    Parameters
    ----------
    template : str
        File name of the template in ``core/templates``.
    context : dict
        Dictionary with kwargs context to populate the template
    """

    path, filename = os.path.split(join(TEMPLATE_DIR, template))

    return jinja2.Environment(
        loader=jinja2.FileSystemLoader(path or "./"),
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True
    ).get_template(filename).render(context)
