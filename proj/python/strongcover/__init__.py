"""Strong covers of (t,k)-colorings of complete graphs.

Colorings, interval and subtree families and covers are the C++ types
exposed by the extension module. Each has a ``to_json`` method, and
:func:`load` reads any of the JSON instance documents the command line
tool produces.
"""

import json

from ._core import *  # noqa: F401,F403
from ._core import (
    IntervalFamily,
    MultiColoring,
    SubtreeFamily,
    __version__,
    coloring_from_intervals,
    coloring_from_subtrees,
    load_json,
)


def load(document):
    """Build an instance from a JSON string or an already parsed dict."""
    text = document if isinstance(document, str) else json.dumps(document)
    return load_json(text)


def as_coloring(instance):
    """Return the multicoloring an instance induces."""
    if isinstance(instance, IntervalFamily):
        return coloring_from_intervals(instance)
    if isinstance(instance, SubtreeFamily):
        return coloring_from_subtrees(instance)
    return instance
