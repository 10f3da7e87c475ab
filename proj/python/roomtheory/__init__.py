"""Room-based document scoring.

Train a room (word embeddings) from a corpus, score documents against the
Plutchik emotion matrix or a keyword benchmark, and compare how two rooms
perceive the same documents.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
