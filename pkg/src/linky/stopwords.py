"""Default English stopword list for content word clouds.

Callers can replace it with their own set (``--stopwords`` takes a file of
one word per line).
"""

from pathlib import Path

DEFAULT_STOPWORDS = frozenset(
    """
    a about above after again against all am an and any are aren as at be
    because been before being below between both but by can cannot could
    couldn did didn do does doesn doing don down during each few for from
    further had hadn has hasn have haven having he her here hers herself him
    himself his how i if in into is isn it its itself just ll me more most
    mustn my myself no nor not now of off on once only or other our ours
    ourselves out over own re s same shan she should shouldn so some such t
    than that the their theirs them themselves then there these they this
    those through to too under until up ve very was wasn we were weren what
    when where which while who whom why will with won would wouldn you your
    yours yourself yourselves
    """.split()
)


def load_stopwords(path) -> frozenset:
    """One lowercase token per line; blank lines and # comments ignored."""
    words = set()
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        word = raw.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)
