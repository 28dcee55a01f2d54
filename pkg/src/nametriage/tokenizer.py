"""Rule-based file name tokenization.

A file name is decoded (``%xx`` escapes), then split at every character
outside ``[a-zA-Z0-9]``, at lower-to-upper camel case boundaries, and at
letter/digit transitions. Tokens are lowercased last, so each output token
is a run of ASCII letters or a run of digits. Non-ASCII characters act as
separators.

``lemmatize`` reduces noun-style plurals with a small exception table in
place of a dictionary-backed lemmatizer, so the package has no corpus
dependency.
"""

from __future__ import annotations

from dataclasses import dataclass
from urllib.parse import unquote

_LOWER = frozenset("abcdefghijklmnopqrstuvwxyz")
_UPPER = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZ")
_DIGIT = frozenset("0123456789")
_ALNUM = _LOWER | _UPPER | _DIGIT


@dataclass(frozen=True)
class TokenSequence:
    """Tokens produced from one file name, together with the raw input."""

    tokens: tuple[str, ...]
    source: str

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def decode_escapes(name: str) -> str:
    """Replace every valid %XX escape with its character equivalent.

    Multi-byte sequences are decoded as UTF-8. Invalid escapes (e.g. a ``%``
    not followed by two hex digits) pass through unchanged; undecodable
    byte sequences become U+FFFD, which later acts as a separator.
    """
    return unquote(name)


def universal_tokenize(name: str) -> TokenSequence:
    """Split a file name into lowercase alphanumeric tokens.

    Split points: any character outside [a-zA-Z0-9] (dropped), a lowercase
    letter followed by an uppercase letter, and any boundary where exactly
    one of the two adjacent characters is a digit. Consecutive separators
    collapse; a name made only of separators yields no tokens.
    """
    decoded = decode_escapes(name)
    tokens: list[str] = []
    buf: list[str] = []
    prev = ""
    for ch in decoded:
        if ch not in _ALNUM:
            if buf:
                tokens.append("".join(buf))
                buf.clear()
            prev = ""
            continue
        if buf and (
            (prev in _LOWER and ch in _UPPER)
            or ((prev in _DIGIT) != (ch in _DIGIT))
        ):
            tokens.append("".join(buf))
            buf.clear()
        buf.append(ch)
        prev = ch
    if buf:
        tokens.append("".join(buf))
    return TokenSequence(tuple(t.lower() for t in tokens), source=name)


# Words whose surface form must survive lemmatization (category vocabulary
# like "minutes" and "news" would otherwise lose their signal), plus
# irregular plurals that the suffix rules cannot reach.
_LEMMA_EXCEPTIONS = {
    # invariant forms
    "news": "news",
    "minutes": "minutes",
    "press": "press",
    "business": "business",
    "analysis": "analysis",
    "basis": "basis",
    "crisis": "crisis",
    "thesis": "thesis",
    "series": "series",
    "species": "species",
    "syllabus": "syllabus",
    "campus": "campus",
    "status": "status",
    "bonus": "bonus",
    "census": "census",
    "atlas": "atlas",
    "canvas": "canvas",
    "lens": "lens",
    "chaos": "chaos",
    "physics": "physics",
    "economics": "economics",
    "ethics": "ethics",
    "athletics": "athletics",
    "logistics": "logistics",
    "this": "this",
    "data": "data",
    "media": "media",
    "people": "people",
    # place names common in file names
    "texas": "texas",
    "kansas": "kansas",
    "vegas": "vegas",
    "paris": "paris",
    "dallas": "dallas",
    "memphis": "memphis",
    "athens": "athens",
    # irregular plurals
    "syllabi": "syllabus",
    "curricula": "curriculum",
    "memoranda": "memorandum",
    "addenda": "addendum",
    "criteria": "criterion",
    "indices": "index",
    "appendices": "appendix",
    "analyses": "analysis",
    "theses": "thesis",
    "crises": "crisis",
    "bases": "basis",
    "buses": "bus",
    "statuses": "status",
    "men": "man",
    "women": "woman",
    "children": "child",
    "feet": "foot",
    "teeth": "tooth",
    "mice": "mouse",
}


def lemmatize(token: str) -> str:
    """Reduce a lowercase alphanumeric token to its singular noun form.

    Pure suffix rules plus the exception table above; digits are returned
    unchanged. Idempotent: applying twice equals applying once.
    """
    if not token or token[0] in _DIGIT:
        return token
    hit = _LEMMA_EXCEPTIONS.get(token)
    if hit is not None:
        return hit
    if len(token) <= 3 or not token.endswith("s") or token.endswith("ss"):
        return token
    if token.endswith("ies") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith("sses"):
        return token[:-2]
    if token.endswith("xes") or token.endswith("ches") or token.endswith("shes"):
        return token[:-2]
    return token[:-1]
