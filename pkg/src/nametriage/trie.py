"""Character trie with longest-prefix lookup, used to split glued words."""

from __future__ import annotations

from typing import Iterable

_END = ""  # key marking a word boundary; never a real character


class Trie:
    def __init__(self, words: Iterable[str] = ()):
        self._root: dict = {}
        self._size = 0
        for w in words:
            self.insert(w)

    def __len__(self) -> int:
        return self._size

    def insert(self, word: str) -> None:
        if not word:
            raise ValueError("cannot insert an empty word")
        node = self._root
        for ch in word:
            node = node.setdefault(ch, {})
        if _END not in node:
            node[_END] = True
            self._size += 1

    def __contains__(self, word: str) -> bool:
        node = self._root
        for ch in word:
            node = node.get(ch)
            if node is None:
                return False
        return _END in node

    def longest_prefix(self, text: str, start: int = 0) -> int:
        """Length of the longest inserted word that prefixes text[start:].

        Returns 0 when no word matches.
        """
        node = self._root
        best = 0
        i = start
        n = len(text)
        while i < n:
            node = node.get(text[i])
            if node is None:
                break
            i += 1
            if _END in node:
                best = i - start
        return best

    def words(self) -> list[str]:
        """All inserted words, sorted."""
        out: list[str] = []

        def walk(node: dict, prefix: str) -> None:
            for ch in sorted(node):
                if ch == _END:
                    out.append(prefix)
                else:
                    walk(node[ch], prefix + ch)

        walk(self._root, "")
        return out
