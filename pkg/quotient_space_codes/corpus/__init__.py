"""Bundled example corpus."""

from .registry import CorpusEntry, CorpusRegistry, bundled_examples, load_data_file

__all__ = ["CorpusEntry", "CorpusRegistry", "bundled_examples", "load_data_file"]
