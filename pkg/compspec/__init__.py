"""Spectra of graph complements under a vertex-connectivity constraint."""
