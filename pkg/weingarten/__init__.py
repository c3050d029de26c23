"""Численные инструменты для поверхностей Вайнгартена в евклидовом пространстве."""

__version__ = "0.1.0"
