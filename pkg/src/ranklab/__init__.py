"""Rank, degree and definability spectra for families of complete theories
over languages of 0-ary predicates."""

__version__ = "0.1.0"
