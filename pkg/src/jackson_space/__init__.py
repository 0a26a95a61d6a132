"""Exact kernel for q-commutation algebras and their one-dimensional modules."""
