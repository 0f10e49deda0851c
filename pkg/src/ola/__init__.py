"""Combinatorial invariants of the category OLA for sl(oo), o(oo) and sp(oo)."""
