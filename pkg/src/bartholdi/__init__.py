"""Exact reduced Bartholdi zeta polynomials of simple graphs."""
