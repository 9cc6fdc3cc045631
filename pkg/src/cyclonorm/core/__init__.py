"""Exact arithmetic: polynomials, norms, sequences, dominos and quadratic fields"""
