"""
Exact inference for constellation probabilistic argumentation frameworks.
"""
