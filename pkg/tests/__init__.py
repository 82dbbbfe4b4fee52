"""
Test suite initialization.
"""
