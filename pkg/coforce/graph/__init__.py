"""Immutable bitset graphs, graph6 codec and block machinery."""
