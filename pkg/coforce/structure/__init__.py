"""Subgraph detection and family classification."""
