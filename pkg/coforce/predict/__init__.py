"""Closed-form values and bounds for Z of a complement."""
