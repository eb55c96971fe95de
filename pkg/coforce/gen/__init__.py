"""Graph generators and exhaustive enumerators."""
