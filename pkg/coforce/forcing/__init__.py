"""The zero forcing process and the exact zero forcing number."""
