"""Per-graph reports and the batch pipeline behind the CLI."""
