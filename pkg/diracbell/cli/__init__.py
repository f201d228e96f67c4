"""Command-line commands and result records."""
