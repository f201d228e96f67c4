"""Bell states, CHSH optimization and the invariant suite."""
