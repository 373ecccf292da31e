# Makes the tests directory importable (oracles, cross-module helpers).
