"""HTTP service wrapping the engine; the CLI is a thin client of ops."""
