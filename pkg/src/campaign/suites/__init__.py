"""Suite modules; importing this package registers every suite."""

from src.campaign.suites import cayley, engine, exceptional, lattice, matrix, spin  # noqa: F401
