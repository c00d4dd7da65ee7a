"""JB*-triple workbench package."""
