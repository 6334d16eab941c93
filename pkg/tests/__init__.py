"""Unit test package for grothnorm."""
