"""Tests for the hurwitzlommel package."""
