"""Combinatorics, Littlewood-Richardson, classification, equality and Schubert services."""
