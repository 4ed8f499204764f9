"""Hecke operators on cohomology of congruence subgroups, computed exactly"""
