"""Combinatorics unit tests"""
