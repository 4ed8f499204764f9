"""Command-line application package"""
