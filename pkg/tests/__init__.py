"""Tests for dqc1slm"""
