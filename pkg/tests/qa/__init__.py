"""QA Test Suite"""
