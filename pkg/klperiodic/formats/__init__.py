"""
Concrete representation of values and reports
"""
