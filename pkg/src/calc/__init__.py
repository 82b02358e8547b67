"""
Calc module - exact satisfiability checking for conjunctions of polynomial constraints.

Input: SMT-LIB 2 scripts in the conjunctive QF_NRA slice
Transform: cylindrical algebraic covering, optionally with closed cells
Output: sat/unsat verdicts, exact models and per-run statistics
"""

__version__ = "0.1.0"
