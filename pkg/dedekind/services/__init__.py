"""
Business logic services.

exact_arith -> dedekind_core -> identities -> approximator -> verification
"""
