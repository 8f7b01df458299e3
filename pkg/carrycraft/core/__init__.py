"""
Digit-criterion machinery for the divisibility of central binomial
coefficients by fixed odd primes.
"""
