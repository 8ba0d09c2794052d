TWELFTHS = 12
""" Fixed denominator of every class-number value (see `xclassnum.exactmath.Twelfth`). """

MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
""" Deterministic for every n < 3317044064679887385961981, which covers all 64-bit inputs. """

MILLER_RABIN_LIMIT = 3317044064679887385961981

LISTING_PRIME_BOUND = 104730
""" Exclusive bound; the primes below it are exactly the first 10,000 primes. """
