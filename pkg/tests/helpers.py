# -*- coding: utf-8 -*-
"""
helpers
~~~~~~~

This module contains helpers for the lens-floer tests.
"""

from math import gcd

from faker import Faker
from faker.providers import BaseProvider

from lensfloer import AlexPoly


faker = Faker()


class Provider(BaseProvider):
    def lens_params(self, max_p=7):
        p = self.random_int(1, max_p)
        residues = [q for q in range(p) if p == 1 or gcd(q, p) == 1]
        return p, self.random_element(residues)

    def simple_params(self, max_p=7):
        p, q = faker.lens_params(max_p)
        return p, q, self.random_int(0, p - 1)

    def admissible_alex(self, max_genus=8):
        """A symmetric polynomial with alternating ±1 coefficients."""
        k = self.random_int(0, max_genus)
        positive = sorted(
            self.random_sample(tuple(range(1, max_genus + 1)), length=k)
        ) if k else []
        levels = sorted([-e for e in positive] + [0] + positive, reverse=True)

        return AlexPoly(tuple(
            (level, 1 if i % 2 == 0 else -1) for i, level in enumerate(levels)
        ))


faker.add_provider(Provider)
