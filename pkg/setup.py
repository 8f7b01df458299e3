import carrycraft

from setuptools import setup

VERSION = carrycraft.__version__

with open("README.md") as fh:
    README = fh.read()

setup(
    name="carrycraft",
    version="{}".format(VERSION),
    packages=["carrycraft",
              "carrycraft.core",
              "carrycraft.tests"],
    package_dir={"carrycraft": "carrycraft"},
    package_data={"carrycraft": ["core/templates/*"]},
    install_requires=[
        "jinja2",
        "gmpy2",
        "numpy"
    ],
    extras_require={
        "test": ["pytest"]
    },
    description="Digit criteria, carry counts and exact checks for the "
                "non-divisibility of central binomial coefficients by "
                "products of odd primes.",
    long_description=README,
    long_description_content_type="text/markdown",
    license="GPL3",
    entry_points={
        "console_scripts": [
            "carrycraft = carrycraft.carrycraft:main"
        ]
    }
)
