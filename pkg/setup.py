from setuptools import setup

setup(
    name="prereqrefiner",
    description="Fuzzy refinement of expert learning hierarchies from learners' grades",
    version="0.1.0",
    packages=["prereqrefiner",
              "prereqrefiner.model",
              "prereqrefiner.fuzzy_engine",
              "prereqrefiner.decision",
              "prereqrefiner.reporting",
              "prereqrefiner.simulator",
              ],
    package_data={"prereqrefiner": ["data/*.json"]},
    install_requires=[
        "numpy>=1.20",
        "pandas>=1.5",
        "scikit-learn>=1.0",
        "joblib>=0.13.2",
        "networkx>=2.6",
    ],
    extras_require={
        'test': ["hypothesis>=6.0", "jsonschema>=3.2"],
    },
    entry_points={
        "console_scripts": ["prereq-refiner=prereqrefiner.cli:main"],
    },
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ]
)
