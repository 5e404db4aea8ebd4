import setuptools

setuptools.setup(
    name="klperiodic",
    version="1",
    description="Periodic Hecke modules and Kazhdan-Laumon category O",
    packages=["klperiodic", "klperiodic.formats", "klperiodic.util"],
    package_data={
        "klperiodic": ["schemas/*.json"],
    },
    license='Apache-2.0',
    install_requires=[
        "jsonschema",
        "numpy",
    ],
    entry_points={
        "console_scripts": [
            "klperiodic = klperiodic.main_cli:klperiodic_cli"
        ]
    },
)
