from setuptools import setup, find_packages

setup(
    name="praaf-engine",
    version="0.1.0",
    package_dir={"": "python"},
    packages=find_packages(where="python"),
    python_requires=">=3.9",
    install_requires=[
        "pydantic~=2.10.6",
        "python-dotenv~=1.0.1",
        "pygraphviz~=1.11",
    ],
    entry_points={
        "console_scripts": [
            "praaf=praaf.cli.praaf_app:main",
        ],
    },
)
