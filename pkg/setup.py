from setuptools import find_packages, setup

setup(
    name="wirelength",
    version="0.1.0",
    description="A priori on-chip wire length estimation from Rent's rule",
    packages=find_packages(include=["wirelength", "wirelength.*"]),
    package_data={"wirelength": ["data/*.csv"]},
    python_requires=">=3.9",
    install_requires=["click>=8.1", "Flask>=2.2", "numpy>=1.23"],
    entry_points={"console_scripts": ["wirelength=wirelength:run"]},
)
